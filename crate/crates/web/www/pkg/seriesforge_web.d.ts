/* tslint:disable */
/* eslint-disable */

/**
 * Counts for `s = 1..=max_s` and `m = 1..=max_m`:
 * `{"family", "rows": [{"m", "values": ["1", "2", …]}]}`.
 */
export function count_table(family: string, max_s: number, max_m: number): string;

/**
 * `[t^s/s!] P(m, t, x)` for `s = 1..=order`:
 * `{"m", "spec", "coeffs": [{"s", "text", "terms"}]}`.
 */
export function p_expansion(m: number, order: number, spec: string): string;

/**
 * Unlabeled series-reduced trees by leaves and inner vertices:
 * `{"columns": [n…], "rows": [{"k", "values": [str|null]}], "sums": [str]}`.
 */
export function refined_triangle(max_n: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly count_table: (a: number, b: number, c: number, d: number) => [number, number];
    readonly p_expansion: (a: number, b: number, c: number, d: number) => [number, number];
    readonly refined_triangle: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
