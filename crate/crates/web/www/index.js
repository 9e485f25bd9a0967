import init, { count_table, p_expansion, refined_triangle } from "./pkg/seriesforge_web.js";

const $ = (id) => document.getElementById(id);

function el(tag, text, attrs = {}) {
  const e = document.createElement(tag);
  if (text !== undefined && text !== null) e.textContent = text;
  Object.assign(e, attrs);
  return e;
}

function call(fn, ...args) {
  const out = JSON.parse(fn(...args));
  if (out.error) throw new Error(out.error);
  return out;
}

function show(target, build) {
  target.replaceChildren();
  try {
    build(target);
  } catch (e) {
    target.append(el("p", e.message, { className: "error" }));
  }
}

function table(corner, header, rows) {
  const t = el("table");
  const head = el("tr");
  head.append(el("th", corner), ...header.map((h) => el("th", h)));
  t.append(head);
  for (const [label, cells] of rows) {
    const tr = el("tr");
    tr.append(el("th", label), ...cells.map((c) => el("td", c ?? "")));
    t.append(tr);
  }
  return t;
}

// log10 of a decimal string, fine for plotting
function log10(digits) {
  if (digits === "0") return null;
  const lead = parseFloat(digits.slice(0, 15));
  return Math.log10(lead) + Math.max(0, digits.length - 15);
}

function plot(canvas, rows) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const n = rows[0].values.length;
  const ys = rows.flatMap((r) => r.values.map(log10)).filter((y) => y !== null);
  const top = Math.max(1, ...ys);
  const pad = 30;
  const x = (i) => pad + (n === 1 ? 0 : (i * (w - 2 * pad)) / (n - 1));
  const y = (v) => h - pad - (v / top) * (h - 2 * pad);
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, w - 2 * pad, h - 2 * pad);
  ctx.fillStyle = "#444";
  ctx.font = "12px sans-serif";
  ctx.fillText(`log10 count, max ${top.toFixed(1)}`, pad, pad - 8);
  ctx.fillText(`s = 1..${n}`, w - pad - 60, h - 8);
  rows.forEach((r, k) => {
    ctx.strokeStyle = `hsl(${(k * 360) / rows.length}, 60%, 45%)`;
    ctx.beginPath();
    let started = false;
    r.values.forEach((v, i) => {
      const lv = log10(v);
      if (lv === null) { started = false; return; }
      if (started) ctx.lineTo(x(i), y(lv)); else ctx.moveTo(x(i), y(lv));
      started = true;
    });
    ctx.stroke();
  });
}

function onSubmit(id, handler) {
  $(id).addEventListener("submit", (ev) => {
    ev.preventDefault();
    handler(new FormData(ev.target));
  });
}

function wire() {
  onSubmit("table-form", (f) => {
    show($("table-out"), (out) => {
      const res = call(count_table, f.get("family"), Number(f.get("s")), Number(f.get("m")));
      const header = res.rows[0].values.map((_, i) => String(i + 1));
      out.append(table("m \\ s", header, res.rows.map((r) => [String(r.m), r.values])));
      plot($("plot"), res.rows);
    });
  });

  onSubmit("p-form", (f) => {
    show($("p-out"), (out) => {
      const res = call(p_expansion, Number(f.get("m")), Number(f.get("order")), f.get("spec"));
      for (const c of res.coeffs) {
        out.append(el("h3", `t^${c.s}/${c.s}!  (${c.terms} terms)`), el("pre", c.text));
      }
    });
  });

  onSubmit("tri-form", (f) => {
    show($("tri-out"), (out) => {
      const res = call(refined_triangle, Number(f.get("n")));
      const rows = res.rows.map((r) => [String(r.k), r.values]);
      rows.push(["sum", res.sums]);
      out.append(table("k \\ n", res.columns.map(String), rows));
    });
  });
}

init()
  .then(() => {
    $("status").textContent = "Ready.";
    wire();
    for (const id of ["table-form", "p-form", "tri-form"]) $(id).requestSubmit();
  })
  .catch((e) => {
    $("status").textContent = `Failed to load wasm: ${e}`;
    $("status").className = "error";
  });
