//! Browser bindings. Every export returns a JSON string; failures come back
//! as `{"error": "..."}`. Integers are sent as decimal strings since they
//! outgrow JavaScript numbers.

use num_bigint::BigInt;
use serde_json::{json, Value};
use seriesforge::labeled::{
    a_polynomials, chain_increasing_polynomials, g_polynomials, p_series, DegreeSpec,
};
use seriesforge::ring::Ring;
use seriesforge::unlabeled::refined_polys;
use wasm_bindgen::prelude::wasm_bindgen;

pub const MAX_TABLE_S: usize = 24;
pub const MAX_TABLE_M: u32 = 16;
pub const MAX_P_COLORS: u32 = 4;
pub const MAX_P_ORDER: usize = 7;
pub const MAX_TRIANGLE_N: usize = 24;

fn error(msg: impl Into<String>) -> String {
    json!({ "error": msg.into() }).to_string()
}

fn family_row(family: &str, m: u32, max_s: usize) -> Result<Vec<BigInt>, String> {
    let mb = BigInt::from(m);
    let eval = |polys: Vec<seriesforge::poly::PolyVar>| polys.iter().map(|p| p.eval(&mb)).collect();
    let refined = || refined_polys(max_s).map_err(|e| e.to_string());
    Ok(match family {
        "ultrametrics" => eval(a_polynomials(max_s)),
        "fully-colored-labeled" => {
            let m1 = mb.clone() - 1;
            a_polynomials(max_s)
                .iter()
                .enumerate()
                .map(|(i, p)| if i == 0 { mb.clone() } else { Ring::pow(&m1, i as u32 + 1) * p.eval(&mb) })
                .collect()
        }
        "mobiles" => eval(g_polynomials(max_s)),
        "chain-increasing" => eval(chain_increasing_polynomials(max_s)),
        "multipartite-unlabeled" => refined()?
            .iter()
            .map(|r| r.multipartite_polynomial().eval(&mb))
            .collect(),
        "fully-colored-unlabeled" => refined()?.iter().map(|r| r.fully_colored(u64::from(m))).collect(),
        other => return Err(format!("unknown family `{other}`")),
    })
}

/// Counts for `s = 1..=max_s` and `m = 1..=max_m`:
/// `{"family", "rows": [{"m", "values": ["1", "2", …]}]}`.
#[wasm_bindgen]
pub fn count_table(family: &str, max_s: usize, max_m: u32) -> String {
    if !(1..=MAX_TABLE_S).contains(&max_s) || !(1..=MAX_TABLE_M).contains(&max_m) {
        return error(format!("s must be in 1..={MAX_TABLE_S} and m in 1..={MAX_TABLE_M}"));
    }
    let mut rows = Vec::new();
    for m in 1..=max_m {
        match family_row(family, m, max_s) {
            Ok(values) => {
                let values: Vec<String> = values.iter().map(BigInt::to_string).collect();
                rows.push(json!({ "m": m, "values": values }));
            }
            Err(e) => return error(e),
        }
    }
    json!({ "family": family, "rows": rows }).to_string()
}

/// `[t^s/s!] P(m, t, x)` for `s = 1..=order`:
/// `{"m", "spec", "coeffs": [{"s", "text", "terms"}]}`.
#[wasm_bindgen]
pub fn p_expansion(m: u32, order: usize, spec: &str) -> String {
    if !(1..=MAX_P_COLORS).contains(&m) || !(1..=MAX_P_ORDER).contains(&order) {
        return error(format!("m must be in 1..={MAX_P_COLORS} and order in 1..={MAX_P_ORDER}"));
    }
    let degree_spec = match spec {
        "symbolic" => DegreeSpec::symbolic(m),
        "ones" => DegreeSpec::all_ones(m),
        "factorial" => DegreeSpec::factorial(m),
        other => return error(format!("unknown weight spec `{other}`")),
    };
    let series = match p_series(&degree_spec, order) {
        Ok(s) => s,
        Err(e) => return error(e.to_string()),
    };
    let coeffs: Vec<Value> = (1..=order)
        .map(|s| {
            let c = series.coeff(s);
            json!({ "s": s, "text": c.to_string(), "terms": c.len() })
        })
        .collect();
    json!({ "m": m, "spec": spec, "coeffs": coeffs }).to_string()
}

/// Unlabeled series-reduced trees by leaves and inner vertices:
/// `{"columns": [n…], "rows": [{"k", "values": [str|null]}], "sums": [str]}`.
#[wasm_bindgen]
pub fn refined_triangle(max_n: usize) -> String {
    if !(2..=MAX_TRIANGLE_N).contains(&max_n) {
        return error(format!("n must be in 2..={MAX_TRIANGLE_N}"));
    }
    let polys = match refined_polys(max_n) {
        Ok(p) => p,
        Err(e) => return error(e.to_string()),
    };
    let rows: Vec<Value> = (1..max_n)
        .map(|k| {
            let values: Vec<Value> = (2..=max_n)
                .map(|n| if k < n { json!(polys[n - 1].count(k).to_string()) } else { Value::Null })
                .collect();
            json!({ "k": k, "values": values })
        })
        .collect();
    let sums: Vec<String> = (2..=max_n).map(|n| polys[n - 1].total().to_string()).collect();
    json!({ "columns": (2..=max_n).collect::<Vec<_>>(), "rows": rows, "sums": sums }).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn table_rows() {
        let v = parse(&count_table("ultrametrics", 4, 2));
        assert_eq!(v["rows"][1]["values"], json!(["1", "2", "8", "52"]));
        let v = parse(&count_table("fully-colored-unlabeled", 3, 3));
        assert_eq!(v["rows"][2]["values"], json!(["3", "12", "72"]));
        let v = parse(&count_table("mobiles", 8, 8));
        assert_eq!(v["rows"][7]["values"][7], json!("218563826824"));
    }

    #[test]
    fn table_errors() {
        assert!(parse(&count_table("trees", 3, 3))["error"].is_string());
        assert!(parse(&count_table("mobiles", 0, 3))["error"].is_string());
        assert!(parse(&count_table("mobiles", 3, 99))["error"].is_string());
    }

    #[test]
    fn expansion() {
        let v = parse(&p_expansion(2, 3, "symbolic"));
        assert_eq!(v["coeffs"][0]["text"], json!("1"));
        assert_eq!(v["coeffs"][2]["terms"], json!(3));
        let v = parse(&p_expansion(2, 4, "ones"));
        assert_eq!(v["coeffs"][3]["text"], json!("52"));
        assert!(parse(&p_expansion(2, 4, "cubes"))["error"].is_string());
        assert!(parse(&p_expansion(9, 4, "ones"))["error"].is_string());
    }

    #[test]
    fn triangle() {
        let v = parse(&refined_triangle(6));
        assert_eq!(v["columns"], json!([2, 3, 4, 5, 6]));
        assert_eq!(v["rows"][1]["values"], json!([null, "1", "2", "3", "4"]));
        assert_eq!(v["sums"], json!(["1", "2", "5", "12", "33"]));
        assert!(parse(&refined_triangle(1))["error"].is_string());
    }
}
