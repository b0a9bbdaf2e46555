//! Browser bindings. Each export returns a JSON string so the page can stay
//! plain JavaScript; errors come back as `{"error": "..."}`.

use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

use partition_core::identities::{registry, verify};
use partition_core::partition_fn::{p_closed, p_pentagonal, p_recursive};
use partition_core::relprime::lambda_inclexcl;
use partition_core::spt::{spt_nk, SptParams};

/// Largest `n` the page may ask for in the table and profile views.
pub const MAX_N: u32 = 120;

fn error(msg: impl std::fmt::Display) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

#[derive(Serialize)]
struct TableRow {
    n: u32,
    /// `p(n, k)` for `k = 1..=n`, as decimal strings.
    pk: Vec<String>,
    /// `Λ(n, k)` for the same `k`.
    lambda: Vec<String>,
    total: String,
    /// Closed nested-sum formula agrees with the recursion for every `k`.
    closed_agrees: bool,
    /// Sum over `k` agrees with the pentagonal recurrence.
    pentagonal_agrees: bool,
}

/// Rows `n = 1..=n_max` of `p(n, k)` and `Λ(n, k)`, each cross-checked.
#[wasm_bindgen]
pub fn partition_table(n_max: u32) -> String {
    if n_max == 0 || n_max > MAX_N {
        return error(format!("n must be in 1..={MAX_N}"));
    }
    let rows: Vec<TableRow> = (1..=n_max)
        .map(|n| {
            let n64 = i64::from(n);
            let pk: Vec<_> = (1..=n64).map(|k| p_recursive(n64, k)).collect();
            let closed_agrees = (1..=n64).all(|k| match p_closed(n64, k) {
                Ok(v) => v == pk[(k - 1) as usize],
                Err(_) => true,
            });
            let total: num_bigint::BigUint = pk.iter().sum();
            TableRow {
                n,
                lambda: (1..=u64::from(n)).map(|k| lambda_inclexcl(u64::from(n), k).to_string()).collect(),
                pentagonal_agrees: total == p_pentagonal(n64),
                total: total.to_string(),
                closed_agrees,
                pk: pk.iter().map(ToString::to_string).collect(),
            }
        })
        .collect();
    serde_json::to_string(&rows).unwrap_or_else(error)
}

/// `spt_(a,b)(n, k)` against `p(n, k)` for every `k`, plus the totals.
#[wasm_bindgen]
pub fn spt_profile(a: u32, b: u32, n: u32) -> String {
    if n == 0 || n > MAX_N {
        return error(format!("n must be in 1..={MAX_N}"));
    }
    if a > 8 || b > 8 {
        return error("exponents must be at most 8");
    }
    let params = SptParams::new(a, b);
    let n64 = i64::from(n);
    let spt: Vec<_> = (1..=n64).map(|k| spt_nk(params, n64, k)).collect();
    let p: Vec<_> = (1..=n64).map(|k| p_recursive(n64, k)).collect();
    let spt_total: num_bigint::BigUint = spt.iter().sum();
    let p_total: num_bigint::BigUint = p.iter().sum();
    json!({
        "a": a,
        "b": b,
        "n": n,
        "spt": spt.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "p": p.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "spt_total": spt_total.to_string(),
        "p_total": p_total.to_string(),
    })
    .to_string()
}

/// Ids and descriptions of the identity registry.
#[wasm_bindgen]
pub fn identity_list() -> String {
    let list: Vec<_> = registry()
        .iter()
        .map(|c| json!({ "id": c.id, "description": c.description, "window_start": c.window_start }))
        .collect();
    serde_json::Value::Array(list).to_string()
}

/// Verifies one identity over `n_lo..=n_hi`.
#[wasm_bindgen]
pub fn identity_sweep(id: &str, n_lo: u32, n_hi: u32) -> String {
    if n_hi > 5000 {
        return error("n_hi must be at most 5000");
    }
    let show = |v: &Option<partition_core::numtheory::Rational>| {
        v.as_ref().map_or_else(|| "undefined".to_string(), ToString::to_string)
    };
    match verify(id, u64::from(n_lo), u64::from(n_hi)) {
        Ok(r) => json!({
            "id": r.id,
            "n_lo": r.n_lo,
            "n_hi": r.n_hi,
            "checked": r.checked,
            "passed": r.passed(),
            "mismatches": r.mismatches.iter().map(|e| json!({"n": e.n, "lhs": show(&e.lhs), "rhs": show(&e.rhs)})).collect::<Vec<_>>(),
            "exceptions": r.exceptions.iter().map(|e| json!({"n": e.n, "lhs": show(&e.lhs), "rhs": show(&e.rhs)})).collect::<Vec<_>>(),
        })
        .to_string(),
        Err(e) => error(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn table_rows_are_checked() {
        let v = parse(&partition_table(12));
        let rows = v.as_array().unwrap();
        assert_eq!(rows.len(), 12);
        assert_eq!(rows[10]["pk"][2], "10");
        assert_eq!(rows[4]["total"], "7");
        assert!(rows.iter().all(|r| r["closed_agrees"] == true && r["pentagonal_agrees"] == true));
        assert!(parse(&partition_table(0))["error"].is_string());
        assert!(parse(&partition_table(MAX_N + 1))["error"].is_string());
    }

    #[test]
    fn profile_totals() {
        let v = parse(&spt_profile(3, 2, 5));
        assert_eq!(v["spt_total"], "173");
        assert_eq!(v["p_total"], "7");
        assert_eq!(v["spt"].as_array().unwrap().len(), 5);
        assert!(parse(&spt_profile(9, 0, 5))["error"].is_string());
    }

    #[test]
    fn identity_views() {
        let list = parse(&identity_list());
        assert_eq!(list.as_array().unwrap().len(), 16);
        let v = parse(&identity_sweep("EB-PHI", 1, 40));
        assert_eq!(v["passed"], true);
        assert_eq!(v["exceptions"].as_array().unwrap().len(), 2);
        assert!(parse(&identity_sweep("NOPE", 1, 2))["error"].is_string());
    }
}
