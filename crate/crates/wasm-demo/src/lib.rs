//! Browser bindings for the static demo page in `www/`.
//!
//! Every export takes plain strings and integers and returns a JSON string,
//! so the page needs no generated type glue beyond `JSON.parse`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use g2crit::comblemma::{critical_regions, twisted_regions, uncovered_slivers, RegionSystem};
use g2crit::kostant::{find_balanced, inverse_dot, kostant_reps, natural_basis};
use g2crit::lcrit::{crit_set, crit_set_product, kinds, poe_check};
use g2crit::numeric::{fmt_q, Q};
use g2crit::purity::{PurePair, PureWeight};
use g2crit::rootsys::Maximal;
use g2crit::tables::twisted_table;

fn maximal(s: &str) -> Result<Maximal, String> {
    Maximal::parse(s).map_err(|e| e.to_string())
}

fn weight(s: &str, p: Maximal) -> Result<PureWeight, String> {
    let mut pairs = Vec::new();
    for place in s.split(';').filter(|x| !x.trim().is_empty()) {
        let n: Vec<i64> = place
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| format!("bad integer in {place:?}")))
            .collect::<Result<_, _>>()?;
        let [a, b, a_s, b_s] = n[..] else {
            return Err(format!("place {place:?} needs four entries a,b,a*,b*"));
        };
        pairs.push(PurePair::new(a, b, a_s, b_s));
    }
    PureWeight::new(pairs, natural_basis(p)).map_err(|e| e.to_string())
}

fn to_json(v: Value) -> String {
    v.to_string()
}

/// Critical set of each factor, of the product, and the balanced pairs.
#[wasm_bindgen]
pub fn critical_sets(weight_text: &str, parabolic: &str) -> Result<String, String> {
    let p = maximal(parabolic)?;
    let mu = weight(weight_text, p)?;
    let factors: Vec<Value> = kinds(p)
        .iter()
        .map(|k| {
            let set = crit_set(&mu, *k);
            json!({ "kind": k.name(), "set": set.to_string(), "points": set.len() })
        })
        .collect();
    let product = crit_set_product(&mu, p);
    let poe = poe_check(&mu, p);
    let balanced: Vec<Value> = find_balanced(&mu, p)
        .unwrap_or_default()
        .iter()
        .map(|m| {
            json!({
                "pair": m.pair.to_string(),
                "lambda_eta": [m.lambda_eta.0, m.lambda_eta.1],
                "lambda_etabar": [m.lambda_etabar.0, m.lambda_etabar.1],
            })
        })
        .collect();
    Ok(to_json(json!({
        "weight": mu.to_string(),
        "pw": mu.pw(),
        "factors": factors,
        "product": product.to_string(),
        "k": poe.k.to_string(),
        "statement_1": poe.statement_1,
        "balanced": balanced,
    })))
}

fn names(list: &[RegionSystem], a: i64, b: i64, pw: i64) -> Vec<String> {
    let mut n: Vec<String> = list.iter().filter(|s| s.contains(a, b, pw)).map(|s| s.name.clone()).collect();
    n.dedup();
    n
}

fn q_f64(x: Q) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

/// Lattice points `(a, b)` with `a >= b` in the window, with the critical and
/// twisted-action regions containing each, plus the uncovered slivers.
#[wasm_bindgen]
pub fn region_lattice(parabolic: &str, pw: i64, window: i64) -> Result<String, String> {
    let p = maximal(parabolic)?;
    if !(1..=60).contains(&window) {
        return Err("window must lie in 1..=60".into());
    }
    let crit = critical_regions(pw, p);
    let twist = twisted_regions(pw, p);
    let mut points = Vec::new();
    for a in -window..=window {
        for b in -window..=a {
            let (c, t) = (names(&crit, a, b, pw), names(&twist, a, b, pw));
            if !c.is_empty() || !t.is_empty() {
                points.push(json!({ "a": a, "b": b, "crit": c, "twisted": t }));
            }
        }
    }
    let slivers: Vec<Value> = uncovered_slivers(pw, p, window)
        .iter()
        .map(|s| {
            json!({
                "source": s.source,
                "vertices": s.vertices.iter().map(|v| [q_f64(v.0), q_f64(v.1)]).collect::<Vec<_>>(),
                "labels": s.vertices.iter().map(|v| format!("({}, {})", fmt_q(v.0), fmt_q(v.1))).collect::<Vec<_>>(),
                "interior_lattice": s.interior_lattice.len(),
            })
        })
        .collect();
    Ok(to_json(json!({ "pw": pw, "window": window, "points": points, "slivers": slivers })))
}

/// The twisted-action table for `parabolic`, symbolic and evaluated at `(a, b)`.
#[wasm_bindgen]
pub fn twisted_action(parabolic: &str, a: i64, b: i64, pw: i64) -> Result<String, String> {
    let p = maximal(parabolic)?;
    let reps = kostant_reps(p.into());
    let rows: Vec<Value> = twisted_table(p)
        .iter()
        .zip(&reps)
        .map(|(row, w)| {
            let eta = inverse_dot(w, p, (a, b));
            let etabar = inverse_dot(w, p, (pw - b, pw - a));
            json!({
                "w": row.w,
                "length": w.length,
                "eta_form": row.eta_text(),
                "etabar_form": row.etabar_text(),
                "eta": [eta.0, eta.1],
                "etabar": [etabar.0, etabar.1],
            })
        })
        .collect();
    Ok(to_json(json!({ "a": a, "b": b, "pw": pw, "rows": rows })))
}
