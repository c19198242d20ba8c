//! Acceptance run over the nine criteria.
//!
//! Prints one line per criterion. The process fails when a criterion leaves
//! its recorded state: every criterion is recorded as passing except the
//! twisted-action tables, whose published P_α table carries five erratum
//! cells that are pinned here exactly.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use g2crit::archfactors::{cocycle_chain, combined_ratio, verify_cocycle_identity, GammaRatio};
use g2crit::comblemma::{
    beta_sliver_triangle, coverage_report, lattice_free_check, normalized_triangle, uncovered_slivers,
    verify_lemma,
};
use g2crit::kostant::{
    degree_window, find_balanced, inverse_dot, kostant_reps, natural_basis, prime_involution,
    wprime_component_identity, KostantPair, DIM_U,
};
use g2crit::lcrit::{crit_set, crit_set_product, kinds, widths, LKind};
use g2crit::numeric::HalfInt;
use g2crit::purity::{PurePair, PureWeight};
use g2crit::rootsys::{Maximal, WeylElement};
use g2crit::sampling::{dominant_lambda, right_of_axis_critical, rng};
use g2crit::tables::weyl_table;
use g2crit::weights::WeightCoords;
use num_rational::Ratio;
use rand::Rng;

struct Outcome {
    pass: bool,
    /// The outcome agrees with the recorded analysis of the criterion.
    as_recorded: bool,
    detail: String,
}

impl Outcome {
    fn plain(pass: bool, detail: String) -> Self {
        Outcome {
            pass,
            as_recorded: pass,
            detail,
        }
    }
}

fn within(elapsed: Duration, budget: Duration) -> bool {
    elapsed < budget
}

// Criterion 1 -------------------------------------------------------------

/// `(w, w^{-1}α, w^{-1}β)` as published.
const INVERSE_ACTION: [(&str, &str, &str); 12] = [
    ("1", "α", "β"),
    ("w_β", "α+β", "-β"),
    ("w_βα", "γ_s", "-(3α+β)"),
    ("w_βαβ", "γ_s", "-γ_l"),
    ("w_βαβα", "α+β", "-γ_l"),
    ("w_βαβαβ", "α", "-(3α+β)"),
    ("w_α", "-α", "3α+β"),
    ("w_αβ", "-(α+β)", "γ_l"),
    ("w_αβα", "-γ_s", "γ_l"),
    ("w_αβαβ", "-γ_s", "3α+β"),
    ("w_αβαβα", "-(α+β)", "β"),
    ("w_G", "-α", "-β"),
];

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let rows = weyl_table();
    let bad: Vec<String> = INVERSE_ACTION
        .iter()
        .zip(&rows)
        .filter(|(t, r)| (t.0, t.1, t.2) != (r.w.as_str(), r.inv_alpha.as_str(), r.inv_beta.as_str()))
        .map(|(t, _)| t.0.to_string())
        .collect();
    let elapsed = start.elapsed();
    let ok = rows.len() == 12 && bad.is_empty() && within(elapsed, Duration::from_secs(1));
    Outcome::plain(ok, format!("12 rows, {} differing {bad:?}, {elapsed:.2?}", bad.len()))
}

// Criterion 2 -------------------------------------------------------------

type Cell = fn(i64, i64, i64) -> (i64, i64);

/// A published row: word, `w^{-1}.(a,b)` and `w^{-1}.(w-b,w-a)` as functions of `(a, b, w)`.
type Row = (&'static str, Cell, Cell);

const BETA_TWISTED: [Row; 6] = [
    ("1", |a, b, _| (a, b), |a, b, w| (w - b, w - a)),
    ("a", |a, b, _| (a, a - b - 1), |a, b, w| (w - b, a - b - 1)),
    ("ab", |a, b, _| (a - b - 2, a + 1), |a, b, w| (a - b - 2, w - b + 1)),
    ("aba", |a, b, _| (a - b - 2, -b - 4), |a, b, w| (a - b - 2, a - w - 4)),
    ("abab", |a, b, _| (-b - 5, a - b - 1), |a, b, w| (a - w - 5, a - b - 1)),
    ("ababa", |a, b, _| (-b - 5, -a - 5), |a, b, w| (a - w - 5, b - w - 5)),
];

const ALPHA_TWISTED: [Row; 6] = [
    ("1", |a, b, _| (a, b), |a, b, w| (w - b, w - a)),
    ("b", |a, b, _| (a + b + 1, -b - 2), |a, b, w| (2 * w - b - a + 1, -w + b - 1)),
    ("ba", |a, b, _| (a - b - 1, b - 1), |a, b, w| (a - b - 1, w - b - 1)),
    ("bab", |a, b, _| (a, b - a - 2), |a, b, w| (w - b, b - a - 2)),
    ("baba", |a, b, _| (-b - a - 5, a + 1), |a, b, w| (a + b - 2 * w - 5, w - b + 1)),
    ("babab", |a, b, _| (-b - 3, -a - 3), |a, b, w| (a - w - 3, b - w - 3)),
];

/// The published P_α table with the erratum cells replaced by the twisted action.
const ALPHA_TWISTED_CORRECTED: [Row; 6] = [
    ALPHA_TWISTED[0],
    ("b", |a, b, _| (a + b + 1, -b - 2), |a, b, w| (2 * w - a - b + 1, a - w - 2)),
    ("ba", |a, b, _| (-b - 3, a + b + 2), |a, b, w| (a - w - 3, 2 * w - a - b + 2)),
    ("bab", |a, b, _| (a, -a - b - 4), |a, b, w| (w - b, a + b - 2 * w - 4)),
    ALPHA_TWISTED[4],
    ALPHA_TWISTED[5],
];

const TABLE_PWS: [i64; 5] = [-12, -6, -5, 0, 3];

/// Cells `(w, column)` that differ from `w^{-1}.(a,b)` on the 41×41 grid.
fn table_cells(rows: &[Row], p: Maximal) -> BTreeSet<(String, u8)> {
    let mut bad = BTreeSet::new();
    for &(word, c1, c2) in rows {
        let w = WeylElement::parse(word).unwrap();
        assert!(kostant_reps(p.into()).contains(&w), "{word} is a Kostant representative");
        for pw in TABLE_PWS {
            for a in -20..=20 {
                for b in -20..=20 {
                    if inverse_dot(&w, p, (a, b)) != c1(a, b, pw) {
                        bad.insert((w.name(), 1));
                    }
                    if inverse_dot(&w, p, (pw - b, pw - a)) != c2(a, b, pw) {
                        bad.insert((w.name(), 2));
                    }
                }
            }
        }
    }
    bad
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let beta = table_cells(&BETA_TWISTED, Maximal::Beta);
    let alpha = table_cells(&ALPHA_TWISTED, Maximal::Alpha);
    let corrected = table_cells(&ALPHA_TWISTED_CORRECTED, Maximal::Alpha);
    let elapsed = start.elapsed();
    let errata: BTreeSet<(String, u8)> = [("w_β", 2), ("w_βα", 1), ("w_βα", 2), ("w_βαβ", 1), ("w_βαβ", 2)]
        .iter()
        .map(|&(w, c)| (w.to_string(), c))
        .collect();
    let fast = within(elapsed, Duration::from_secs(5));
    let pass = beta.is_empty() && alpha.is_empty() && fast;
    let cells: Vec<String> = alpha.iter().map(|(w, c)| format!("{w} col{c}")).collect();
    Outcome {
        pass,
        as_recorded: beta.is_empty() && alpha == errata && corrected.is_empty() && fast,
        detail: format!(
            "P_β {} cells off, P_α {} cells off [{}], corrected P_α {} off, {elapsed:.2?}",
            beta.len(),
            alpha.len(),
            cells.join(", "),
            corrected.len()
        ),
    }
}

// Criterion 3 -------------------------------------------------------------

fn criterion_3() -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let start = Instant::now();
    let reports = pool.install(|| {
        Maximal::BOTH.map(|p| (p, verify_lemma(p, (-30, 10), 60).expect("valid scan")))
    });
    let elapsed = start.elapsed();
    let mut ok = within(elapsed, Duration::from_secs(180));
    let mut parts = Vec::new();
    for (p, r) in &reports {
        ok &= r.disagreements.is_empty() && r.derived_mismatches == 0 && r.printed_mismatches > 0;
        parts.push(format!(
            "{p}: {} points, {} critical, {} disagreements, derived {} / printed {} mismatches",
            r.points,
            r.critical_points,
            r.disagreements.len(),
            r.derived_mismatches,
            r.printed_mismatches
        ));
    }
    Outcome::plain(ok, format!("{}; {elapsed:.2?} on one thread", parts.join("; ")))
}

// Criterion 4 -------------------------------------------------------------

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut points = 0;
    for p in Maximal::BOTH {
        for w in [-12, -7, -5, -3, 0, 3] {
            let r = coverage_report(w, p, 40).expect("valid window");
            ok &= r.symmetric_difference.is_empty();
            points += r.crit_points;
        }
    }
    let certificate = lattice_free_check(beta_sliver_triangle()).expect("nondegenerate");
    ok &= certificate.lattice_free;
    let slivers = uncovered_slivers(-7, Maximal::Beta, 40);
    let fives: Vec<_> = slivers.iter().filter(|s| s.source == "(5)").collect();
    let matching = fives
        .iter()
        .filter(|s| normalized_triangle(&s.vertices) == Some(beta_sliver_triangle()))
        .count();
    ok &= !fives.is_empty() && matching == fives.len();
    // Every other sliver is certified on its own normalized triangle.
    let certified = slivers
        .iter()
        .filter(|s| {
            normalized_triangle(&s.vertices)
                .is_some_and(|t| lattice_free_check(t).is_ok_and(|r| r.lattice_free))
        })
        .count();
    ok &= certified == slivers.len();
    let elapsed = start.elapsed();
    ok &= within(elapsed, Duration::from_secs(30));
    Outcome::plain(
        ok,
        format!(
            "12 coverage runs, {points} critical points, triangle lattice-free: {}, \
             P_β slivers at pw=-7: {} ({matching} of {} from region (5) normalize to it, \
             {certified} certified lattice-free), {elapsed:.2?}",
            certificate.lattice_free,
            slivers.len(),
            fives.len()
        ),
    )
}

// Criterion 5 -------------------------------------------------------------

/// A character `z^p z̄^q` stored as `(2p, 2q)`.
type Hodge = (i64, i64);

fn mul(x: Hodge, y: Hodge) -> Hodge {
    (x.0 + y.0, x.1 + y.1)
}

fn inv(x: Hodge) -> Hodge {
    (-x.0, -x.1)
}

/// Characters of the Langlands parameter at one place, built from the
/// cuspidal parameters of the pair and pushed through the factor's
/// representation.
fn hodge_characters(pair: PurePair, kind: LKind) -> Vec<Hodge> {
    let (a, b) = (pair.eta.a, pair.eta.b);
    let (a_s, b_s) = (pair.etabar.a, pair.etabar.b);
    let chi1 = (-2 * b + 1, -2 * a_s - 1);
    let chi2 = (-2 * a - 1, -2 * b_s + 1);
    match kind {
        LKind::Std => vec![chi1, chi2],
        LKind::Omega => vec![mul(chi1, chi2)],
        LKind::Ad3 => {
            let det = inv(mul(chi1, chi2));
            vec![
                mul(mul(chi1, mul(chi1, chi1)), det),
                mul(mul(chi1, mul(chi1, chi2)), det),
                mul(mul(chi1, mul(chi2, chi2)), det),
                mul(mul(chi2, mul(chi2, chi2)), det),
            ]
        }
        LKind::StdTwist => vec![mul(chi1, mul(chi1, chi2)), mul(chi2, mul(chi1, chi2))],
    }
}

/// `Γ(x/2)` has a pole exactly when `x/2` is a nonpositive integer.
fn pole_twice(x: i64) -> bool {
    x % 2 == 0 && x <= 0
}

/// Neither `Π Γ_C(s₀ + max(p,q))` nor `Π Γ_C(1 - s₀ + max(-p,-q))` has a pole
/// at `s₀ = twice/2`.
fn critical_by_poles(mu: &PureWeight, kind: LKind, twice: i64) -> bool {
    mu.pairs().iter().flat_map(|p| hodge_characters(*p, kind)).all(|(p, q)| {
        !pole_twice(twice + p.max(q)) && !pole_twice(2 - twice + (-p).max(-q))
    })
}

fn on_lattice(kind: LKind, twice: i64) -> bool {
    match kind {
        LKind::Omega => twice % 2 == 0,
        _ => twice % 2 != 0,
    }
}

fn random_weight<R: Rng>(r: &mut R) -> PureWeight {
    let p = if r.gen_bool(0.5) { Maximal::Beta } else { Maximal::Alpha };
    let pw = r.gen_range(-14..=8);
    let places = r.gen_range(1..=3);
    let pairs = (0..places)
        .map(|_| {
            let a = r.gen_range(-15..=15);
            let b = r.gen_range(-15..=a);
            PurePair::from_eta(a, b, pw)
        })
        .collect();
    PureWeight::new(pairs, natural_basis(p)).expect("a >= b gives a pure weight")
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut r = rng(20240501);
    let mut bad = Vec::new();
    let mut nonempty = 0;
    for _ in 0..200 {
        let mu = random_weight(&mut r);
        for kind in LKind::ALL {
            let set = crit_set(&mu, kind);
            nonempty += usize::from(!set.is_empty());
            for twice in -100..=100 {
                if !on_lattice(kind, twice) {
                    continue;
                }
                if set.contains(HalfInt::from_twice(twice)) != critical_by_poles(&mu, kind, twice) {
                    bad.push(format!("{mu} {kind} at {}", HalfInt::from_twice(twice)));
                    break;
                }
            }
        }
        for p in Maximal::BOTH {
            let product = crit_set_product(&mu, p);
            for twice in (-101..=101).step_by(2) {
                let expected = kinds(p)
                    .iter()
                    .all(|k| critical_by_poles(&mu, *k, k.scale() * twice));
                if product.contains(HalfInt::from_twice(twice)) != expected {
                    bad.push(format!("{mu} product for {p} at {}", HalfInt::from_twice(twice)));
                    break;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && within(elapsed, Duration::from_secs(30));
    Outcome::plain(
        ok,
        format!(
            "200 weights x 4 kinds, {nonempty} nonempty sets, {} mismatches {:?}, {elapsed:.2?}",
            bad.len(),
            bad.first()
        ),
    )
}

// Criterion 6 -------------------------------------------------------------

/// `Γ(n)` for a positive integer `n`, as an exact integer.
fn gamma_int(n: i64) -> i128 {
    assert!(n >= 1, "Gamma argument {n} is not a positive integer");
    (1..n as i128).product()
}

/// `Π Γ_C(n_i) / Π Γ_C(d_i)` with `Γ_C(x) = 2(2π)^{-x}Γ(x)`.
fn gamma_c_quotient(num: &[i64], den: &[i64]) -> (Ratio<i128>, i64) {
    assert_eq!(num.len(), den.len());
    let mut r = Ratio::from_integer(1i128);
    for (&n, &d) in num.iter().zip(den) {
        r *= Ratio::new(gamma_int(n), gamma_int(d));
    }
    let power = den.iter().sum::<i64>() - num.iter().sum::<i64>();
    (r, power)
}

fn criterion_6() -> Outcome {
    let raw = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/worked_instance.json"))
        .expect("fixture present");
    let fx: serde_json::Value = serde_json::from_str(&raw).expect("fixture parses");
    let ints = |v: &serde_json::Value| -> Vec<i64> { v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect() };
    let wt = ints(&fx["weight"]);
    let mu = PureWeight::single(wt[0], wt[1], wt[2], wt[3], natural_basis(Maximal::Beta)).unwrap();
    let mut checks: Vec<(&str, bool)> = Vec::new();
    checks.push(("pw", mu.pw() == fx["pw"].as_i64().unwrap()));

    let crit: Vec<String> = crit_set(&mu, LKind::Ad3).points().iter().map(|h| h.to_string()).collect();
    let expected: Vec<String> = fx["crit_ad3"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect();
    checks.push(("Crit(Ad3)", crit == expected));
    checks.push(("l1", widths(&mu, LKind::Ad3).cuspidal == fx["l1"].as_i64().unwrap()));
    checks.push(("l2", widths(&mu, LKind::Omega).cuspidal == fx["l2"].as_i64().unwrap()));

    let found = find_balanced(&mu, Maximal::Beta).map(|v| v[0].clone());
    let bal = &fx["balanced"];
    checks.push((
        "balanced pair",
        found.as_ref().is_some_and(|m| {
            m.pair.w_eta.name() == bal["w_eta"].as_str().unwrap()
                && m.pair.w_etabar.name() == bal["w_etabar"].as_str().unwrap()
                && [m.lambda_eta.0, m.lambda_eta.1] == ints(&bal["lambda_eta"])[..]
                && [m.lambda_etabar.0, m.lambda_etabar.1] == ints(&bal["lambda_etabar"])[..]
        }),
    ));

    // The Γ_C arguments at the point of evaluation, from the Hodge characters.
    let k_twice = Maximal::Beta.evaluation_point().twice();
    let mut num = Vec::new();
    for kind in kinds(Maximal::Beta) {
        for (p, q) in hodge_characters(mu.pairs()[0], *kind) {
            let twice = kind.scale() * k_twice + p.max(q);
            assert_eq!(twice % 2, 0, "integral Gamma_C argument");
            num.push(twice / 2);
        }
    }
    num.sort();
    let den: Vec<i64> = num.iter().map(|n| n + 1).collect();
    checks.push(("Gamma_C arguments", num == ints(&fx["gamma_c"]["numerator"]) && den == ints(&fx["gamma_c"]["denominator"])));

    let (rat, power) = gamma_c_quotient(&num, &den);
    let fr = &fx["ratio"];
    let fixture = GammaRatio {
        rat: Ratio::new(fr["numer"].as_i64().unwrap().into(), fr["denom"].as_i64().unwrap().into()),
        two_pi_power: fr["two_pi_power"].as_i64().unwrap(),
    };
    let oracle = GammaRatio { rat, two_pi_power: power };
    let combined = combined_ratio(&mu, Maximal::Beta, Maximal::Beta.evaluation_point()).unwrap();
    let chain = cocycle_chain(&mu, Maximal::Beta).unwrap().product();
    checks.push(("oracle = fixture", oracle == fixture));
    checks.push(("combined ratio", combined == fixture));
    checks.push(("chain product", chain == fixture));

    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    Outcome::plain(
        failed.is_empty(),
        format!(
            "Crit(Ad3) = {{{}}}, ratio {} (oracle {}), {} checks failed {failed:?}",
            crit.join(", "),
            combined.pretty(),
            oracle.pretty(),
            failed.len()
        ),
    )
}

// Criterion 7 -------------------------------------------------------------

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut r = rng(7);
    let mut bad = Vec::new();
    for p in Maximal::BOTH {
        for _ in 0..100 {
            let mu = right_of_axis_critical(&mut r, p, 20);
            match verify_cocycle_identity(&mu, p) {
                Ok(c) if c.equal => {}
                Ok(c) => bad.push(format!("{mu}: {} vs {}", c.chain_product, c.combined)),
                Err(e) => bad.push(format!("{mu}: {e}")),
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && within(elapsed, Duration::from_secs(10));
    Outcome::plain(ok, format!("200 weights, {} failures {:?}, {elapsed:.2?}", bad.len(), bad.first()))
}

// Criterion 8 -------------------------------------------------------------

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut r = rng(8);
    let mut bad: Vec<String> = Vec::new();
    for p in Maximal::BOTH {
        let reps = kostant_reps(p.into());
        for w in &reps {
            let wp = prime_involution(w, p).unwrap();
            if prime_involution(&wp, p).unwrap() != *w {
                bad.push(format!("{p}: {w}'' != {w}"));
            }
            if w.length + wp.length != DIM_U {
                bad.push(format!("{p}: l({w}) + l({wp}) != 5"));
            }
        }
        for x in &reps {
            for y in &reps {
                let pair = KostantPair::new(x.clone(), y.clone());
                if pair.is_balanced() != pair.prime(p).unwrap().is_balanced() {
                    bad.push(format!("{p}: balance of {pair} not preserved"));
                }
            }
        }
        let basis = natural_basis(p);
        for _ in 0..50 {
            let (u, v) = dominant_lambda(&mut r, p, 30);
            for w in &reps {
                let id = wprime_component_identity(WeightCoords::int(basis, u, v), w, p).unwrap();
                if !id.equal {
                    bad.push(format!("{p}: {w} at ({u},{v}): {:?} vs {:?}", id.lhs, id.rhs));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && within(elapsed, Duration::from_secs(5));
    Outcome::plain(ok, format!("{} failures {:?}, {elapsed:.2?}", bad.len(), bad.first()))
}

// Criterion 9 -------------------------------------------------------------

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    let mut pairs = 0;
    for p in Maximal::BOTH {
        let reps = kostant_reps(p.into());
        for x in &reps {
            for y in &reps {
                let pair = KostantPair::new(x.clone(), y.clone());
                if !pair.is_balanced() {
                    continue;
                }
                pairs += 1;
                for r in 1..=4 {
                    let d = degree_window(&pair, r).unwrap();
                    if (d.q_min, d.q_max) != (6 * r, 8 * r - 1) {
                        bad.push(format!("{p} {pair} r={r}: [{}, {}]", d.q_min, d.q_max));
                    }
                }
            }
        }
    }
    Outcome::plain(bad.is_empty(), format!("{pairs} balanced pairs x r=1..4, {} failures {:?}", bad.len(), bad.first()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("inverse-action table", criterion_1),
        ("twisted-action tables", criterion_2),
        ("combinatorial lemma", criterion_3),
        ("region coverage", criterion_4),
        ("critical-set oracle", criterion_5),
        ("worked instance", criterion_6),
        ("cocycle identity", criterion_7),
        ("involution suite", criterion_8),
        ("degree numerology", criterion_9),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        let note = match (o.pass, o.as_recorded) {
            (_, false) => " [UNEXPECTED]",
            (false, true) => " [as recorded]",
            (true, true) => "",
        };
        println!("criterion {} ({name}): {status}{note} - {}", i + 1, o.detail);
        unexpected += usize::from(!o.as_recorded);
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
