//! Region systems in the weight plane and a brute-force check of the combinatorial lemma.
//!
//! A single-place pure weight is determined by its `η` component `(a, b)` and
//! its purity weight `w`, the `η̄` component being `(w-b, w-a)`. Every region
//! below is a finite list of closed affine inequalities in `(a, b)` whose
//! coefficients are affine in `w`, and every check is a lattice enumeration.
//! Nothing here uses floating point.
//!
//! Critical regions describe where the evaluation point passes statement (1);
//! twisted action regions describe where a balanced Kostant pair makes the
//! weight `G`-dominant. The lemma says the two unions have the same lattice
//! points.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::kostant::{balanced_matches, find_balanced, inverse_dot, kostant_of_length, natural_basis};
use crate::lcrit::{kinds, poe_check, LKind};
use crate::numeric::{ceil, floor, qi, Q};
use crate::purity::{PurePair, PureWeight};
use crate::rootsys::{pairing_int, Maximal, ALPHA, BETA};
use crate::weights::WeightCoords;

/// `ka*a + kb*b + kw*w + k0 >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Constraint {
    pub ka: i64,
    pub kb: i64,
    pub kw: i64,
    pub k0: i64,
}

impl Constraint {
    pub const fn new(ka: i64, kb: i64, kw: i64, k0: i64) -> Self {
        Constraint { ka, kb, kw, k0 }
    }

    pub fn eval(self, a: i64, b: i64, w: i64) -> i64 {
        self.ka * a + self.kb * b + self.kw * w + self.k0
    }

    pub fn holds(self, a: i64, b: i64, w: i64) -> bool {
        self.eval(a, b, w) >= 0
    }

    /// The constraint at a fixed purity weight, with `kw = 0`.
    pub fn at(self, w: i64) -> Self {
        Constraint::new(self.ka, self.kb, 0, self.k0 + self.kw * w)
    }

    /// Divides out the gcd of the coefficients, so equal half-planes compare equal.
    pub fn normalized(self) -> Self {
        let g = [self.ka, self.kb, self.kw, self.k0]
            .iter()
            .fold(0i64, |g, x| g.gcd(x));
        if g <= 1 {
            return self;
        }
        Constraint::new(self.ka / g, self.kb / g, self.kw / g, self.k0 / g)
    }

    fn neg(self) -> Self {
        Constraint::new(-self.ka, -self.kb, -self.kw, -self.k0)
    }

    fn add(self, o: Constraint) -> Self {
        Constraint::new(self.ka + o.ka, self.kb + o.kb, self.kw + o.kw, self.k0 + o.k0)
    }

    fn scale(self, c: i64) -> Self {
        Constraint::new(c * self.ka, c * self.kb, c * self.kw, c * self.k0)
    }

    /// Real evaluation at a fixed `w`.
    fn eval_q(self, a: Q, b: Q, w: i64) -> Q {
        qi(self.ka) * a + qi(self.kb) * b + qi(self.kw * w + self.k0)
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, var) in [(self.ka, "a"), (self.kb, "b"), (self.kw, "w"), (self.k0, "")] {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
            let mag = c.abs();
            let body = match (mag, var) {
                (_, "") => mag.to_string(),
                (1, v) => v.to_string(),
                (m, v) => format!("{m}{v}"),
            };
            out.push_str(sign);
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out} >= 0")
    }
}

/// Which side of the regime boundary a printed system applies to.
///
/// The boundary (`w = -5` for P_β, `w = -3` for P_α) belongs to both sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    Low,
    High,
    Both,
}

impl Regime {
    pub fn contains(self, w: i64, p: Maximal) -> bool {
        let t = p.unitary_threshold();
        match self {
            Regime::Low => w <= t,
            Regime::High => w >= t,
            Regime::Both => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Regime::Low => "low",
            Regime::High => "high",
            Regime::Both => "all",
        }
    }
}

/// A named polyhedral region of the `(a, b)` plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionSystem {
    pub name: String,
    pub constraints: Vec<Constraint>,
    pub regime: Regime,
}

impl RegionSystem {
    fn new(name: impl Into<String>, constraints: Vec<Constraint>, regime: Regime) -> Self {
        RegionSystem {
            name: name.into(),
            constraints,
            regime,
        }
    }

    pub fn contains(&self, a: i64, b: i64, w: i64) -> bool {
        self.constraints.iter().all(|c| c.holds(a, b, w))
    }

    /// The system at a fixed `w`: `w` folded into the constants, then only the
    /// tightest constraint kept among parallel ones with the same direction.
    pub fn at(&self, w: i64) -> RegionSystem {
        let mut kept: Vec<Constraint> = Vec::new();
        for c in self.constraints.iter().map(|c| c.at(w)) {
            let g = c.ka.gcd(&c.kb).max(1);
            let dir = (c.ka / g, c.kb / g);
            // Compare constants on the common scale of the primitive direction.
            let level = |x: &Constraint| {
                let gx = x.ka.gcd(&x.kb).max(1);
                Q::new(x.k0, gx)
            };
            match kept.iter_mut().find(|k| {
                let gk = k.ka.gcd(&k.kb).max(1);
                (k.ka / gk, k.kb / gk) == dir
            }) {
                Some(k) if level(&c) < level(k) => *k = c,
                Some(_) => {}
                None => kept.push(c),
            }
        }
        RegionSystem::new(self.name.clone(), kept, self.regime)
    }

    /// The constraint set up to scaling and order.
    pub fn normalized_set(&self) -> BTreeSet<Constraint> {
        self.constraints.iter().map(|c| c.normalized()).collect()
    }
}

impl fmt::Display for RegionSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.constraints.iter().map(|c| c.to_string()).collect();
        write!(f, "{} [{}] {{{}}}", self.name, self.regime.name(), parts.join("; "))
    }
}

const fn c(ka: i64, kb: i64, kw: i64, k0: i64) -> Constraint {
    Constraint::new(ka, kb, kw, k0)
}

/// The ten printed critical regions of P_β, split by regime.
///
/// The regime labels of cases (6), (8) and (10) are printed as `w < -5`,
/// `w <= 5` and `w >= 5`; they are read as `w <= -5` and `w >= -5` like the
/// other cases.
fn printed_critical_beta() -> Vec<RegionSystem> {
    let low: [(&str, [Constraint; 2]); 10] = [
        ("(1)", [c(1, -1, 0, 0), c(-1, 2, 0, 0)]),
        ("(2)", [c(1, -2, 1, 3), c(-1, 3, -1, -2)]),
        ("(3)", [c(0, 1, 0, 1), c(1, -3, 1, 2)]),
        ("(4)", [c(1, 3, -2, -1), c(0, -1, 1, 2)]),
        ("(5)", [c(1, 1, 0, 4), c(-1, -3, 2, 1)]),
        ("(6)", [c(3, 1, -2, 1), c(-1, -1, 2, 4)]),
        ("(7)", [c(1, 0, 0, 2), c(-3, -1, 2, -1)]),
        ("(8)", [c(3, -1, -1, 2), c(-1, 0, 1, 1)]),
        ("(9)", [c(-3, 1, 1, -2), c(2, -1, 0, 3)]),
        ("(10)", [c(-2, 1, 1, 0), c(1, -1, 0, 0)]),
    ];
    let high: [(&str, [Constraint; 2]); 10] = [
        ("(1)", [c(1, -1, 0, 0), c(-1, 2, -1, -5)]),
        ("(2)", [c(1, -2, 0, -2), c(-1, 3, -1, -2)]),
        ("(3)", [c(0, 1, -1, -4), c(1, -3, 1, 2)]),
        ("(4)", [c(1, 3, -2, -1), c(0, -1, 0, -3)]),
        ("(5)", [c(1, 1, -2, -6), c(-1, -3, 2, 1)]),
        ("(6)", [c(3, 1, -2, 1), c(-1, -1, 0, -6)]),
        ("(7)", [c(1, 0, -1, -3), c(-3, -1, 2, -1)]),
        ("(8)", [c(3, -1, -1, 2), c(-1, 0, 0, -4)]),
        ("(9)", [c(-3, 1, 1, -2), c(2, -1, -1, -2)]),
        ("(10)", [c(-2, 1, 0, -5), c(1, -1, 0, 0)]),
    ];
    let mut out = Vec::new();
    for (regime, list) in [(Regime::Low, low), (Regime::High, high)] {
        for (name, cs) in list {
            out.push(RegionSystem::new(name, cs.to_vec(), regime));
        }
    }
    out
}

/// Linear forms inside the absolute values of the cuspidal width, as `(ka, kb, kw, k0)`.
fn width_forms(kind: LKind) -> Vec<Constraint> {
    match kind {
        LKind::Ad3 => vec![c(-2, 4, -1, -3), c(0, 2, -1, -1), c(2, 0, -1, 1), c(4, -2, -1, 3)],
        LKind::Omega => vec![c(1, 1, -1, 0)],
        LKind::Std => vec![c(0, 2, -1, -1), c(2, 0, -1, 1)],
        LKind::StdTwist => vec![c(2, 4, -3, -1), c(4, 2, -3, 1)],
    }
}

/// Doubled abelian factor: `2a_j = f * w`.
fn doubled_abelian(kind: LKind) -> i64 {
    match kind {
        LKind::Ad3 | LKind::Std => 1,
        LKind::Omega => 2,
        LKind::StdTwist => 3,
    }
}

/// Doubled `h`: the width enters the offsets as `h * ℓ`.
fn doubled_h(kind: LKind) -> i64 {
    match kind {
        LKind::Omega => 2,
        _ => 1,
    }
}

/// Critical regions obtained from the definitions.
///
/// For each factor a sign pattern `σ` of the forms `L_i` inside the absolute
/// values and an index `i` attaining the minimum fix `ℓ_j = σ_i L_i` as a
/// linear form. Statement (1) then becomes two linear inequalities per
/// factor. One region per combination of choices; regions meet only along
/// their boundaries.
pub fn derived_critical_regions(p: Maximal) -> Vec<RegionSystem> {
    let k2 = p.evaluation_point().twice();
    let mut pieces: Vec<(String, Vec<Constraint>)> = vec![(String::new(), vec![c(1, -1, 0, 0)])];
    for &kind in kinds(p) {
        let forms = width_forms(kind);
        let (j, f, h) = (kind.scale(), doubled_abelian(kind), doubled_h(kind));
        let mut next = Vec::new();
        for (name, base) in &pieces {
            for mask in 0..(1u32 << forms.len()) {
                let signed: Vec<Constraint> = forms
                    .iter()
                    .enumerate()
                    .map(|(m, l)| if mask >> m & 1 == 1 { l.neg() } else { *l })
                    .collect();
                let signs: String = (0..forms.len())
                    .map(|m| if mask >> m & 1 == 1 { '-' } else { '+' })
                    .collect();
                for (i, &ell) in signed.iter().enumerate() {
                    let mut cs = base.clone();
                    cs.extend(signed.iter().copied());
                    cs.extend(
                        signed
                            .iter()
                            .enumerate()
                            .filter(|(m, _)| *m != i)
                            .map(|(_, l)| l.add(ell.neg())),
                    );
                    // hℓ >= 1 + a_j - jk and hℓ >= 1 + jk - a_j, doubled.
                    cs.push(ell.scale(h).add(c(0, 0, -f, j * k2 - 2)));
                    cs.push(ell.scale(h).add(c(0, 0, f, -j * k2 - 2)));
                    let sep = if name.is_empty() { "" } else { "," };
                    next.push((format!("{name}{sep}{}[{signs}]min{}", kind.name(), i + 1), cs));
                }
            }
        }
        pieces = next;
    }
    pieces
        .into_iter()
        .map(|(name, cs)| RegionSystem::new(name, cs, Regime::Both))
        .collect()
}

/// Critical regions at purity weight `w`.
///
/// P_β uses the ten printed regions of the applicable regime; P_α, for which
/// only a summary is printed, uses [`derived_critical_regions`]. On the regime
/// boundary both printed versions apply; a version identical to one already
/// listed is dropped.
pub fn critical_regions(w: i64, p: Maximal) -> Vec<RegionSystem> {
    let all = match p {
        Maximal::Beta => printed_critical_beta(),
        Maximal::Alpha => derived_critical_regions(p),
    };
    let mut out: Vec<RegionSystem> = Vec::new();
    for r in all.iter().filter(|r| r.regime.contains(w, p)).map(|r| r.at(w)) {
        let dup = out
            .iter()
            .any(|o| o.name == r.name && o.normalized_set() == r.normalized_set());
        if !dup {
            out.push(r);
        }
    }
    out
}

/// Printed cases whose two regime versions differ on the boundary, compared
/// on lattice points with `|a|, |b| <= window` and `a >= b`.
pub fn regime_boundary_disagreements(p: Maximal, window: i64) -> Vec<String> {
    let w = p.unitary_threshold();
    let printed = match p {
        Maximal::Beta => printed_critical_beta(),
        Maximal::Alpha => return Vec::new(),
    };
    let (low, high): (Vec<_>, Vec<_>) = printed.iter().partition(|r| r.regime == Regime::Low);
    let mut out = Vec::new();
    for l in low {
        let Some(h) = high.iter().find(|h| h.name == l.name) else {
            continue;
        };
        let differs = (-window..=window)
            .flat_map(|a| (-window..=a.min(window)).map(move |b| (a, b)))
            .any(|(a, b)| l.contains(a, b, w) != h.contains(a, b, w));
        if differs {
            out.push(l.name.clone());
        }
    }
    out
}

/// Roman label of a balanced shape `(l(w^η), l(w^η̄))`.
pub fn shape_label(shape: (usize, usize)) -> &'static str {
    match shape {
        (0, 5) => "(I)",
        (1, 4) => "(II)",
        (2, 3) => "(III)",
        (3, 2) => "(IV)",
        (4, 1) => "(V)",
        (5, 0) => "(VI)",
        _ => "(?)",
    }
}

/// Shapes in the order `(I), ..., (VI)`.
pub const SHAPES_BY_LABEL: [(usize, usize); 6] = [(0, 5), (1, 4), (2, 3), (3, 2), (4, 1), (5, 0)];

/// The printed twisted action regions of P_β, before splitting by regime.
pub fn printed_twisted_beta() -> Vec<RegionSystem> {
    let rows: [(&str, [Constraint; 4]); 6] = [
        ("(I)", [c(1, -1, 0, 0), c(-1, 2, 0, 0), c(1, -1, 0, 0), c(-1, 2, -1, -5)]),
        ("(II)", [c(0, 1, 0, 1), c(1, -2, 0, -2), c(0, 1, -1, -4), c(1, -2, 1, 3)]),
        ("(III)", [c(1, 1, 0, 4), c(0, -1, 0, -3), c(1, 1, -2, -6), c(0, -1, 1, 2)]),
        ("(IV)", [c(1, 0, 0, 2), c(-1, -1, 0, -6), c(1, 0, -1, -3), c(-1, -1, 2, 4)]),
        ("(V)", [c(-1, 0, 0, -4), c(2, -1, 0, 3), c(-1, 0, 1, 1), c(2, -1, -1, -2)]),
        ("(VI)", [c(-2, 1, 0, -5), c(1, -1, 0, 0), c(-2, 1, 1, 0), c(1, -1, 0, 0)]),
    ];
    rows.iter()
        .map(|(name, cs)| RegionSystem::new(*name, cs.to_vec(), Regime::Both))
        .collect()
}

/// `G`-dominance of `(u, v)` in the natural basis as two linear forms in `(u, v)`.
fn dominance_forms(p: Maximal) -> [(i64, i64); 2] {
    let basis = natural_basis(p);
    let col = |u, v| {
        WeightCoords::int(basis, u, v)
            .to_root()
            .to_root()
            .expect("integral coordinates give a lattice vector")
    };
    let (e1, e2) = (col(1, 0), col(0, 1));
    let pair = |r| pairing_int(r, ALPHA).unwrap_or(0);
    let pairb = |r| pairing_int(r, BETA).unwrap_or(0);
    [(pair(e1), pair(e2)), (pairb(e1), pairb(e2))]
}

/// The affine map `(a, b, w) ↦ w^{-1}.x` as two forms, where `x` is either
/// the `η` component `(a, b)` or the `η̄` component `(w-b, w-a)`.
fn inverse_dot_forms(p: Maximal, l: usize, conjugate: bool) -> [Constraint; 2] {
    let wel = kostant_of_length(p, l);
    let at = |a: i64, b: i64, w: i64| {
        let x = if conjugate { (w - b, w - a) } else { (a, b) };
        inverse_dot(wel, p, x)
    };
    let o = at(0, 0, 0);
    let da = at(1, 0, 0);
    let db = at(0, 1, 0);
    let dw = at(0, 0, 1);
    let form = |pick: fn((i64, i64)) -> i64| {
        c(pick(da) - pick(o), pick(db) - pick(o), pick(dw) - pick(o), pick(o))
    };
    [form(|x| x.0), form(|x| x.1)]
}

/// Twisted action regions obtained from the dot action and `G`-dominance.
pub fn derived_twisted_regions(p: Maximal) -> Vec<RegionSystem> {
    let dom = dominance_forms(p);
    SHAPES_BY_LABEL
        .iter()
        .map(|&(le, lb)| {
            let mut cs = Vec::new();
            for (l, conj) in [(le, false), (lb, true)] {
                let [u, v] = inverse_dot_forms(p, l, conj);
                for (cu, cv) in dom {
                    cs.push(u.scale(cu).add(v.scale(cv)));
                }
            }
            RegionSystem::new(shape_label((le, lb)), cs, Regime::Both)
        })
        .collect()
}

/// Names of the twisted regions whose derived system differs from the printed one.
pub fn twisted_transcription_mismatches() -> Vec<String> {
    printed_twisted_beta()
        .iter()
        .zip(derived_twisted_regions(Maximal::Beta))
        .filter(|(pr, dr)| pr.normalized_set() != dr.normalized_set())
        .map(|(pr, _)| pr.name.clone())
        .collect()
}

/// The six twisted action regions at purity weight `w`.
///
/// For P_β this is the printed transcription; it is checked against the
/// derivation on every call. For P_α the derivation is used directly.
pub fn twisted_regions(w: i64, p: Maximal) -> Vec<RegionSystem> {
    let derived = derived_twisted_regions(p);
    let list = match p {
        Maximal::Beta => {
            let printed = printed_twisted_beta();
            for (pr, dr) in printed.iter().zip(&derived) {
                assert_eq!(
                    pr.normalized_set(),
                    dr.normalized_set(),
                    "twisted region {} disagrees with its derivation",
                    pr.name
                );
            }
            printed
        }
        Maximal::Alpha => derived,
    };
    list.iter().map(|r| r.at(w)).collect()
}

/// Lattice comparison of the two unions inside a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub parabolic: Maximal,
    pub pw: i64,
    pub window: i64,
    pub crit_points: usize,
    pub twist_points: usize,
    /// Points in exactly one of the two unions, as `(a, b)`.
    pub symmetric_difference: Vec<(i64, i64)>,
    /// Points lying in more than one critical region (boundaries shared by neighbours).
    pub crit_overlaps: usize,
}

/// Lattice points with `|a|, |b| <= window` and `a >= b` in either union.
pub fn coverage_report(w: i64, p: Maximal, window: i64) -> Result<CoverageReport> {
    if window < 1 {
        return Err(domain("coverage window must be at least 1"));
    }
    let crit = critical_regions(w, p);
    let twist = twisted_regions(w, p);
    let (mut cp, mut tp, mut overlaps) = (0, 0, 0);
    let mut diff = Vec::new();
    for a in -window..=window {
        for b in -window..=a.min(window) {
            let mut names: Vec<&str> = crit
                .iter()
                .filter(|r| r.contains(a, b, w))
                .map(|r| r.name.as_str())
                .collect();
            names.dedup();
            let n = names.len();
            let in_c = n > 0;
            let in_t = twist.iter().any(|r| r.contains(a, b, w));
            cp += usize::from(in_c);
            tp += usize::from(in_t);
            overlaps += usize::from(n > 1);
            if in_c != in_t {
                diff.push((a, b));
            }
        }
    }
    Ok(CoverageReport {
        parabolic: p,
        pw: w,
        window,
        crit_points: cp,
        twist_points: tp,
        symmetric_difference: diff,
        crit_overlaps: overlaps,
    })
}

/// A point with rational coordinates.
pub type QPoint = (Q, Q);

/// Outcome of [`lattice_free_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeFreeReport {
    /// No lattice point in the closed triangle other than its lattice vertices.
    pub lattice_free: bool,
    /// An offending point, preferring one strictly inside.
    pub witness: Option<(i64, i64)>,
    pub interior: Vec<(i64, i64)>,
    /// Lattice points on an edge that are not vertices.
    pub edge: Vec<(i64, i64)>,
    pub lattice_vertices: Vec<(i64, i64)>,
}

fn cross(o: QPoint, p: QPoint, r: QPoint) -> Q {
    (p.0 - o.0) * (r.1 - o.1) - (p.1 - o.1) * (r.0 - o.0)
}

/// Lattice points of a closed triangle, classified.
pub fn lattice_free_check(v: [QPoint; 3]) -> Result<LatticeFreeReport> {
    let area = cross(v[0], v[1], v[2]);
    if area.is_zero() {
        return Err(domain("degenerate triangle"));
    }
    let sign = area.signum();
    let lo = |f: fn(&QPoint) -> Q| floor(v.iter().map(f).min().expect("three vertices"));
    let hi = |f: fn(&QPoint) -> Q| ceil(v.iter().map(f).max().expect("three vertices"));
    let vertex_ints: Vec<(i64, i64)> = v
        .iter()
        .filter(|p| p.0.is_integer() && p.1.is_integer())
        .map(|p| (p.0.to_integer(), p.1.to_integer()))
        .collect();
    let mut report = LatticeFreeReport {
        lattice_free: true,
        witness: None,
        interior: Vec::new(),
        edge: Vec::new(),
        lattice_vertices: vertex_ints.clone(),
    };
    for x in lo(|p| p.0)..=hi(|p| p.0) {
        for y in lo(|p| p.1)..=hi(|p| p.1) {
            let pt = (qi(x), qi(y));
            let s: Vec<Q> = (0..3).map(|i| cross(v[i], v[(i + 1) % 3], pt) * sign).collect();
            if s.iter().any(|t| t.is_negative()) {
                continue;
            }
            if s.iter().all(|t| t.is_positive()) {
                report.interior.push((x, y));
            } else if !vertex_ints.contains(&(x, y)) {
                report.edge.push((x, y));
            }
        }
    }
    report.witness = report.interior.first().or(report.edge.first()).copied();
    report.lattice_free = report.witness.is_none();
    Ok(report)
}

/// The translated uncovered triangle between critical regions (4), (5) and
/// twisted region (III) of P_β, as `(b, a)` points.
pub fn beta_sliver_triangle() -> [QPoint; 3] {
    [(qi(0), qi(0)), (qi(0), qi(1)), (Q::new(1, 2), Q::new(-1, 2))]
}

/// A triangle written as `(a, b)` points, moved to normal position: each
/// point becomes `(b, a)`, then the smallest lattice vertex is translated to
/// the origin. Vertices come back sorted. Integer translations preserve
/// lattice-freeness, so the result certifies the original.
pub fn normalized_triangle(vertices: &[QPoint]) -> Option<[QPoint; 3]> {
    let [p, q, r] = <[QPoint; 3]>::try_from(vertices).ok()?;
    let swapped = [(p.1, p.0), (q.1, q.0), (r.1, r.0)];
    let origin = *swapped
        .iter()
        .filter(|v| v.0.is_integer() && v.1.is_integer())
        .min()?;
    let mut out = swapped.map(|v| (v.0 - origin.0, v.1 - origin.1));
    out.sort();
    Some(out)
}

type Polygon = Vec<QPoint>;

/// Keeps the part of a convex polygon where `c >= 0` (at fixed `w`).
fn clip(poly: &Polygon, c: Constraint, w: i64) -> Polygon {
    let f = |p: &QPoint| c.eval_q(p.0, p.1, w);
    let mut out = Vec::new();
    for i in 0..poly.len() {
        let (p, r) = (poly[i], poly[(i + 1) % poly.len()]);
        let (fp, fr) = (f(&p), f(&r));
        if !fp.is_negative() {
            out.push(p);
        }
        if (fp.is_negative() && fr.is_positive()) || (fp.is_positive() && fr.is_negative()) {
            let t = fp / (fp - fr);
            out.push((p.0 + t * (r.0 - p.0), p.1 + t * (r.1 - p.1)));
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

fn area2(poly: &Polygon) -> Q {
    (0..poly.len())
        .map(|i| {
            let (p, r) = (poly[i], poly[(i + 1) % poly.len()]);
            p.0 * r.1 - p.1 * r.0
        })
        .fold(Q::zero(), |s, x| s + x)
        .abs()
}

/// A two-dimensional piece of one union that no region of the other covers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sliver {
    /// Name of the region the piece comes from.
    pub source: String,
    /// Vertices as `(a, b)`, in order.
    pub vertices: Vec<QPoint>,
    /// Lattice points strictly inside the piece.
    pub interior_lattice: Vec<(i64, i64)>,
}

/// Parts of the critical regions not covered by twisted regions, and the
/// reverse, inside the box `|a|, |b| <= window` with `a >= b`.
///
/// Each region is clipped exactly; a region minus a convex region is split
/// into convex pieces along the constraints of the subtracted region.
pub fn uncovered_slivers(w: i64, p: Maximal, window: i64) -> Vec<Sliver> {
    let boxed: Polygon = vec![
        (qi(-window), qi(-window)),
        (qi(window), qi(-window)),
        (qi(window), qi(window)),
    ];
    let crit = critical_regions(w, p);
    let twist = twisted_regions(w, p);
    let mut out = Vec::new();
    for (from, against) in [(&crit, &twist), (&twist, &crit)] {
        for region in from.iter() {
            let start = region.constraints.iter().fold(boxed.clone(), |poly, c| clip(&poly, *c, w));
            let mut pieces = vec![start];
            for other in against.iter() {
                let mut next = Vec::new();
                for piece in &pieces {
                    let mut rest = piece.clone();
                    for c in &other.constraints {
                        let outside = clip(&rest, c.neg(), w);
                        if outside.len() >= 3 && !area2(&outside).is_zero() {
                            next.push(outside);
                        }
                        rest = clip(&rest, *c, w);
                        if rest.len() < 3 {
                            break;
                        }
                    }
                }
                pieces = next;
            }
            for poly in pieces.into_iter().filter(|q| q.len() >= 3 && !area2(q).is_zero()) {
                let interior = strict_interior_points(&poly);
                out.push(Sliver {
                    source: region.name.clone(),
                    vertices: poly,
                    interior_lattice: interior,
                });
            }
        }
    }
    out
}

fn strict_interior_points(poly: &Polygon) -> Vec<(i64, i64)> {
    let orient = {
        let s = (1..poly.len() - 1)
            .map(|i| cross(poly[0], poly[i], poly[i + 1]))
            .fold(Q::zero(), |s, x| s + x);
        s.signum()
    };
    let xs = poly.iter().map(|p| p.0);
    let ys = poly.iter().map(|p| p.1);
    let (x0, x1) = (floor(xs.clone().min().unwrap()), ceil(xs.max().unwrap()));
    let (y0, y1) = (floor(ys.clone().min().unwrap()), ceil(ys.max().unwrap()));
    let mut pts = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            let pt = (qi(x), qi(y));
            if (0..poly.len()).all(|i| (cross(poly[i], poly[(i + 1) % poly.len()], pt) * orient).is_positive()) {
                pts.push((x, y));
            }
        }
    }
    pts
}

/// One lattice point where statements (1) and (3) disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub pw: i64,
    pub a: i64,
    pub b: i64,
    pub statement_1: bool,
    pub statement_3: bool,
}

/// Outcome of [`verify_lemma`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub points: usize,
    /// Points where statement (1) holds.
    pub critical_points: usize,
    pub disagreements: Vec<Disagreement>,
    /// Points where the derived inequality family differs from statement (1).
    pub derived_mismatches: usize,
    /// Points where the printed bounds of statement (2) differ from statement (1).
    pub printed_mismatches: usize,
    /// Points where reading statement (1) as "`k+1` lies in the product critical
    /// set" differs from the reading used here.
    pub literal_mismatches: usize,
    /// Largest number of balanced shapes matching a single point.
    pub max_shapes: usize,
}

impl LemmaReport {
    fn merge(mut self, o: LemmaReport) -> LemmaReport {
        self.points += o.points;
        self.critical_points += o.critical_points;
        self.disagreements.extend(o.disagreements);
        self.derived_mismatches += o.derived_mismatches;
        self.printed_mismatches += o.printed_mismatches;
        self.literal_mismatches += o.literal_mismatches;
        self.max_shapes = self.max_shapes.max(o.max_shapes);
        self
    }

    /// Statements (1) and (3) agree everywhere.
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Checks one single-place weight and returns its contribution to the report.
pub fn check_point(mu: &PureWeight, p: Maximal) -> LemmaReport {
    let poe = poe_check(mu, p);
    let s1 = poe.statement_1;
    let s3 = find_balanced(mu, p).is_some();
    let literal = poe.critical_at_k && poe.k_plus_1_in_product;
    let shapes = mu
        .pairs()
        .iter()
        .map(|pair| balanced_matches(*pair, p).len())
        .max()
        .unwrap_or(0);
    let first = mu.pairs()[0];
    LemmaReport {
        points: 1,
        critical_points: usize::from(s1),
        disagreements: if s1 == s3 {
            Vec::new()
        } else {
            vec![Disagreement {
                pw: mu.pw(),
                a: first.eta.a,
                b: first.eta.b,
                statement_1: s1,
                statement_3: s3,
            }]
        },
        derived_mismatches: usize::from(poe.derived.holds != s1),
        printed_mismatches: usize::from(poe.printed.holds != s1),
        literal_mismatches: usize::from(literal != s1),
        max_shapes: shapes,
    }
}

fn scan_pw(p: Maximal, w: i64, window: i64) -> LemmaReport {
    let mut r = LemmaReport::default();
    for a in -window..=window {
        for b in -window..=a.min(window) {
            let mu = PureWeight::new(vec![PurePair::from_eta(a, b, w)], natural_basis(p))
                .expect("a >= b gives a pure weight");
            r = r.merge(check_point(&mu, p));
        }
    }
    r
}

/// Compares statements (1) and (3) at every `((a,b),(w-b,w-a))` with
/// `a >= b`, `|a|, |b| <= window` and `w` in `pw_range`.
///
/// The scan is split by purity weight and merged in increasing `w`, so the
/// report does not depend on how the work was scheduled.
pub fn verify_lemma(p: Maximal, pw_range: (i64, i64), window: i64) -> Result<LemmaReport> {
    let (lo, hi) = pw_range;
    if lo > hi || window < 0 {
        return Err(domain(format!("empty scan: pw {lo}..{hi}, window {window}")));
    }
    let ws: Vec<i64> = (lo..=hi).collect();
    #[cfg(feature = "parallel")]
    let parts: Vec<LemmaReport> = {
        use rayon::prelude::*;
        ws.par_iter().map(|&w| scan_pw(p, w, window)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<LemmaReport> = ws.iter().map(|&w| scan_pw(p, w, window)).collect();
    Ok(parts.into_iter().fold(LemmaReport::default(), LemmaReport::merge))
}

/// Matched shapes at one single-place point, in label order.
pub fn matching_shapes(pair: PurePair, p: Maximal) -> Vec<&'static str> {
    let found: Vec<(usize, usize)> = balanced_matches(pair, p)
        .iter()
        .map(|m| m.pair.lengths())
        .collect();
    SHAPES_BY_LABEL
        .iter()
        .filter(|s| found.contains(s))
        .map(|&s| shape_label(s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::Basis;

    #[test]
    fn printed_examples() {
        let r = critical_regions(-6, Maximal::Beta);
        assert_eq!(r[0].normalized_set(), [c(1, -1, 0, 0), c(-1, 2, 0, 0)].into_iter().collect());
        // (2): 2b-3-w <= a <= 3b-2-w at w = -6.
        assert_eq!(r[1].constraints, vec![c(1, -2, 0, -3), c(-1, 3, 0, 4)]);
        let r = critical_regions(3, Maximal::Beta);
        assert_eq!(r[0].constraints, vec![c(1, -1, 0, 0), c(-1, 2, 0, -8)]);
        let t = twisted_regions(-6, Maximal::Beta);
        assert_eq!(t[0].normalized_set(), [c(1, -1, 0, 0), c(-1, 2, 0, 0)].into_iter().collect());
        assert_eq!(t[5].normalized_set(), [c(-2, 1, 0, -6), c(1, -1, 0, 0)].into_iter().collect());
    }

    #[test]
    fn twisted_transcription_matches_derivation() {
        assert!(twisted_transcription_mismatches().is_empty());
    }

    #[test]
    fn lattice_free_examples() {
        let r = lattice_free_check(beta_sliver_triangle()).unwrap();
        assert!(r.lattice_free);
        assert_eq!(r.lattice_vertices, vec![(0, 0), (0, 1)]);
        let big = [(qi(0), qi(0)), (qi(3), qi(0)), (qi(0), qi(3))];
        let r = lattice_free_check(big).unwrap();
        assert!(!r.lattice_free);
        assert_eq!(r.witness, Some((1, 1)));
        let flat = [(qi(0), qi(0)), (qi(1), qi(1)), (qi(2), qi(2))];
        assert!(lattice_free_check(flat).is_err());
    }

    #[test]
    fn beta_sliver_is_the_printed_triangle() {
        let mut printed = beta_sliver_triangle();
        printed.sort();
        for w in [-7, -3] {
            let s = uncovered_slivers(w, Maximal::Beta, 30);
            let five = s.iter().find(|s| s.source == "(5)").unwrap();
            assert_eq!(normalized_triangle(&five.vertices), Some(printed));
        }
    }

    #[test]
    fn boundary_versions_agree() {
        assert!(regime_boundary_disagreements(Maximal::Beta, 30).is_empty());
        let r = coverage_report(-5, Maximal::Beta, 20).unwrap();
        assert!(r.symmetric_difference.is_empty());
        assert!(r.crit_overlaps < r.crit_points / 4);
    }

    #[test]
    fn worked_point() {
        let mu = PureWeight::single(3, 2, -8, -9, Basis::TBeta).unwrap();
        let r = check_point(&mu, Maximal::Beta);
        assert_eq!(r.critical_points, 1);
        assert!(r.passed());
        let tr = PureWeight::single(3, 1, 3, 1, Basis::TBeta).unwrap();
        let r = check_point(&tr, Maximal::Beta);
        assert_eq!(r.critical_points, 0);
        assert!(r.passed());
    }

    #[test]
    fn constraint_display() {
        assert_eq!(c(1, -2, 1, 3).to_string(), "a-2b+w+3 >= 0");
        assert_eq!(c(0, 0, 0, 0).to_string(), "0 >= 0");
        assert_eq!(c(0, -1, 0, -3).to_string(), "-b-3 >= 0");
    }
}
