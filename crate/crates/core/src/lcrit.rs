//! Critical sets of the L-functions in the constant terms, and the tests at the
//! point of evaluation.
//!
//! Each archimedean factor is a product of `Γ(s + c)` over a list of offsets `c`;
//! its functional-equation partner is the product of `Γ(1 - s + d)`. With the
//! abelian width `a` and the per-factor absolute values `X`, the offsets are
//! `c = -a + h*X` and `d = a + h*X`, where `h = 1/2` for the GL2-type factors
//! and `h = 1` for the Hecke factor. A lattice point is critical when no
//! argument of either list is a nonpositive integer, which cuts out the closed
//! interval `[1 + a - h*ℓ, a + h*ℓ]` with `ℓ = min X`.
//!
//! The factor `L(σ ⊗ ω_σ)` is the standard L-function of the GL2 weight
//! `(2a+b, a+2b)` of purity `3pw`, so its absolute values are
//! `|2a+4b-3pw-1|` and `|4a+2b-3pw+1|` with `h = 1/2`. The printed variant
//! `|a+2b-3pw-1|`, `|2a+b-3pw+1|` is kept as [`printed_twist_width`] so the two can be
//! compared.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::numeric::{q, qi, HalfInt, Q};
use crate::purity::{tate_twist, GlWeight, PureWeight};
use crate::rootsys::Maximal;

/// The L-functions that occur in the constant terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LKind {
    /// Adjoint symmetric cube `Ad³`, evaluated at `s` (P_β).
    Ad3,
    /// Hecke L-function of the central character, evaluated at `2s`.
    Omega,
    /// Standard L-function of GL2, evaluated at `s` (P_α).
    Std,
    /// Standard L-function of `σ ⊗ ω_σ`, evaluated at `3s` (P_α).
    StdTwist,
}

impl LKind {
    pub const ALL: [LKind; 4] = [LKind::Ad3, LKind::Omega, LKind::Std, LKind::StdTwist];

    /// Multiplier `j` in `L(js, ·)`.
    pub fn scale(self) -> i64 {
        match self {
            LKind::Ad3 | LKind::Std => 1,
            LKind::Omega => 2,
            LKind::StdTwist => 3,
        }
    }

    /// Lattice carrying the critical points.
    pub fn lattice(self) -> Lattice {
        match self {
            LKind::Omega => Lattice::Integer,
            _ => Lattice::HalfOdd,
        }
    }

    /// Abelian width as a multiple of `pw`: `a = pw * factor`.
    fn abelian_factor(self) -> Q {
        match self {
            LKind::Ad3 | LKind::Std => q(1, 2),
            LKind::Omega => qi(1),
            LKind::StdTwist => q(3, 2),
        }
    }

    /// Coefficient `h` of the absolute values in the offsets.
    fn half_factor(self) -> Q {
        match self {
            LKind::Omega => qi(1),
            _ => q(1, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LKind::Ad3 => "AD3",
            LKind::Omega => "OMEGA",
            LKind::Std => "STD",
            LKind::StdTwist => "STDTWIST",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "AD3" => Ok(LKind::Ad3),
            "OMEGA" => Ok(LKind::Omega),
            "STD" => Ok(LKind::Std),
            "STDTWIST" => Ok(LKind::StdTwist),
            _ => Err(domain(format!("unknown L-function kind {s:?}"))),
        }
    }
}

impl fmt::Display for LKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The factors of the constant term, ordered `ℓ₁, ℓ₂, (ℓ₃)`.
pub fn kinds(p: Maximal) -> &'static [LKind] {
    match p {
        Maximal::Beta => &[LKind::Ad3, LKind::Omega],
        Maximal::Alpha => &[LKind::Std, LKind::Omega, LKind::StdTwist],
    }
}

/// `Z` or `1/2 + Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lattice {
    Integer,
    HalfOdd,
}

impl Lattice {
    pub fn contains(self, x: HalfInt) -> bool {
        match self {
            Lattice::Integer => x.is_integer(),
            Lattice::HalfOdd => x.is_strict_half(),
        }
    }

    /// Smallest lattice point `>= x`.
    pub fn ceil(self, x: Q) -> HalfInt {
        match self {
            Lattice::Integer => HalfInt::from_int(x.ceil().to_integer()),
            Lattice::HalfOdd => {
                let n = (x - q(1, 2)).ceil().to_integer();
                HalfInt::from_twice(2 * n + 1)
            }
        }
    }

    /// Largest lattice point `<= x`.
    pub fn floor(self, x: Q) -> HalfInt {
        match self {
            Lattice::Integer => HalfInt::from_int(x.floor().to_integer()),
            Lattice::HalfOdd => {
                let n = (x - q(1, 2)).floor().to_integer();
                HalfInt::from_twice(2 * n + 1)
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Lattice::Integer => "Z",
            Lattice::HalfOdd => "1/2+Z",
        }
    }
}

/// A closed interval of lattice points, possibly empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CritInterval {
    pub lattice: Lattice,
    pub bounds: Option<(HalfInt, HalfInt)>,
}

impl CritInterval {
    pub fn empty(lattice: Lattice) -> Self {
        CritInterval {
            lattice,
            bounds: None,
        }
    }

    /// Lattice points in the real interval `[lo, hi]`.
    pub fn from_real(lattice: Lattice, lo: Q, hi: Q) -> Self {
        let l = lattice.ceil(lo);
        let h = lattice.floor(hi);
        CritInterval {
            lattice,
            bounds: (l <= h).then_some((l, h)),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_none()
    }

    pub fn lo(&self) -> Option<HalfInt> {
        self.bounds.map(|b| b.0)
    }

    pub fn hi(&self) -> Option<HalfInt> {
        self.bounds.map(|b| b.1)
    }

    pub fn contains(&self, x: HalfInt) -> bool {
        self.lattice.contains(x) && self.bounds.is_some_and(|(l, h)| l <= x && x <= h)
    }

    /// Number of points.
    pub fn len(&self) -> usize {
        self.bounds
            .map_or(0, |(l, h)| ((h.twice() - l.twice()) / 2 + 1) as usize)
    }

    /// All points in increasing order.
    pub fn points(&self) -> Vec<HalfInt> {
        match self.bounds {
            None => Vec::new(),
            Some((l, h)) => (l.twice()..=h.twice())
                .step_by(2)
                .map(HalfInt::from_twice)
                .collect(),
        }
    }

    /// Intersection of two intervals on the same lattice.
    pub fn intersect(&self, other: &CritInterval) -> CritInterval {
        debug_assert_eq!(self.lattice, other.lattice);
        let bounds = match (self.bounds, other.bounds) {
            (Some((l1, h1)), Some((l2, h2))) => {
                let (l, h) = (l1.max(l2), h1.min(h2));
                (l <= h).then_some((l, h))
            }
            _ => None,
        };
        CritInterval {
            lattice: self.lattice,
            bounds,
        }
    }
}

impl fmt::Display for CritInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bounds {
            None => f.write_str("EMPTY"),
            Some((l, h)) => write!(f, "[{l}, {h}]"),
        }
    }
}

/// Highest weight of a transferred representation, with its purity weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transfer {
    pub entries: Vec<i64>,
    pub purity: i64,
}

/// `Ad³(a,b) = (2a-b, a, b, 2b-a)`, `det = a+b`, `μ+det(μ) = (2a+b, a+2b)`.
pub fn transfer_weight(c: GlWeight, pw: i64, kind: LKind) -> Transfer {
    let (a, b) = (c.a, c.b);
    match kind {
        LKind::Ad3 => Transfer {
            entries: vec![2 * a - b, a, b, 2 * b - a],
            purity: pw,
        },
        LKind::Omega => Transfer {
            entries: vec![a + b],
            purity: 2 * pw,
        },
        LKind::Std => Transfer {
            entries: vec![a, b],
            purity: pw,
        },
        LKind::StdTwist => Transfer {
            entries: vec![2 * a + b, a + 2 * b],
            purity: 3 * pw,
        },
    }
}

/// The absolute values `X` at one embedding, in factor order.
pub fn abs_values(c: GlWeight, pw: i64, kind: LKind) -> Vec<i64> {
    let (a, b, w) = (c.a, c.b, pw);
    match kind {
        LKind::Ad3 => vec![
            (4 * b - 2 * a - w - 3).abs(),
            (2 * b - w - 1).abs(),
            (2 * a - w + 1).abs(),
            (4 * a - 2 * b - w + 3).abs(),
        ],
        LKind::Omega => vec![(a + b - w).abs()],
        LKind::Std => vec![(2 * b - w - 1).abs(), (2 * a - w + 1).abs()],
        LKind::StdTwist => vec![
            (2 * a + 4 * b - 3 * w - 1).abs(),
            (4 * a + 2 * b - 3 * w + 1).abs(),
        ],
    }
}

/// One Gamma factor `Γ(s + offset)` and its partner `Γ(1 - s + dual)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaForm {
    pub offset: Q,
    pub dual: Q,
}

fn abelian(pw: i64, kind: LKind) -> Q {
    qi(pw) * kind.abelian_factor()
}

/// Gamma factors of `L_∞(s, ·)` and of `L_∞(1-s, ·^∨)`, one list entry per
/// factor per place. The list for `η̄` is a permutation of the one for `η`, so
/// only `η` is enumerated.
pub fn gamma_arguments(mu: &PureWeight, kind: LKind) -> Vec<GammaForm> {
    let a = abelian(mu.pw(), kind);
    let h = kind.half_factor();
    mu.pairs()
        .iter()
        .flat_map(|p| abs_values(p.eta, mu.pw(), kind))
        .map(|x| GammaForm {
            offset: -a + h * qi(x),
            dual: a + h * qi(x),
        })
        .collect()
}

/// Abelian and cuspidal widths of one factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Widths {
    pub abelian: Q,
    pub cuspidal: i64,
}

fn min_over_embeddings(mu: &PureWeight, f: impl Fn(GlWeight) -> Vec<i64>) -> i64 {
    mu.pairs()
        .iter()
        .flat_map(|p| p.components())
        .flat_map(f)
        .min()
        .expect("a pure weight has at least one place")
}

/// `a_j` from `pw` and `ℓ_j` as the minimum over every embedding of every place.
pub fn widths(mu: &PureWeight, kind: LKind) -> Widths {
    Widths {
        abelian: abelian(mu.pw(), kind),
        cuspidal: min_over_embeddings(mu, |c| abs_values(c, mu.pw(), kind)),
    }
}

/// Cuspidal width of `σ ⊗ ω_σ` as printed: `min |a+2b-3pw-1|, |2a+b-3pw+1|`.
pub fn printed_twist_width(mu: &PureWeight) -> i64 {
    let w = mu.pw();
    min_over_embeddings(mu, |c| {
        vec![(c.a + 2 * c.b - 3 * w - 1).abs(), (2 * c.a + c.b - 3 * w + 1).abs()]
    })
}

/// Closed-form critical set `[1 + a - hℓ, a + hℓ]` on the kind's lattice.
pub fn crit_set(mu: &PureWeight, kind: LKind) -> CritInterval {
    let wd = widths(mu, kind);
    let half = kind.half_factor() * qi(wd.cuspidal);
    CritInterval::from_real(kind.lattice(), qi(1) + wd.abelian - half, wd.abelian + half)
}

/// Critical points of the product: `s ∈ 1/2+Z` with `j*s` critical for every factor.
pub fn crit_set_product(mu: &PureWeight, p: Maximal) -> CritInterval {
    let scaled = kinds(p).iter().map(|&kind| match crit_set(mu, kind).bounds {
        None => CritInterval::empty(Lattice::HalfOdd),
        Some((l, h)) => {
            let j = qi(kind.scale());
            CritInterval::from_real(Lattice::HalfOdd, l.to_q() / j, h.to_q() / j)
        }
    });
    scaled
        .reduce(|acc, c| acc.intersect(&c))
        .expect("every parabolic has at least one factor")
}

/// Pole test: true iff no `Γ(s₀ + c)` and no `Γ(1 - s₀ + d)` sits at a pole.
///
/// The point is the argument of the factor itself, so for the Hecke factor
/// `s₀` stands for the value of `2s`.
pub fn crit_oracle(mu: &PureWeight, kind: LKind, s0: HalfInt) -> Result<bool> {
    if !kind.lattice().contains(s0) {
        return Err(domain(format!(
            "{s0} is not on the lattice {} of {kind}",
            kind.lattice().name()
        )));
    }
    let s = s0.to_q();
    let pole = |x: Q| x.is_integer() && x <= Q::zero();
    Ok(gamma_arguments(mu, kind)
        .iter()
        .all(|g| !pole(s + g.offset) && !pole(qi(1) - s + g.dual)))
}

/// One inequality with its truth value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityCheck {
    pub label: String,
    pub holds: bool,
}

/// A family of inequalities on `pw` and the cuspidal widths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityFamily {
    pub name: String,
    pub checks: Vec<InequalityCheck>,
    pub holds: bool,
}

impl InequalityFamily {
    fn new(name: &str, checks: Vec<InequalityCheck>) -> Self {
        let holds = checks.iter().all(|c| c.holds);
        InequalityFamily {
            name: name.to_string(),
            checks,
            holds,
        }
    }
}

fn between(label: &str, lo: i64, x: i64, hi: i64) -> InequalityCheck {
    InequalityCheck {
        label: format!("{label}: {lo} <= {x} <= {hi}"),
        holds: lo <= x && x <= hi,
    }
}

fn at_least(label: &str, x: i64, min: i64) -> InequalityCheck {
    InequalityCheck {
        label: format!("{label}: {x} >= {min}"),
        holds: x >= min,
    }
}

/// Inequalities obtained by asking `jk` and `1 + jk` to be critical for each factor.
pub fn derived_family(mu: &PureWeight, p: Maximal) -> InequalityFamily {
    let w = mu.pw();
    let l: Vec<i64> = kinds(p).iter().map(|k| widths(mu, *k).cuspidal).collect();
    let checks = match p {
        Maximal::Beta => vec![
            between("-3-l1 <= pw <= -7+l1", -3 - l[0], w, -7 + l[0]),
            between("-4-l2 <= pw <= -6+l2", -4 - l[1], w, -6 + l[1]),
            at_least("l1 >= 2", l[0], 2),
            at_least("l2 >= 1", l[1], 1),
        ],
        Maximal::Alpha => vec![
            between("-1-l1 <= pw <= -5+l1", -1 - l[0], w, -5 + l[0]),
            between("-2-l2 <= pw <= -4+l2", -2 - l[1], w, -4 + l[1]),
            between("-7-l3 <= 3pw <= -11+l3", -7 - l[2], 3 * w, -11 + l[2]),
            at_least("l1 >= 2", l[0], 2),
            at_least("l2 >= 1", l[1], 1),
            at_least("l3 >= 2", l[2], 2),
        ],
    };
    InequalityFamily::new("derived", checks)
}

/// The bounds as printed in part (2) of the combinatorial lemma.
///
/// For P_β these carry the opposite signs of the derivation; for P_α the
/// third line uses the printed twist width.
pub fn printed_family(mu: &PureWeight, p: Maximal) -> InequalityFamily {
    let w = mu.pw();
    let l: Vec<i64> = kinds(p).iter().map(|k| widths(mu, *k).cuspidal).collect();
    let checks = match p {
        Maximal::Beta => vec![
            between("7-l1 <= pw <= 3+l1", 7 - l[0], w, 3 + l[0]),
            between("6-l2 <= pw <= 4+l2", 6 - l[1], w, 4 + l[1]),
            at_least("l1 >= 2", l[0], 2),
            at_least("l2 >= 1", l[1], 1),
        ],
        Maximal::Alpha => {
            let l3 = printed_twist_width(mu);
            vec![
                between("-1-l1 <= pw <= -5+l1", -1 - l[0], w, -5 + l[0]),
                between("-2-l2 <= pw <= -4+l2", -2 - l[1], w, -4 + l[1]),
                between("-7-l3' <= 3pw <= -11+l3'", -7 - l3, 3 * w, -11 + l3),
                at_least("l1 >= 2", l[0], 2),
                at_least("l2 >= 1", l[1], 1),
                at_least("l3' >= 2", l3, 2),
            ]
        }
    };
    InequalityFamily::new("printed", checks)
}

/// Result of testing the point of evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoeReport {
    pub parabolic: Maximal,
    pub k: HalfInt,
    /// `k` lies in the product critical set.
    pub critical_at_k: bool,
    /// `1 + jk` is critical for every factor `L(js, ·)`, i.e. `k` is critical
    /// for the shifted product `∏ L(1 + js, ·)`.
    pub critical_at_k_plus_1: bool,
    /// `k + 1` lies in the product critical set (the literal reading, which
    /// differs from the previous field for the factors with `j > 1`).
    pub k_plus_1_in_product: bool,
    /// `critical_at_k && critical_at_k_plus_1`.
    pub statement_1: bool,
    pub derived: InequalityFamily,
    pub printed: InequalityFamily,
}

/// Evaluates statement (1) of the combinatorial lemma and both inequality families.
pub fn poe_check(mu: &PureWeight, p: Maximal) -> PoeReport {
    let k = p.evaluation_point();
    let product = crit_set_product(mu, p);
    let mut at_k = true;
    let mut at_k1 = true;
    for &kind in kinds(p) {
        let c = crit_set(mu, kind);
        let jk = HalfInt::from_twice(kind.scale() * k.twice());
        at_k &= c.contains(jk);
        at_k1 &= c.contains(jk + HalfInt::from_int(1));
    }
    debug_assert_eq!(at_k, product.contains(k));
    PoeReport {
        parabolic: p,
        k,
        critical_at_k: at_k,
        critical_at_k_plus_1: at_k1,
        k_plus_1_in_product: product.contains(k + HalfInt::from_int(1)),
        statement_1: at_k && at_k1,
        derived: derived_family(mu, p),
        printed: printed_family(mu, p),
    }
}

/// Which factor has the smallest cuspidal width.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DominanceCase {
    L1Min,
    L2Min,
    L3Min,
}

impl DominanceCase {
    pub fn index(self) -> usize {
        match self {
            DominanceCase::L1Min => 0,
            DominanceCase::L2Min => 1,
            DominanceCase::L3Min => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DominanceCase::L1Min => "L1_MIN",
            DominanceCase::L2Min => "L2_MIN",
            DominanceCase::L3Min => "L3_MIN",
        }
    }
}

/// Index of the minimal cuspidal width; ties go to the smaller index.
pub fn dominance_case(mu: &PureWeight, p: Maximal) -> DominanceCase {
    let ks = kinds(p);
    let mut best = 0;
    for i in 1..ks.len() {
        if widths(mu, ks[i]).cuspidal < widths(mu, ks[best]).cuspidal {
            best = i;
        }
    }
    [DominanceCase::L1Min, DominanceCase::L2Min, DominanceCase::L3Min][best]
}

/// Tate twists `t` for which `tate_twist(μ, t)` passes statement (1).
///
/// The twist `t` here is the negative of the `m` in `μ - mδ₂`.
pub fn tate_traversal_bounds(mu: &PureWeight, p: Maximal) -> Result<Option<(i64, i64)>> {
    let reach = kinds(p)
        .iter()
        .map(|k| widths(mu, *k).cuspidal)
        .max()
        .unwrap_or(0)
        + mu.pw().abs()
        + 16;
    let passing: Vec<i64> = (-reach..=reach)
        .filter(|&t| poe_check(&tate_twist(mu, t), p).statement_1)
        .collect();
    let (Some(&lo), Some(&hi)) = (passing.first(), passing.last()) else {
        return Ok(None);
    };
    if passing.len() as i64 != hi - lo + 1 {
        return Err(domain(format!("admissible twists of {mu} are not contiguous")));
    }
    Ok(Some((lo, hi)))
}

/// Right of the unitary axis: `pw <= -5` for P_β and `pw <= -3` for P_α.
pub fn unitary_axis_check(mu: &PureWeight, p: Maximal) -> bool {
    mu.pw() <= p.unitary_threshold()
}
