//! Archimedean Gamma ratios and the rank-one decomposition of the standard
//! intertwining operator.
//!
//! Conventions. A character of `C^x` is `z ↦ z^p z̄^q` with `p - q` integral.
//! Its L-factor is `L_∞(s, χ) = Γ_C(s + max(p, q))` with
//! `Γ_C(s) = 2(2π)^{-s}Γ(s)`, so `L_∞(s, χ) / L_∞(s+1, χ) = 2π / (s + c)`.
//! Only ratios are ever compared, and any convention that is multiplicative
//! in integer shifts of `s` gives the same identities.

use std::fmt;
use std::ops::{Div, Mul};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::lcrit::{gamma_arguments, kinds};
use crate::numeric::{fmt_q, qi, HalfInt, Q};
use crate::purity::{cuspidal_parameters, dual_twist, PureWeight};
use crate::rootsys::{Maximal, Simple};
use crate::weights::Basis;

/// The character `z ↦ z^p z̄^q` of `C^x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CChar {
    pub p: Q,
    pub q: Q,
}

impl CChar {
    pub fn new(p: Q, q: Q) -> Self {
        CChar { p, q }
    }

    pub fn trivial() -> Self {
        CChar::new(Q::zero(), Q::zero())
    }

    pub fn from_half(p: HalfInt, q: HalfInt) -> Self {
        CChar::new(p.to_q(), q.to_q())
    }

    pub fn inv(self) -> Self {
        CChar::new(-self.p, -self.q)
    }

    pub fn pow(self, n: i64) -> Self {
        CChar::new(self.p * qi(n), self.q * qi(n))
    }

    /// Tensor with `|·|_C^s = (z z̄)^s`, written `χ(s)`.
    pub fn twist(self, s: Q) -> Self {
        CChar::new(self.p + s, self.q + s)
    }

    pub fn is_algebraic(self) -> bool {
        (self.p - self.q).is_integer()
    }
}

impl Mul for CChar {
    type Output = CChar;

    fn mul(self, o: CChar) -> CChar {
        CChar::new(self.p + o.p, self.q + o.q)
    }
}

impl Div for CChar {
    type Output = CChar;

    fn div(self, o: CChar) -> CChar {
        self * o.inv()
    }
}

impl fmt::Display for CChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z^{} zbar^{}", fmt_q(self.p), fmt_q(self.q))
    }
}

/// A pair of characters of the torus in one of the two Levi coordinate systems.
pub type CharPair = (CChar, CChar);

/// Converts between `t_0` and `t_β` coordinates:
/// `t_0 (χ₁, χ₂) ↦ t_β (χ₁χ₂, χ₁)` and `t_β (ψ₁, ψ₂) ↦ t_0 (ψ₂, ψ₁ψ₂⁻¹)`.
pub fn char_convert(pair: CharPair, from: Basis, to: Basis) -> Result<CharPair> {
    let (x, y) = pair;
    match (from, to) {
        (Basis::T0, Basis::T0) | (Basis::TBeta, Basis::TBeta) => Ok(pair),
        (Basis::T0, Basis::TBeta) => Ok((x * y, x)),
        (Basis::TBeta, Basis::T0) => Ok((y, x / y)),
        _ => Err(domain("characters are converted between T0 and TBETA only")),
    }
}

/// Simple reflections on `t_0` pairs: `α` swaps, `β` sends `(χ₁, χ₂)` to `(χ₁χ₂, χ₂⁻¹)`.
pub fn weyl_char_action(refl: Simple, pair: CharPair) -> CharPair {
    let (x, y) = pair;
    match refl {
        Simple::Alpha => (y, x),
        Simple::Beta => (x * y, y.inv()),
    }
}

/// The offset `c` with `L_∞(s, χ) = Γ_C(s + c)`.
pub fn linf_char(chi: CChar) -> Result<Q> {
    if !chi.is_algebraic() {
        return Err(domain(format!("{chi} is not algebraic")));
    }
    Ok(chi.p.max(chi.q))
}

/// An exact value `rat * (2π)^two_pi_power`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaRatio {
    pub rat: Ratio<i128>,
    pub two_pi_power: i64,
}

impl GammaRatio {
    pub fn one() -> Self {
        GammaRatio {
            rat: Ratio::one(),
            two_pi_power: 0,
        }
    }

    /// `rat * (2π)^k` from a rational with 64-bit parts.
    pub fn new(rat: Q, two_pi_power: i64) -> Self {
        GammaRatio {
            rat: Ratio::new(i128::from(*rat.numer()), i128::from(*rat.denom())),
            two_pi_power,
        }
    }

    /// `Γ_C(x) / Γ_C(x + 1) = 2π / x`, failing at a pole.
    pub fn step(x: Q, what: impl FnOnce() -> String) -> Result<Self> {
        if x.is_integer() && !x.is_positive() {
            return Err(Error::Degenerate(format!("Gamma pole at {} for {}", fmt_q(x), what())));
        }
        Ok(GammaRatio::new(x.recip(), 1))
    }

    pub fn inv(self) -> Self {
        GammaRatio {
            rat: self.rat.recip(),
            two_pi_power: -self.two_pi_power,
        }
    }

    /// The `(2π)^k · p/q` form used in human-facing reports.
    pub fn pretty(&self) -> String {
        format!("(2π)^{} · {}", self.two_pi_power, fmt_ratio(self.rat))
    }
}

fn fmt_ratio(r: Ratio<i128>) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Mul for GammaRatio {
    type Output = GammaRatio;

    fn mul(self, o: GammaRatio) -> GammaRatio {
        GammaRatio {
            rat: self.rat * o.rat,
            two_pi_power: self.two_pi_power + o.two_pi_power,
        }
    }
}

impl std::iter::Product for GammaRatio {
    fn product<I: Iterator<Item = GammaRatio>>(iter: I) -> Self {
        iter.fold(GammaRatio::one(), |a, b| a * b)
    }
}

/// `p/q*(2pi)^k`.
impl fmt::Display for GammaRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*(2pi)^{}", fmt_ratio(self.rat), self.two_pi_power)
    }
}

/// `L_∞(0, χ) / L_∞(1, χ)`, where `χ = χ₁χ₂⁻¹` for an `α` step and `χ = χ₂`
/// for a `β` step of a `t_0` pair.
pub fn rank_one_ratio(step: Simple, pair: CharPair) -> Result<(CChar, GammaRatio)> {
    let chi = step_character(step, pair);
    let c = linf_char(chi)?;
    let r = GammaRatio::step(c, || chi.to_string())?;
    Ok((chi, r))
}

fn step_character(step: Simple, pair: CharPair) -> CChar {
    match step {
        Simple::Alpha => pair.0 / pair.1,
        Simple::Beta => pair.1,
    }
}

/// One rank-one operator of the chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub reflection: Simple,
    /// The `t_0` pair the operator starts from.
    pub source: CharPair,
    pub character: CChar,
    pub ratio: GammaRatio,
}

/// The chain of rank-one operators of the long intertwining operator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleChain {
    pub parabolic: Maximal,
    pub steps: Vec<ChainStep>,
    pub final_pair: CharPair,
}

impl CocycleChain {
    pub fn product(&self) -> GammaRatio {
        self.steps.iter().map(|s| s.ratio).product()
    }
}

/// Reflections in the order they are applied: `αβαβα` for P_β, `βαβαβ` for P_α.
pub fn chain_word(p: Maximal) -> [Simple; 5] {
    let (x, y) = match p {
        Maximal::Beta => (Simple::Alpha, Simple::Beta),
        Maximal::Alpha => (Simple::Beta, Simple::Alpha),
    };
    [x, y, x, y, x]
}

fn single_place(mu: &PureWeight) -> Result<()> {
    if mu.places() != 1 {
        return Err(domain(format!(
            "expected a single-place weight, got {} places",
            mu.places()
        )));
    }
    Ok(())
}

/// `ψ_i = z^{α_i} z̄^{β_i}` from the cuspidal parameters of a single-place weight.
pub fn psi_characters(mu: &PureWeight) -> Result<CharPair> {
    single_place(mu)?;
    let c = cuspidal_parameters(mu.pairs()[0], mu.pw())?;
    Ok((
        CChar::from_half(c.alpha.0, c.beta.0),
        CChar::from_half(c.alpha.1, c.beta.1),
    ))
}

/// The `t_0` pair induced from `σ(k)`: `(ψ₂(k), ψ₁ψ₂⁻¹)` for P_β and
/// `(ψ₁(k), ψ₂(k))` for P_α.
pub fn starting_pair(mu: &PureWeight, p: Maximal) -> Result<CharPair> {
    let (psi1, psi2) = psi_characters(mu)?;
    let k = p.evaluation_point().to_q();
    Ok(match p {
        Maximal::Beta => (psi2.twist(k), psi1 / psi2),
        Maximal::Alpha => (psi1.twist(k), psi2.twist(k)),
    })
}

/// Applies the reflections of [`chain_word`], recording each character and ratio.
pub fn cocycle_chain(mu: &PureWeight, p: Maximal) -> Result<CocycleChain> {
    let mut pair = starting_pair(mu, p)?;
    let mut steps = Vec::with_capacity(5);
    for refl in chain_word(p) {
        let (character, ratio) = rank_one_ratio(refl, pair)?;
        steps.push(ChainStep {
            reflection: refl,
            source: pair,
            character,
            ratio,
        });
        pair = weyl_char_action(refl, pair);
    }
    Ok(CocycleChain {
        parabolic: p,
        steps,
        final_pair: pair,
    })
}

/// `∏_j L_∞(jm, L_j) / L_∞(1 + jm, L_j)` over the factors of the constant term,
/// computed from the Gamma arguments of every place.
pub fn combined_ratio(mu: &PureWeight, p: Maximal, m: HalfInt) -> Result<GammaRatio> {
    let mut out = GammaRatio::one();
    for &kind in kinds(p) {
        let jm = m.to_q() * qi(kind.scale());
        for g in gamma_arguments(mu, kind) {
            out = out * GammaRatio::step(jm + g.offset, || format!("{kind} at {}", fmt_q(jm)))?;
        }
    }
    Ok(out)
}

/// Both sides of the cocycle identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleCheck {
    pub chain_product: GammaRatio,
    pub combined: GammaRatio,
    pub equal: bool,
}

/// Product of the rank-one ratios against [`combined_ratio`] at `k`.
///
/// A weight with several places is split place by place and the products
/// multiplied, as in a Künneth decomposition.
pub fn verify_cocycle_identity(mu: &PureWeight, p: Maximal) -> Result<CocycleCheck> {
    let mut chain_product = GammaRatio::one();
    for pair in mu.pairs() {
        let one = PureWeight::new(vec![*pair], mu.basis())?;
        chain_product = chain_product * cocycle_chain(&one, p)?.product();
    }
    let combined = combined_ratio(mu, p, p.evaluation_point())?;
    Ok(CocycleCheck {
        chain_product,
        combined,
        equal: chain_product == combined,
    })
}

/// Step characters as `(e₁, e₂, n)`, meaning `ψ₁^{e₁} ψ₂^{e₂}(nk)`.
///
/// The chain is run on the unit characters `ψ₁ = z`, `ψ₂ = z̄` with a generic
/// twist `1/1000` in place of `k`, so each exponent can be read off exactly.
/// This makes the bookkeeping symbolic rather than instance-dependent.
pub fn step_exponents(p: Maximal) -> Vec<(i64, i64, i64)> {
    const SCALE: i64 = 1000;
    let e1 = CChar::new(qi(1), Q::zero());
    let e2 = CChar::new(Q::zero(), qi(1));
    let k = Q::new(1, SCALE);
    let mut pair = match p {
        Maximal::Beta => (e2.twist(k), e1 / e2),
        Maximal::Alpha => (e1.twist(k), e2.twist(k)),
    };
    let mut out = Vec::new();
    for refl in chain_word(p) {
        let chi = step_character(refl, pair);
        let (a, b) = (chi.p.round(), chi.q.round());
        let n = (chi.p - a) * qi(SCALE);
        debug_assert_eq!(n, (chi.q - b) * qi(SCALE));
        out.push((a.to_integer(), b.to_integer(), n.to_integer()));
        pair = weyl_char_action(refl, pair);
    }
    out
}

/// The factor list printed for each parabolic, as `(e₁, e₂, n)` for
/// `ψ₁^{e₁} ψ₂^{e₂}(nk)`.
pub fn printed_step_exponents(p: Maximal) -> Vec<(i64, i64, i64)> {
    match p {
        Maximal::Beta => vec![(-1, 2, 1), (0, 1, 1), (1, 1, 2), (1, 0, 1), (2, -1, 1)],
        Maximal::Alpha => vec![(0, 1, 1), (1, 2, 3), (1, 1, 2), (2, 1, 3), (1, 0, 1)],
    }
}

/// Gamma offsets of the dual twist against the dual offsets of the weight,
/// compared as multisets for every factor.
pub fn dual_offsets_match(mu: &PureWeight, p: Maximal) -> bool {
    let dual = dual_twist(mu);
    kinds(p).iter().all(|&kind| {
        let mut lhs: Vec<Q> = gamma_arguments(&dual, kind).iter().map(|g| g.offset).collect();
        let mut rhs: Vec<Q> = gamma_arguments(mu, kind).iter().map(|g| g.dual).collect();
        lhs.sort();
        rhs.sort();
        lhs == rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::q;

    fn worked() -> PureWeight {
        PureWeight::single(3, 2, -8, -9, Basis::TBeta).unwrap()
    }

    fn half(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn conversions() {
        let x = CChar::new(qi(1), qi(2));
        let y = CChar::new(q(1, 2), q(-1, 2));
        let tb = char_convert((x, y), Basis::T0, Basis::TBeta).unwrap();
        assert_eq!(tb, (x * y, x));
        assert_eq!(char_convert(tb, Basis::TBeta, Basis::T0).unwrap(), (x, y));
        let t = CChar::trivial();
        assert_eq!(char_convert((t, t), Basis::T0, Basis::TBeta).unwrap(), (t, t));
        assert!(char_convert((t, t), Basis::Fund, Basis::T0).is_err());
    }

    #[test]
    fn reflections() {
        let x = CChar::new(qi(1), qi(2));
        let y = CChar::new(qi(3), qi(-1));
        assert_eq!(weyl_char_action(Simple::Alpha, (x, y)), (y, x));
        assert_eq!(weyl_char_action(Simple::Beta, (x, y)), (x * y, y.inv()));
        let twice = weyl_char_action(Simple::Alpha, weyl_char_action(Simple::Alpha, (x, y)));
        assert_eq!(twice, (x, y));
    }

    #[test]
    fn linf_examples() {
        assert_eq!(linf_char(CChar::trivial()).unwrap(), qi(0));
        let psi1 = CChar::new(q(-3, 2), q(15, 2));
        assert_eq!(linf_char(psi1).unwrap(), q(15, 2));
        assert!(linf_char(CChar::new(q(1, 2), qi(0))).is_err());
    }

    #[test]
    fn rank_one_examples() {
        let t = CChar::trivial();
        let c1 = CChar::new(qi(1), qi(0));
        let (_, r) = rank_one_ratio(Simple::Beta, (t, c1)).unwrap();
        assert_eq!(r, GammaRatio::new(qi(1), 1));
        let c3 = CChar::new(qi(0), qi(3));
        let (_, r) = rank_one_ratio(Simple::Beta, (t, c3)).unwrap();
        assert_eq!(r, GammaRatio::new(q(1, 3), 1));
        assert!(matches!(rank_one_ratio(Simple::Beta, (t, t)), Err(Error::Degenerate(_))));
    }

    #[test]
    fn worked_chain() {
        let chain = cocycle_chain(&worked(), Maximal::Beta).unwrap();
        let (psi1, psi2) = psi_characters(&worked()).unwrap();
        let k = q(-5, 2);
        assert_eq!(chain.final_pair, (psi1.inv().twist(-k), psi1 / psi2));
        let expected = GammaRatio::new(q(1, 11340), 5);
        assert_eq!(chain.product(), expected);
        assert_eq!(combined_ratio(&worked(), Maximal::Beta, half(-5)).unwrap(), expected);
        assert_eq!(expected.to_string(), "1/11340*(2pi)^5");
        assert_eq!(expected.pretty(), "(2π)^5 · 1/11340");
    }

    #[test]
    fn step_bookkeeping_matches_display() {
        for p in Maximal::BOTH {
            let mut got = step_exponents(p);
            let mut want = printed_step_exponents(p);
            assert_eq!(got, want, "order for {p:?}");
            got.sort();
            want.sort();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn degenerate_combined() {
        // ((0,0),(0,0)) at m = 0: the Hecke factor has argument 0.
        let z = PureWeight::single(0, 0, 0, 0, Basis::TBeta).unwrap();
        assert!(matches!(
            combined_ratio(&z, Maximal::Beta, HalfInt::from_int(0)),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn display_format() {
        assert_eq!(GammaRatio::new(q(1, 945), 4).to_string(), "1/945*(2pi)^4");
    }
}
