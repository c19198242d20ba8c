//! Kostant representatives, the `w ↦ w'` involution, balanced representatives
//! and the degree and sign bookkeeping of the boundary cohomology.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::purity::{dual_twist, tate_twist, PurePair, PureWeight};
use crate::rootsys::{weyl_group, Maximal, Parabolic, WeylElement};
use crate::weights::{convert, dot_action_int, is_dominant, Basis, Scope, WeightCoords};

/// `dim U_P` for both maximal parabolics.
pub const DIM_U: usize = 5;

/// Coordinates in which weights of the Levi factor of `p` are written.
pub fn natural_basis(p: Maximal) -> Basis {
    match p {
        Maximal::Beta => Basis::TBeta,
        Maximal::Alpha => Basis::T0,
    }
}

/// True when `w^{-1}` keeps every simple root of the Levi factor positive.
pub fn is_kostant(w: &WeylElement, tag: Parabolic) -> bool {
    match tag {
        Parabolic::Borel => true,
        Parabolic::Max(p) => w.inverse_act(p.levi_root()).is_positive(),
    }
}

/// `W^P` ordered by length (table order for the Borel).
pub fn kostant_reps(tag: Parabolic) -> Vec<WeylElement> {
    match tag {
        Parabolic::Borel => weyl_group().to_vec(),
        Parabolic::Max(p) => cached_reps(p).to_vec(),
    }
}

fn cached_reps(p: Maximal) -> &'static [WeylElement] {
    static BETA: OnceLock<Vec<WeylElement>> = OnceLock::new();
    static ALPHA: OnceLock<Vec<WeylElement>> = OnceLock::new();
    let cell = match p {
        Maximal::Beta => &BETA,
        Maximal::Alpha => &ALPHA,
    };
    cell.get_or_init(|| {
        let mut reps: Vec<WeylElement> = weyl_group()
            .iter()
            .filter(|w| is_kostant(w, p.into()))
            .cloned()
            .collect();
        reps.sort_by_key(|w| w.length);
        reps
    })
}

/// The longest element of `W^P`.
pub fn longest_kostant(p: Maximal) -> WeylElement {
    kostant_of_length(p, DIM_U).clone()
}

/// `w' = w₀ w` with `w₀` the longest element of `W^P`.
pub fn prime_involution(w: &WeylElement, p: Maximal) -> Result<WeylElement> {
    if !is_kostant(w, p.into()) {
        return Err(domain(format!("{w} is not a Kostant representative for {p}")));
    }
    Ok(longest_kostant(p).compose(w))
}

/// Kostant representatives at the two conjugate embeddings of one place.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KostantPair {
    pub w_eta: WeylElement,
    pub w_etabar: WeylElement,
}

impl KostantPair {
    pub fn new(w_eta: WeylElement, w_etabar: WeylElement) -> Self {
        KostantPair { w_eta, w_etabar }
    }

    pub fn lengths(&self) -> (usize, usize) {
        (self.w_eta.length, self.w_etabar.length)
    }

    pub fn is_balanced(&self) -> bool {
        self.w_eta.length + self.w_etabar.length == DIM_U
    }

    pub fn prime(&self, p: Maximal) -> Result<KostantPair> {
        Ok(KostantPair::new(
            prime_involution(&self.w_eta, p)?,
            prime_involution(&self.w_etabar, p)?,
        ))
    }
}

impl fmt::Display for KostantPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.w_eta, self.w_etabar)
    }
}

/// Representative of length `l` in `W^P`.
pub fn kostant_of_length(p: Maximal, l: usize) -> &'static WeylElement {
    cached_reps(p)
        .iter()
        .find(|w| w.length == l)
        .expect("W^P has one element of each length 0..=5")
}

/// Balanced shapes `(l(w^η), l(w^η̄))` in search order.
pub const BALANCED_SHAPES: [(usize, usize); 6] = [(5, 0), (0, 5), (4, 1), (1, 4), (3, 2), (2, 3)];

/// A balanced pair at one place with the resulting `G`-dominant weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BalancedMatch {
    pub pair: KostantPair,
    pub lambda_eta: (i64, i64),
    pub lambda_etabar: (i64, i64),
}

/// `w^{-1}.(a, b)` in the natural coordinates of `p`.
pub fn inverse_dot(w: &WeylElement, p: Maximal, ab: (i64, i64)) -> (i64, i64) {
    dot_action_int(&w.inverse(), natural_basis(p), ab)
}

fn g_dominant(p: Maximal, ab: (i64, i64)) -> bool {
    is_dominant(WeightCoords::int(natural_basis(p), ab.0, ab.1), Scope::G)
        .expect("integral input")
}

/// Every balanced shape whose inverse twisted action makes the pair `G`-dominant.
pub fn balanced_matches(pair: PurePair, p: Maximal) -> Vec<BalancedMatch> {
    BALANCED_SHAPES
        .iter()
        .filter_map(|&(le, lb)| {
            let w_eta = kostant_of_length(p, le);
            let w_etabar = kostant_of_length(p, lb);
            let lambda_eta = inverse_dot(w_eta, p, (pair.eta.a, pair.eta.b));
            let lambda_etabar = inverse_dot(w_etabar, p, (pair.etabar.a, pair.etabar.b));
            (g_dominant(p, lambda_eta) && g_dominant(p, lambda_etabar)).then(|| BalancedMatch {
                pair: KostantPair::new(w_eta.clone(), w_etabar.clone()),
                lambda_eta,
                lambda_etabar,
            })
        })
        .collect()
}

/// First balanced pair in [`BALANCED_SHAPES`] order at every place, or `None`
/// as soon as one place has none.
pub fn find_balanced(mu: &PureWeight, p: Maximal) -> Option<Vec<BalancedMatch>> {
    mu.pairs()
        .iter()
        .map(|pair| balanced_matches(*pair, p).into_iter().next())
        .collect()
}

/// Both sides of `w'.λ = dual(w.λ) + shift` for one component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentIdentity {
    pub lhs: (i64, i64),
    pub rhs: (i64, i64),
    pub equal: bool,
}

fn integral(lambda: WeightCoords, p: Maximal) -> Result<(i64, i64)> {
    convert(lambda, natural_basis(p))
        .as_ints()
        .ok_or_else(|| domain(format!("{lambda} is not integral")))
}

/// Component form of the identity, with shift `-5` (P_β) or `-3` (P_α).
pub fn wprime_component_identity(
    lambda: WeightCoords,
    w: &WeylElement,
    p: Maximal,
) -> Result<ComponentIdentity> {
    let ab = integral(lambda, p)?;
    let basis = natural_basis(p);
    let mu = dot_action_int(w, basis, ab);
    let lhs = dot_action_int(&prime_involution(w, p)?, basis, ab);
    let s = p.dual_shift();
    let rhs = (-mu.1 + s, -mu.0 + s);
    Ok(ComponentIdentity {
        lhs,
        rhs,
        equal: lhs == rhs,
    })
}

/// Both sides of the identity for a pure weight at one place.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WPrimeReport {
    pub mu: PureWeight,
    pub lhs: PurePair,
    pub rhs: PurePair,
    pub equal: bool,
}

/// `w'.λ` against `dual_twist(w.λ)` Tate-twisted by `-5` or `-3`.
///
/// `lambda` holds the `G`-dominant weights at `η` and `η̄`; `μ = w.λ` must be pure.
pub fn wprime_weight_identity(
    lambda: (WeightCoords, WeightCoords),
    w: &KostantPair,
    p: Maximal,
) -> Result<WPrimeReport> {
    let basis = natural_basis(p);
    let mut comps = Vec::with_capacity(2);
    for (index, l) in [lambda.0, lambda.1].into_iter().enumerate() {
        if !is_dominant(l, Scope::G)? {
            return Err(Error::NotDominant {
                index,
                detail: format!("{l} is not G-dominant"),
            });
        }
        comps.push(integral(l, p)?);
    }
    let (le, lb) = (comps[0], comps[1]);
    let me = dot_action_int(&w.w_eta, basis, le);
    let mb = dot_action_int(&w.w_etabar, basis, lb);
    let mu = PureWeight::single(me.0, me.1, mb.0, mb.1, basis)
        .map_err(|e| domain(format!("w.λ is not pure: {e}")))?;
    let wp = w.prime(p)?;
    let pe = dot_action_int(&wp.w_eta, basis, le);
    let pb = dot_action_int(&wp.w_etabar, basis, lb);
    let lhs = PurePair::new(pe.0, pe.1, pb.0, pb.1);
    let rhs = tate_twist(&dual_twist(&mu), p.dual_shift()).pairs()[0];
    Ok(WPrimeReport {
        equal: lhs == rhs,
        mu,
        lhs,
        rhs,
    })
}

/// Degree bookkeeping for a Kostant pair repeated over `r` places.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeWindow {
    pub b2: usize,
    pub t2: usize,
    pub total_length: usize,
    pub q_min: usize,
    pub q_max: usize,
}

/// `[l(w) + r, l(w) + 3r - 1]`, which is `[6r, 8r - 1]` for balanced pairs.
pub fn degree_window(w: &KostantPair, r: usize) -> Result<DegreeWindow> {
    if r == 0 {
        return Err(domain("the number of places must be positive"));
    }
    let total_length = r * (w.w_eta.length + w.w_etabar.length);
    Ok(DegreeWindow {
        b2: r,
        t2: 3 * r - 1,
        total_length,
        q_min: total_length + r,
        q_max: total_length + 3 * r - 1,
    })
}

/// Koszul sign of reordering wedge blocks of the given lengths.
///
/// `perm[i]` is the new position of block `i`; a pair `i < j` with
/// `perm[i] > perm[j]` contributes `l_i * l_j` transpositions.
pub fn epsilon_sign(block_lengths: &[usize], perm: &[usize]) -> Result<i8> {
    let n = block_lengths.len();
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(domain("permutation and block list differ in length"));
    }
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(domain(format!("{perm:?} is not a permutation of 0..{n}")));
        }
    }
    let mut parity = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            if perm[i] > perm[j] {
                parity += block_lengths[i] * block_lengths[j];
            }
        }
    }
    Ok(if parity % 2 == 0 { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(tag: Parabolic) -> Vec<String> {
        kostant_reps(tag).iter().map(|w| w.ascii()).collect()
    }

    #[test]
    fn computed_lists() {
        assert_eq!(words(Maximal::Beta.into()), ["1", "a", "ab", "aba", "abab", "ababa"]);
        assert_eq!(words(Maximal::Alpha.into()), ["1", "b", "ba", "bab", "baba", "babab"]);
        assert_eq!(kostant_reps(Parabolic::Borel).len(), 12);
    }

    #[test]
    fn involution_examples() {
        let e = WeylElement::identity();
        assert_eq!(prime_involution(&e, Maximal::Beta).unwrap().ascii(), "ababa");
        assert!(prime_involution(&WeylElement::parse("b").unwrap(), Maximal::Beta).is_err());
    }

    #[test]
    fn worked_balanced() {
        let mu = PureWeight::single(3, 2, -8, -9, Basis::TBeta).unwrap();
        let m = &find_balanced(&mu, Maximal::Beta).unwrap()[0];
        assert_eq!(m.pair.lengths(), (0, 5));
        assert_eq!((m.lambda_eta, m.lambda_etabar), ((3, 2), (4, 3)));
        let z = PureWeight::single(0, 0, 0, 0, Basis::TBeta).unwrap();
        assert!(find_balanced(&z, Maximal::Beta).is_none());
        let tr = PureWeight::single(3, 1, 3, 1, Basis::TBeta).unwrap();
        assert!(find_balanced(&tr, Maximal::Beta).is_none());
    }

    #[test]
    fn wprime_examples() {
        let l = (
            WeightCoords::int(Basis::TBeta, 3, 2),
            WeightCoords::int(Basis::TBeta, 4, 3),
        );
        let w = KostantPair::new(WeylElement::identity(), WeylElement::parse("ababa").unwrap());
        let r = wprime_weight_identity(l, &w, Maximal::Beta).unwrap();
        assert!(r.equal);
        assert_eq!(r.mu.pairs()[0], PurePair::new(3, 2, -8, -9));
        let zero = (WeightCoords::int(Basis::TBeta, 0, 0), WeightCoords::int(Basis::TBeta, 0, 0));
        assert!(wprime_weight_identity(zero, &w, Maximal::Beta).unwrap().equal);
    }

    #[test]
    fn windows_and_signs() {
        let b = KostantPair::new(WeylElement::identity(), longest_kostant(Maximal::Beta));
        let d = degree_window(&b, 1).unwrap();
        assert_eq!((d.q_min, d.q_max), (6, 7));
        let d = degree_window(&b, 2).unwrap();
        assert_eq!((d.q_min, d.q_max), (12, 15));
        let u = KostantPair::new(WeylElement::identity(), WeylElement::identity());
        let d = degree_window(&u, 1).unwrap();
        assert_eq!((d.q_min, d.q_max), (1, 2));
        assert_eq!(epsilon_sign(&[0, 5], &[1, 0]).unwrap(), 1);
        assert_eq!(epsilon_sign(&[2, 3], &[1, 0]).unwrap(), 1);
        assert_eq!(epsilon_sign(&[1, 1, 1], &[1, 2, 0]).unwrap(), 1);
        assert_eq!(epsilon_sign(&[1, 1], &[1, 0]).unwrap(), -1);
        assert!(epsilon_sign(&[1, 1], &[0, 0]).is_err());
    }
}
