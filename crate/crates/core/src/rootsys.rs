//! The G2 root system, its Weyl group, parabolic data and the weights of the
//! seven-dimensional representation.
//!
//! Vectors are written in the simple-root basis: `(x, y)` means `x*alpha + y*beta`
//! with `alpha` short and `beta` long. The symmetric form is normalized so that
//! `B(alpha, alpha) = 2` and `B(beta, beta) = 6`.
//!
//! A word `t1 t2 ... tk` names `s_t1 o s_t2 o ... o s_tk`, so the rightmost letter
//! acts first and the inverse is the reversed word. This is the reading under
//! which the inverse-action table of the Weyl group comes out as published.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::numeric::{fmt_q, q, qi, HalfInt, Q};

/// Integer vector `x*alpha + y*beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootVector {
    pub x: i64,
    pub y: i64,
}

/// Rational vector `x*alpha + y*beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QVector {
    pub x: Q,
    pub y: Q,
}

impl RootVector {
    pub const fn new(x: i64, y: i64) -> Self {
        RootVector { x, y }
    }

    pub fn to_q(self) -> QVector {
        QVector::new(qi(self.x), qi(self.y))
    }

    pub fn neg(self) -> Self {
        RootVector::new(-self.x, -self.y)
    }

    /// True for nonzero vectors with both coordinates nonnegative.
    pub fn is_positive(self) -> bool {
        self.x >= 0 && self.y >= 0 && (self.x, self.y) != (0, 0)
    }
}

impl QVector {
    pub fn new(x: Q, y: Q) -> Self {
        QVector { x, y }
    }

    pub fn zero() -> Self {
        QVector::new(Q::zero(), Q::zero())
    }

    pub fn add(self, o: QVector) -> Self {
        QVector::new(self.x + o.x, self.y + o.y)
    }

    pub fn sub(self, o: QVector) -> Self {
        QVector::new(self.x - o.x, self.y - o.y)
    }

    pub fn scale(self, c: Q) -> Self {
        QVector::new(self.x * c, self.y * c)
    }

    /// Converts to an integer vector when both coordinates are integral.
    pub fn to_root(self) -> Option<RootVector> {
        (self.x.is_integer() && self.y.is_integer())
            .then(|| RootVector::new(self.x.to_integer(), self.y.to_integer()))
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_combination(qi(self.x), qi(self.y)))
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_combination(self.x, self.y))
    }
}

fn format_combination(x: Q, y: Q) -> String {
    let term = |c: Q, sym: &str| -> String {
        if c == qi(1) {
            sym.to_string()
        } else if c == qi(-1) {
            format!("-{sym}")
        } else {
            format!("{}{sym}", fmt_q(c))
        }
    };
    match (x.is_zero(), y.is_zero()) {
        (true, true) => "0".to_string(),
        (false, true) => term(x, "α"),
        (true, false) => term(y, "β"),
        (false, false) => {
            let second = term(y, "β");
            if second.starts_with('-') {
                format!("{}{}", term(x, "α"), second)
            } else {
                format!("{}+{}", term(x, "α"), second)
            }
        }
    }
}

/// Name of a root in the style of the published tables:
/// `α, β, α+β, γ_s = 2α+β, 3α+β, γ_l = 3α+2β`, negatives as `-α` or `-(α+β)`.
pub fn root_label(r: RootVector) -> String {
    let base = |p: RootVector| -> Option<&'static str> {
        match (p.x, p.y) {
            (1, 0) => Some("α"),
            (0, 1) => Some("β"),
            (1, 1) => Some("α+β"),
            (2, 1) => Some("γ_s"),
            (3, 1) => Some("3α+β"),
            (3, 2) => Some("γ_l"),
            _ => None,
        }
    };
    if let Some(s) = base(r) {
        return s.to_string();
    }
    if let Some(s) = base(r.neg()) {
        return if s.contains('+') {
            format!("-({s})")
        } else {
            format!("-{s}")
        };
    }
    r.to_string()
}

/// The form `B((x,y),(x',y')) = 2xx' + 6yy' - 3(xy' + x'y)`.
pub fn form(u: QVector, v: QVector) -> Q {
    qi(2) * u.x * v.x + qi(6) * u.y * v.y - qi(3) * (u.x * v.y + v.x * u.y)
}

/// Integer version of [`form`].
pub fn form_int(u: RootVector, v: RootVector) -> i64 {
    2 * u.x * v.x + 6 * u.y * v.y - 3 * (u.x * v.y + v.x * u.y)
}

/// Simple root alpha (short).
pub const ALPHA: RootVector = RootVector::new(1, 0);
/// Simple root beta (long).
pub const BETA: RootVector = RootVector::new(0, 1);
/// Short fundamental weight `gamma_s = 2α+β`.
pub const GAMMA_S: RootVector = RootVector::new(2, 1);
/// Long fundamental weight `gamma_l = 3α+2β`.
pub const GAMMA_L: RootVector = RootVector::new(3, 2);
/// Half-sum of positive roots `ρ_G = 5α+3β`.
pub const RHO_G: RootVector = RootVector::new(5, 3);

const POSITIVE: [RootVector; 6] = [
    RootVector::new(1, 0),
    RootVector::new(0, 1),
    RootVector::new(1, 1),
    RootVector::new(2, 1),
    RootVector::new(3, 1),
    RootVector::new(3, 2),
];

/// The six positive roots, ordered `α, β, α+β, 2α+β, 3α+β, 3α+2β`.
pub fn positive_roots() -> [RootVector; 6] {
    POSITIVE
}

/// All twelve roots: the positive ones followed by their negatives.
pub fn all_roots() -> Vec<RootVector> {
    POSITIVE
        .iter()
        .copied()
        .chain(POSITIVE.iter().map(|r| r.neg()))
        .collect()
}

pub fn is_root(v: RootVector) -> bool {
    POSITIVE.contains(&v) || POSITIVE.contains(&v.neg())
}

/// `⟨v, θ^∨⟩ = 2B(v,θ)/B(θ,θ)`.
pub fn pairing(v: QVector, theta: RootVector) -> Result<Q> {
    if !is_root(theta) {
        return Err(domain(format!("{theta} is not a root")));
    }
    Ok(qi(2) * form(v, theta.to_q()) / qi(form_int(theta, theta)))
}

/// Integer pairing of a lattice vector with a coroot.
pub fn pairing_int(v: RootVector, theta: RootVector) -> Result<i64> {
    let p = pairing(v.to_q(), theta)?;
    Ok(p.to_integer())
}

/// `s_θ(v) = v - ⟨v, θ^∨⟩ θ`.
pub fn reflect(theta: RootVector, v: QVector) -> Result<QVector> {
    let p = pairing(v, theta)?;
    Ok(v.sub(theta.to_q().scale(p)))
}

/// A simple reflection letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Simple {
    Alpha,
    Beta,
}

impl Simple {
    pub fn root(self) -> RootVector {
        match self {
            Simple::Alpha => ALPHA,
            Simple::Beta => BETA,
        }
    }

    pub fn other(self) -> Simple {
        match self {
            Simple::Alpha => Simple::Beta,
            Simple::Beta => Simple::Alpha,
        }
    }

    /// Matrix of `s_θ` acting on column vectors `(x, y)`.
    pub fn matrix(self) -> Mat2 {
        match self {
            Simple::Alpha => Mat2([[-1, 3], [0, 1]]),
            Simple::Beta => Mat2([[1, 0], [1, -1]]),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Simple::Alpha => 'α',
            Simple::Beta => 'β',
        }
    }
}

/// 2x2 integer matrix acting on `(x, y)` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat2(pub [[i64; 2]; 2]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[1, 0], [0, 1]]);

    pub fn mul(self, o: Mat2) -> Mat2 {
        let a = self.0;
        let b = o.0;
        let mut c = [[0i64; 2]; 2];
        for (i, row) in c.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Mat2(c)
    }

    pub fn apply(self, v: RootVector) -> RootVector {
        let m = self.0;
        RootVector::new(m[0][0] * v.x + m[0][1] * v.y, m[1][0] * v.x + m[1][1] * v.y)
    }

    pub fn apply_q(self, v: QVector) -> QVector {
        let m = self.0;
        QVector::new(
            qi(m[0][0]) * v.x + qi(m[0][1]) * v.y,
            qi(m[1][0]) * v.x + qi(m[1][1]) * v.y,
        )
    }
}

/// An element of the Weyl group, stored as a reduced word and its matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylElement {
    pub word: Vec<Simple>,
    pub matrix: Mat2,
    pub length: usize,
}

impl WeylElement {
    fn from_reduced(word: Vec<Simple>) -> Self {
        let matrix = word
            .iter()
            .fold(Mat2::IDENTITY, |m, s| m.mul(s.matrix()));
        let length = POSITIVE
            .iter()
            .filter(|r| !matrix.apply(**r).is_positive())
            .count();
        WeylElement {
            word,
            matrix,
            length,
        }
    }

    pub fn identity() -> Self {
        weyl_group()[0].clone()
    }

    /// The longest element `w_G`, acting as `-1`.
    pub fn longest() -> Self {
        weyl_group()
            .iter()
            .find(|w| w.length == 6)
            .cloned()
            .expect("the Weyl group has a longest element")
    }

    /// The canonical element with the given matrix.
    pub fn from_matrix(m: Mat2) -> Result<Self> {
        weyl_group()
            .iter()
            .find(|w| w.matrix == m)
            .cloned()
            .ok_or_else(|| domain(format!("{m:?} is not in the Weyl group")))
    }

    /// Parses a word over `{a, b}` or `{α, β}`; `1`, `e` or the empty string give
    /// the identity and `G` gives `w_G`. Non-reduced words are normalized.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches("w_");
        if t.is_empty() || t == "1" || t == "e" {
            return Ok(Self::identity());
        }
        if t == "G" {
            return Ok(Self::longest());
        }
        let mut m = Mat2::IDENTITY;
        for c in t.chars() {
            let letter = match c {
                'a' | 'α' => Simple::Alpha,
                'b' | 'β' => Simple::Beta,
                _ => return Err(domain(format!("bad Weyl word {s:?}"))),
            };
            m = m.mul(letter.matrix());
        }
        Self::from_matrix(m)
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        Self::from_matrix(self.matrix.mul(other.matrix)).expect("group is closed")
    }

    pub fn inverse(&self) -> WeylElement {
        let word: Vec<Simple> = self.word.iter().rev().copied().collect();
        let m = word.iter().fold(Mat2::IDENTITY, |m, s| m.mul(s.matrix()));
        Self::from_matrix(m).expect("group is closed")
    }

    pub fn act(&self, v: RootVector) -> RootVector {
        self.matrix.apply(v)
    }

    pub fn act_q(&self, v: QVector) -> QVector {
        self.matrix.apply_q(v)
    }

    /// `w^{-1}(θ)`.
    pub fn inverse_act(&self, v: RootVector) -> RootVector {
        self.inverse().act(v)
    }

    /// Word as ASCII letters, e.g. `"ba"`; the identity is `"1"`.
    pub fn ascii(&self) -> String {
        if self.word.is_empty() {
            return "1".to_string();
        }
        self.word
            .iter()
            .map(|s| match s {
                Simple::Alpha => 'a',
                Simple::Beta => 'b',
            })
            .collect()
    }

    /// Name such as `w_βα`, `1` or `w_G`.
    pub fn name(&self) -> String {
        if self.word.is_empty() {
            "1".to_string()
        } else if self.length == 6 {
            "w_G".to_string()
        } else {
            let s: String = self.word.iter().map(|l| l.symbol()).collect();
            format!("w_{s}")
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn alternating(start: Simple, len: usize) -> Vec<Simple> {
    let mut out = Vec::with_capacity(len);
    let mut cur = start;
    for _ in 0..len {
        out.push(cur);
        cur = cur.other();
    }
    out
}

/// The twelve Weyl group elements in table order:
/// `1, w_β, w_βα, ..., w_βαβαβ, w_α, w_αβ, ..., w_αβαβα, w_G`.
pub fn weyl_group() -> &'static [WeylElement] {
    static GROUP: OnceLock<Vec<WeylElement>> = OnceLock::new();
    GROUP.get_or_init(|| {
        let mut out = vec![WeylElement::from_reduced(Vec::new())];
        for start in [Simple::Beta, Simple::Alpha] {
            for len in 1..=5 {
                out.push(WeylElement::from_reduced(alternating(start, len)));
            }
        }
        out.push(WeylElement::from_reduced(alternating(Simple::Alpha, 6)));
        out
    })
}

/// A maximal parabolic, named by the simple root in its Levi factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Maximal {
    Alpha,
    Beta,
}

/// A standard parabolic: the Borel or one of the two maximal ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parabolic {
    Borel,
    Max(Maximal),
}

impl From<Maximal> for Parabolic {
    fn from(m: Maximal) -> Self {
        Parabolic::Max(m)
    }
}

impl Maximal {
    pub const BOTH: [Maximal; 2] = [Maximal::Beta, Maximal::Alpha];

    /// The simple root of the Levi factor.
    pub fn levi_root(self) -> RootVector {
        match self {
            Maximal::Alpha => ALPHA,
            Maximal::Beta => BETA,
        }
    }

    /// The simple root not in the Levi factor.
    pub fn complementary_root(self) -> RootVector {
        match self {
            Maximal::Alpha => BETA,
            Maximal::Beta => ALPHA,
        }
    }

    /// Point of evaluation `k = -⟨ρ_P, α_P^∨⟩`: `-5/2` for P_β and `-3/2` for P_α.
    pub fn evaluation_point(self) -> HalfInt {
        match self {
            Maximal::Beta => HalfInt::from_twice(-5),
            Maximal::Alpha => HalfInt::from_twice(-3),
        }
    }

    /// Shift in `w'.λ = dual(μ) + shift`: `2k`, i.e. `-5` or `-3`.
    pub fn dual_shift(self) -> i64 {
        self.evaluation_point().twice()
    }

    /// Right-of-unitary-axis threshold on the purity weight.
    pub fn unitary_threshold(self) -> i64 {
        self.dual_shift()
    }

    pub fn name(self) -> &'static str {
        match self {
            Maximal::Alpha => "P_alpha",
            Maximal::Beta => "P_beta",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "alpha" | "a" | "p_alpha" | "α" => Ok(Maximal::Alpha),
            "beta" | "b" | "p_beta" | "β" => Ok(Maximal::Beta),
            _ => Err(domain(format!("unknown parabolic {s:?} (use alpha or beta)"))),
        }
    }
}

impl fmt::Display for Maximal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Structural data of a standard parabolic.
///
/// For the Borel only the unipotent roots and `ρ_P` are meaningful; the other
/// fields are `None` or empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicData {
    pub tag: Parabolic,
    pub levi_simple_root: Option<RootVector>,
    pub unipotent_roots: Vec<RootVector>,
    pub rho_p: QVector,
    pub fundamental_weight: Option<RootVector>,
    pub evaluation_point: Option<HalfInt>,
    pub modulus_exponent: Option<i64>,
    pub m: Option<usize>,
    pub adjoint_grading: Vec<Vec<RootVector>>,
    pub h_values: Vec<Q>,
}

impl ParabolicData {
    /// True when `j*k ∈ h_j + Z` for every graded piece.
    pub fn criticality_holds(&self) -> bool {
        let Some(k) = self.evaluation_point else {
            return false;
        };
        self.h_values
            .iter()
            .enumerate()
            .all(|(i, h)| (qi(i as i64 + 1) * k.to_q() - h).is_integer())
    }
}

/// Fully populated parabolic data, derived from the root system.
pub fn parabolic_data(tag: Parabolic) -> ParabolicData {
    match tag {
        Parabolic::Borel => {
            let sum = POSITIVE
                .iter()
                .fold(QVector::zero(), |acc, r| acc.add(r.to_q()));
            ParabolicData {
                tag,
                levi_simple_root: None,
                unipotent_roots: POSITIVE.to_vec(),
                rho_p: sum.scale(q(1, 2)),
                fundamental_weight: None,
                evaluation_point: None,
                modulus_exponent: None,
                m: None,
                adjoint_grading: Vec::new(),
                h_values: Vec::new(),
            }
        }
        Parabolic::Max(p) => maximal_data(p),
    }
}

fn maximal_data(p: Maximal) -> ParabolicData {
    let levi = p.levi_root();
    let unipotent: Vec<RootVector> = POSITIVE.iter().copied().filter(|r| *r != levi).collect();
    let rho_p = unipotent
        .iter()
        .fold(QVector::zero(), |acc, r| acc.add(r.to_q()))
        .scale(q(1, 2));
    let gamma = match p {
        Maximal::Beta => GAMMA_S,
        Maximal::Alpha => GAMMA_L,
    };
    let pair_with_complement = pairing(rho_p, p.complementary_root()).expect("simple root");
    let k = HalfInt::from_q(-pair_with_complement).expect("half-integral");
    let grade = |r: &RootVector| pairing_int(gamma, *r).expect("root") as usize;
    let m = unipotent.iter().map(grade).max().unwrap_or(0);
    let grading: Vec<Vec<RootVector>> = (1..=m)
        .map(|j| unipotent.iter().copied().filter(|r| grade(r) == j).collect())
        .collect();
    // h_j is the fractional part of j*k, so that j*k ∈ h_j + Z.
    let h_values = (1..=m)
        .map(|j| {
            let jk = qi(j as i64) * k.to_q();
            jk - jk.floor()
        })
        .collect();
    ParabolicData {
        tag: Parabolic::Max(p),
        levi_simple_root: Some(levi),
        unipotent_roots: unipotent,
        rho_p,
        fundamental_weight: Some(gamma),
        evaluation_point: Some(k),
        modulus_exponent: Some((qi(2) * pair_with_complement).to_integer()),
        m: Some(m),
        adjoint_grading: grading,
        h_values,
    }
}

/// A named block of GL2-torus exponent pairs in the restriction of R7.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct R7Block {
    pub name: String,
    pub exponents: Vec<(i64, i64)>,
}

/// The seven weights `0, ±α, ±(α+β), ±(2α+β)` of the standard representation.
pub fn r7_weights() -> [RootVector; 7] {
    [
        RootVector::new(0, 0),
        RootVector::new(1, 0),
        RootVector::new(-1, 0),
        RootVector::new(1, 1),
        RootVector::new(-1, -1),
        RootVector::new(2, 1),
        RootVector::new(-2, -1),
    ]
}

/// Exponent pair `(p, q)` of a root-lattice vector on the GL2 torus `diag(a, b)`
/// under the parametrization attached to the parabolic.
///
/// P_β: `α ↦ b`, `β ↦ a b^{-1}`. P_α: `α ↦ a b^{-1}`, `β ↦ a^{-1} b^2`.
pub fn torus_exponents(p: Maximal, v: RootVector) -> (i64, i64) {
    let (ea, eb) = match p {
        Maximal::Beta => ((0, 1), (1, -1)),
        Maximal::Alpha => ((1, -1), (-1, 2)),
    };
    (v.x * ea.0 + v.y * eb.0, v.x * ea.1 + v.y * eb.1)
}

/// Restriction of R7 to the Levi factor, split into named blocks by total degree.
pub fn r7_restriction(p: Maximal) -> Vec<R7Block> {
    let exps: Vec<(i64, i64)> = r7_weights().iter().map(|w| torus_exponents(p, *w)).collect();
    let names: &[(i64, &str)] = match p {
        Maximal::Beta => &[(-2, "det^-1"), (-1, "rho2~"), (0, "1"), (1, "rho2"), (2, "det")],
        Maximal::Alpha => &[(-1, "rho2~"), (0, "Ad2"), (1, "rho2")],
    };
    names
        .iter()
        .map(|(deg, name)| {
            let mut e: Vec<(i64, i64)> = exps
                .iter()
                .copied()
                .filter(|(a, b)| a + b == *deg)
                .collect();
            e.sort_by(|x, y| y.cmp(x));
            R7Block {
                name: name.to_string(),
                exponents: e,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_matrices_match_pairing() {
        for s in [Simple::Alpha, Simple::Beta] {
            for v in [RootVector::new(1, 0), RootVector::new(0, 1), RootVector::new(2, 7)] {
                let via_pairing = reflect(s.root(), v.to_q()).unwrap();
                assert_eq!(via_pairing, s.matrix().apply(v).to_q());
            }
        }
    }

    #[test]
    fn words_of_weyl_group() {
        let names: Vec<String> = weyl_group().iter().map(|w| w.ascii()).collect();
        assert_eq!(
            names,
            ["1", "b", "ba", "bab", "baba", "babab", "a", "ab", "aba", "abab", "ababa", "ababab"]
        );
    }

    #[test]
    fn parse_normalizes() {
        assert_eq!(WeylElement::parse("aa").unwrap(), WeylElement::identity());
        assert_eq!(WeylElement::parse("bababa").unwrap(), WeylElement::longest());
        assert_eq!(WeylElement::parse("w_βα").unwrap().ascii(), "ba");
        assert!(WeylElement::parse("abc").is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(root_label(RootVector::new(-3, -1)), "-(3α+β)");
        assert_eq!(root_label(RootVector::new(-2, -1)), "-γ_s");
        assert_eq!(root_label(RootVector::new(0, -1)), "-β");
        assert_eq!(RootVector::new(2, -1).to_string(), "2α-β");
    }
}
