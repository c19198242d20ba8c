//! Strongly pure weights of a GL2 Levi factor over a CM field.
//!
//! A weight is a list of pairs `((a, b), (a*, b*))`, one per archimedean place,
//! with `(a, b)` the component at the embedding `η` and `(a*, b*)` the one at
//! its conjugate. Each component is Levi-dominant (`a >= b`) and every pair
//! satisfies `a + b* = b + a* = pw` for one common purity weight `pw`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numeric::HalfInt;
use crate::weights::Basis;

/// A dominant weight `(a, b)` of GL2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GlWeight {
    pub a: i64,
    pub b: i64,
}

impl GlWeight {
    pub const fn new(a: i64, b: i64) -> Self {
        GlWeight { a, b }
    }

    pub fn shift(self, t: i64) -> Self {
        GlWeight::new(self.a + t, self.b + t)
    }

    /// Highest weight of the contragredient: `(-b, -a)`.
    pub fn dual(self) -> Self {
        GlWeight::new(-self.b, -self.a)
    }
}

/// The conjugate components at one place.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PurePair {
    pub eta: GlWeight,
    pub etabar: GlWeight,
}

impl PurePair {
    pub const fn new(a: i64, b: i64, a_star: i64, b_star: i64) -> Self {
        PurePair {
            eta: GlWeight::new(a, b),
            etabar: GlWeight::new(a_star, b_star),
        }
    }

    /// The pure pair `((a, b), (pw-b, pw-a))` determined by its `η` component.
    pub const fn from_eta(a: i64, b: i64, pw: i64) -> Self {
        PurePair::new(a, b, pw - b, pw - a)
    }

    /// The pair with its two embeddings exchanged.
    pub fn swapped(self) -> Self {
        PurePair {
            eta: self.etabar,
            etabar: self.eta,
        }
    }

    pub fn components(self) -> [GlWeight; 2] {
        [self.eta, self.etabar]
    }
}

impl fmt::Display for PurePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({},{}),({},{}))",
            self.eta.a, self.eta.b, self.etabar.a, self.etabar.b
        )
    }
}

/// A validated strongly pure weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PureWeight {
    pairs: Vec<PurePair>,
    pw: i64,
    basis: Basis,
}

impl PureWeight {
    /// Validates dominance and purity.
    pub fn new(pairs: Vec<PurePair>, basis: Basis) -> Result<Self> {
        let pw = purity_weight(&pairs)?;
        Ok(PureWeight { pairs, pw, basis })
    }

    /// Single-place weight `((a, b), (a*, b*))`.
    pub fn single(a: i64, b: i64, a_star: i64, b_star: i64, basis: Basis) -> Result<Self> {
        PureWeight::new(vec![PurePair::new(a, b, a_star, b_star)], basis)
    }

    /// Single-place weight `((a, b), (pw-b, pw-a))`.
    pub fn from_eta(a: i64, b: i64, pw: i64, basis: Basis) -> Result<Self> {
        PureWeight::new(vec![PurePair::from_eta(a, b, pw)], basis)
    }

    pub fn pairs(&self) -> &[PurePair] {
        &self.pairs
    }

    pub fn pw(&self) -> i64 {
        self.pw
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn places(&self) -> usize {
        self.pairs.len()
    }

    /// The same weight with the embeddings exchanged at every place.
    pub fn swapped(&self) -> Self {
        PureWeight {
            pairs: self.pairs.iter().map(|p| p.swapped()).collect(),
            pw: self.pw,
            basis: self.basis,
        }
    }

    /// Re-tags the coordinates, e.g. when a weight is read from the command line.
    pub fn with_basis(mut self, basis: Basis) -> Self {
        self.basis = basis;
        self
    }
}

impl fmt::Display for PureWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|p| p.to_string()).collect();
        write!(f, "{} pw={} [{}]", parts.join(";"), self.pw, self.basis.name())
    }
}

/// The unique purity weight of a list of pairs.
pub fn purity_weight(pairs: &[PurePair]) -> Result<i64> {
    let first = pairs
        .first()
        .ok_or_else(|| domain("a pure weight needs at least one place"))?;
    let expected = first.eta.a + first.etabar.b;
    for (index, p) in pairs.iter().enumerate() {
        for (side, c) in [("η", p.eta), ("η̄", p.etabar)] {
            if c.a < c.b {
                return Err(Error::NotDominant {
                    index,
                    detail: format!("{side} component ({},{}) has a < b", c.a, c.b),
                });
            }
        }
        let lhs = p.eta.a + p.etabar.b;
        let rhs = p.eta.b + p.etabar.a;
        if lhs != expected || rhs != expected {
            return Err(Error::NotPure {
                index,
                lhs,
                rhs,
                expected,
            });
        }
    }
    Ok(expected)
}

/// Shifts every entry by `t`; the purity weight moves by `2t`.
pub fn tate_twist(mu: &PureWeight, t: i64) -> PureWeight {
    PureWeight {
        pairs: mu
            .pairs
            .iter()
            .map(|p| PurePair {
                eta: p.eta.shift(t),
                etabar: p.etabar.shift(t),
            })
            .collect(),
        pw: mu.pw + 2 * t,
        basis: mu.basis,
    }
}

/// `((a,b),(a*,b*)) ↦ ((-b,-a),(-b*,-a*))`, with purity weight `-pw`.
pub fn dual_twist(mu: &PureWeight) -> PureWeight {
    PureWeight {
        pairs: mu
            .pairs
            .iter()
            .map(|p| PurePair {
                eta: p.eta.dual(),
                etabar: p.etabar.dual(),
            })
            .collect(),
        pw: -mu.pw,
        basis: mu.basis,
    }
}

/// Cuspidal parameters at one place.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CuspidalParams {
    pub alpha: (HalfInt, HalfInt),
    pub beta: (HalfInt, HalfInt),
}

/// `α = (-b+1/2, -a-1/2)` and `β = (-a*-1/2, -b*+1/2)`.
pub fn cuspidal_parameters(pair: PurePair, pw: i64) -> Result<CuspidalParams> {
    let actual = purity_weight(&[pair])?;
    if actual != pw {
        return Err(domain(format!(
            "pair {pair} has purity weight {actual}, not {pw}"
        )));
    }
    let h = |twice_base: i64, sign: i64| HalfInt::from_twice(2 * twice_base + sign);
    Ok(CuspidalParams {
        alpha: (h(-pair.eta.b, 1), h(-pair.eta.a, -1)),
        beta: (h(-pair.etabar.a, -1), h(-pair.etabar.b, 1)),
    })
}
