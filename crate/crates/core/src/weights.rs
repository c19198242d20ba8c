//! Coordinates on the weight lattice, dominance, and the twisted Weyl action.
//!
//! Three bases are in use:
//!
//! | basis | meaning of `(u, v)` | root coordinates |
//! |-------|---------------------|------------------|
//! | `Fund` | `u*γ_l + v*γ_s` | `(3u+2v, 2u+v)` |
//! | `T0` | `u*(2α+β) + v*(α+β)` | `(2u+v, u+v)` |
//! | `TBeta` | `u*(α+β) + v*α` | `(u+v, u)` |
//!
//! `T0` is also the coordinate system of the P_α torus parametrization, so a
//! single tag serves both.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::numeric::{fmt_q, qi, Q};
use crate::rootsys::{pairing, QVector, WeylElement, ALPHA, BETA, RHO_G};

/// Basis tag carried by every coordinate pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    Fund,
    T0,
    TBeta,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Fund => "FUND",
            Basis::T0 => "T0",
            Basis::TBeta => "TBETA",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "fund" => Ok(Basis::Fund),
            "t0" | "talpha" => Ok(Basis::T0),
            "tbeta" => Ok(Basis::TBeta),
            _ => Err(domain(format!("unknown basis {s:?}"))),
        }
    }
}

/// Weight written as `(u, v)` in a tagged basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightCoords {
    pub basis: Basis,
    pub u: Q,
    pub v: Q,
}

/// Group whose dominance is tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scope {
    G,
    MAlpha,
    MBeta,
}

impl WeightCoords {
    pub fn new(basis: Basis, u: Q, v: Q) -> Self {
        WeightCoords { basis, u, v }
    }

    pub fn int(basis: Basis, u: i64, v: i64) -> Self {
        WeightCoords::new(basis, qi(u), qi(v))
    }

    /// The same point as `x*alpha + y*beta`.
    pub fn to_root(self) -> QVector {
        let (u, v) = (self.u, self.v);
        match self.basis {
            Basis::Fund => QVector::new(qi(3) * u + qi(2) * v, qi(2) * u + v),
            Basis::T0 => QVector::new(qi(2) * u + v, u + v),
            Basis::TBeta => QVector::new(u + v, u),
        }
    }

    /// Expresses a root-coordinate vector in `basis`.
    pub fn from_root(basis: Basis, r: QVector) -> Self {
        let (x, y) = (r.x, r.y);
        let (u, v) = match basis {
            Basis::Fund => (qi(2) * y - x, qi(2) * x - qi(3) * y),
            Basis::T0 => (x - y, qi(2) * y - x),
            Basis::TBeta => (y, x - y),
        };
        WeightCoords::new(basis, u, v)
    }

    /// Both coordinates integral, as integers.
    pub fn as_ints(self) -> Option<(i64, i64)> {
        (self.u.is_integer() && self.v.is_integer()).then(|| (self.u.to_integer(), self.v.to_integer()))
    }
}

impl fmt::Display for WeightCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.basis.name(), fmt_q(self.u), fmt_q(self.v))
    }
}

/// The same lattice point in the target basis.
pub fn convert(w: WeightCoords, target: Basis) -> WeightCoords {
    if w.basis == target {
        return w;
    }
    WeightCoords::from_root(target, w.to_root())
}

/// Dominance for `G` or for one of the two Levi factors.
///
/// `G` requires both simple pairings to be nonnegative; `M_θ` only the one
/// with the Levi simple root `θ`. The input must be integral in its basis.
pub fn is_dominant(w: WeightCoords, scope: Scope) -> Result<bool> {
    if w.as_ints().is_none() {
        return Err(domain(format!("{w} is not integral")));
    }
    let r = w.to_root();
    let pa = pairing(r, ALPHA)?;
    let pb = pairing(r, BETA)?;
    let zero = Q::zero();
    Ok(match scope {
        Scope::G => pa >= zero && pb >= zero,
        Scope::MAlpha => pa >= zero,
        Scope::MBeta => pb >= zero,
    })
}

/// `w.λ = w(λ + ρ_G) - ρ_G`, returned in the basis of `λ`.
pub fn dot_action(w: &WeylElement, lambda: WeightCoords) -> WeightCoords {
    let rho = RHO_G.to_q();
    let moved = w.act_q(lambda.to_root().add(rho)).sub(rho);
    WeightCoords::from_root(lambda.basis, moved)
}

/// Integer convenience wrapper for [`dot_action`].
pub fn dot_action_int(w: &WeylElement, basis: Basis, uv: (i64, i64)) -> (i64, i64) {
    dot_action(w, WeightCoords::int(basis, uv.0, uv.1))
        .as_ints()
        .expect("the dot action preserves integrality")
}
