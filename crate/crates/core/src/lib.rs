//! Exact combinatorics of Eisenstein constant terms for the exceptional group G2.
//!
//! The crate covers the rank-two root system and its Weyl group, the three
//! torus parametrizations of the weight lattice, strongly pure weights of the
//! two maximal Levi factors, critical sets of the Langlands-Shahidi
//! L-functions attached to them, the combinatorial lemma that relates
//! criticality to balanced Kostant representatives, and the archimedean
//! Gamma-factor identity behind the rank-one decomposition of the standard
//! intertwining operator.
//!
//! Everything is exact. Rationals are [`Q`] (`Ratio<i64>`), half-integers are
//! [`HalfInt`], and archimedean ratios are [`archfactors::GammaRatio`] values
//! of the form `rational * (2 pi)^k`. No floating point enters any check.
//!
//! Module map:
//!
//! | module | contents |
//! |--------|----------|
//! | [`rootsys`] | roots, pairing, reflections, Weyl group, parabolic data, R7 weights |
//! | [`weights`] | FUND / T0 / TBETA coordinates, dominance, dot action |
//! | [`purity`] | strongly pure weights, Tate and dual twists, cuspidal parameters |
//! | [`lcrit`] | transfers, Gamma arguments, widths, critical sets, evaluation-point checks |
//! | [`kostant`] | Kostant representatives, the `w'` involution, balanced search, degrees, signs |
//! | [`comblemma`] | region systems, lattice coverage, lattice-free triangles, lemma verifier |
//! | [`archfactors`] | characters of C^x, rank-one Gamma ratios, cocycle chain |
//! | [`sampling`] | seeded generators for the randomized suites |
//! | [`tables`] | the inverse-action and twisted-action tables, printed and derived |

pub mod archfactors;
pub mod comblemma;
pub mod error;
pub mod kostant;
pub mod lcrit;
pub mod numeric;
pub mod purity;
pub mod rootsys;
pub mod sampling;
pub mod tables;
pub mod weights;

pub use error::{Error, Result};
pub use numeric::{HalfInt, Q};
pub use rootsys::{Maximal, Parabolic};
