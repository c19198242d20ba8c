//! Seeded generators for the randomized suites.
//!
//! Every generator takes an explicit RNG so reports are reproducible from a
//! seed alone.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::kostant::natural_basis;
use crate::lcrit::{poe_check, unitary_axis_check};
use crate::purity::PureWeight;
use crate::rootsys::Maximal;
use crate::weights::{is_dominant, Scope, WeightCoords};

/// The RNG used by every suite.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A single-place pure weight `((a,b),(pw-b,pw-a))` with `a >= b`,
/// `|a|, |b| <= span` and `pw` in `pw_range`, tagged with the natural basis.
pub fn pure_weight<R: Rng>(rng: &mut R, p: Maximal, pw_range: (i64, i64), span: i64) -> PureWeight {
    let w = rng.gen_range(pw_range.0..=pw_range.1);
    let a = rng.gen_range(-span..=span);
    let b = rng.gen_range(-span..=a);
    PureWeight::from_eta(a, b, w, natural_basis(p)).expect("a >= b gives a pure weight")
}

/// A `G`-dominant integral weight in the natural basis of `p`, with
/// coordinates in `[-span, span]`.
pub fn dominant_lambda<R: Rng>(rng: &mut R, p: Maximal, span: i64) -> (i64, i64) {
    let basis = natural_basis(p);
    loop {
        let u = rng.gen_range(-span..=span);
        let v = rng.gen_range(-span..=span);
        if is_dominant(WeightCoords::int(basis, u, v), Scope::G).expect("integral") {
            return (u, v);
        }
    }
}

/// A single-place weight right of the unitary axis for which `k` and `k+1`
/// are critical, found by rejection.
pub fn right_of_axis_critical<R: Rng>(rng: &mut R, p: Maximal, span: i64) -> PureWeight {
    let t = p.unitary_threshold();
    loop {
        let mu = pure_weight(rng, p, (t - 2 * span, t), span);
        if unitary_axis_check(&mu, p) && poe_check(&mu, p).statement_1 {
            return mu;
        }
    }
}
