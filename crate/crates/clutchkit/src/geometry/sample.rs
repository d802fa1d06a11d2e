//! Seeded sampling on spheres and groups.
//!
//! Every sampler draws from a sequential ChaCha8 stream keyed by the seed,
//! then hands the finished list to the (possibly parallel) defect folds.
//! Thread count therefore never influences which points are sampled.
//! Gaussian components normalized to the sphere give a rotation-invariant
//! law; imaginary-quaternion factors are built pure, with the real slot
//! exactly zero.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::action::{GroupElement, GroupKind};
use super::space::{AmbientSpace, Factor, SpherePoint};
use crate::algebra::Quaternion;

pub(crate) fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn raw_point<R: Rng>(space: &AmbientSpace, rng: &mut R) -> SpherePoint {
    let mut coords = Vec::with_capacity(space.width());
    for factor in space.factors() {
        match factor {
            Factor::Real => coords.push(rng.sample(StandardNormal)),
            Factor::Quaternion => {
                for _ in 0..4 {
                    coords.push(rng.sample(StandardNormal));
                }
            }
            Factor::ImQuaternion => {
                coords.push(0.0);
                for _ in 0..3 {
                    coords.push(rng.sample(StandardNormal));
                }
            }
        }
    }
    SpherePoint::from_coords(space.clone(), coords).expect("width matches by construction")
}

/// `count` unit points of `space`, deterministic for a fixed seed.
pub fn sample_unit_sphere(space: &AmbientSpace, count: usize, seed: u64) -> Vec<SpherePoint> {
    let mut rng = rng_for(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if let Ok(p) = raw_point(space, &mut rng).renormalized() {
            out.push(p);
        }
    }
    out
}

/// Unit points on the equator sub-sphere: the invariant zero-set of the
/// last coordinate of the leading real or imaginary factor.
pub fn sample_equator(space: &AmbientSpace, count: usize, seed: u64) -> Vec<SpherePoint> {
    let zero_idx = match space.factors().first() {
        Some(Factor::Real) => 0,
        Some(Factor::ImQuaternion) => 3, // the k-slot
        _ => panic!("equator sampling needs a leading real or imaginary factor"),
    };
    let mut rng = rng_for(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut p = raw_point(space, &mut rng);
        let mut coords = p.coords().to_vec();
        coords[zero_idx] = 0.0;
        p = SpherePoint::from_coords(space.clone(), coords).expect("same width");
        if let Ok(u) = p.renormalized() {
            out.push(u);
        }
    }
    out
}

pub fn sample_unit_quaternions(count: usize, seed: u64) -> Vec<Quaternion> {
    let mut rng = rng_for(seed);
    (0..count).map(|_| Quaternion::random_unit(&mut rng)).collect()
}

pub fn sample_group(kind: GroupKind, count: usize, seed: u64) -> Vec<GroupElement> {
    let mut rng = rng_for(seed);
    (0..count).map(|_| GroupElement::random(kind, &mut rng)).collect()
}

/// Sampler for the seam of a two-radius decomposition: points whose two
/// block norms differ by at most `margin`. Writing `a, b` for the block
/// norms, `a - b` is drawn uniformly from `[-margin, margin]` and
/// `a² + b² = 1` fixes both.
pub struct SeamSampler {
    pub margin: f64,
}

impl SeamSampler {
    /// Block radii `(a, b)` with `a² + b² = 1` and `a - b = u`.
    pub fn radii<R: Rng>(&self, rng: &mut R) -> (f64, f64) {
        let u: f64 = rng.gen_range(-self.margin..=self.margin);
        let s = (2.0 - u * u).sqrt();
        ((s + u) / 2.0, (s - u) / 2.0)
    }
}
