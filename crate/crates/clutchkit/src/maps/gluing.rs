//! Invertible self-maps of products used as gluing data.
//!
//! Every constructor returns the written formula together with its explicit
//! inverse; round-trip defects are measured, not assumed. Quaternion pair
//! maps normalize the conjugating factor, so they extend from the unit seam
//! to disc-times-sphere charts unchanged.

use std::sync::Arc;

use super::identities::{QuatAction, QuatMap};
use crate::algebra::{OctConvention, Octonion, Quaternion};
use crate::error::Result;

type Eval<T> = Arc<dyn Fn(&T) -> Result<T> + Send + Sync>;

/// A named invertible self-map of a product.
#[derive(Clone)]
pub struct Gluing<T> {
    pub name: String,
    fwd: Eval<T>,
    inv: Eval<T>,
}

impl<T> Gluing<T> {
    pub fn new(name: impl Into<String>, fwd: Eval<T>, inv: Eval<T>) -> Self {
        Self { name: name.into(), fwd, inv }
    }

    pub fn apply(&self, t: &T) -> Result<T> {
        (self.fwd)(t)
    }

    pub fn apply_inv(&self, t: &T) -> Result<T> {
        (self.inv)(t)
    }

    /// Max over `samples` of the inverse round-trip distance, both orders.
    pub fn roundtrip_defect(&self, samples: &[T], dist: impl Fn(&T, &T) -> f64) -> f64 {
        let mut worst = 0.0f64;
        for t in samples {
            let d1 = match self.apply(t).and_then(|u| self.apply_inv(&u)) {
                Ok(back) => dist(&back, t),
                Err(_) => f64::INFINITY,
            };
            let d2 = match self.apply_inv(t).and_then(|u| self.apply(&u)) {
                Ok(back) => dist(&back, t),
                Err(_) => f64::INFINITY,
            };
            worst = worst.max(d1).max(d2);
        }
        worst
    }
}

pub type QuatPair = (Quaternion, Quaternion);
pub type OctPair = (Octonion, Octonion);

/// `f_a(x, y) = (x, x̂ y x̂̄)` with `x̂ = x/|x|`; inverse `(x, x̂̄ y x̂)`.
pub fn f_a() -> Gluing<QuatPair> {
    Gluing::new(
        "f_a",
        Arc::new(|(x, y): &QuatPair| {
            let u = x.normalized()?;
            Ok((*x, u * *y * u.conj()))
        }),
        Arc::new(|(x, y): &QuatPair| {
            let u = x.normalized()?;
            Ok((*x, u.conj() * *y * u))
        }),
    )
}

/// `g_a(x, y) = (ŷ x ŷ̄, y)`; inverse `(ŷ̄ x ŷ, y)`.
pub fn g_a() -> Gluing<QuatPair> {
    Gluing::new(
        "g_a",
        Arc::new(|(x, y): &QuatPair| {
            let u = y.normalized()?;
            Ok((u * *x * u.conj(), *y))
        }),
        Arc::new(|(x, y): &QuatPair| {
            let u = y.normalized()?;
            Ok((u.conj() * *x * u, *y))
        }),
    )
}

/// Shear on the second factor: `f_α(x, y) = (x, α(x)·y)` under `act`;
/// inverse acts by `α(x)⁻¹`.
pub fn f_alpha(alpha: QuatMap, act: QuatAction) -> Gluing<QuatPair> {
    let a1 = alpha.clone();
    let act1 = act.clone();
    Gluing::new(
        "f_alpha",
        Arc::new(move |(x, y): &QuatPair| Ok((*x, act(&alpha(x), y)))),
        Arc::new(move |(x, y): &QuatPair| Ok((*x, act1(&a1(x).conj(), y)))),
    )
}

/// Shear on the first factor: `g_β(x, y) = (β(y)·x, y)`.
pub fn g_beta(beta: QuatMap, act: QuatAction) -> Gluing<QuatPair> {
    let b1 = beta.clone();
    let act1 = act.clone();
    Gluing::new(
        "g_beta",
        Arc::new(move |(x, y): &QuatPair| Ok((act(&beta(y), x), *y))),
        Arc::new(move |(x, y): &QuatPair| Ok((act1(&b1(y).conj(), x), *y))),
    )
}

/// `F₋(X, Y) = (X·Y, X)` on octonion pairs; the inverse recovers
/// `Y = V⁻¹·U` through the alternative law.
pub fn oct_left_mul(convention: OctConvention) -> Gluing<OctPair> {
    let _ = convention;
    Gluing::new(
        "F_minus",
        Arc::new(|(x, y): &OctPair| Ok((x.mul(y)?, *x))),
        Arc::new(|(u, v): &OctPair| Ok((*v, v.inverse()?.mul(u)?))),
    )
}

/// `f_θ(X, Y) = (X, θ(X)·Y)` where `θ` lands in unit quaternions acting on
/// octonion coordinates by `(a, b) ↦ (qa, qbq̄)`.
pub fn f_theta(theta: Arc<dyn Fn(&Octonion) -> Quaternion + Send + Sync>) -> Gluing<OctPair> {
    let t1 = theta.clone();
    Gluing::new(
        "f_theta",
        Arc::new(move |(x, y): &OctPair| Ok((*x, y.rotate(&theta(x))))),
        Arc::new(move |(x, y): &OctPair| Ok((*x, y.rotate(&t1(x).conj())))),
    )
}

pub fn quat_pair_distance(a: &QuatPair, b: &QuatPair) -> f64 {
    (a.0.distance(&b.0).powi(2) + a.1.distance(&b.1).powi(2)).sqrt()
}

pub fn oct_pair_distance(a: &OctPair, b: &OctPair) -> f64 {
    (a.0.distance(&b.0).powi(2) + a.1.distance(&b.1).powi(2)).sqrt()
}

#[cfg(test)]
mod tests {
    use super::super::identities::conj_action;
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn quat_pairs(n: usize, seed: u64) -> Vec<QuatPair> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| (Quaternion::random_unit(&mut rng), Quaternion::random_unit(&mut rng)))
            .collect()
    }

    fn oct_pairs(n: usize, seed: u64) -> Vec<OctPair> {
        let conv = OctConvention::XiTwisted;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|_| (Octonion::random_unit(&mut rng, conv), Octonion::random_unit(&mut rng, conv)))
            .collect()
    }

    #[test]
    fn written_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x = Quaternion::random_unit(&mut rng);
        let y = Quaternion::random_unit(&mut rng);
        // f_a(x, 1) = (x, 1) and g_a(1, y) = (1, y)
        let (a, b) = f_a().apply(&(x, Quaternion::ONE)).unwrap();
        assert_eq!(a, x);
        assert!(b.distance(&Quaternion::ONE) < 1e-14);
        let (a, b) = g_a().apply(&(Quaternion::ONE, y)).unwrap();
        assert!(a.distance(&Quaternion::ONE) < 1e-14);
        assert_eq!(b, y);
        // F₋(e, Y) = (Y, e)
        let conv = OctConvention::XiTwisted;
        let e = Octonion::identity(conv);
        let yy = Octonion::random_unit(&mut rng, conv);
        let (u, v) = oct_left_mul(conv).apply(&(e, yy)).unwrap();
        assert!(u.distance(&yy) < 1e-14);
        assert!(v.distance(&e) < 1e-14);
        // F₋ is not an involution: applying it twice moves (e, Y)
        let twice = oct_left_mul(conv).apply(&(u, v)).unwrap();
        assert!(oct_pair_distance(&twice, &(e, yy)) > 0.1);
    }

    #[test]
    fn roundtrips_are_tight() {
        let qs = quat_pairs(500, 2);
        assert!(f_a().roundtrip_defect(&qs, quat_pair_distance) <= 1e-12);
        assert!(g_a().roundtrip_defect(&qs, quat_pair_distance) <= 1e-12);

        let alpha: QuatMap = Arc::new(|x| *x);
        let beta: QuatMap = Arc::new(|y| y.conj());
        assert!(f_alpha(alpha, conj_action()).roundtrip_defect(&qs, quat_pair_distance) <= 1e-12);
        assert!(g_beta(beta, conj_action()).roundtrip_defect(&qs, quat_pair_distance) <= 1e-12);

        let os = oct_pairs(300, 3);
        assert!(oct_left_mul(OctConvention::XiTwisted).roundtrip_defect(&os, oct_pair_distance) <= 1e-12);
        let theta: Arc<dyn Fn(&Octonion) -> Quaternion + Send + Sync> =
            Arc::new(|x| x.b.normalized().unwrap_or(Quaternion::ONE));
        assert!(f_theta(theta).roundtrip_defect(&os, oct_pair_distance) <= 1e-12);
    }

    #[test]
    fn f_a_is_the_identity_shear_instance() {
        // f_a equals f_α with α = id under conjugation
        let alpha: QuatMap = Arc::new(|x| *x);
        let shear = f_alpha(alpha, conj_action());
        for p in quat_pairs(200, 4) {
            let lhs = f_a().apply(&p).unwrap();
            let rhs = shear.apply(&p).unwrap();
            assert!(quat_pair_distance(&lhs, &rhs) < 1e-14);
        }
    }
}
