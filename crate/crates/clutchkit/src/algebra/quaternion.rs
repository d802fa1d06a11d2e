//! Quaternions over `f64` with the Hamilton product.
//!
//! Components sit on the basis `1, i, j, k` with `i² = j² = k² = ijk = -1`.
//! Pure-imaginary values are an invariant checked through [`Quaternion::re`]
//! and [`Quaternion::pure_defect`], not a separate storage type, so a single
//! layout serves scalars, group elements and imaginary tangent data alike.

use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const ZERO: Self = Self::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::new(0.0, 0.0, 0.0, 1.0);

    pub const fn from_real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    pub const fn pure(x: f64, y: f64, z: f64) -> Self {
        Self::new(0.0, x, y, z)
    }

    /// Basis element `1, i, j, k` for index `0..4`.
    pub fn basis(idx: usize) -> Self {
        match idx {
            0 => Self::ONE,
            1 => Self::I,
            2 => Self::J,
            3 => Self::K,
            _ => panic!("quaternion basis index {idx} out of range"),
        }
    }

    pub fn re(&self) -> f64 {
        self.w
    }

    /// Imaginary part as a quaternion with zero real slot.
    pub fn im(&self) -> Self {
        Self::pure(self.x, self.y, self.z)
    }

    /// |Re| — zero exactly for pure-imaginary values.
    pub fn pure_defect(&self) -> f64 {
        self.w.abs()
    }

    pub fn norm_sq(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).norm()
    }

    pub fn is_finite(&self) -> bool {
        self.w.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    /// `conj / |q|²`; the unique two-sided inverse for nonzero `q`.
    pub fn inverse(&self) -> Result<Self> {
        let n2 = self.norm_sq();
        if n2 == 0.0 || !n2.is_finite() {
            return Err(Error::InversionOfZero);
        }
        Ok(self.conj().scale(1.0 / n2))
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InversionOfZero);
        }
        Ok(self.scale(1.0 / n))
    }

    /// Exponential; for pure `v` this is `cos|v| + sin|v|·v/|v|`, a unit value.
    pub fn exp(&self) -> Self {
        let r = (self.x * self.x + self.y * self.y + self.z * self.z).sqrt();
        // sin(r)/r with a series guard near zero
        let k = if r < 1e-8 { 1.0 - r * r / 6.0 } else { r.sin() / r };
        Self::new(r.cos(), k * self.x, k * self.y, k * self.z).scale(self.w.exp())
    }

    /// Exponential restricted to pure-imaginary inputs; the real slot is
    /// required below `tol` and then dropped, so the result is exactly unit
    /// up to rounding.
    pub fn exp_pure(&self, tol: f64) -> Result<Self> {
        let re_abs = self.pure_defect();
        if re_abs > tol {
            return Err(Error::NotPureImaginary { re_abs, tol });
        }
        Ok(self.im().exp())
    }

    /// Unit quaternion from four standard normals.
    pub fn random_unit<R: Rng>(rng: &mut R) -> Self {
        loop {
            let q = Self::new(
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
            );
            if let Ok(u) = q.normalized() {
                return u;
            }
        }
    }

    /// Unit pure-imaginary quaternion from three standard normals.
    pub fn random_pure_unit<R: Rng>(rng: &mut R) -> Self {
        loop {
            let q = Self::pure(
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
                rng.sample(StandardNormal),
            );
            if let Ok(u) = q.normalized() {
                return u;
            }
        }
    }

    /// Unit quaternion in the span of `1, i`; the circle subgroup.
    pub fn random_circle<R: Rng>(rng: &mut R) -> Self {
        loop {
            let q = Self::new(rng.sample(StandardNormal), rng.sample(StandardNormal), 0.0, 0.0);
            if let Ok(u) = q.normalized() {
                return u;
            }
        }
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Self;
    /// Hamilton product.
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const EPS: f64 = 1e-12;

    #[test]
    fn basis_relations() {
        assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::K, Quaternion::I);
        assert_eq!(Quaternion::K * Quaternion::I, Quaternion::J);
        assert_eq!(Quaternion::I * Quaternion::I, -Quaternion::ONE);
    }

    #[test]
    fn one_is_identity() {
        let q = Quaternion::new(0.3, -1.2, 2.5, 0.7);
        assert_eq!(Quaternion::ONE * q, q);
        assert_eq!(q * Quaternion::ONE, q);
    }

    #[test]
    fn half_turn_square() {
        // ((1+i)/sqrt2)^2 = (1 + 2i - 1)/2 = i
        let q = (Quaternion::ONE + Quaternion::I).scale(1.0 / 2f64.sqrt());
        assert!((q * q).distance(&Quaternion::I) < EPS);
    }

    #[test]
    fn conj_and_inverse_examples() {
        assert_eq!(Quaternion::I.conj(), -Quaternion::I);
        let two = Quaternion::from_real(2.0);
        assert!(two.inverse().unwrap().distance(&Quaternion::from_real(0.5)) < EPS);
        let prod = Quaternion::I.inverse().unwrap() * Quaternion::I;
        assert!(prod.distance(&Quaternion::ONE) < EPS);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert!(matches!(Quaternion::ZERO.inverse(), Err(crate::Error::InversionOfZero)));
    }

    #[test]
    fn exp_examples() {
        assert!(Quaternion::ZERO.exp().distance(&Quaternion::ONE) < EPS);
        let pi_i = Quaternion::I.scale(std::f64::consts::PI);
        assert!(pi_i.exp().distance(&-Quaternion::ONE) < EPS);
        let half_pi_j = Quaternion::J.scale(std::f64::consts::FRAC_PI_2);
        assert!(half_pi_j.exp().distance(&Quaternion::J) < EPS);
    }

    #[test]
    fn exp_pure_rejects_real_part() {
        let v = Quaternion::new(0.5, 1.0, 0.0, 0.0);
        assert!(matches!(
            v.exp_pure(1e-9),
            Err(crate::Error::NotPureImaginary { .. })
        ));
        assert!(v.im().exp_pure(1e-9).is_ok());
    }

    #[test]
    fn random_unit_is_deterministic_per_seed() {
        let mut a = ChaCha8Rng::seed_from_u64(42);
        let mut b = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..32 {
            assert_eq!(Quaternion::random_unit(&mut a), Quaternion::random_unit(&mut b));
        }
    }

    fn finite_quat() -> impl Strategy<Value = Quaternion> {
        let c = -2.0..2.0f64;
        (c.clone(), c.clone(), c.clone(), c).prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
    }

    proptest! {
        #[test]
        fn product_is_associative(p in finite_quat(), q in finite_quat(), r in finite_quat()) {
            let lhs = (p * q) * r;
            let rhs = p * (q * r);
            prop_assert!(lhs.distance(&rhs) <= 1e-12);
        }

        #[test]
        fn norm_is_multiplicative(p in finite_quat(), q in finite_quat()) {
            prop_assert!(((p * q).norm() - p.norm() * q.norm()).abs() <= 1e-12);
        }

        #[test]
        fn conj_times_self_is_norm_sq(q in finite_quat()) {
            let lhs = q.conj() * q;
            prop_assert!(lhs.distance(&Quaternion::from_real(q.norm_sq())) <= 1e-12);
        }

        #[test]
        fn exp_of_pure_is_unit(x in -3.0..3.0f64, y in -3.0..3.0f64, z in -3.0..3.0f64) {
            let v = Quaternion::pure(x, y, z);
            prop_assert!((v.exp().norm() - 1.0).abs() <= 1e-12);
        }
    }
}
