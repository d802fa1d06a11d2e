//! Glued-manifold descriptors for octonionic clutching of sphere bundles:
//! two disc-times-sphere charts joined along the equator by
//! `(X, Y) ↦ (X, Xⁱ Y Xʲ)`.

use crate::algebra::{OctConvention, Octonion, Quaternion};
use crate::batch;
use crate::error::Result;
use crate::seed::subseed;

#[derive(Debug, Clone, Copy)]
pub struct SijDescriptor {
    pub i: i64,
    pub j: i64,
    pub convention: OctConvention,
}

impl SijDescriptor {
    pub fn new(i: i64, j: i64) -> Self {
        Self { i, j, convention: OctConvention::default() }
    }

    pub fn charts(&self) -> usize {
        2
    }

    pub fn is_trivial(&self) -> bool {
        self.i == 0 && self.j == 0
    }

    /// Clutching evaluator on the equator: `(X, Y) ↦ (X, Xⁱ Y Xʲ)` with `X`
    /// renormalized on ingestion.
    pub fn clutch(&self, x: &Octonion, y: &Octonion) -> Result<(Octonion, Octonion)> {
        let x = x.normalized()?;
        let xi = x.pow_int(self.i)?;
        let xj = x.pow_int(self.j)?;
        Ok((x, xi.mul(y)?.mul(&xj)?))
    }

    fn sample_pairs(&self, count: usize, seed: u64) -> Vec<(Octonion, Octonion)> {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                (
                    Octonion::random_unit(&mut rng, self.convention),
                    Octonion::random_unit(&mut rng, self.convention),
                )
            })
            .collect()
    }

    /// Fiberwise isometry: `||Xⁱ Y Xʲ| - |Y||` over samples.
    pub fn isometry_defect(&self, samples: usize, seed: u64) -> Result<f64> {
        let pairs = self.sample_pairs(samples, subseed(seed, "sij.isometry"));
        Ok(batch::max_defect(&pairs, |(x, y)| {
            match self.clutch(x, y) {
                Ok((_, fy)) => (fy.norm() - y.norm()).abs(),
                Err(_) => f64::INFINITY,
            }
        }))
    }

    /// Equivariance of the clutching under the rotation subgroup of the
    /// automorphisms: `clutch(g·X, g·Y) = (g ⊗ g)·clutch(X, Y)` for
    /// `g·(a, b) = (qa, qbq̄)`.
    pub fn equivariance_defect(&self, samples: usize, seed: u64) -> Result<f64> {
        let pairs = self.sample_pairs(samples, subseed(seed, "sij.equivariance"));
        let qs = crate::geometry::sample_unit_quaternions(pairs.len(), subseed(seed, "sij.group"));
        let items: Vec<((Octonion, Octonion), Quaternion)> = pairs.into_iter().zip(qs).collect();
        Ok(batch::max_defect(&items, |((x, y), q)| {
            let d = (|| -> Result<f64> {
                let (lx, ly) = self.clutch(&x.rotate(q), &y.rotate(q))?;
                let (rx, ry) = self.clutch(x, y)?;
                let (rx, ry) = (rx.rotate(q), ry.rotate(q));
                Ok((lx.distance(&rx).powi(2) + ly.distance(&ry).powi(2)).sqrt())
            })();
            d.unwrap_or(f64::INFINITY)
        }))
    }

    pub fn summary(&self) -> serde_json::Value {
        serde_json::json!({
            "charts": self.charts(),
            "clutching": format!("(X, Y) -> (X, X^{} Y X^{})", self.i, self.j),
            "convention": self.convention.label(),
            "trivial": self.is_trivial(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_exponents_give_the_product_descriptor() {
        let d = SijDescriptor::new(0, 0);
        assert!(d.is_trivial());
        for (x, y) in d.sample_pairs(100, 1) {
            let (cx, cy) = d.clutch(&x, &y).unwrap();
            assert!(cx.distance(&x) <= 1e-14);
            assert!(cy.distance(&y) <= 1e-14);
        }
    }

    #[test]
    fn identity_first_slot_fixes_the_fiber() {
        let d = SijDescriptor::new(1, 0);
        let e = Octonion::identity(d.convention);
        for (_, y) in d.sample_pairs(50, 2) {
            let (cx, cy) = d.clutch(&e, &y).unwrap();
            assert!(cx.distance(&e) <= 1e-14);
            assert!(cy.distance(&y) <= 1e-14);
        }
    }

    #[test]
    fn clutching_is_isometric_and_equivariant() {
        for (i, j) in [(1, 0), (2, -1), (2, 3)] {
            let d = SijDescriptor::new(i, j);
            assert!(d.isometry_defect(500, 3).unwrap() <= 1e-9);
            assert!(d.equivariance_defect(500, 4).unwrap() <= 1e-9);
        }
    }

    #[test]
    fn summary_names_the_clutching() {
        let d = SijDescriptor::new(2, -1);
        let s = d.summary();
        assert_eq!(s["charts"], 2);
        assert_eq!(s["clutching"], "(X, Y) -> (X, X^2 Y X^-1)");
    }
}
