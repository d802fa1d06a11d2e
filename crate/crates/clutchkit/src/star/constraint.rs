//! Constraint manifolds inside sphere-times-sphere products: the locus
//! where a fixed map of the base is hermitian-orthogonal to the fiber.
//!
//! Membership is preserved by the action `(base, (c, d)) ↦ (q·base, (qc, qd))`
//! because the constraint map is equivariant and the hermitian product obeys
//! `⟨(quq̄, qvq̄), (qc, qd)⟩ = q⟨(u, v), (c, d)⟩`; closure is measured, not
//! assumed.

use crate::algebra::{hermitian_inner, Quaternion};
use crate::batch;
use crate::error::{Error, Result};
use crate::geometry::{actions, sample_unit_sphere, ActionSpec, GroupElement, SpherePoint};
use crate::maps::{catalogue, NamedMap};
use crate::seed::subseed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    /// Base the unit sphere of `R x H x H`, constraint map the normalized eta.
    E11,
    /// Base the unit sphere of `Im H x H x H`, constraint map the rescaled b.
    E13,
}

/// A point of the constraint locus: a base point plus a unit fiber pair.
#[derive(Debug, Clone)]
pub struct ConstraintPoint {
    pub base: SpherePoint,
    pub fiber: (Quaternion, Quaternion),
}

pub struct ConstraintManifold {
    pub kind: ConstraintKind,
    pub base_action: ActionSpec,
    map: NamedMap,
}

impl ConstraintManifold {
    pub fn new(kind: ConstraintKind) -> Self {
        let (map_name, base_action) = match kind {
            ConstraintKind::E11 => ("eta", actions::s8_left_conj()),
            ConstraintKind::E13 => ("b10_tilde", actions::s10_left_conj()),
        };
        let map = catalogue().into_iter().find(|m| m.name == map_name).unwrap();
        Self { kind, base_action, map }
    }

    /// Value of the constraint map at the base, as a quaternion pair.
    fn image(&self, base: &SpherePoint) -> Result<(Quaternion, Quaternion)> {
        let v = self.map.eval(base)?;
        Ok((v.quat(0), v.quat(1)))
    }

    /// Max of the hermitian-orthogonality defect and the unit-fiber defect.
    pub fn membership_defect(&self, p: &ConstraintPoint) -> Result<f64> {
        let u = self.image(&p.base)?;
        let pairing = hermitian_inner(u, p.fiber).norm();
        let unit = ((p.fiber.0.norm_sq() + p.fiber.1.norm_sq()).sqrt() - 1.0).abs();
        Ok(pairing.max(unit))
    }

    /// `q ★ (base; c, d) = (q·base; qc, qd)`; the input must be a member
    /// within `tol`.
    pub fn star_act(&self, q: &Quaternion, p: &ConstraintPoint, tol: f64) -> Result<ConstraintPoint> {
        let defect = self.membership_defect(p)?;
        if defect > tol {
            return Err(Error::MembershipViolation { defect, tol });
        }
        let base = self.base_action.act(&GroupElement::S3(*q), &p.base)?;
        Ok(ConstraintPoint { base, fiber: (*q * p.fiber.0, *q * p.fiber.1) })
    }

    /// Projection to the base sphere.
    pub fn project(p: &ConstraintPoint) -> &SpherePoint {
        &p.base
    }

    /// Members over seeded base points: the fiber is drawn from the
    /// right-quaternionic line hermitian-orthogonal to the image of the
    /// base.
    pub fn sample_members(&self, count: usize, seed: u64) -> Result<Vec<ConstraintPoint>> {
        use rand::SeedableRng;
        let bases = sample_unit_sphere(&self.base_action.space, count, subseed(seed, "members.base"));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(subseed(seed, "members.fiber"));
        bases
            .into_iter()
            .map(|base| {
                let (u1, u2) = self.image(&base)?;
                // one generator of the orthogonal line, branch chosen for
                // numerical headroom
                let v0 = if u1.norm() >= u2.norm() {
                    ((u1 * u2.conj()).scale(-1.0 / u1.norm_sq()), Quaternion::ONE)
                } else {
                    (Quaternion::ONE, (u2 * u1.conj()).scale(-1.0 / u2.norm_sq()))
                };
                let n = (v0.0.norm_sq() + v0.1.norm_sq()).sqrt();
                let w = Quaternion::random_unit(&mut rng);
                Ok(ConstraintPoint {
                    base,
                    fiber: (v0.0.scale(1.0 / n) * w, v0.1.scale(1.0 / n) * w),
                })
            })
            .collect()
    }

    /// Max membership defect after acting on sampled members by random
    /// group elements.
    pub fn closure_defect(&self, samples: usize, seed: u64, tol: f64) -> Result<f64> {
        let members = self.sample_members(samples, seed)?;
        let qs = crate::geometry::sample_unit_quaternions(samples, subseed(seed, "closure.grp"));
        let items: Vec<(ConstraintPoint, Quaternion)> = members.into_iter().zip(qs).collect();
        Ok(batch::max_defect(&items, |(p, q)| {
            match self.star_act(q, p, tol).and_then(|moved| self.membership_defect(&moved)) {
                Ok(d) => d,
                Err(_) => f64::INFINITY,
            }
        }))
    }

    /// `project(q ★ p)` against `q · project(p)`: the base transform is the
    /// same action evaluation on both sides, so the defect is exactly zero.
    pub fn projection_equivariance_defect(&self, samples: usize, seed: u64) -> Result<f64> {
        let members = self.sample_members(samples, seed)?;
        let qs = crate::geometry::sample_unit_quaternions(samples, subseed(seed, "proj.grp"));
        let items: Vec<(ConstraintPoint, Quaternion)> = members.into_iter().zip(qs).collect();
        Ok(batch::max_defect(&items, |(p, q)| {
            let d = (|| -> Result<f64> {
                let moved = self.star_act(q, p, 1e-9)?;
                let lhs = Self::project(&moved);
                let rhs = self.base_action.act(&GroupElement::S3(*q), Self::project(p))?;
                Ok(lhs.distance(&rhs))
            })();
            d.unwrap_or(f64::INFINITY)
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{AmbientSpace, Part};

    fn e11_pole() -> SpherePoint {
        SpherePoint::from_parts(
            AmbientSpace::s8(),
            &[Part::Real(1.0), Part::Quat(Quaternion::ZERO), Part::Quat(Quaternion::ZERO)],
        )
        .unwrap()
    }

    #[test]
    fn membership_examples_at_the_pole() {
        // eta(1, 0, 0) = (1, 0); fiber (0, 1) pairs to zero, fiber (1, 0) to one
        let m = ConstraintManifold::new(ConstraintKind::E11);
        let member = ConstraintPoint { base: e11_pole(), fiber: (Quaternion::ZERO, Quaternion::ONE) };
        assert!(m.membership_defect(&member).unwrap() <= 1e-15);
        let non_member = ConstraintPoint { base: e11_pole(), fiber: (Quaternion::ONE, Quaternion::ZERO) };
        let d = m.membership_defect(&non_member).unwrap();
        assert!((d - 1.0).abs() <= 1e-15);
        assert!(matches!(
            m.star_act(&Quaternion::I, &non_member, 1e-9),
            Err(Error::MembershipViolation { .. })
        ));
    }

    #[test]
    fn sampled_members_are_members() {
        for kind in [ConstraintKind::E11, ConstraintKind::E13] {
            let m = ConstraintManifold::new(kind);
            for p in m.sample_members(300, 1).unwrap() {
                assert!(m.membership_defect(&p).unwrap() <= 1e-12);
            }
        }
    }

    #[test]
    fn closure_and_projection() {
        for kind in [ConstraintKind::E11, ConstraintKind::E13] {
            let m = ConstraintManifold::new(kind);
            assert!(m.closure_defect(500, 2, 1e-9).unwrap() <= 1e-9);
            assert_eq!(m.projection_equivariance_defect(300, 3).unwrap(), 0.0);
        }
    }
}
