//! Named group actions on spheres, and the defect meters that certify them.
//!
//! Group elements are stored as unit quaternions (or pairs) and are
//! renormalized on ingestion, never silently mid-computation, so a measured
//! defect reflects formula error rather than accumulated drift.

use std::sync::Arc;

use rand::Rng;

use super::sample::{rng_for, sample_unit_sphere};
use super::space::{AmbientSpace, Part, SpherePoint};
use crate::algebra::Quaternion;
use crate::batch;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    S3,
    S1,
    S3xS3,
    S3xS1,
}

/// Element of one of the supported groups. The `S1` factor lives in the
/// span of `1, i` inside the quaternions so every component shares one
/// multiplication.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GroupElement {
    S3(Quaternion),
    S1(Quaternion),
    S3xS3(Quaternion, Quaternion),
    S3xS1(Quaternion, Quaternion),
}

impl GroupElement {
    pub fn kind(&self) -> GroupKind {
        match self {
            GroupElement::S3(_) => GroupKind::S3,
            GroupElement::S1(_) => GroupKind::S1,
            GroupElement::S3xS3(..) => GroupKind::S3xS3,
            GroupElement::S3xS1(..) => GroupKind::S3xS1,
        }
    }

    pub fn identity(kind: GroupKind) -> Self {
        match kind {
            GroupKind::S3 => GroupElement::S3(Quaternion::ONE),
            GroupKind::S1 => GroupElement::S1(Quaternion::ONE),
            GroupKind::S3xS3 => GroupElement::S3xS3(Quaternion::ONE, Quaternion::ONE),
            GroupKind::S3xS1 => GroupElement::S3xS1(Quaternion::ONE, Quaternion::ONE),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (GroupElement::S3(a), GroupElement::S3(b)) => Ok(GroupElement::S3(*a * *b)),
            (GroupElement::S1(a), GroupElement::S1(b)) => Ok(GroupElement::S1(*a * *b)),
            (GroupElement::S3xS3(a1, a2), GroupElement::S3xS3(b1, b2)) => {
                Ok(GroupElement::S3xS3(*a1 * *b1, *a2 * *b2))
            }
            (GroupElement::S3xS1(a1, a2), GroupElement::S3xS1(b1, b2)) => {
                Ok(GroupElement::S3xS1(*a1 * *b1, *a2 * *b2))
            }
            _ => Err(Error::SpaceMismatch {
                expected: format!("{:?}", self.kind()),
                found: format!("{:?}", other.kind()),
            }),
        }
    }

    /// Inverse = componentwise conjugate (elements are unit).
    pub fn inverse(&self) -> Self {
        match self {
            GroupElement::S3(a) => GroupElement::S3(a.conj()),
            GroupElement::S1(a) => GroupElement::S1(a.conj()),
            GroupElement::S3xS3(a, b) => GroupElement::S3xS3(a.conj(), b.conj()),
            GroupElement::S3xS1(a, b) => GroupElement::S3xS1(a.conj(), b.conj()),
        }
    }

    pub fn renormalized(&self) -> Result<Self> {
        Ok(match self {
            GroupElement::S3(a) => GroupElement::S3(a.normalized()?),
            GroupElement::S1(a) => GroupElement::S1(a.normalized()?),
            GroupElement::S3xS3(a, b) => GroupElement::S3xS3(a.normalized()?, b.normalized()?),
            GroupElement::S3xS1(a, b) => GroupElement::S3xS1(a.normalized()?, b.normalized()?),
        })
    }

    pub fn distance(&self, other: &Self) -> f64 {
        match (self, other) {
            (GroupElement::S3(a), GroupElement::S3(b)) | (GroupElement::S1(a), GroupElement::S1(b)) => {
                a.distance(b)
            }
            (GroupElement::S3xS3(a1, a2), GroupElement::S3xS3(b1, b2))
            | (GroupElement::S3xS1(a1, a2), GroupElement::S3xS1(b1, b2)) => {
                (a1.distance(b1).powi(2) + a2.distance(b2).powi(2)).sqrt()
            }
            _ => f64::INFINITY,
        }
    }

    pub fn random<R: Rng>(kind: GroupKind, rng: &mut R) -> Self {
        match kind {
            GroupKind::S3 => GroupElement::S3(Quaternion::random_unit(rng)),
            GroupKind::S1 => GroupElement::S1(Quaternion::random_circle(rng)),
            GroupKind::S3xS3 => {
                GroupElement::S3xS3(Quaternion::random_unit(rng), Quaternion::random_unit(rng))
            }
            GroupKind::S3xS1 => {
                GroupElement::S3xS1(Quaternion::random_unit(rng), Quaternion::random_circle(rng))
            }
        }
    }

    /// The quaternion of a plain `S3` element.
    pub fn as_s3(&self) -> Result<Quaternion> {
        match self {
            GroupElement::S3(q) => Ok(*q),
            _ => Err(Error::SpaceMismatch {
                expected: "S3".into(),
                found: format!("{:?}", self.kind()),
            }),
        }
    }
}

type ActionEval = Arc<dyn Fn(&GroupElement, &SpherePoint) -> Result<SpherePoint> + Send + Sync>;

/// A named action of a group on a sphere, given by an evaluator.
#[derive(Clone)]
pub struct ActionSpec {
    pub name: &'static str,
    pub group: GroupKind,
    pub space: AmbientSpace,
    eval: ActionEval,
}

impl ActionSpec {
    pub fn new(name: &'static str, group: GroupKind, space: AmbientSpace, eval: ActionEval) -> Self {
        Self { name, group, space, eval }
    }

    /// Apply `g` to `p`; `g` is renormalized on entry, the point's space is
    /// checked, and the output is whatever the formula produces.
    pub fn act(&self, g: &GroupElement, p: &SpherePoint) -> Result<SpherePoint> {
        p.in_space(&self.space)?;
        if g.kind() != self.group {
            return Err(Error::SpaceMismatch {
                expected: format!("{:?}", self.group),
                found: format!("{:?}", g.kind()),
            });
        }
        let g = g.renormalized()?;
        (self.eval)(&g, p)
    }
}

fn quat_parts(p: &SpherePoint) -> Vec<Quaternion> {
    (0..p.space().factors().len()).map(|i| p.quat(i)).collect()
}

/// Constructors for every shipped action.
pub mod actions {
    use super::*;
    use crate::geometry::space::Factor;

    fn pack(space: &AmbientSpace, parts: Vec<Part>) -> Result<SpherePoint> {
        SpherePoint::from_parts(space.clone(), &parts)
    }

    /// `q · (x, y) = (q x q̄, q y q̄)` on the unit sphere of `H x H`.
    pub fn s7_diag_conj() -> ActionSpec {
        let space = AmbientSpace::s7();
        let sp = space.clone();
        ActionSpec::new(
            "s7_diag_conj",
            GroupKind::S3,
            space,
            Arc::new(move |g, p| {
                let q = g.as_s3()?;
                let qc = q.conj();
                let v = quat_parts(p);
                pack(&sp, vec![Part::Quat(q * v[0] * qc), Part::Quat(q * v[1] * qc)])
            }),
        )
    }

    /// `q · (λ, x, y) = (λ, qx, q y q̄)` on the unit sphere of `R x H x H`.
    pub fn s8_left_conj() -> ActionSpec {
        let space = AmbientSpace::s8();
        let sp = space.clone();
        ActionSpec::new(
            "s8_left_conj",
            GroupKind::S3,
            space,
            Arc::new(move |g, p| {
                let q = g.as_s3()?;
                let (l, x, y) = (p.real(0), p.quat(1), p.quat(2));
                pack(&sp, vec![Part::Real(l), Part::Quat(q * x), Part::Quat(q * y * q.conj())])
            }),
        )
    }

    /// `q · (ξ, x, y) = (ξ, qx, q y q̄)` on the unit sphere of `Im H x H x H`.
    pub fn s10_left_conj() -> ActionSpec {
        let space = AmbientSpace::s10();
        let sp = space.clone();
        ActionSpec::new(
            "s10_left_conj",
            GroupKind::S3,
            space,
            Arc::new(move |g, p| {
                let q = g.as_s3()?;
                let v = quat_parts(p);
                pack(&sp, vec![Part::Quat(v[0]), Part::Quat(q * v[1]), Part::Quat(q * v[2] * q.conj())])
            }),
        )
    }

    /// `q · (λ, x) = (λ, qx)` on the unit sphere of `R x H`.
    pub fn s4_left() -> ActionSpec {
        let space = AmbientSpace::s4();
        let sp = space.clone();
        ActionSpec::new(
            "s4_left",
            GroupKind::S3,
            space,
            Arc::new(move |g, p| {
                let q = g.as_s3()?;
                pack(&sp, vec![Part::Real(p.real(0)), Part::Quat(q * p.quat(1))])
            }),
        )
    }

    /// `q · (ξ, x) = (ξ, qx)` on the unit sphere of `Im H x H`.
    pub fn s6_left() -> ActionSpec {
        let space = AmbientSpace::s6();
        let sp = space.clone();
        ActionSpec::new(
            "s6_left",
            GroupKind::S3,
            space,
            Arc::new(move |g, p| {
                let q = g.as_s3()?;
                pack(&sp, vec![Part::Quat(p.quat(0)), Part::Quat(q * p.quat(1))])
            }),
        )
    }

    /// Conjugation on unit quaternions: `q · y = q y q̄`.
    pub fn s3_conj() -> ActionSpec {
        let space = AmbientSpace::s3();
        let sp = space.clone();
        ActionSpec::new(
            "s3_conj",
            GroupKind::S3,
            space,
            Arc::new(move |g, p| {
                let q = g.as_s3()?;
                pack(&sp, vec![Part::Quat(q * p.quat(0) * q.conj())])
            }),
        )
    }

    /// Right translation on unit quaternions: `q · v = v q̄`.
    pub fn s3_right() -> ActionSpec {
        let space = AmbientSpace::s3();
        let sp = space.clone();
        ActionSpec::new(
            "s3_right",
            GroupKind::S3,
            space,
            Arc::new(move |g, p| {
                let q = g.as_s3()?;
                pack(&sp, vec![Part::Quat(p.quat(0) * q.conj())])
            }),
        )
    }

    /// `(q, z) · (x, y) = (q x z̄, q y q̄)` on the unit sphere of `H x H`,
    /// with `z` in the circle subgroup.
    pub fn s7_s3xs1() -> ActionSpec {
        let space = AmbientSpace::s7();
        let sp = space.clone();
        ActionSpec::new(
            "s7_s3xs1",
            GroupKind::S3xS1,
            space,
            Arc::new(move |g, p| {
                let (q, z) = match g {
                    GroupElement::S3xS1(q, z) => (*q, *z),
                    _ => unreachable!("kind checked by act"),
                };
                let v = quat_parts(p);
                pack(&sp, vec![Part::Quat(q * v[0] * z.conj()), Part::Quat(q * v[1] * q.conj())])
            }),
        )
    }

    /// Literal variant of [`s7_s3xs1`] with `q y ȳ` in the second slot, kept
    /// behind this constructor for comparison; it is not norm-preserving and
    /// is excluded from the shipped list.
    pub fn s7_s3xs1_literal() -> ActionSpec {
        let space = AmbientSpace::s7();
        let sp = space.clone();
        ActionSpec::new(
            "s7_s3xs1_literal",
            GroupKind::S3xS1,
            space,
            Arc::new(move |g, p| {
                let (q, z) = match g {
                    GroupElement::S3xS1(q, z) => (*q, *z),
                    _ => unreachable!("kind checked by act"),
                };
                let v = quat_parts(p);
                pack(&sp, vec![Part::Quat(q * v[0] * z.conj()), Part::Quat(q * v[1] * v[1].conj())])
            }),
        )
    }

    /// `(p, q) · (ξ, x, y) = (p ξ p̄, q x p̄, q y q̄)` on the unit sphere of
    /// `Im H x H x H`.
    pub fn s10_s3xs3() -> ActionSpec {
        let space = AmbientSpace::s10();
        let sp = space.clone();
        ActionSpec::new(
            "s10_s3xs3",
            GroupKind::S3xS3,
            space,
            Arc::new(move |g, pt| {
                let (p, q) = match g {
                    GroupElement::S3xS3(p, q) => (*p, *q),
                    _ => unreachable!("kind checked by act"),
                };
                let v = quat_parts(pt);
                pack(
                    &sp,
                    vec![
                        Part::Quat(p * v[0] * p.conj()),
                        Part::Quat(q * v[1] * p.conj()),
                        Part::Quat(q * v[2] * q.conj()),
                    ],
                )
            }),
        )
    }

    /// Literal variant of [`s10_s3xs3`] with `q y ȳ` in the last slot; not
    /// norm-preserving, excluded from the shipped list.
    pub fn s10_s3xs3_literal() -> ActionSpec {
        let space = AmbientSpace::s10();
        let sp = space.clone();
        ActionSpec::new(
            "s10_s3xs3_literal",
            GroupKind::S3xS3,
            space,
            Arc::new(move |g, pt| {
                let (p, q) = match g {
                    GroupElement::S3xS3(p, q) => (*p, *q),
                    _ => unreachable!("kind checked by act"),
                };
                let v = quat_parts(pt);
                pack(
                    &sp,
                    vec![
                        Part::Quat(p * v[0] * p.conj()),
                        Part::Quat(q * v[1] * p.conj()),
                        Part::Quat(q * v[2] * v[2].conj()),
                    ],
                )
            }),
        )
    }

    /// Identity action on any space; the trivial baseline for the meters.
    pub fn identity(space: AmbientSpace) -> ActionSpec {
        ActionSpec::new("identity", GroupKind::S3, space, Arc::new(|_, p| Ok(p.clone())))
    }

    /// Every shipped action (the literal variants are deliberately absent).
    pub fn shipped() -> Vec<ActionSpec> {
        vec![
            s3_conj(),
            s3_right(),
            s4_left(),
            s6_left(),
            s7_diag_conj(),
            s8_left_conj(),
            s10_left_conj(),
            s7_s3xs1(),
            s10_s3xs3(),
        ]
    }

    /// Whether the equator zero-slot of `space` (leading real factor, or the
    /// k-slot of a leading imaginary factor) is fixed by the action; sampled
    /// check used by the suite.
    pub fn equator_slot(space: &AmbientSpace) -> Option<usize> {
        match space.factors().first() {
            Some(Factor::Real) => Some(0),
            Some(Factor::ImQuaternion) => Some(3),
            _ => None,
        }
    }
}

/// Max over sampled `(g, p)` of `|f(g·p) - g·f(p)|`; pure measurement, no
/// thresholding. An evaluation failure is reported with the offending
/// sample index.
pub fn equivariance_defect<F>(
    f: F,
    a_dom: &ActionSpec,
    a_cod: &ActionSpec,
    samples: usize,
    seed: u64,
) -> Result<f64>
where
    F: Fn(&SpherePoint) -> Result<SpherePoint> + Sync,
{
    if a_dom.group != a_cod.group {
        return Err(Error::SpaceMismatch {
            expected: format!("{:?}", a_dom.group),
            found: format!("{:?}", a_cod.group),
        });
    }
    let points = sample_unit_sphere(&a_dom.space, samples, seed);
    let mut rng = rng_for(seed ^ 0x9e37_79b9);
    let pairs: Vec<(GroupElement, SpherePoint)> = points
        .into_iter()
        .map(|p| (GroupElement::random(a_dom.group, &mut rng), p))
        .collect();

    let defect = batch::max_defect(&pairs, |(g, p)| {
        let lhs = a_dom.act(g, p).and_then(|gp| f(&gp));
        let rhs = f(p).and_then(|fp| a_cod.act(g, &fp));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => l.distance(&r),
            _ => f64::INFINITY,
        }
    });
    if !defect.is_finite() {
        // re-scan serially to attach the offending sample
        for (i, (g, p)) in pairs.iter().enumerate() {
            let lhs = a_dom.act(g, p).and_then(|gp| f(&gp));
            let rhs = f(p).and_then(|fp| a_cod.act(g, &fp));
            if lhs.is_err() || rhs.is_err() {
                return Err(Error::EvaluationFailure {
                    index: i,
                    what: format!("g = {g:?}, p = {:?}", p.coords()),
                });
            }
        }
    }
    Ok(defect)
}

/// Max over sampled pairs of `||g·p - g·p'| - |p - p'||`.
pub fn isometry_defect(a: &ActionSpec, samples: usize, seed: u64) -> Result<f64> {
    let pts = sample_unit_sphere(&a.space, 2 * samples, seed);
    let mut rng = rng_for(seed ^ 0x51_7c_c1_b7);
    let triples: Vec<(GroupElement, SpherePoint, SpherePoint)> = pts
        .chunks_exact(2)
        .map(|c| (GroupElement::random(a.group, &mut rng), c[0].clone(), c[1].clone()))
        .collect();
    let defect = batch::max_defect(&triples, |(g, p, q)| {
        match (a.act(g, p), a.act(g, q)) {
            (Ok(gp), Ok(gq)) => (gp.distance(&gq) - p.distance(q)).abs(),
            _ => f64::INFINITY,
        }
    });
    Ok(defect)
}

/// Max over sampled `(g, h, p)` of `|(gh)·p - g·(h·p)|`.
pub fn group_law_defect(a: &ActionSpec, samples: usize, seed: u64) -> Result<f64> {
    let pts = sample_unit_sphere(&a.space, samples, seed);
    let mut rng = rng_for(seed ^ 0x2545_f491);
    let triples: Vec<(GroupElement, GroupElement, SpherePoint)> = pts
        .into_iter()
        .map(|p| {
            (
                GroupElement::random(a.group, &mut rng),
                GroupElement::random(a.group, &mut rng),
                p,
            )
        })
        .collect();
    let defect = batch::max_defect(&triples, |(g, h, p)| {
        let composed = g.mul(h).and_then(|gh| a.act(&gh, p));
        let stepped = a.act(h, p).and_then(|hp| a.act(g, &hp));
        match (composed, stepped) {
            (Ok(l), Ok(r)) => l.distance(&r),
            _ => f64::INFINITY,
        }
    });
    Ok(defect)
}

/// Max over samples of `|1·p - p|`.
pub fn identity_law_defect(a: &ActionSpec, samples: usize, seed: u64) -> Result<f64> {
    let pts = sample_unit_sphere(&a.space, samples, seed);
    let e = GroupElement::identity(a.group);
    let defect = batch::max_defect(&pts, |p| match a.act(&e, p) {
        Ok(ep) => ep.distance(p),
        Err(_) => f64::INFINITY,
    });
    Ok(defect)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_actions_are_isometric_and_lawful() {
        for a in actions::shipped() {
            assert!(isometry_defect(&a, 500, 1).unwrap() <= 1e-12, "{}", a.name);
            assert!(group_law_defect(&a, 500, 2).unwrap() <= 1e-12, "{}", a.name);
            assert!(identity_law_defect(&a, 500, 3).unwrap() <= 1e-15, "{}", a.name);
        }
    }

    #[test]
    fn literal_variants_break_isometry() {
        assert!(isometry_defect(&actions::s7_s3xs1_literal(), 500, 1).unwrap() > 0.1);
        assert!(isometry_defect(&actions::s10_s3xs3_literal(), 500, 1).unwrap() > 0.1);
    }

    #[test]
    fn broken_scaling_action_is_caught() {
        let space = AmbientSpace::s3();
        let sp = space.clone();
        let a = ActionSpec::new(
            "broken_scale",
            GroupKind::S3,
            space,
            Arc::new(move |_, p| SpherePoint::from_coords(sp.clone(), p.coords().iter().map(|c| 2.0 * c).collect())),
        );
        assert!(isometry_defect(&a, 500, 1).unwrap() > 0.1);
    }

    #[test]
    fn left_conj_example_on_s8() {
        // g = i on (λ, x, y) = (0, 1, j): (0, i, i j ī) = (0, i, -j)
        let a = actions::s8_left_conj();
        let p = SpherePoint::from_parts(
            AmbientSpace::s8(),
            &[Part::Real(0.0), Part::Quat(Quaternion::ONE), Part::Quat(Quaternion::J)],
        )
        .unwrap()
        .renormalized()
        .unwrap();
        let out = a.act(&GroupElement::S3(Quaternion::I), &p).unwrap();
        assert!(out.quat(1).distance(&Quaternion::I.scale(out.quat(1).norm())) < 1e-15);
        let want = -Quaternion::J.scale(out.quat(2).norm());
        assert!(out.quat(2).distance(&want) < 1e-15);
    }

    #[test]
    fn space_mismatch_is_reported() {
        let a = actions::s7_diag_conj();
        let p = sample_unit_sphere(&AmbientSpace::s8(), 1, 1).pop().unwrap();
        assert!(matches!(
            a.act(&GroupElement::S3(Quaternion::I), &p),
            Err(Error::SpaceMismatch { .. })
        ));
    }

    #[test]
    fn equivariance_meter_baselines() {
        let a = actions::s7_diag_conj();
        // identity map against itself
        let d = equivariance_defect(|p| Ok(p.clone()), &a, &a, 500, 9).unwrap();
        assert_eq!(d, 0.0);
        // constant map to (j, 0) is far from equivariant: at g = i the
        // conjugated value is (-j, 0), distance 2 from (j, 0)
        let space = AmbientSpace::s7();
        let constant = SpherePoint::from_parts(space, &[Part::Quat(Quaternion::J), Part::Quat(Quaternion::ZERO)]).unwrap();
        let d = equivariance_defect(move |_| Ok(constant.clone()), &a, &a, 500, 9).unwrap();
        assert!(d > 0.1, "constant-map defect {d}");
    }

    #[test]
    fn equator_slots_are_preserved() {
        for (a, space) in [
            (actions::s8_left_conj(), AmbientSpace::s8()),
            (actions::s10_left_conj(), AmbientSpace::s10()),
        ] {
            let slot = actions::equator_slot(&space).unwrap();
            for p in crate::geometry::sample_equator(&space, 100, 4) {
                let mut rng = rng_for(8);
                let g = GroupElement::random(a.group, &mut rng);
                let out = a.act(&g, &p).unwrap();
                assert!(out.coords()[slot].abs() <= 1e-15);
            }
        }
    }
}
