//! Chart-local total-space points and the two commuting actions
//! `(q, r)·(x, g) = (q·x, r g q⁻¹)`.
//!
//! Points are chart-local by design; equality across charts is decided by
//! applying the gluing `(x, g) ↦ (x, g·φ(x))` and comparing within
//! tolerance, which matches the glued-union definition of the total space
//! without constructing a global embedding.

use crate::batch;
use crate::error::{Error, Result};
use crate::geometry::{GroupElement, SpherePoint};
use crate::seed::subseed;
use crate::star::family::StarFamily;

#[derive(Debug, Clone)]
pub struct TotalSpacePoint {
    pub chart: usize,
    pub base: SpherePoint,
    pub fiber: GroupElement,
}

impl TotalSpacePoint {
    pub fn new(chart: usize, base: SpherePoint, fiber: GroupElement) -> Self {
        Self { chart, base, fiber }
    }

    /// The canonical section `x ↦ (x, 1)`.
    pub fn section(kind: crate::geometry::GroupKind, chart: usize, base: SpherePoint) -> Self {
        Self { chart, base, fiber: GroupElement::identity(kind) }
    }

    pub fn distance(&self, other: &Self) -> f64 {
        if self.chart != other.chart {
            return f64::INFINITY;
        }
        (self.base.distance(&other.base).powi(2) + self.fiber.distance(&other.fiber).powi(2)).sqrt()
    }
}

/// `(q, r)·(x, g) = (q·x, r g q⁻¹)` in the point's chart.
pub fn star_total_action(
    family: &StarFamily,
    q: &GroupElement,
    r: &GroupElement,
    p: &TotalSpacePoint,
) -> Result<TotalSpacePoint> {
    let base = family.cover.action.act(q, &p.base)?;
    let fiber = r.mul(&p.fiber)?.mul(&q.inverse())?;
    Ok(TotalSpacePoint::new(p.chart, base, fiber))
}

/// Gluing to the other chart: `(x, g) ↦ (x, g·φ_ij(x))`, defined over the
/// overlap.
pub fn cross_chart(family: &StarFamily, p: &TotalSpacePoint) -> Result<TotalSpacePoint> {
    if !family.cover.in_overlap(&p.base) {
        return Err(Error::OutOfChart { chart: 1 - p.chart });
    }
    let phi = family.transition(p.chart, 1 - p.chart, &p.base)?;
    Ok(TotalSpacePoint::new(1 - p.chart, p.base.clone(), p.fiber.mul(&phi)?))
}

/// Projection to the quotient-side base: `π'(x, g) = g·x`, chart-tagged.
pub fn quotient_projection(family: &StarFamily, p: &TotalSpacePoint) -> Result<(usize, SpherePoint)> {
    Ok((p.chart, family.cover.action.act(&p.fiber, &p.base)?))
}

fn sampled_points(
    family: &StarFamily,
    samples: usize,
    seed: u64,
) -> Result<Vec<(TotalSpacePoint, GroupElement, GroupElement)>> {
    let pts = family.cover.sample_overlap(samples, subseed(seed, "total.base"))?;
    let kind = family.cover.action.group;
    let gs = crate::geometry::sample_group(kind, 3 * samples, subseed(seed, "total.grp"));
    Ok(pts
        .into_iter()
        .enumerate()
        .map(|(k, base)| {
            (
                TotalSpacePoint::new(0, base, gs[3 * k].clone()),
                gs[3 * k + 1].clone(),
                gs[3 * k + 2].clone(),
            )
        })
        .collect())
}

/// Crossing charts commutes with the action: glue-then-act equals
/// act-then-glue, a consequence of transition equivariance.
pub fn glue_action_commutation_defect(family: &StarFamily, samples: usize, seed: u64) -> Result<f64> {
    let items = sampled_points(family, samples, seed)?;
    Ok(batch::max_defect(&items, |(p, q, r)| {
        let d = (|| -> Result<f64> {
            let glued_then_acted = star_total_action(family, q, r, &cross_chart(family, p)?)?;
            let acted_then_glued = cross_chart(family, &star_total_action(family, q, r, p)?)?;
            Ok(glued_then_acted.distance(&acted_then_glued))
        })();
        d.unwrap_or(f64::INFINITY)
    }))
}

/// Commutator of the two one-sided actions `(q, 1)` and `(1, r)`.
pub fn star_bullet_commutation_defect(family: &StarFamily, samples: usize, seed: u64) -> Result<f64> {
    let e = GroupElement::identity(family.cover.action.group);
    let items = sampled_points(family, samples, seed)?;
    Ok(batch::max_defect(&items, |(p, q, r)| {
        let d = (|| -> Result<f64> {
            let qr = star_total_action(family, q, &e, &star_total_action(family, &e, r, p)?)?;
            let rq = star_total_action(family, &e, r, &star_total_action(family, q, &e, p)?)?;
            Ok(qr.distance(&rq))
        })();
        d.unwrap_or(f64::INFINITY)
    }))
}

/// `π((q, r)·p) = q·π(p)` where `π` is the base projection.
pub fn base_projection_defect(family: &StarFamily, samples: usize, seed: u64) -> Result<f64> {
    let items = sampled_points(family, samples, seed)?;
    Ok(batch::max_defect(&items, |(p, q, r)| {
        let d = (|| -> Result<f64> {
            let acted = star_total_action(family, q, r, p)?;
            let want = family.cover.action.act(q, &p.base)?;
            Ok(acted.base.distance(&want))
        })();
        d.unwrap_or(f64::INFINITY)
    }))
}

/// `π'(p·r⁻¹) = r·π'(p)`: the quotient projection intertwines the principal
/// action with the group action downstairs.
pub fn quotient_projection_defect(family: &StarFamily, samples: usize, seed: u64) -> Result<f64> {
    let e = GroupElement::identity(family.cover.action.group);
    let items = sampled_points(family, samples, seed)?;
    Ok(batch::max_defect(&items, |(p, _, r)| {
        let d = (|| -> Result<f64> {
            let moved = star_total_action(family, &e, r, p)?;
            let (_, lhs) = quotient_projection(family, &moved)?;
            let (_, pr) = quotient_projection(family, p)?;
            let rhs = family.cover.action.act(r, &pr)?;
            Ok(lhs.distance(&rhs))
        })();
        d.unwrap_or(f64::INFINITY)
    }))
}

/// The canonical section is a section for both projections:
/// `π(x, 1) = x` and `π'(x, 1) = x`.
pub fn section_property_defect(family: &StarFamily, samples: usize, seed: u64) -> Result<f64> {
    let pts = family.cover.sample_overlap(samples, subseed(seed, "total.section"))?;
    Ok(batch::max_defect(&pts, |x| {
        let d = (|| -> Result<f64> {
            let s = TotalSpacePoint::section(family.cover.action.group, 0, x.clone());
            let base = s.base.distance(x);
            let (_, q) = quotient_projection(family, &s)?;
            Ok(base.max(q.distance(x)))
        })();
        d.unwrap_or(f64::INFINITY)
    }))
}
