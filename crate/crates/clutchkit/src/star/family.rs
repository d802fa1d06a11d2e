//! Two-chart equivariant covers and transition families.
//!
//! A family stores one transition `φ` for the ordered chart pair `(0, 1)`;
//! the inverse pair and the diagonal are defined by convention, so the
//! cocycle law carries no extra content on two charts and validation
//! measures what remains: conjugation equivariance `φ(g·x) = g φ(x) g⁻¹`,
//! chart invariance, and the computed `φ·φ⁻¹ = 1` round-trip.

use std::sync::Arc;

use serde::Serialize;

use crate::batch;
use crate::error::{Error, Result};
use crate::geometry::{ActionSpec, AmbientSpace, GroupElement, SpherePoint};
use crate::seed::subseed;

type ChartPredicate = Arc<dyn Fn(&SpherePoint) -> bool + Send + Sync>;
type OverlapSampler = Arc<dyn Fn(usize, u64) -> Result<Vec<SpherePoint>> + Send + Sync>;
pub(crate) type Transition = Arc<dyn Fn(&SpherePoint) -> Result<GroupElement> + Send + Sync>;

/// A two-chart cover of a sphere, each chart invariant under the action.
#[derive(Clone)]
pub struct EquivariantCover {
    pub action: ActionSpec,
    charts: [ChartPredicate; 2],
    overlap_sampler: OverlapSampler,
    pub margin: f64,
}

impl EquivariantCover {
    pub fn new(
        action: ActionSpec,
        charts: [ChartPredicate; 2],
        overlap_sampler: OverlapSampler,
        margin: f64,
    ) -> Self {
        Self { action, charts, overlap_sampler, margin }
    }

    pub fn space(&self) -> &AmbientSpace {
        &self.action.space
    }

    pub fn chart_contains(&self, chart: usize, p: &SpherePoint) -> bool {
        (self.charts[chart])(p)
    }

    pub fn in_overlap(&self, p: &SpherePoint) -> bool {
        (self.charts[0])(p) && (self.charts[1])(p)
    }

    /// Seeded points of the chart overlap.
    pub fn sample_overlap(&self, count: usize, seed: u64) -> Result<Vec<SpherePoint>> {
        (self.overlap_sampler)(count, seed)
    }
}

/// Validation measurements of a family.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Validation {
    pub cocycle_defect: f64,
    pub equivariance_defect: f64,
    pub chart_invariance_violations: usize,
    pub samples: usize,
    pub seed: u64,
}

/// A transition family over a two-chart equivariant cover.
#[derive(Clone)]
pub struct StarFamily {
    pub name: String,
    pub cover: EquivariantCover,
    transition01: Transition,
    pub validation: Option<Validation>,
}

impl StarFamily {
    pub fn new(name: impl Into<String>, cover: EquivariantCover, transition01: Transition) -> Self {
        Self { name: name.into(), cover, transition01, validation: None }
    }

    pub(crate) fn transition_eval(&self) -> Transition {
        self.transition01.clone()
    }

    /// `φ_ij`: identity on the diagonal, the stored map for `(0, 1)`, its
    /// pointwise inverse for `(1, 0)`.
    pub fn transition(&self, i: usize, j: usize, p: &SpherePoint) -> Result<GroupElement> {
        match (i, j) {
            (0, 0) | (1, 1) => Ok(GroupElement::identity(self.cover.action.group)),
            (0, 1) => (self.transition01)(p),
            (1, 0) => Ok((self.transition01)(p)?.inverse()),
            _ => Err(Error::OutOfChart { chart: i.max(j) }),
        }
    }

    /// Hat of the stored transition: `x ↦ φ(x)·x`, a self-map of the overlap.
    pub fn hat(&self, p: &SpherePoint) -> Result<SpherePoint> {
        let g = (self.transition01)(p)?;
        self.cover.action.act(&g, p)
    }

    /// Hat of the inverse transition; the two compose to the identity.
    pub fn hat_inv(&self, p: &SpherePoint) -> Result<SpherePoint> {
        let g = (self.transition01)(p)?.inverse();
        self.cover.action.act(&g, p)
    }

    /// Measure the family laws over `samples` overlap points and store the
    /// result.
    pub fn validate(&mut self, samples: usize, seed: u64) -> Result<Validation> {
        let pts = self.cover.sample_overlap(samples, subseed(seed, "family.overlap"))?;
        let gs = crate::geometry::sample_group(
            self.cover.action.group,
            samples,
            subseed(seed, "family.group"),
        );
        let pairs: Vec<(SpherePoint, GroupElement)> = pts.into_iter().zip(gs).collect();

        let cocycle_defect = batch::max_defect(&pairs, |(p, _)| {
            let round = (|| -> Result<f64> {
                let fwd = self.transition(0, 1, p)?;
                let back = self.transition(1, 0, p)?;
                Ok(fwd.mul(&back)?.distance(&GroupElement::identity(self.cover.action.group)))
            })();
            round.unwrap_or(f64::INFINITY)
        });

        let equivariance_defect = batch::max_defect(&pairs, |(p, g)| {
            let d = (|| -> Result<f64> {
                let gp = self.cover.action.act(g, p)?;
                let lhs = (self.transition01)(&gp)?;
                let rhs = g.mul(&(self.transition01)(p)?)?.mul(&g.inverse())?;
                Ok(lhs.distance(&rhs))
            })();
            d.unwrap_or(f64::INFINITY)
        });

        let mut chart_invariance_violations = 0usize;
        for (p, g) in &pairs {
            let gp = self.cover.action.act(g, p)?;
            for chart in 0..2 {
                if self.cover.chart_contains(chart, p) && !self.cover.chart_contains(chart, &gp) {
                    chart_invariance_violations += 1;
                }
            }
        }

        let v = Validation {
            cocycle_defect,
            equivariance_defect,
            chart_invariance_violations,
            samples,
            seed,
        };
        self.validation = Some(v);
        Ok(v)
    }

    pub fn summary(&self) -> serde_json::Value {
        serde_json::json!({
            "name": self.name,
            "base": self.cover.space().label(),
            "charts": 2,
            "margin": self.cover.margin,
            "validation": self.validation.map(|v| serde_json::json!({
                "cocycle_defect": v.cocycle_defect,
                "equivariance_defect": v.equivariance_defect,
                "chart_invariance_violations": v.chart_invariance_violations,
                "samples": v.samples,
            })),
        })
    }
}

/// Max over overlap samples and random `g` of `|hat(g·p) - g·hat(p)|`.
pub fn hat_equivariance_defect(family: &StarFamily, samples: usize, seed: u64) -> Result<f64> {
    let pts = family.cover.sample_overlap(samples, subseed(seed, "hat.overlap"))?;
    let gs = crate::geometry::sample_group(family.cover.action.group, samples, subseed(seed, "hat.group"));
    let pairs: Vec<(SpherePoint, GroupElement)> = pts.into_iter().zip(gs).collect();
    Ok(batch::max_defect(&pairs, |(p, g)| {
        let d = (|| -> Result<f64> {
            let gp = family.cover.action.act(g, p)?;
            let lhs = family.hat(&gp)?;
            let rhs = family.cover.action.act(g, &family.hat(p)?)?;
            Ok(lhs.distance(&rhs))
        })();
        d.unwrap_or(f64::INFINITY)
    }))
}

/// Max over overlap samples of `|hat_inv(hat(p)) - p|`; the two-chart
/// content of the hat semigroup law.
pub fn hat_inverse_roundtrip_defect(family: &StarFamily, samples: usize, seed: u64) -> Result<f64> {
    let pts = family.cover.sample_overlap(samples, subseed(seed, "hat.roundtrip"))?;
    Ok(batch::max_defect(&pts, |p| {
        match family.hat(p).and_then(|h| family.hat_inv(&h)) {
            Ok(back) => back.distance(p),
            Err(_) => f64::INFINITY,
        }
    }))
}

/// Product law for hats of two equivariant maps into the group:
/// `(αβ)ˆ = β̂ ∘ α̂` pointwise over the supplied points, where `(αβ)` is the
/// pointwise product.
pub fn hat_product_defect(
    action: &ActionSpec,
    alpha: &(dyn Fn(&SpherePoint) -> Result<GroupElement> + Sync),
    beta: &(dyn Fn(&SpherePoint) -> Result<GroupElement> + Sync),
    points: &[SpherePoint],
) -> f64 {
    batch::max_defect(points, |p| {
        let d = (|| -> Result<f64> {
            let product = alpha(p)?.mul(&beta(p)?)?;
            let lhs = action.act(&product, p)?;
            let alpha_hat = action.act(&alpha(p)?, p)?;
            let rhs = action.act(&beta(&alpha_hat)?, &alpha_hat)?;
            Ok(lhs.distance(&rhs))
        })();
        d.unwrap_or(f64::INFINITY)
    })
}
