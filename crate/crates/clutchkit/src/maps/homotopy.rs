//! Normalized-linear homotopies between sphere maps.
//!
//! `H(t, p) = normalize((1-t)·f(p) + t·g(p))`. When both endpoints are
//! equivariant for the same linear isometric actions, so is every stage:
//! the action commutes with convex combinations and with normalization.
//! The only thing left to check is non-degeneracy of the un-normalized
//! interpolant, and the suite records its minimum over a grid instead of
//! assuming it.

use std::sync::Arc;

use crate::batch;
use crate::error::{Error, Result};
use crate::geometry::{sample_unit_sphere, AmbientSpace, SpherePoint};
use crate::tol;

type MapEval = Arc<dyn Fn(&SpherePoint) -> Result<SpherePoint> + Send + Sync>;

#[derive(Clone)]
pub struct NormalizedLinearHomotopy {
    pub name: &'static str,
    pub domain: AmbientSpace,
    start: MapEval,
    end: MapEval,
    /// Interpolant norms below this abort with `DegenerateHomotopy`.
    pub floor: f64,
}

impl NormalizedLinearHomotopy {
    pub fn new(name: &'static str, domain: AmbientSpace, start: MapEval, end: MapEval) -> Self {
        Self { name, domain, start, end, floor: tol::HOMOTOPY_FLOOR }
    }

    fn interpolant(&self, t: f64, p: &SpherePoint) -> Result<SpherePoint> {
        debug_assert!((0.0..=1.0).contains(&t));
        let a = (self.start)(p)?;
        let b = (self.end)(p)?;
        a.scale(1.0 - t).add(&b.scale(t))
    }

    /// Norm of the un-normalized interpolant.
    pub fn interp_norm(&self, t: f64, p: &SpherePoint) -> Result<f64> {
        Ok(self.interpolant(t, p)?.norm())
    }

    /// Stage `t` of the homotopy; unit output or `DegenerateHomotopy`.
    pub fn eval(&self, t: f64, p: &SpherePoint) -> Result<SpherePoint> {
        let raw = self.interpolant(t, p)?;
        let n = raw.norm();
        if n < self.floor {
            return Err(Error::DegenerateHomotopy { norm: n, floor: self.floor });
        }
        raw.renormalized()
    }

    /// Max distance of stage 0 from the start map and stage 1 from the end
    /// map over samples.
    pub fn endpoint_defect(&self, samples: usize, seed: u64) -> f64 {
        let pts = sample_unit_sphere(&self.domain, samples, seed);
        batch::max_defect(&pts, |p| {
            let d0 = match (self.eval(0.0, p), (self.start)(p)) {
                (Ok(h), Ok(f)) => h.distance(&f),
                _ => f64::INFINITY,
            };
            let d1 = match (self.eval(1.0, p), (self.end)(p)) {
                (Ok(h), Ok(g)) => h.distance(&g),
                _ => f64::INFINITY,
            };
            d0.max(d1)
        })
    }

    /// Minimum un-normalized interpolant norm over a `grid`-point t-grid
    /// times `samples` points. Endpoint values per sample are computed once.
    pub fn min_interp_norm(&self, grid: usize, samples: usize, seed: u64) -> f64 {
        let pts = sample_unit_sphere(&self.domain, samples, seed);
        batch::min_value(&pts, |p| {
            let (a, b) = match ((self.start)(p), (self.end)(p)) {
                (Ok(a), Ok(b)) => (a, b),
                _ => return f64::NEG_INFINITY,
            };
            let mut min = f64::INFINITY;
            for k in 0..grid {
                let t = k as f64 / (grid - 1) as f64;
                let norm = match a.scale(1.0 - t).add(&b.scale(t)) {
                    Ok(v) => v.norm(),
                    Err(_) => f64::NEG_INFINITY,
                };
                min = min.min(norm);
            }
            min
        })
    }
}

/// Homotopy from the globally-normalized eta to its slotwise-normalized
/// form, on the unit sphere of `R x H x H`.
pub fn eta_homotopy() -> NormalizedLinearHomotopy {
    let maps = super::sphere::catalogue();
    let start = maps.iter().find(|m| m.name == "eta").unwrap().clone();
    let end = maps.iter().find(|m| m.name == "eta8").unwrap().clone();
    NormalizedLinearHomotopy::new(
        "eta_homotopy",
        AmbientSpace::s8(),
        Arc::new(move |p| start.eval(p)),
        Arc::new(move |p| end.eval(p)),
    )
}

/// Homotopy from the exponential-form b10 to its rescaled composite form,
/// on the unit sphere of `Im H x H x H`.
pub fn b10_homotopy() -> NormalizedLinearHomotopy {
    let maps = super::sphere::catalogue();
    let start = maps.iter().find(|m| m.name == "b10").unwrap().clone();
    let end = maps.iter().find(|m| m.name == "b10_tilde").unwrap().clone();
    NormalizedLinearHomotopy::new(
        "b10_homotopy",
        AmbientSpace::s10(),
        Arc::new(move |p| start.eval(p)),
        Arc::new(move |p| end.eval(p)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{actions, equivariance_defect};

    #[test]
    fn endpoints_reproduce() {
        assert!(eta_homotopy().endpoint_defect(500, 1) <= 1e-12);
        assert!(b10_homotopy().endpoint_defect(500, 1) <= 1e-12);
    }

    #[test]
    fn interpolant_stays_far_from_zero() {
        // recorded on a coarse grid here; the acceptance suite runs the full one
        assert!(eta_homotopy().min_interp_norm(21, 1000, 2) >= 0.5);
        assert!(b10_homotopy().min_interp_norm(21, 1000, 2) >= 0.5);
    }

    #[test]
    fn midpoint_is_equivariant() {
        let h = eta_homotopy();
        let d = equivariance_defect(
            |p| h.eval(0.5, p),
            &actions::s8_left_conj(),
            &actions::s7_diag_conj(),
            1000,
            3,
        )
        .unwrap();
        assert!(d <= 1e-9, "defect {d}");
    }

    #[test]
    fn antipodal_endpoints_degenerate() {
        // a homotopy between a map and its negative must trip the floor
        let maps = super::super::sphere::catalogue();
        let f = maps.iter().find(|m| m.name == "eta8").unwrap().clone();
        let g = f.clone();
        let h = NormalizedLinearHomotopy::new(
            "degenerate",
            AmbientSpace::s8(),
            Arc::new(move |p| f.eval(p)),
            Arc::new(move |p| g.eval(p).map(|q| q.scale(-1.0))),
        );
        let p = sample_unit_sphere(&AmbientSpace::s8(), 1, 4).pop().unwrap();
        assert!(matches!(
            h.eval(0.5, &p),
            Err(Error::DegenerateHomotopy { .. })
        ));
    }
}
