//! Pullback of a transition family along an equivariant map.
//!
//! For `f : N → M` equivariant, `{φ ∘ f}` over the preimage cover is again
//! a valid family: equivariance composes. Equivariance of `f` is measured
//! before anything is built and rejected above tolerance, and the pullback
//! re-validates independently rather than trusting the composition
//! argument.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geometry::{equivariance_defect, sample_unit_sphere, ActionSpec, SpherePoint};
use crate::maps::NamedMap;
use crate::seed::subseed;
use crate::star::family::{EquivariantCover, StarFamily};

/// Rejection attempts per requested overlap point before giving up.
const REJECTION_FACTOR: usize = 5000;

/// Build the pulled-back family of `base` along `f`, with `dom_action` the
/// action on the domain of `f`.
pub fn pullback_family(
    base: &StarFamily,
    f: &NamedMap,
    dom_action: &ActionSpec,
    precheck_samples: usize,
    seed: u64,
    tol: f64,
) -> Result<StarFamily> {
    if f.codomain != *base.cover.space() {
        return Err(Error::SpaceMismatch {
            expected: base.cover.space().label(),
            found: f.codomain.label(),
        });
    }
    if f.domain != dom_action.space {
        return Err(Error::SpaceMismatch {
            expected: f.domain.label(),
            found: dom_action.space.label(),
        });
    }
    let defect = equivariance_defect(
        f.evaluator(),
        dom_action,
        &base.cover.action,
        precheck_samples,
        subseed(seed, "pullback.precheck"),
    )?;
    if defect > tol {
        return Err(Error::EquivarianceViolation { defect, tol });
    }

    let fwd = f.clone();
    let base_cover = base.cover.clone();
    let charts: [Arc<dyn Fn(&SpherePoint) -> bool + Send + Sync>; 2] = [
        {
            let fwd = fwd.clone();
            let cover = base_cover.clone();
            Arc::new(move |p| fwd.eval(p).map(|q| cover.chart_contains(0, &q)).unwrap_or(false))
        },
        {
            let fwd = fwd.clone();
            let cover = base_cover.clone();
            Arc::new(move |p| fwd.eval(p).map(|q| cover.chart_contains(1, &q)).unwrap_or(false))
        },
    ];

    let sampler = {
        let fwd = fwd.clone();
        let cover = base_cover.clone();
        let domain = f.domain.clone();
        Arc::new(move |count: usize, sample_seed: u64| -> Result<Vec<SpherePoint>> {
            let mut out = Vec::with_capacity(count);
            let mut attempts = 0usize;
            let mut stream_seed = sample_seed;
            while out.len() < count && attempts < REJECTION_FACTOR * count {
                // draw candidate batches from the sequential stream
                let batch = sample_unit_sphere(&domain, 1024, stream_seed);
                stream_seed = stream_seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
                for p in batch {
                    attempts += 1;
                    if let Ok(image) = fwd.eval(&p) {
                        if cover.in_overlap(&image) {
                            out.push(p);
                            if out.len() == count {
                                break;
                            }
                        }
                    }
                }
            }
            if out.len() < count {
                return Err(Error::Unsampled {
                    region: format!("{} overlap preimage", fwd.name),
                    requested: count,
                    accepted: out.len(),
                    attempts,
                });
            }
            Ok(out)
        })
    };

    let transition = {
        let fwd = fwd.clone();
        let base_transition = base.transition_eval();
        Arc::new(move |p: &SpherePoint| base_transition(&fwd.eval(p)?))
    };

    let cover = EquivariantCover::new(dom_action.clone(), charts, sampler, base.cover.margin);
    let mut family = StarFamily::new(format!("{}*{}", f.name, base.name), cover, transition);
    family.validate(precheck_samples, subseed(seed, "pullback.validate"))?;
    Ok(family)
}

/// Chart-level compatibility of the induced map: over pulled-back overlap
/// samples, `f(hat_{φ∘f}(x)) = hat_φ(f(x))`.
pub fn pullback_compat_defect(
    pullback: &StarFamily,
    base: &StarFamily,
    f: &NamedMap,
    samples: usize,
    seed: u64,
) -> Result<f64> {
    let pts = pullback.cover.sample_overlap(samples, subseed(seed, "pullback.compat"))?;
    Ok(crate::batch::max_defect(&pts, |p| {
        let d = (|| -> Result<f64> {
            let lhs = f.eval(&pullback.hat(p)?)?;
            let rhs = base.hat(&f.eval(p)?)?;
            Ok(lhs.distance(&rhs))
        })();
        d.unwrap_or(f64::INFINITY)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::actions;
    use crate::maps::catalogue;
    use crate::star::gm::gm_family;

    fn eta8_map() -> NamedMap {
        catalogue().into_iter().find(|m| m.name == "eta8").unwrap()
    }

    #[test]
    fn eta8_pullback_validates() {
        let base = gm_family(1e-2).unwrap();
        let fam = pullback_family(&base, &eta8_map(), &actions::s8_left_conj(), 500, 1, 1e-9).unwrap();
        let v = fam.validation.unwrap();
        assert!(v.cocycle_defect <= 1e-12);
        assert!(v.equivariance_defect <= 1e-9, "defect {}", v.equivariance_defect);
        assert_eq!(v.chart_invariance_violations, 0);
    }

    #[test]
    fn compat_square_commutes() {
        let base = gm_family(1e-2).unwrap();
        let f = eta8_map();
        let fam = pullback_family(&base, &f, &actions::s8_left_conj(), 300, 2, 1e-9).unwrap();
        let d = pullback_compat_defect(&fam, &base, &f, 500, 3).unwrap();
        assert!(d <= 1e-9, "defect {d}");
    }

    #[test]
    fn constant_map_is_rejected() {
        let base = gm_family(1e-2).unwrap();
        // a constant map into a generic point cannot be equivariant for the
        // conjugation-type action
        let space = crate::geometry::AmbientSpace::s8();
        let target = crate::geometry::sample_unit_sphere(base.cover.space(), 1, 5).pop().unwrap();
        let m = NamedMap::new(
            "constant",
            space,
            base.cover.space().clone(),
            None,
            std::sync::Arc::new(move |_| Ok(target.clone())),
        );
        let r = pullback_family(&base, &m, &actions::s8_left_conj(), 300, 6, 1e-9);
        assert!(matches!(r, Err(Error::EquivarianceViolation { .. })));
    }
}
