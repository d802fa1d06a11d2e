//! The Gromoll-Meyer transition family over the 7-sphere and its attendant
//! identities: explicit local sections of the column projection from the
//! quaternionic-unitary group, the fiber-ratio reconstruction of the
//! transition, the chart-level involution, the disc-chart identity relating
//! the hat of the transition to the composite shear `g_a⁻¹ f_a`, and the
//! resolution of the commuting projection square.

use rand::Rng;

use crate::algebra::{Quaternion, Sp2Matrix};
use crate::batch;
use crate::error::{Error, Result};
use crate::geometry::{actions, AmbientSpace, GroupElement, Part, SeamSampler, SpherePoint};
use crate::maps::{f_a, g_a, gm_transition, hopf};
use crate::seed::subseed;
use crate::star::family::{EquivariantCover, StarFamily};
use std::sync::Arc;

fn s7_point(x: Quaternion, y: Quaternion) -> SpherePoint {
    SpherePoint::from_parts(AmbientSpace::s7(), &[Part::Quat(x), Part::Quat(y)])
        .expect("two quaternion parts")
}

/// The family over the unit sphere of `H x H` with the diagonal conjugation
/// action: charts `|x| >= |y| - margin` and `|y| >= |x| - margin`, seam
/// transition `φ(x, y) = x ȳ / |x y|`. Validated on construction.
pub fn gm_family(margin: f64) -> Result<StarFamily> {
    let action = actions::s7_diag_conj();

    let chart0 = Arc::new(move |p: &SpherePoint| p.quat(0).norm() >= p.quat(1).norm() - margin);
    let chart1 = Arc::new(move |p: &SpherePoint| p.quat(1).norm() >= p.quat(0).norm() - margin);

    let sampler = Arc::new(move |count: usize, seed: u64| -> Result<Vec<SpherePoint>> {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        use rand::SeedableRng;
        let seam = SeamSampler { margin };
        Ok((0..count)
            .map(|_| {
                let (a, b) = seam.radii(&mut rng);
                let x = Quaternion::random_unit(&mut rng).scale(a);
                let y = Quaternion::random_unit(&mut rng).scale(b);
                s7_point(x, y)
            })
            .collect())
    });

    let cover = EquivariantCover::new(action, [chart0, chart1], sampler, margin);
    let mut family = StarFamily::new(
        "gm",
        cover,
        Arc::new(|p: &SpherePoint| Ok(GroupElement::S3(gm_transition(p.quat(0), p.quat(1))?))),
    );
    family.validate(1000, 0xC1)?;
    Ok(family)
}

/// Local section of the first-column projection over the chart where the
/// named block is nonzero. Chart 0 (needs `x ≠ 0`) completes the column
/// `(x, y)` with `(-x ȳ / |x|, |x|)`; chart 1 (needs `y ≠ 0`) mirrors it
/// with `(|y|, -y x̄ / |y|)`. Outputs are exact members up to rounding.
pub fn sp2_section(chart: usize, p: &SpherePoint) -> Result<Sp2Matrix> {
    p.in_space(&AmbientSpace::s7())?;
    let (x, y) = (p.quat(0), p.quat(1));
    match chart {
        0 => {
            let n = x.norm();
            if n == 0.0 {
                return Err(Error::OutOfChart { chart: 0 });
            }
            let c = -(x * y.conj()).scale(1.0 / n);
            let d = Quaternion::from_real(n);
            Ok(Sp2Matrix::from_columns((x, y), (c, d)))
        }
        1 => {
            let n = y.norm();
            if n == 0.0 {
                return Err(Error::OutOfChart { chart: 1 });
            }
            let c = Quaternion::from_real(n);
            let d = -(y * x.conj()).scale(1.0 / n);
            Ok(Sp2Matrix::from_columns((x, y), (c, d)))
        }
        _ => Err(Error::OutOfChart { chart }),
    }
}

/// Generic member over a random base point, fiber-randomized through the
/// principal right action `diag(1, q̄)`.
pub fn sp2_member<R: Rng>(rng: &mut R) -> Sp2Matrix {
    loop {
        let x = Quaternion::random_unit(rng).scale(rng.gen_range(0.05f64..0.95).sqrt());
        let r = (1.0 - x.norm_sq()).sqrt();
        let y = Quaternion::random_unit(rng).scale(r);
        let p = s7_point(x, y);
        if let Ok(m) = sp2_section(0, &p) {
            let q = Quaternion::random_unit(rng);
            return m.mul_diag_right(Quaternion::ONE, q.conj());
        }
    }
}

/// Fiber ratio of the two sections over an overlap point, computed
/// independently from each second-column entry. The two values must agree
/// (the ratio is a function of the base alone); both are returned.
pub fn section_ratio(p: &SpherePoint) -> Result<(Quaternion, Quaternion)> {
    let s0 = sp2_section(0, p)?;
    let s1 = sp2_section(1, p)?;
    let via_c = s1.c.inverse()? * s0.c;
    let via_d = s1.d.inverse()? * s0.d;
    Ok((via_c, via_d))
}

/// How the section ratio reproduces the seam transition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioConvention {
    pub sign: f64,
    pub inverted: bool,
    pub defect: f64,
}

/// Resolve, once, which of `±φ, ±φ⁻¹` the section ratio equals; exactly one
/// candidate may match within `tol`.
pub fn sp2_section_ratio_convention(samples: usize, seed: u64, tol: f64) -> Result<RatioConvention> {
    let family = gm_family(1e-2)?;
    let pts = family.cover.sample_overlap(samples, subseed(seed, "ratio"))?;
    let candidates = [(1.0, false), (-1.0, false), (1.0, true), (-1.0, true)];
    let mut defects = [0.0f64; 4];
    for (k, (sign, inverted)) in candidates.iter().enumerate() {
        defects[k] = batch::max_defect(&pts, |p| {
            let d = (|| -> Result<f64> {
                let (via_c, via_d) = section_ratio(p)?;
                let phi = gm_transition(p.quat(0), p.quat(1))?;
                let cand = if *inverted { phi.conj() } else { phi }.scale(*sign);
                Ok(via_c.distance(&cand).max(via_d.distance(&cand)))
            })();
            d.unwrap_or(f64::INFINITY)
        });
    }
    let winners: Vec<usize> = (0..4).filter(|&k| defects[k] <= tol).collect();
    if winners.len() != 1 {
        return Err(Error::DiagramUnresolved);
    }
    let k = winners[0];
    Ok(RatioConvention { sign: candidates[k].0, inverted: candidates[k].1, defect: defects[k] })
}

/// Chart-level involution `F(x, y, g) = (g·(x, y), g⁻¹)` and its
/// bi-equivariance `F(q (x,y,g) r⁻¹) = r F(x,y,g) q⁻¹`; returns
/// `(involution_defect, biequivariance_defect)`.
pub fn f_involution_defects(samples: usize, seed: u64) -> Result<(f64, f64)> {
    let action = actions::s7_diag_conj();
    let pts = crate::geometry::sample_unit_sphere(&action.space, samples, subseed(seed, "invol.pts"));
    let qs = crate::geometry::sample_unit_quaternions(3 * samples, subseed(seed, "invol.grp"));
    let items: Vec<(SpherePoint, Quaternion, Quaternion, Quaternion)> = pts
        .into_iter()
        .enumerate()
        .map(|(k, p)| (p, qs[3 * k], qs[3 * k + 1], qs[3 * k + 2]))
        .collect();

    let apply_f = |p: &SpherePoint, g: &Quaternion| -> Result<(SpherePoint, Quaternion)> {
        let moved = action.act(&GroupElement::S3(*g), p)?;
        Ok((moved, g.conj()))
    };

    let involution = batch::max_defect(&items, |(p, g, _, _)| {
        let d = (|| -> Result<f64> {
            let (p1, g1) = apply_f(p, g)?;
            let (p2, g2) = apply_f(&p1, &g1)?;
            Ok((p2.distance(p).powi(2) + g2.distance(g).powi(2)).sqrt())
        })();
        d.unwrap_or(f64::INFINITY)
    });

    let biequivariance = batch::max_defect(&items, |(p, g, q, r)| {
        let d = (|| -> Result<f64> {
            // combined action on a fiber chart: q (x,y,g) r⁻¹ = (q·(x,y), r g q̄)
            let moved = action.act(&GroupElement::S3(*q), p)?;
            let fiber = *r * *g * q.conj();
            let (lp, lg) = apply_f(&moved, &fiber)?;
            let (fp, fg) = apply_f(p, g)?;
            let rp = action.act(&GroupElement::S3(*r), &fp)?;
            let rg = *q * fg * r.conj();
            Ok((lp.distance(&rp).powi(2) + lg.distance(&rg).powi(2)).sqrt())
        })();
        d.unwrap_or(f64::INFINITY)
    });

    Ok((involution, biequivariance))
}

fn disc_chart_samples(samples: usize, seed: u64, delta: f64) -> Vec<(Quaternion, Quaternion)> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let r = rng.gen_range(delta..=(1.0 - delta));
            let x = Quaternion::random_unit(&mut rng).scale(r);
            let y = Quaternion::random_unit(&mut rng);
            (x, y)
        })
        .collect()
}

/// Left side of the disc-chart identity: embed `(x, y)` through
/// `Ψ(x, y) = (x, sqrt(1-|x|²) y)`, apply the hat of the seam transition,
/// pull back through `Φ(x, y) = (sqrt(1-|y|²) x, y)`.
fn chart_roundtrip(x: Quaternion, y: Quaternion) -> Result<(Quaternion, Quaternion)> {
    let c = (1.0 - x.norm_sq()).max(0.0).sqrt();
    let lifted = s7_point(x, y.scale(c));
    let q = gm_transition(lifted.quat(0), lifted.quat(1))?;
    let (hx, hy) = (q * lifted.quat(0) * q.conj(), q * lifted.quat(1) * q.conj());
    // Φ⁻¹ restores the unit first slot
    let s = (1.0 - hy.norm_sq()).max(0.0).sqrt();
    if s == 0.0 {
        return Err(Error::OutOfChart { chart: 1 });
    }
    Ok((hx.scale(1.0 / s), hy))
}

/// Radial lift of a seam self-map to the disc chart: apply on the unit seam
/// and reinstall the complementary radius on the second slot.
fn lift_seam_map(
    x: Quaternion,
    y: Quaternion,
    seam: impl Fn(&(Quaternion, Quaternion)) -> Result<(Quaternion, Quaternion)>,
) -> Result<(Quaternion, Quaternion)> {
    let c = (1.0 - x.norm_sq()).max(0.0).sqrt();
    let (a, b) = seam(&(x.normalized()?, y))?;
    Ok((a, b.scale(c)))
}

/// Max distance between the chart round-trip and the lifted `g_a⁻¹ ∘ f_a`
/// over the punctured disc times the 3-sphere, with `|x| ∈ [δ, 1-δ]`.
pub fn sigma7_chart_defect(samples: usize, seed: u64, delta: f64) -> f64 {
    let pts = disc_chart_samples(samples, seed, delta);
    let fa = f_a();
    let ga = g_a();
    batch::max_defect(&pts, |(x, y)| {
        let d = (|| -> Result<f64> {
            let lhs = chart_roundtrip(*x, *y)?;
            let rhs = lift_seam_map(*x, *y, |p| ga.apply_inv(&fa.apply(p)?))?;
            Ok((lhs.0.distance(&rhs.0).powi(2) + lhs.1.distance(&rhs.1).powi(2)).sqrt())
        })();
        d.unwrap_or(f64::INFINITY)
    })
}

/// Negative control: the same comparison with the two shears swapped.
pub fn sigma7_swapped_defect(samples: usize, seed: u64, delta: f64) -> f64 {
    let pts = disc_chart_samples(samples, seed, delta);
    let fa = f_a();
    let ga = g_a();
    batch::max_defect(&pts, |(x, y)| {
        let d = (|| -> Result<f64> {
            let lhs = chart_roundtrip(*x, *y)?;
            let rhs = lift_seam_map(*x, *y, |p| fa.apply_inv(&ga.apply(p)?))?;
            Ok((lhs.0.distance(&rhs.0).powi(2) + lhs.1.distance(&rhs.1).powi(2)).sqrt())
        })();
        d.unwrap_or(f64::INFINITY)
    })
}

/// Outcome of resolving the projection square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiagramResolution {
    /// Projection indices `(top, left)` of the winning square, 1-based.
    pub pair: (usize, usize),
    /// Sign carried by the right-hand arrow.
    pub sign: f64,
    pub defect: f64,
}

/// Evaluate the four candidate squares `s·h(pr_top Q) = h(pr_left Q)` on
/// sampled members: the two same-column repairs with sign `-1` and the two
/// signs of the mixed-column square. Exactly one candidate may commute, and
/// the winner must not depend on the seed.
pub fn diagram_resolution(samples: usize, seed: u64, tol: f64) -> Result<DiagramResolution> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let members: Vec<Sp2Matrix> = (0..samples).map(|_| sp2_member(&mut rng)).collect();

    let h5 = |col: (Quaternion, Quaternion)| -> [f64; 5] {
        let (l, q) = hopf(col.0, col.1);
        [l, q.w, q.x, q.y, q.z]
    };
    let dist = |a: [f64; 5], b: [f64; 5], s: f64| -> f64 {
        a.iter()
            .zip(b.iter())
            .map(|(u, v)| (s * u - v) * (s * u - v))
            .sum::<f64>()
            .sqrt()
    };

    // (top, left, sign); same-column squares with sign +1 commute trivially
    // and carry no information, so they are not candidates.
    let candidates = [(1usize, 1usize, -1.0f64), (2, 2, -1.0), (1, 2, 1.0), (1, 2, -1.0)];
    let mut defects = [0.0f64; 4];
    for (k, (top, left, sign)) in candidates.iter().enumerate() {
        defects[k] = batch::max_defect(&members, |m| {
            let col = |i: usize| if i == 1 { m.col1() } else { m.col2() };
            dist(h5(col(*top)), h5(col(*left)), *sign)
        });
    }
    let winners: Vec<usize> = (0..4).filter(|&k| defects[k] <= tol).collect();
    if winners.len() != 1 {
        return Err(Error::DiagramUnresolved);
    }
    let (top, left, sign) = candidates[winners[0]];
    Ok(DiagramResolution { pair: (top, left), sign, defect: defects[winners[0]] })
}
