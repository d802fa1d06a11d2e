//! Sphere-to-sphere evaluators.
//!
//! Each map comes in two forms: a typed core on quaternion components, and a
//! catalogue entry ([`NamedMap`]) carrying domain/codomain metadata plus a
//! description of the singular locus and its radial-limit extension. The
//! extension values are hard-coded only after the limit oracle in the test
//! suite confirms them: evaluation along shrinking rays converges to the
//! stated value at the stated rate.

use std::sync::Arc;

use rand::Rng;

use crate::algebra::Quaternion;
use crate::batch;
use crate::error::Result;
use crate::geometry::{sample_unit_sphere, AmbientSpace, Part, SpherePoint};

/// Below this, a block norm is treated as exactly on the singular locus.
const NEAR_ZERO: f64 = 1e-150;

/// Quadratic Hopf-type map `(x, y) ↦ (|x|² - |y|², 2 x ȳ)`; total, lands on
/// the unit sphere of `R x H` because `(|x|²-|y|²)² + 4|x|²|y|² = (|x|²+|y|²)²`.
pub fn hopf(x: Quaternion, y: Quaternion) -> (f64, Quaternion) {
    (x.norm_sq() - y.norm_sq(), (x * y.conj()).scale(2.0))
}

/// Retraction of the twice-punctured 4-sphere onto unit quaternions:
/// `(λ, x) ↦ x/|x|`. No continuous extension at the poles.
pub fn equator_projection(_lambda: f64, x: Quaternion) -> Result<Quaternion> {
    x.normalized()
}

/// `(λ, x) ↦ λ + x i x̄ / |x|`; unit because the two summands are orthogonal
/// with norms `λ` and `|x|`. Radial limit `λ` at `x = 0`.
pub fn eta4(lambda: f64, x: Quaternion) -> Quaternion {
    let n = x.norm();
    if n < NEAR_ZERO {
        return Quaternion::from_real(lambda);
    }
    let u = x.scale(1.0 / n);
    Quaternion::from_real(lambda) + (u * Quaternion::I * u.conj()).scale(n)
}

/// `(λ, x, y) ↦ (λ + x i x̄ / |x|, y)`; suspension-style extension of
/// [`eta4`] with the same `x = 0` radial limit `(λ, y)`.
pub fn eta8(lambda: f64, x: Quaternion, y: Quaternion) -> (Quaternion, Quaternion) {
    (eta4(lambda, x), y)
}

/// `(λ, x, y) ↦ (λ + x i x̄, y) / sqrt(λ² + |x|⁴ + |y|²)`; total, the
/// normalizer never vanishes on the sphere (its minimum is sqrt(3)/2).
pub fn eta_norm(lambda: f64, x: Quaternion, y: Quaternion) -> (Quaternion, Quaternion) {
    let first = Quaternion::from_real(lambda) + x * Quaternion::I * x.conj();
    let n = (first.norm_sq() + y.norm_sq()).sqrt();
    (first.scale(1.0 / n), y.scale(1.0 / n))
}

/// `(ξ, x) ↦ exp(π x ξ x̄ / |x|²)` for pure `ξ`; the exponent is pure
/// imaginary of norm `π|ξ|`, so the value is unit. Radial limit `-1` at
/// `x = 0` (the exponent tends to π times a unit imaginary, independent of
/// the approach direction).
pub fn b6(xi: Quaternion, x: Quaternion) -> Quaternion {
    let n = x.norm();
    if n < NEAR_ZERO {
        return -Quaternion::ONE;
    }
    let u = x.scale(1.0 / n);
    (u * xi.im() * u.conj()).scale(std::f64::consts::PI).exp()
}

/// `(ξ, x, y) ↦ (b6((ξ, x)/s) · s, y)` with `s = sqrt(|ξ|² + |x|²)`; the
/// first slot has norm `s = sqrt(1 - |y|²)`, so the value is unit. Radial
/// limit `(0, y)` at `s = 0`.
pub fn b10_tilde(xi: Quaternion, x: Quaternion, y: Quaternion) -> (Quaternion, Quaternion) {
    let s = (xi.norm_sq() + x.norm_sq()).sqrt();
    if s < NEAR_ZERO {
        return (Quaternion::ZERO, y);
    }
    (b6(xi.scale(1.0 / s), x.scale(1.0 / s)).scale(s), y)
}

/// Un-rescaled exponential form `(ξ, x, y) ↦ (exp(π x ξ x̄ / |x|²) · s, y)`,
/// the alias of [`b10_tilde`] that keeps the exponent at norm `π|ξ|` instead
/// of `π|ξ|/s`. Both variants are unit-valued and share the equivariance the
/// suite checks; they agree where `|y| = 0` and on both singular loci.
pub fn b10_exp(xi: Quaternion, x: Quaternion, y: Quaternion) -> (Quaternion, Quaternion) {
    let s = (xi.norm_sq() + x.norm_sq()).sqrt();
    if s < NEAR_ZERO {
        return (Quaternion::ZERO, y);
    }
    (b6(xi, x).scale(s), y)
}

/// The Gromoll-Meyer transition `(x, y) ↦ x ȳ / |x y|`, the composite of
/// [`hopf`] with [`equator_projection`]. Undefined where `|x||y| = 0`.
pub fn gm_transition(x: Quaternion, y: Quaternion) -> Result<Quaternion> {
    (x * y.conj()).normalized()
}

type MapEval = Arc<dyn Fn(&SpherePoint) -> Result<SpherePoint> + Send + Sync>;
type NearSampler = Arc<dyn Fn(usize, u64, f64) -> Vec<SpherePoint> + Send + Sync>;

/// Singular locus metadata of a [`NamedMap`].
#[derive(Clone)]
pub struct Locus {
    pub description: &'static str,
    /// Human-readable radial-limit value, `None` when the limit is
    /// direction-dependent and no continuous extension exists.
    pub extension: Option<&'static str>,
    near_sampler: NearSampler,
}

impl Locus {
    /// Points on the domain sphere within distance `eps` of the locus.
    pub fn sample_near(&self, count: usize, seed: u64, eps: f64) -> Vec<SpherePoint> {
        (self.near_sampler)(count, seed, eps)
    }
}

/// A named map between sphere ambients, with evaluator and locus metadata.
#[derive(Clone)]
pub struct NamedMap {
    pub name: &'static str,
    pub domain: AmbientSpace,
    pub codomain: AmbientSpace,
    pub locus: Option<Locus>,
    eval: MapEval,
}

impl NamedMap {
    pub fn new(
        name: &'static str,
        domain: AmbientSpace,
        codomain: AmbientSpace,
        locus: Option<Locus>,
        eval: Arc<dyn Fn(&SpherePoint) -> Result<SpherePoint> + Send + Sync>,
    ) -> Self {
        Self { name, domain, codomain, locus, eval }
    }

    pub fn eval(&self, p: &SpherePoint) -> Result<SpherePoint> {
        p.in_space(&self.domain)?;
        (self.eval)(p)
    }

    pub fn evaluator(&self) -> impl Fn(&SpherePoint) -> Result<SpherePoint> + Sync + '_ {
        move |p| self.eval(p)
    }
}

fn pack2(space: &AmbientSpace, a: Quaternion, b: Quaternion) -> Result<SpherePoint> {
    SpherePoint::from_parts(space.clone(), &[Part::Quat(a), Part::Quat(b)])
}

/// Rescale the complement of one block so the whole point is unit with the
/// block at norm `t`: used by the near-locus samplers.
fn shrink_block(p: &SpherePoint, block: std::ops::Range<usize>, t: f64) -> SpherePoint {
    let mut coords = p.coords().to_vec();
    let block_sq: f64 = coords[block.clone()].iter().map(|c| c * c).sum();
    let rest_sq: f64 = coords.iter().map(|c| c * c).sum::<f64>() - block_sq;
    let bn = block_sq.sqrt();
    let rescale_rest = ((1.0 - t * t) / rest_sq).sqrt();
    for (i, c) in coords.iter_mut().enumerate() {
        if block.contains(&i) {
            *c *= if bn > 0.0 { t / bn } else { 0.0 };
        } else {
            *c *= rescale_rest;
        }
    }
    SpherePoint::from_coords(p.space().clone(), coords).expect("same width")
}

fn near_block_sampler(space: AmbientSpace, block: std::ops::Range<usize>) -> NearSampler {
    Arc::new(move |count, seed, eps| {
        use rand::SeedableRng;
        let pts = sample_unit_sphere(&space, count, seed);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0xabcd);
        pts.into_iter()
            .map(|p| {
                let t: f64 = rng.gen_range(0.0..eps);
                shrink_block(&p, block.clone(), t)
            })
            .collect()
    })
}

/// Every catalogued map.
pub fn catalogue() -> Vec<NamedMap> {
    let s3 = AmbientSpace::s3();
    let s4 = AmbientSpace::s4();
    let s6 = AmbientSpace::s6();
    let s7 = AmbientSpace::s7();
    let s8 = AmbientSpace::s8();
    let s10 = AmbientSpace::s10();

    let mut maps = Vec::new();

    {
        let cod = s4.clone();
        maps.push(NamedMap {
            name: "h",
            domain: s7.clone(),
            codomain: s4.clone(),
            locus: None,
            eval: Arc::new(move |p| {
                let (l, q) = hopf(p.quat(0), p.quat(1));
                SpherePoint::from_parts(cod.clone(), &[Part::Real(l), Part::Quat(q)])
            }),
        });
    }

    {
        let cod = s3.clone();
        maps.push(NamedMap {
            name: "a",
            domain: s4.clone(),
            codomain: s3.clone(),
            locus: Some(Locus {
                description: "x = 0 (both poles)",
                extension: None,
                near_sampler: near_block_sampler(s4.clone(), 1..5),
            }),
            eval: Arc::new(move |p| {
                let q = equator_projection(p.real(0), p.quat(1))?;
                SpherePoint::from_parts(cod.clone(), &[Part::Quat(q)])
            }),
        });
    }

    {
        let cod = s3.clone();
        maps.push(NamedMap {
            name: "eta4",
            domain: s4.clone(),
            codomain: s3.clone(),
            locus: Some(Locus {
                description: "x = 0 (both poles)",
                extension: Some("(λ, 0) -> λ"),
                near_sampler: near_block_sampler(s4.clone(), 1..5),
            }),
            eval: Arc::new(move |p| {
                let q = eta4(p.real(0), p.quat(1));
                SpherePoint::from_parts(cod.clone(), &[Part::Quat(q)])
            }),
        });
    }

    {
        let cod = s7.clone();
        maps.push(NamedMap {
            name: "eta8",
            domain: s8.clone(),
            codomain: s7.clone(),
            locus: Some(Locus {
                description: "x = 0",
                extension: Some("(λ, 0, y) -> (λ, y)"),
                near_sampler: near_block_sampler(s8.clone(), 1..5),
            }),
            eval: Arc::new(move |p| {
                let (a, b) = eta8(p.real(0), p.quat(1), p.quat(2));
                pack2(&cod, a, b)
            }),
        });
    }

    {
        let cod = s7.clone();
        maps.push(NamedMap {
            name: "eta",
            domain: s8.clone(),
            codomain: s7.clone(),
            locus: None,
            eval: Arc::new(move |p| {
                let (a, b) = eta_norm(p.real(0), p.quat(1), p.quat(2));
                pack2(&cod, a, b)
            }),
        });
    }

    {
        let cod = s3.clone();
        maps.push(NamedMap {
            name: "b",
            domain: s6.clone(),
            codomain: s3.clone(),
            locus: Some(Locus {
                description: "x = 0",
                extension: Some("(ξ, 0) -> -1"),
                near_sampler: near_block_sampler(s6.clone(), 4..8),
            }),
            eval: Arc::new(move |p| {
                let q = b6(p.quat(0), p.quat(1));
                SpherePoint::from_parts(cod.clone(), &[Part::Quat(q)])
            }),
        });
    }

    {
        let cod = s7.clone();
        maps.push(NamedMap {
            name: "b10_tilde",
            domain: s10.clone(),
            codomain: s7.clone(),
            locus: Some(Locus {
                description: "x = 0, and |ξ|² + |x|² = 0",
                extension: Some("(ξ, 0, y) -> (-sqrt(1-|y|²), y); (0, 0, y) -> (0, y)"),
                near_sampler: near_block_sampler(s10.clone(), 4..8),
            }),
            eval: Arc::new(move |p| {
                let (a, b) = b10_tilde(p.quat(0), p.quat(1), p.quat(2));
                pack2(&cod, a, b)
            }),
        });
    }

    {
        let cod = s7.clone();
        maps.push(NamedMap {
            name: "b10",
            domain: s10.clone(),
            codomain: s7.clone(),
            locus: Some(Locus {
                description: "x = 0, and |ξ|² + |x|² = 0",
                extension: Some("(ξ, 0, y) -> (-sqrt(1-|y|²), y); (0, 0, y) -> (0, y)"),
                near_sampler: near_block_sampler(s10.clone(), 4..8),
            }),
            eval: Arc::new(move |p| {
                let (a, b) = b10_exp(p.quat(0), p.quat(1), p.quat(2));
                pack2(&cod, a, b)
            }),
        });
    }

    {
        let cod = s3.clone();
        maps.push(NamedMap {
            name: "ah",
            domain: s7.clone(),
            codomain: s3.clone(),
            locus: Some(Locus {
                description: "|x||y| = 0",
                extension: None,
                near_sampler: near_block_sampler(s7.clone(), 0..4),
            }),
            eval: Arc::new(move |p| {
                let q = gm_transition(p.quat(0), p.quat(1))?;
                SpherePoint::from_parts(cod.clone(), &[Part::Quat(q)])
            }),
        });
    }

    maps
}

/// JSON manifest of the catalogue: name, domain, codomain, singular locus.
pub fn manifest() -> serde_json::Value {
    let entries: Vec<serde_json::Value> = catalogue()
        .iter()
        .map(|m| {
            serde_json::json!({
                "name": m.name,
                "domain": m.domain.label(),
                "codomain": m.codomain.label(),
                "singular_locus": m.locus.as_ref().map(|l| l.description),
                "extension": m.locus.as_ref().and_then(|l| l.extension),
            })
        })
        .collect();
    serde_json::json!(entries)
}

/// Max unit-norm defect of map outputs over generic samples plus, when the
/// map has a singular locus, samples within `1e-3` of it. Points exactly on
/// a locus without continuous extension are skipped (the evaluator errors
/// there by contract).
pub fn unit_sphere_defect(map: &NamedMap, samples: usize, seed: u64) -> Result<f64> {
    let near = samples / 10;
    let mut pts = sample_unit_sphere(&map.domain, samples - near, seed);
    if let Some(locus) = &map.locus {
        pts.extend(locus.sample_near(near, seed ^ 0x5eed, 1e-3));
    } else {
        pts.extend(sample_unit_sphere(&map.domain, near, seed ^ 0x5eed));
    }
    Ok(batch::max_defect(&pts, |p| match map.eval(p) {
        Ok(out) => out.unit_defect(),
        Err(_) => f64::INFINITY,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-12;

    #[test]
    fn hopf_examples() {
        let (l, q) = hopf(Quaternion::ONE, Quaternion::ZERO);
        assert_eq!((l, q), (1.0, Quaternion::ZERO));
        let (l, q) = hopf(Quaternion::ZERO, Quaternion::ONE);
        assert_eq!((l, q), (-1.0, Quaternion::ZERO));
        let r = 1.0 / 2f64.sqrt();
        let (l, q) = hopf(Quaternion::from_real(r), Quaternion::from_real(r));
        assert!(l.abs() < EPS);
        assert!(q.distance(&Quaternion::ONE) < EPS);
    }

    #[test]
    fn eta_examples() {
        // eta8(0, 1, 0) = (i, 0)
        let (a, b) = eta8(0.0, Quaternion::ONE, Quaternion::ZERO);
        assert!(a.distance(&Quaternion::I) < EPS);
        assert_eq!(b, Quaternion::ZERO);
        // eta8(1, 0, 0) = (1, 0) via the extension
        let (a, _) = eta8(1.0, Quaternion::ZERO, Quaternion::ZERO);
        assert!(a.distance(&Quaternion::ONE) < EPS);
        // eta_norm(0, 1, 0) = (i, 0): the normalizer is 1 there
        let (a, b) = eta_norm(0.0, Quaternion::ONE, Quaternion::ZERO);
        assert!(a.distance(&Quaternion::I) < EPS);
        assert_eq!(b, Quaternion::ZERO);
    }

    #[test]
    fn b_examples() {
        // b(0, x) = exp(0) = 1 for unit x
        assert!(b6(Quaternion::ZERO, Quaternion::J).distance(&Quaternion::ONE) < EPS);
        // b(ξ, 0) = -1 for unit imaginary ξ
        assert!(b6(Quaternion::I, Quaternion::ZERO).distance(&-Quaternion::ONE) < EPS);
        // b10_tilde with y = 0 reduces to (b6(ξ, x), 0)
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let xi = Quaternion::random_pure_unit(&mut rng).scale(0.5);
        let x = Quaternion::random_unit(&mut rng).scale((1.0 - 0.25f64).sqrt());
        let (a, b) = b10_tilde(xi, x, Quaternion::ZERO);
        assert!(a.distance(&b6(xi, x)) < EPS);
        assert_eq!(b, Quaternion::ZERO);
    }

    use rand::SeedableRng;

    #[test]
    fn radial_limit_oracle() {
        // Evaluate along shrinking rays; the frozen extensions must be the
        // limits, at rate O(eps) for eta and O(eps²) for b.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for _ in 0..20 {
            let dir = Quaternion::random_unit(&mut rng);
            let y0 = Quaternion::random_unit(&mut rng).scale(0.6);
            let lam0 = (1.0f64 - 0.36).sqrt();
            let xi0 = Quaternion::random_pure_unit(&mut rng);
            let mut prev_eta = f64::INFINITY;
            let mut prev_b = f64::INFINITY;
            for k in 1..7 {
                let eps = 10f64.powi(-k);
                let c = (1.0 - eps * eps).sqrt();
                // eta8 toward (λ, 0, y)
                let (a, b) = eta8(lam0 * c, dir.scale(eps), y0.scale(c));
                let d_eta = (a.distance(&Quaternion::from_real(lam0)).powi(2)
                    + b.distance(&y0).powi(2))
                .sqrt();
                assert!(d_eta <= 2.0 * eps, "eta8 limit rate: {d_eta} at eps {eps}");
                assert!(d_eta < prev_eta);
                prev_eta = d_eta;
                // b6 toward (ξ, 0)
                let v = b6(xi0.scale(c), dir.scale(eps));
                let d_b = v.distance(&-Quaternion::ONE);
                assert!(d_b <= 2.0 * eps * eps, "b6 limit rate: {d_b} at eps {eps}");
                assert!(d_b < prev_b || d_b == 0.0);
                prev_b = d_b;
            }
        }
    }

    #[test]
    fn catalogue_lands_on_unit_spheres() {
        for m in catalogue() {
            let d = unit_sphere_defect(&m, 1000, 42).unwrap();
            assert!(d <= 1e-9, "{} unit defect {d}", m.name);
        }
    }

    #[test]
    fn manifest_lists_all_maps() {
        let v = manifest();
        let names: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
        for want in ["h", "a", "eta4", "eta8", "eta", "b", "b10_tilde", "b10", "ah"] {
            assert!(names.contains(&want), "missing {want}");
        }
    }

    #[test]
    fn gm_transition_examples() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let x = Quaternion::random_unit(&mut rng);
        // φ(x, x) = x x̄ / |x x̄| = 1
        assert!(gm_transition(x, x).unwrap().distance(&Quaternion::ONE) < EPS);
        assert!(gm_transition(Quaternion::ZERO, x).is_err());
    }
}
