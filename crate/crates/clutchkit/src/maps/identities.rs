//! Transport identities for maps into a group.
//!
//! For `α : Sᵏ → G` satisfying the conjugation-equivariance law
//! `α(g·x) = g α(x) g⁻¹`, the shear `f_α(x, y) = (x, α(x)·y)` conjugates
//! product maps into product maps:
//!
//! * `f_α⁻¹ (id × φ) f_α = id × φ` for any `G`-equivariant `φ`,
//! * `g_β⁻¹ (ψ × id) g_β = ψ × id` for any `G`-equivariant `ψ`,
//! * `r̂ = g_β⁻¹ (α̂ × β̂⁻¹) f_α` for `r(x, y) = α(x) β(y)⁻¹`,
//!
//! where hats are `α̂(x) = α(x)·x`. Each identity holds exactly when the
//! equivariance hypotheses hold, which makes non-equivariant inputs useful
//! negative controls: the meters here measure, they never threshold.

use std::sync::Arc;

use crate::algebra::Quaternion;
use crate::batch;
use crate::geometry::sample_unit_quaternions;

/// Action of a unit quaternion on a unit quaternion: `(g, y) ↦ g·y`.
pub type QuatAction = Arc<dyn Fn(&Quaternion, &Quaternion) -> Quaternion + Send + Sync>;

/// Self-map of unit quaternions.
pub type QuatMap = Arc<dyn Fn(&Quaternion) -> Quaternion + Send + Sync>;

/// Conjugation action `g·y = g y ḡ`.
pub fn conj_action() -> QuatAction {
    Arc::new(|g, y| *g * *y * g.conj())
}

/// Right-translation action `g·y = y ḡ`.
pub fn right_action() -> QuatAction {
    Arc::new(|g, y| *y * g.conj())
}

fn sample_pairs(samples: usize, seed: u64) -> Vec<(Quaternion, Quaternion)> {
    let xs = sample_unit_quaternions(samples, seed);
    let ys = sample_unit_quaternions(samples, seed ^ 0x00ff_00ff);
    xs.into_iter().zip(ys).collect()
}

/// Max over sampled `(x, y)` of
/// `| f_α⁻¹ (id × φ) f_α (x, y) - (x, φ(y)) |`
/// where `f_α(x, y) = (x, α(x)·y)` under `act_l`. Zero iff `φ` commutes
/// with the action of every `α(x)`.
pub fn conj_transport_defect(
    alpha: &QuatMap,
    act_l: &QuatAction,
    phi: &QuatMap,
    samples: usize,
    seed: u64,
) -> f64 {
    let pairs = sample_pairs(samples, seed);
    batch::max_defect(&pairs, |(x, y)| {
        let a = alpha(x);
        let sheared = act_l(&a, y);
        let mapped = phi(&sheared);
        let back = act_l(&a.conj(), &mapped);
        back.distance(&phi(y))
    })
}

/// Mirror identity on the first factor:
/// `| g_β⁻¹ (ψ × id) g_β (x, y) - (ψ(x), y) |` with
/// `g_β(x, y) = (β(y)·x, y)` under `act_k`.
pub fn conj_transport_defect_gbeta(
    beta: &QuatMap,
    act_k: &QuatAction,
    psi: &QuatMap,
    samples: usize,
    seed: u64,
) -> f64 {
    let pairs = sample_pairs(samples, seed);
    batch::max_defect(&pairs, |(x, y)| {
        let b = beta(y);
        let sheared = act_k(&b, x);
        let mapped = psi(&sheared);
        let back = act_k(&b.conj(), &mapped);
        back.distance(&psi(x))
    })
}

/// Factorization of the hat of `r(x, y) = α(x) β(y)⁻¹` through shears:
/// max over samples of
/// `| r̂(x, y) - g_β⁻¹ (α̂ × (β⁻¹)ˆ) f_α (x, y) |`,
/// the diagonal action on the product being `g·(x, y) = (g·x, g·y)`.
pub fn hat_factorization_defect(
    alpha: &QuatMap,
    beta: &QuatMap,
    act_k: &QuatAction,
    act_l: &QuatAction,
    samples: usize,
    seed: u64,
) -> f64 {
    let pairs = sample_pairs(samples, seed);
    batch::max_defect(&pairs, |(x, y)| {
        // left side: hat of the pointwise quotient
        let r = alpha(x) * beta(y).conj();
        let lhs = (act_k(&r, x), act_l(&r, y));

        // right side: f_α, then α̂ × (β⁻¹)ˆ, then g_β⁻¹
        let a = alpha(x);
        let y1 = act_l(&a, y);
        let x2 = act_k(&a, x); // α̂(x)
        let y2 = act_l(&beta(&y1).conj(), &y1); // (β⁻¹)ˆ(y₁)
        let x3 = act_k(&beta(&y2).conj(), &x2); // g_β⁻¹ on the first slot
        let rhs = (x3, y2);

        (lhs.0.distance(&rhs.0).powi(2) + lhs.1.distance(&rhs.1).powi(2)).sqrt()
    })
}
