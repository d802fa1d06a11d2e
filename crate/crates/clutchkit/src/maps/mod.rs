//! The named sphere maps as first-class evaluators with domain/codomain
//! metadata, linear-map constructors, gluing self-maps of products, the
//! normalized-linear homotopies, and the transport identities used by the
//! suite.

mod gluing;
mod homotopy;
mod identities;
mod linear;
mod sphere;

pub use gluing::{f_a, f_alpha, f_theta, g_a, g_beta, oct_left_mul, Gluing};
pub use homotopy::{b10_homotopy, eta_homotopy, NormalizedLinearHomotopy};
pub use identities::{
    conj_transport_defect, conj_transport_defect_gbeta, hat_factorization_defect, QuatAction,
    QuatMap,
};
pub use linear::{embed_upper_identity, fij, tau, u_right, LinearMap};
pub use sphere::{
    b10_exp, b10_tilde, b6, catalogue, equator_projection, eta4, eta8, eta_norm, gm_transition,
    hopf, manifest, unit_sphere_defect, Locus, NamedMap,
};
