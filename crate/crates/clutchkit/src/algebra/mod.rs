//! Quaternion and octonion arithmetic, hermitian forms, and the Sp(2)
//! membership predicate — the numeric kernel every other module calls.

mod octonion;
mod quaternion;
mod sp2;

pub use octonion::{xi, xi_inv, OctConvention, Octonion};
pub use quaternion::Quaternion;
pub use sp2::{hermitian_inner, Sp2Defect, Sp2Matrix};
