//! Dimension-tagged sphere points, seeded sampling, named group actions,
//! and the defect meters for equivariance and isometry.

mod action;
mod sample;
mod space;

pub use action::{
    actions, equivariance_defect, group_law_defect, identity_law_defect, isometry_defect,
    ActionSpec, GroupElement, GroupKind,
};
pub use sample::{
    sample_equator, sample_group, sample_unit_quaternions, sample_unit_sphere, SeamSampler,
};
pub use space::{AmbientSpace, Factor, Part, SpherePoint};
