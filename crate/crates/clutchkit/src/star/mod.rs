//! Equivariant transition families over two-chart covers, their hat
//! operations and total-space actions, pullbacks along equivariant maps,
//! and the concrete instances: the Gromoll-Meyer family over the 7-sphere,
//! the constraint manifolds cut out by the eta and b maps, and octonionic
//! clutching descriptors.

mod constraint;
mod family;
mod gm;
mod pullback;
mod sij;
mod total;

pub use constraint::{ConstraintKind, ConstraintManifold, ConstraintPoint};
pub use family::{
    hat_equivariance_defect, hat_inverse_roundtrip_defect, hat_product_defect, EquivariantCover,
    StarFamily, Validation,
};
pub use gm::{
    diagram_resolution, f_involution_defects, gm_family, section_ratio, sigma7_chart_defect,
    sigma7_swapped_defect, sp2_member, sp2_section, sp2_section_ratio_convention,
    DiagramResolution, RatioConvention,
};
pub use pullback::{pullback_compat_defect, pullback_family};
pub use sij::SijDescriptor;
pub use total::{
    base_projection_defect, cross_chart, glue_action_commutation_defect, quotient_projection,
    quotient_projection_defect, section_property_defect, star_bullet_commutation_defect,
    star_total_action, TotalSpacePoint,
};
