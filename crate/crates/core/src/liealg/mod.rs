//! so(n+2) in its derivation and operator presentations, with root and
//! weight bookkeeping.

mod chevalley;
mod presentations;
mod roots;

pub use chevalley::{
    anti_involution, bracket_coords, e_op, shifted_euler_u, v_op, verify_involution_compat, verify_iso_psi, BasisLabel,
    ChevalleySystem, IsoReport, LieElt, Side, StructureMismatch,
};
pub use presentations::{
    build_derivation_presentation, build_operator_presentation, build_real_presentation, op_eq, p_tilde,
    rotation_tilde, so_dim, verify_real_presentation, verify_relations, GenSet, Generator, Presentation,
};
pub use roots::{dominant_weight, is_finite_dim_weight, Root, RootSystem, RootType, Weight};
