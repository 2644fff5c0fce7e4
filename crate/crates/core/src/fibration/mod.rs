//! Combinatorial model of an isotrivial elliptic fibration X → C obtained
//! from (E × D)/G with G = T ⋊ R: validation, singular fibers, the cover
//! tower D′ → C and the numerical invariants of X.

mod fiber;
mod invariants;
mod spec;
mod tower;

pub use fiber::{
    classify_fiber, FiberClass, IntersectionMatrix, KodairaType, QuotientSingularity, Sign,
    Stabilizer, MATRIX_II, MATRIX_III, MATRIX_IV,
};
pub use invariants::{euler_closed_form, singular_fibers, surface_invariants, BranchFiber, SurfaceInvariants};
pub use spec::{validate_spec, FibrationSpec, Ramification, Rotation, Translation};
pub use tower::{genus_cover_tower, line_bundle_degrees, CoverTower};
