//! Ordinarity of the fibered surface from ordinarity of the curves in its
//! cover tower, the Hasse divisor, and Frobenius on H².

mod decide;
mod hasse;
mod report;

pub use decide::{check_supersingular_corollary, decide, Clause, CorollaryCheck, OrdinarityVerdict, Scope};
pub use hasse::{h2_frobenius_matrix, hasse_divisor, hasse_poly_z2, HasseDivisor, HasseEntry, HassePolynomial};
pub use report::{
    build_report, tower_genera, CurveEntry, CurveId, CurveOrdinarityReport, Provenance, Supplied,
};
