//! Explicit curves over 𝔽_p: elliptic curves (j-invariant, automorphisms,
//! Hasse invariant), hyperelliptic curves (Cartier–Manin matrix, p-rank),
//! and the brute-force point-counting and zeta oracles that check them.

mod elliptic;
mod hyperelliptic;
pub mod zeta;

pub use elliptic::{AutOrder, EllipticCurve, PointCount, RationalCurve, POINT_COUNT_BOUND};
pub use hyperelliptic::HyperellipticCurve;
pub use zeta::{l_polynomial, zeta_p_rank, LPolynomial};
