//! Exact arithmetic over 𝔽_p and 𝔽_{p²}: elements, dense polynomials and
//! matrices.

mod ext;
mod field;
mod matrix;
mod poly;

pub use ext::{ExtElement, ExtField};
pub use field::{is_prime, Fp, PrimeField};
pub use matrix::{FpMatrix, RankDet};
pub use poly::{poly_pow_coeff, FpPolynomial};
