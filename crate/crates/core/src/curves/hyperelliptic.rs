use std::fmt;

use crate::error::{Error, Result};
use crate::ffpoly::{FpMatrix, FpPolynomial, PrimeField};

/// Smooth model `y² = f(x)` with `f` squarefree of degree ≥ 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticCurve {
    f: FpPolynomial,
}

impl HyperellipticCurve {
    pub fn new(f: FpPolynomial) -> Result<Self> {
        match f.degree() {
            Some(d) if d >= 3 => {}
            _ => {
                return Err(Error::InvalidCurve(format!(
                    "y^2 = {f}: need deg f >= 3"
                )))
            }
        }
        if !f.is_squarefree() {
            return Err(Error::InvalidCurve(format!(
                "y^2 = {f}: f is not squarefree over {}",
                f.field()
            )));
        }
        Ok(Self { f })
    }

    pub fn f(&self) -> &FpPolynomial {
        &self.f
    }

    pub fn field(&self) -> PrimeField {
        self.f.field()
    }

    pub fn degree(&self) -> usize {
        self.f.degree().expect("validated nonzero")
    }

    /// `⌊(deg f − 1)/2⌋`.
    pub fn genus(&self) -> usize {
        (self.degree() - 1) / 2
    }

    /// The g×g matrix with entries `c_{p·i − j}` (1 ≤ i, j ≤ g), where
    /// `f^{(p−1)/2} = Σ c_k x^k`.
    pub fn cartier_manin(&self) -> FpMatrix {
        let field = self.field();
        let p = field.characteristic() as usize;
        let g = self.genus();
        let top = p * g - 1;
        let power = self.f.pow_truncated((p as u64 - 1) / 2, top);
        let mut m = FpMatrix::zero(field, g, g);
        for i in 1..=g {
            for j in 1..=g {
                m.set(i - 1, j - 1, power.coeff(p * i - j));
            }
        }
        m
    }

    /// Rank of `M^g`, M the Cartier–Manin matrix. All models here are defined
    /// over the prime field, so the Frobenius-twisted product is just `M^g`.
    pub fn p_rank(&self) -> usize {
        let g = self.genus();
        self.cartier_manin().pow(g as u64).rank()
    }

    pub fn is_ordinary(&self) -> bool {
        self.cartier_manin().is_invertible()
    }
}

impl fmt::Display for HyperellipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {} over {}", self.f, self.field())
    }
}
