//! Brute-force zeta-function oracle for curves of genus 1 and 2.
//!
//! Points are counted over 𝔽_p (and 𝔽_{p²} for genus 2) by enumeration,
//! the L-polynomial is recovered from the counts, and the p-rank is read off
//! as the number of p-adic unit reciprocal roots, i.e. the degree of
//! `L(T) mod p`. Nothing here touches the Cartier–Manin matrix.

use crate::error::{Error, Result};
use crate::ffpoly::ExtField;

use super::HyperellipticCurve;

/// Largest p for which the oracle enumerates 𝔽_{p²}.
pub const ZETA_PRIME_BOUND: u64 = 13;
pub const ZETA_GENUS_BOUND: usize = 2;

/// `L(T) = Σ coeffs[i]·T^i` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPolynomial {
    pub genus: usize,
    pub p: u64,
    pub coeffs: Vec<i64>,
    /// `#C(𝔽_p)`, and `#C(𝔽_{p²})` when genus 2.
    pub counts: Vec<u64>,
}

impl LPolynomial {
    /// Number of reciprocal roots that are p-adic units.
    pub fn unit_root_count(&self) -> usize {
        let p = self.p as i64;
        (0..=self.genus)
            .rev()
            .find(|&i| self.coeffs[i].rem_euclid(p) != 0)
            .unwrap_or(0)
    }
}

/// `#C(𝔽_p)` of the smooth model, including points at infinity.
pub fn count_points_fp(curve: &HyperellipticCurve) -> u64 {
    let field = curve.field();
    let squares = field.square_table();
    let affine: u64 = field
        .elements()
        .map(|x| match curve.f().eval(x).value() {
            0 => 1,
            v if squares[v as usize] => 2,
            _ => 0,
        })
        .sum();
    let deg = curve.degree();
    let at_infinity = if deg % 2 == 1 {
        1
    } else if field.is_square(curve.f().leading().unwrap()) {
        2
    } else {
        0
    };
    affine + at_infinity
}

/// `#C(𝔽_{p²})`, including points at infinity.
pub fn count_points_fp2(curve: &HyperellipticCurve) -> u64 {
    let ext = ExtField::new(curve.field());
    let squares = ext.square_table();
    let coeffs: Vec<_> = curve.f().coeffs().map(|c| ext.embed(c)).collect();
    let affine: u64 = ext
        .elements()
        .map(|x| {
            let v = coeffs
                .iter()
                .rev()
                .fold(ext.zero(), |acc, &c| ext.add(ext.mul(acc, x), c));
            if v == ext.zero() {
                1
            } else if squares[ext.index(v)] {
                2
            } else {
                0
            }
        })
        .sum();
    // every element of 𝔽_p is a square in 𝔽_{p²}
    let at_infinity = if curve.degree() % 2 == 1 { 1 } else { 2 };
    affine + at_infinity
}

pub fn l_polynomial(curve: &HyperellipticCurve) -> Result<LPolynomial> {
    let g = curve.genus();
    let p = curve.field().characteristic();
    if g > ZETA_GENUS_BOUND {
        return Err(Error::bound(format!(
            "zeta oracle handles genus <= {ZETA_GENUS_BOUND}, got {g}"
        )));
    }
    if p > ZETA_PRIME_BOUND {
        return Err(Error::bound(format!(
            "zeta oracle enumerates F_p^2; p = {p} exceeds {ZETA_PRIME_BOUND}"
        )));
    }
    let pi = p as i64;
    let n1 = count_points_fp(curve);
    // a1 = N1 − p − 1 = −Σ α_i
    let a1 = n1 as i64 - pi - 1;
    match g {
        1 => Ok(LPolynomial {
            genus: 1,
            p,
            coeffs: vec![1, a1, pi],
            counts: vec![n1],
        }),
        2 => {
            let n2 = count_points_fp2(curve);
            let s2 = pi * pi + 1 - n2 as i64; // Σ α_i²
            let twice_a2 = a1 * a1 - s2;
            if twice_a2 % 2 != 0 {
                return Err(Error::Inconsistent(format!(
                    "point counts N1 = {n1}, N2 = {n2} give a non-integral L-polynomial"
                )));
            }
            let a2 = twice_a2 / 2;
            Ok(LPolynomial {
                genus: 2,
                p,
                coeffs: vec![1, a1, a2, pi * a1, pi * pi],
                counts: vec![n1, n2],
            })
        }
        _ => unreachable!("genus >= 1 for deg f >= 3"),
    }
}

/// p-rank from point counts alone.
pub fn zeta_p_rank(curve: &HyperellipticCurve) -> Result<usize> {
    Ok(l_polynomial(curve)?.unit_root_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::{FpPolynomial, PrimeField};

    fn curve(p: u64, c: &[i64]) -> HyperellipticCurve {
        HyperellipticCurve::new(FpPolynomial::from_i64(PrimeField::new(p).unwrap(), c)).unwrap()
    }

    #[test]
    fn genus_one_examples() {
        let h = curve(5, &[1, 0, 0, 1]);
        assert_eq!(count_points_fp(&h), 6);
        assert_eq!(zeta_p_rank(&h).unwrap(), 0);
        assert_eq!(zeta_p_rank(&curve(5, &[1, 1, 0, 1])).unwrap(), 1);
    }

    #[test]
    fn genus_two_example() {
        let h = curve(7, &[1, 0, 0, 0, 0, 1]);
        let l = l_polynomial(&h).unwrap();
        assert_eq!(l.unit_root_count(), 0);
        assert_eq!(zeta_p_rank(&h).unwrap(), h.p_rank());
    }

    #[test]
    fn counts_over_fp2_extend_fp_counts() {
        // the F_p-points are among the F_{p^2}-points
        let h = curve(11, &[3, 1, 0, 2, 0, 1]);
        assert!(count_points_fp2(&h) >= count_points_fp(&h));
    }

    #[test]
    fn even_degree_points_at_infinity() {
        // y^2 = 2x^4 + 1 over F_5: leading 2 is a non-residue, no points at infinity
        let h = curve(5, &[1, 0, 0, 0, 2]);
        let affine: u64 = count_points_fp(&h);
        let h_sq = curve(5, &[1, 0, 0, 0, 1]);
        // x^4 ∈ {0, 1}: 2x^4 + 1 ∈ {1, 3}; 1 is a square, 3 is not -> only x = 0 gives 2 points
        assert_eq!(affine, 2);
        // x^4 + 1 ∈ {1, 2}: only x = 0 contributes 2; plus 2 points at infinity
        assert_eq!(count_points_fp(&h_sq), 4);
    }

    #[test]
    fn weil_bound_on_genus_two_counts() {
        let h = curve(13, &[1, 2, 3, 0, 1, 1]);
        let l = l_polynomial(&h).unwrap();
        // |N1 − p − 1| <= 2g√p
        assert!((l.coeffs[1] * l.coeffs[1]) as f64 <= 16.0 * 13.0);
    }

    #[test]
    fn bounds_are_refusals() {
        assert!(matches!(
            zeta_p_rank(&curve(17, &[1, 0, 0, 1])),
            Err(Error::BoundExceeded(_))
        ));
        assert!(matches!(
            zeta_p_rank(&curve(7, &[1, 1, 0, 0, 0, 0, 0, 1])),
            Err(Error::BoundExceeded(_))
        ));
    }
}
