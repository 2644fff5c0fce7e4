use std::fmt;

use crate::error::{Error, Result};
use crate::ffpoly::{poly_pow_coeff, Fp, FpPolynomial, PrimeField};

/// Largest characteristic accepted by the point-counting oracle.
pub const POINT_COUNT_BOUND: u64 = 10_000;

/// Short Weierstrass curve `y² = x³ + a·x + b` over 𝔽_p, p > 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EllipticCurve {
    a: Fp,
    b: Fp,
}

/// Size of the geometric automorphism group of the curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum AutOrder {
    Two = 2,
    Four = 4,
    Six = 6,
}

impl AutOrder {
    pub fn order(self) -> u32 {
        self as u32
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointCount {
    /// Number of 𝔽_p-points, including the point at infinity.
    pub points: u64,
    /// `p + 1 − points`.
    pub trace: i64,
}

impl EllipticCurve {
    pub fn new(a: Fp, b: Fp) -> Result<Self> {
        assert_eq!(a.field(), b.field(), "mixed fields");
        let curve = Self { a, b };
        if curve.discriminant().is_zero() {
            return Err(Error::InvalidCurve(format!(
                "y^2 = x^3 + {a}x + {b} is singular over {} (4a^3 + 27b^2 = 0)",
                a.field()
            )));
        }
        Ok(curve)
    }

    pub fn from_i64(field: PrimeField, a: i64, b: i64) -> Result<Self> {
        Self::new(field.from_i64(a), field.from_i64(b))
    }

    pub fn field(&self) -> PrimeField {
        self.a.field()
    }

    pub fn a(&self) -> Fp {
        self.a
    }

    pub fn b(&self) -> Fp {
        self.b
    }

    /// `4a³ + 27b²`.
    pub fn discriminant(&self) -> Fp {
        let f = self.field();
        f.elem(4) * self.a.pow(3) + f.elem(27) * self.b.pow(2)
    }

    /// `x³ + a·x + b`.
    pub fn rhs(&self) -> FpPolynomial {
        let f = self.field();
        FpPolynomial::from_elems(f, &[self.b, self.a, f.zero(), f.one()])
    }

    pub fn j_invariant(&self) -> Fp {
        let f = self.field();
        let four_a3 = f.elem(4) * self.a.pow(3);
        f.elem(1728) * four_a3 / self.discriminant()
    }

    pub fn aut_order(&self) -> AutOrder {
        let j = self.j_invariant();
        if j.is_zero() {
            AutOrder::Six
        } else if j == self.field().elem(1728) {
            AutOrder::Four
        } else {
            AutOrder::Two
        }
    }

    /// Coefficient of `x^{p−1}` in `(x³ + ax + b)^{(p−1)/2}`.
    pub fn hasse_invariant(&self) -> Fp {
        let p = self.field().characteristic();
        poly_pow_coeff(&self.rhs(), (p - 1) / 2, (p - 1) as usize)
    }

    pub fn is_ordinary(&self) -> bool {
        !self.hasse_invariant().is_zero()
    }

    /// Counts 𝔽_p-points by running over every x. Refuses p above
    /// [`POINT_COUNT_BOUND`].
    pub fn point_count(&self) -> Result<PointCount> {
        let f = self.field();
        let p = f.characteristic();
        if p > POINT_COUNT_BOUND {
            return Err(Error::bound(format!(
                "point counting enumerates F_p; p = {p} exceeds {POINT_COUNT_BOUND}"
            )));
        }
        let squares = f.square_table();
        let rhs = self.rhs();
        let affine: u64 = f
            .elements()
            .map(|x| {
                let v = rhs.eval(x).value();
                if v == 0 {
                    1
                } else if squares[v as usize] {
                    2
                } else {
                    0
                }
            })
            .sum();
        let points = affine + 1;
        Ok(PointCount {
            points,
            trace: p as i64 + 1 - points as i64,
        })
    }
}

impl fmt::Display for EllipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + {}x + {} over {}", self.a, self.b, self.field())
    }
}

/// `y² = x³ + a·x + b` with integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalCurve {
    pub a: i64,
    pub b: i64,
}

impl RationalCurve {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let c = Self { a, b };
        if c.discriminant() == 0 {
            return Err(Error::InvalidCurve(format!(
                "y^2 = x^3 + {a}x + {b} is singular (4a^3 + 27b^2 = 0)"
            )));
        }
        Ok(c)
    }

    pub fn discriminant(&self) -> i128 {
        let a = self.a as i128;
        let b = self.b as i128;
        4 * a * a * a + 27 * b * b
    }

    /// Reduction modulo p; `None` when p ≤ 3 or p divides the discriminant.
    pub fn reduce(&self, field: PrimeField) -> Option<EllipticCurve> {
        let p = field.characteristic() as i128;
        if p <= 3 || self.discriminant() % p == 0 {
            return None;
        }
        EllipticCurve::from_i64(field, self.a, self.b).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve(p: u64, a: i64, b: i64) -> EllipticCurve {
        EllipticCurve::from_i64(PrimeField::new(p).unwrap(), a, b).unwrap()
    }

    #[test]
    fn singular_curve_rejected() {
        let f = PrimeField::new(7).unwrap();
        assert!(EllipticCurve::from_i64(f, 0, 0).is_err());
        // 4(-3)^3 + 27(2)^2 = 0
        assert!(EllipticCurve::from_i64(f, -3, 2).is_err());
    }

    #[test]
    fn j_invariant_and_automorphisms() {
        let e = curve(7, 1, 0);
        assert_eq!(e.j_invariant().value(), 1728 % 7);
        assert_eq!(e.aut_order(), AutOrder::Four);
        let e = curve(7, 0, 1);
        assert_eq!(e.j_invariant().value(), 0);
        assert_eq!(e.aut_order(), AutOrder::Six);
        let e = curve(5, 1, 1);
        assert_eq!(e.j_invariant().value(), 2);
        assert_eq!(e.aut_order(), AutOrder::Two);
    }

    #[test]
    fn hasse_invariant_examples() {
        assert_eq!(curve(7, 0, 1).hasse_invariant().value(), 3);
        assert_eq!(curve(7, 1, 0).hasse_invariant().value(), 0);
        assert_eq!(curve(5, 0, 1).hasse_invariant().value(), 0);
        assert_eq!(curve(5, 1, 1).hasse_invariant().value(), 2);
    }

    #[test]
    fn point_count_examples() {
        assert_eq!(curve(5, 1, 0).point_count().unwrap(), PointCount { points: 4, trace: 2 });
        assert_eq!(curve(5, 0, 1).point_count().unwrap(), PointCount { points: 6, trace: 0 });
    }

    #[test]
    fn point_count_bound_is_a_refusal() {
        let e = curve(10_007, 1, 1);
        assert!(matches!(e.point_count(), Err(Error::BoundExceeded(_))));
        assert!(curve(9_973, 1, 1).point_count().unwrap().points >= 1);
    }

    #[test]
    fn hasse_bound_holds() {
        for (a, b) in [(1, 1), (2, 3), (0, 5), (7, 0)] {
            let e = curve(101, a, b);
            let t = e.point_count().unwrap().trace;
            assert!(t * t <= 4 * 101, "|a_p| <= 2 sqrt p");
        }
    }

    #[test]
    fn rational_reduction() {
        let c = RationalCurve::new(0, 1).unwrap();
        assert_eq!(c.discriminant(), 27);
        assert!(c.reduce(PrimeField::new(5).unwrap()).is_some());
        let c = RationalCurve::new(1, 1).unwrap(); // disc 31
        assert!(c.reduce(PrimeField::new(31).unwrap()).is_none());
        assert!(RationalCurve::new(-3, 2).is_err());
    }
}
