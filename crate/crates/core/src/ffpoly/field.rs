use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// The prime field 𝔽_p for a word-sized prime p > 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p <= 3 {
            return Err(Error::SmallCharacteristic(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn characteristic(self) -> u64 {
        self.p
    }

    pub fn zero(self) -> Fp {
        Fp { value: 0, field: self }
    }

    pub fn one(self) -> Fp {
        Fp { value: 1, field: self }
    }

    /// Reduces an unsigned integer into the field.
    pub fn elem(self, v: u64) -> Fp {
        Fp {
            value: v % self.p,
            field: self,
        }
    }

    /// Reduces a signed integer into the field.
    pub fn from_i64(self, v: i64) -> Fp {
        self.from_i128(v as i128)
    }

    pub fn from_i128(self, v: i128) -> Fp {
        let p = self.p as i128;
        Fp {
            value: v.rem_euclid(p) as u64,
            field: self,
        }
    }

    /// All p elements in increasing order of representative.
    pub fn elements(self) -> impl Iterator<Item = Fp> {
        (0..self.p).map(move |v| Fp { value: v, field: self })
    }

    #[inline]
    pub(crate) fn add_raw(self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        (s % self.p as u128) as u64
    }

    #[inline]
    pub(crate) fn sub_raw(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    #[inline]
    pub(crate) fn mul_raw(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub(crate) fn pow_raw(self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }

    /// Legendre symbol of `x`: 0, 1 or -1.
    pub fn legendre(self, x: Fp) -> i8 {
        self.check(x);
        if x.value == 0 {
            return 0;
        }
        if self.pow_raw(x.value, (self.p - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }

    pub fn is_square(self, x: Fp) -> bool {
        self.legendre(x) >= 0
    }

    /// Smallest positive quadratic non-residue.
    pub fn smallest_non_residue(self) -> Fp {
        self.elements()
            .skip(1)
            .find(|&x| self.legendre(x) == -1)
            .expect("odd prime fields have non-residues")
    }

    /// Lookup table: `table[v]` is true iff `v` is a nonzero square.
    pub fn square_table(self) -> Vec<bool> {
        let mut table = vec![false; self.p as usize];
        for v in 1..self.p {
            table[self.mul_raw(v, v) as usize] = true;
        }
        table
    }

    #[inline]
    fn check(self, x: Fp) {
        assert_eq!(x.field, self, "mixed fields: {} vs {}", x.field.p, self.p);
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

/// An element of a [`PrimeField`], stored as its least nonnegative residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    field: PrimeField,
}

impl Fp {
    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, e: u64) -> Fp {
        Fp {
            value: self.field.pow_raw(self.value, e),
            field: self.field,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Fp> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.field.p - 2))
        }
    }

    /// Representative in `(-p/2, p/2]`, handy for display.
    pub fn centered(self) -> i64 {
        let p = self.field.p;
        if self.value > p / 2 {
            self.value as i64 - p as i64
        } else {
            self.value as i64
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.field.check(rhs);
        Fp {
            value: self.field.add_raw(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.field.check(rhs);
        Fp {
            value: self.field.sub_raw(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.field.check(rhs);
        Fp {
            value: self.field.mul_raw(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl Div for Fp {
    type Output = Fp;
    /// Panics on division by zero.
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            value: self.field.sub_raw(0, self.value),
            field: self.field,
        }
    }
}

impl AddAssign for Fp {
    fn add_assign(&mut self, rhs: Fp) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fp {
    fn sub_assign(&mut self, rhs: Fp) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fp {
    fn mul_assign(&mut self, rhs: Fp) {
        *self = *self * rhs;
    }
}
