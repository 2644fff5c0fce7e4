use std::fmt;

use super::field::{Fp, PrimeField};

/// Dense univariate polynomial over 𝔽_p, lowest degree first.
///
/// The coefficient vector never ends in a zero, so the zero polynomial has
/// an empty vector and `degree()` returns `None` for it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPolynomial {
    field: PrimeField,
    coeffs: Vec<u64>,
}

impl FpPolynomial {
    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Fp) -> Self {
        Self::from_raw(c.field(), vec![c.value()])
    }

    /// `c·x^k`.
    pub fn monomial(c: Fp, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c.value();
        Self::from_raw(c.field(), coeffs)
    }

    /// Builds a polynomial from signed integer coefficients, lowest first.
    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        let raw = coeffs.iter().map(|&c| field.from_i64(c).value()).collect();
        Self::from_raw(field, raw)
    }

    pub fn from_elems(field: PrimeField, coeffs: &[Fp]) -> Self {
        let raw = coeffs
            .iter()
            .map(|c| {
                assert_eq!(c.field(), field, "mixed fields");
                c.value()
            })
            .collect();
        Self::from_raw(field, raw)
    }

    pub(crate) fn from_raw(field: PrimeField, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k`; zero past the degree.
    pub fn coeff(&self, k: usize) -> Fp {
        self.field.elem(self.coeffs.get(k).copied().unwrap_or(0))
    }

    pub fn coeffs(&self) -> impl Iterator<Item = Fp> + '_ {
        self.coeffs.iter().map(move |&c| self.field.elem(c))
    }

    pub(crate) fn raw(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<Fp> {
        self.coeffs.last().map(|&c| self.field.elem(c))
    }

    /// Smallest k with a nonzero coefficient of `x^k`.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn eval(&self, x: Fp) -> Fp {
        let f = self.field;
        let v = self
            .coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| f.add_raw(f.mul_raw(acc, x.value()), c));
        f.elem(v)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let raw = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                self.field.add_raw(a, b)
            })
            .collect();
        Self::from_raw(self.field, raw)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-self.field.one()))
    }

    pub fn scale(&self, c: Fp) -> Self {
        let f = self.field;
        Self::from_raw(
            f,
            self.coeffs.iter().map(|&a| f.mul_raw(a, c.value())).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, usize::MAX)
    }

    /// Product with every term of degree above `max_deg` discarded.
    pub fn mul_truncated(&self, other: &Self, max_deg: usize) -> Self {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let f = self.field;
        let p = f.characteristic() as u128;
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(max_deg.saturating_add(1));
        let mut out = vec![0u128; len];
        // Accumulate unreduced and fold back below p only when needed.
        let limit = u128::MAX - p * p;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 || i >= len {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(len - i) {
                let slot = &mut out[i + j];
                *slot += a as u128 * b as u128;
                if *slot > limit {
                    *slot %= p;
                }
            }
        }
        Self::from_raw(f, out.into_iter().map(|v| (v % p) as u64).collect())
    }

    /// `self^e` by binary exponentiation.
    pub fn pow(&self, e: u64) -> Self {
        self.pow_truncated(e, usize::MAX)
    }

    /// `self^e mod x^(max_deg + 1)`.
    pub fn pow_truncated(&self, mut e: u64, max_deg: usize) -> Self {
        let mut acc = Self::one(self.field);
        let mut base = self.truncate(max_deg);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_truncated(&base, max_deg);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_truncated(&base, max_deg);
            }
        }
        acc.truncate(max_deg)
    }

    fn truncate(&self, max_deg: usize) -> Self {
        if max_deg == usize::MAX || self.coeffs.len() <= max_deg + 1 {
            return self.clone();
        }
        Self::from_raw(self.field, self.coeffs[..=max_deg].to_vec())
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        let raw = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul_raw(c, i as u64 % f.characteristic()))
            .collect();
        Self::from_raw(f, raw)
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        self.check(divisor);
        let f = self.field;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().unwrap().value();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul_raw(rem[k + dd], lead_inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub_raw(rem[k + j], f.mul_raw(c, d));
            }
        }
        rem.truncate(dd);
        (Self::from_raw(f, quot), Self::from_raw(f, rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(l.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// True iff `gcd(f, f')` is a nonzero constant.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: Fp) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let linear = Self::from_elems(self.field, &[-r, self.field.one()]);
        let mut q = self.clone();
        let mut m = 0;
        loop {
            let (next, rem) = q.div_rem(&linear);
            if !rem.is_zero() {
                return m;
            }
            q = next;
            m += 1;
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.field, other.field, "mixed fields");
    }
}

/// Coefficient of `x^k` in `f^e`, with `f^0 = 1`.
///
/// Works on `f = x^v·g` with `g(0) ≠ 0`. When the shifted target index is
/// below p the coefficients of `g^e` follow from the recurrence
/// `g(0)·n·c_n = Σ_{i≥1} (e·i − (n − i))·g_i·c_{n−i}` (compare coefficients
/// in `g·(g^e)' = e·g'·g^e`); otherwise the power is expanded by truncated
/// binary exponentiation.
pub fn poly_pow_coeff(f: &FpPolynomial, e: u64, k: usize) -> Fp {
    let field = f.field();
    if e == 0 {
        return if k == 0 { field.one() } else { field.zero() };
    }
    let (Some(v), Some(deg)) = (f.valuation(), f.degree()) else {
        return field.zero();
    };
    let shift = (v as u128) * (e as u128);
    if shift > k as u128 {
        return field.zero();
    }
    let k = k - shift as usize;
    let g = &f.raw()[v..];
    let gdeg = deg - v;
    if (gdeg as u128) * (e as u128) < k as u128 {
        return field.zero();
    }
    if (k as u64) < field.characteristic() {
        power_coeff_by_recurrence(field, g, e, k)
    } else {
        let g = FpPolynomial::from_raw(field, g.to_vec());
        g.pow_truncated(e, k).coeff(k)
    }
}

fn power_coeff_by_recurrence(field: PrimeField, g: &[u64], e: u64, k: usize) -> Fp {
    let p = field.characteristic();
    let g0_inv = field.elem(g[0]).inv().expect("g(0) is nonzero").value();
    let e_mod = e % p;
    let mut c = Vec::with_capacity(k + 1);
    c.push(field.pow_raw(g[0], e));
    for n in 1..=k {
        let mut acc = 0u64;
        for i in 1..g.len().min(n + 1) {
            if g[i] == 0 {
                continue;
            }
            // e·i − (n − i) mod p
            let w = field.sub_raw(
                field.add_raw(field.mul_raw(e_mod, i as u64), i as u64 % p),
                n as u64 % p,
            );
            acc = field.add_raw(acc, field.mul_raw(field.mul_raw(w, g[i]), c[n - i]));
        }
        let n_inv = field.elem(n as u64).inv().expect("n < p").value();
        c.push(field.mul_raw(field.mul_raw(acc, n_inv), g0_inv));
    }
    field.elem(c[k])
}

impl fmt::Display for FpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn pow_coeff_examples() {
        let f7 = field(7);
        let cubic = FpPolynomial::from_i64(f7, &[1, 0, 0, 1]);
        assert_eq!(poly_pow_coeff(&cubic, 3, 6).value(), 3);
        let odd = FpPolynomial::from_i64(f7, &[0, 1, 0, 1]);
        assert_eq!(poly_pow_coeff(&odd, 3, 6).value(), 0);
        let one = FpPolynomial::one(f7);
        assert_eq!(poly_pow_coeff(&one, 5, 0).value(), 1);
        assert_eq!(poly_pow_coeff(&one, 5, 3).value(), 0);
        assert_eq!(poly_pow_coeff(&cubic, 0, 0).value(), 1);
        assert_eq!(poly_pow_coeff(&cubic, 3, 100).value(), 0);
        assert_eq!(poly_pow_coeff(&FpPolynomial::zero(f7), 2, 0).value(), 0);
    }

    #[test]
    fn normalization_and_degree() {
        let f = field(5);
        let p = FpPolynomial::from_i64(f, &[1, 2, 5, 10]);
        assert_eq!(p.degree(), Some(1));
        assert!(FpPolynomial::from_i64(f, &[0, 5]).is_zero());
        assert_eq!(FpPolynomial::zero(f).degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        let f = field(7);
        // (x - 1)(x - 2)^2
        let a = FpPolynomial::from_i64(f, &[-1, 1]);
        let b = FpPolynomial::from_i64(f, &[-2, 1]);
        let prod = a.mul(&b).mul(&b);
        let (q, r) = prod.div_rem(&b);
        assert!(r.is_zero());
        assert_eq!(q, a.mul(&b));
        assert!(!prod.is_squarefree());
        assert!(a.mul(&b).is_squarefree());
        assert_eq!(prod.gcd(&prod.derivative()), b);
        assert_eq!(prod.root_multiplicity(f.elem(2)), 2);
        assert_eq!(prod.root_multiplicity(f.elem(1)), 1);
        assert_eq!(prod.root_multiplicity(f.elem(3)), 0);
    }

    #[test]
    fn x4_is_not_squarefree() {
        let f = field(7);
        assert!(!FpPolynomial::monomial(f.one(), 4).is_squarefree());
    }

    #[test]
    fn display() {
        let f = field(7);
        assert_eq!(FpPolynomial::from_i64(f, &[1, 0, 3, 1]).to_string(), "x^3 + 3x^2 + 1");
    }

    fn arb_poly(p: u64, max_len: usize) -> impl Strategy<Value = FpPolynomial> {
        prop::collection::vec(0..p as i64, 0..max_len)
            .prop_map(move |c| FpPolynomial::from_i64(field(p), &c))
    }

    fn full_power(f: &FpPolynomial, e: u64) -> FpPolynomial {
        let mut acc = FpPolynomial::one(f.field());
        for _ in 0..e {
            acc = acc.mul(f);
        }
        acc
    }

    proptest! {
        #[test]
        fn power_of_product_splits(
            (f, g) in (arb_poly(7, 5), arb_poly(7, 5)),
            e in 0u64..6,
        ) {
            let lhs = f.mul(&g).pow(e);
            let rhs = f.pow(e).mul(&g.pow(e));
            prop_assert_eq!(lhs.clone(), rhs);
            for k in 0..=lhs.degree().unwrap_or(0) + 1 {
                prop_assert_eq!(poly_pow_coeff(&f.mul(&g), e, k), lhs.coeff(k));
            }
        }

        #[test]
        fn pow_coeff_matches_repeated_multiplication(
            p in prop::sample::select(vec![5u64, 7, 11, 13]),
            coeffs in prop::collection::vec(-20i64..20, 1..6),
            e in 0u64..9,
        ) {
            let f = FpPolynomial::from_i64(field(p), &coeffs);
            let full = full_power(&f, e);
            let top = full.degree().unwrap_or(0) + 2;
            for k in 0..top {
                prop_assert_eq!(poly_pow_coeff(&f, e, k), full.coeff(k));
            }
        }

        #[test]
        fn division_identity(a in arb_poly(11, 8), b in arb_poly(11, 5)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }
    }
}
