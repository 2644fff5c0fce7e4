use std::fmt;

use super::field::{Fp, PrimeField};

/// 𝔽_{p²} realized as 𝔽_p[ω]/(ω² − n), n the smallest quadratic non-residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtField {
    base: PrimeField,
    non_residue: u64,
}

/// `re + im·ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtElement {
    pub re: u64,
    pub im: u64,
}

impl ExtField {
    pub fn new(base: PrimeField) -> Self {
        Self {
            base,
            non_residue: base.smallest_non_residue().value(),
        }
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    /// The value n with ω² = n.
    pub fn non_residue(&self) -> Fp {
        self.base.elem(self.non_residue)
    }

    pub fn order(&self) -> u64 {
        let p = self.base.characteristic();
        p * p
    }

    pub fn zero(&self) -> ExtElement {
        ExtElement { re: 0, im: 0 }
    }

    pub fn one(&self) -> ExtElement {
        ExtElement { re: 1, im: 0 }
    }

    pub fn omega(&self) -> ExtElement {
        ExtElement { re: 0, im: 1 }
    }

    pub fn embed(&self, x: Fp) -> ExtElement {
        assert_eq!(x.field(), self.base, "mixed fields");
        ExtElement { re: x.value(), im: 0 }
    }

    pub fn elem(&self, re: u64, im: u64) -> ExtElement {
        let p = self.base.characteristic();
        ExtElement {
            re: re % p,
            im: im % p,
        }
    }

    /// Every element, ordered by `re + im·p`.
    pub fn elements(&self) -> impl Iterator<Item = ExtElement> {
        let p = self.base.characteristic();
        (0..p * p).map(move |i| ExtElement { re: i % p, im: i / p })
    }

    /// Dense index `re + im·p`, inverse of the ordering used by [`elements`](Self::elements).
    pub fn index(&self, x: ExtElement) -> usize {
        (x.re + x.im * self.base.characteristic()) as usize
    }

    pub fn add(&self, x: ExtElement, y: ExtElement) -> ExtElement {
        let f = self.base;
        ExtElement {
            re: f.add_raw(x.re, y.re),
            im: f.add_raw(x.im, y.im),
        }
    }

    pub fn sub(&self, x: ExtElement, y: ExtElement) -> ExtElement {
        let f = self.base;
        ExtElement {
            re: f.sub_raw(x.re, y.re),
            im: f.sub_raw(x.im, y.im),
        }
    }

    pub fn neg(&self, x: ExtElement) -> ExtElement {
        self.sub(self.zero(), x)
    }

    pub fn mul(&self, x: ExtElement, y: ExtElement) -> ExtElement {
        let f = self.base;
        let rr = f.mul_raw(x.re, y.re);
        let ii = f.mul_raw(f.mul_raw(x.im, y.im), self.non_residue);
        let ri = f.mul_raw(x.re, y.im);
        let ir = f.mul_raw(x.im, y.re);
        ExtElement {
            re: f.add_raw(rr, ii),
            im: f.add_raw(ri, ir),
        }
    }

    pub fn scale(&self, c: Fp, x: ExtElement) -> ExtElement {
        self.mul(self.embed(c), x)
    }

    pub fn pow(&self, mut x: ExtElement, mut e: u64) -> ExtElement {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, x);
            }
            x = self.mul(x, x);
            e >>= 1;
        }
        acc
    }

    /// Norm to 𝔽_p: re² − n·im².
    pub fn norm(&self, x: ExtElement) -> Fp {
        let f = self.base;
        let a = f.mul_raw(x.re, x.re);
        let b = f.mul_raw(f.mul_raw(x.im, x.im), self.non_residue);
        f.elem(f.sub_raw(a, b))
    }

    pub fn inverse(&self, x: ExtElement) -> Option<ExtElement> {
        let n_inv = self.norm(x).inv()?;
        // x⁻¹ = conj(x)/N(x)
        Some(self.scale(n_inv, self.conjugate(x)))
    }

    fn conjugate(&self, x: ExtElement) -> ExtElement {
        ExtElement {
            re: x.re,
            im: self.base.sub_raw(0, x.im),
        }
    }

    /// x ↦ x^p. Since ω^p = −ω this is conjugation; computed as a true power.
    pub fn frobenius(&self, x: ExtElement) -> ExtElement {
        self.pow(x, self.base.characteristic())
    }

    pub fn is_square(&self, x: ExtElement) -> bool {
        if x == self.zero() {
            return true;
        }
        let p = self.base.characteristic();
        self.pow(x, (p * p - 1) / 2) == self.one()
    }

    /// Lookup indexed by [`index`](Self::index): true iff nonzero square.
    pub fn square_table(&self) -> Vec<bool> {
        let mut table = vec![false; self.order() as usize];
        for x in self.elements().skip(1) {
            table[self.index(self.mul(x, x))] = true;
        }
        table
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}w", self.re, self.im)
    }
}
