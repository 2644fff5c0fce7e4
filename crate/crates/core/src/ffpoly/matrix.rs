use std::fmt;

use super::field::{Fp, PrimeField};

/// Row-major matrix over 𝔽_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

/// Result of [`FpMatrix::rank_det`]. `det` is present iff the matrix is square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankDet {
    pub rank: usize,
    pub det: Option<Fp>,
}

impl FpMatrix {
    pub fn zero(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Panics if `entries.len() != rows * cols`.
    pub fn from_i64(field: PrimeField, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows × cols");
        Self {
            field,
            rows,
            cols,
            entries: entries.iter().map(|&v| field.from_i64(v).value()).collect(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Fp {
        assert!(i < self.rows && j < self.cols, "index out of range");
        self.field.elem(self.entries[i * self.cols + j])
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fp) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        assert_eq!(v.field(), self.field, "mixed fields");
        self.entries[i * self.cols + j] = v.value();
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = Fp> + '_ {
        self.entries[i * self.cols..(i + 1) * self.cols]
            .iter()
            .map(move |&v| self.field.elem(v))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "mixed fields");
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = self.field;
        let mut out = Self::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entries[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let slot = &mut out.entries[i * other.cols + j];
                    *slot = f.add_raw(*slot, f.mul_raw(a, other.entries[k * other.cols + j]));
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Self::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Rank by Gaussian elimination; determinant for square matrices.
    /// The empty 0×0 matrix has rank 0 and determinant 1.
    pub fn rank_det(&self) -> RankDet {
        let f = self.field;
        let mut m = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        let mut det = 1u64;
        for col in 0..cols {
            let Some(pivot) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
                det = 0;
                continue;
            };
            if pivot != rank {
                for j in 0..cols {
                    m.swap(pivot * cols + j, rank * cols + j);
                }
                det = f.sub_raw(0, det);
            }
            let pv = m[rank * cols + col];
            det = f.mul_raw(det, pv);
            let inv = f.elem(pv).inv().unwrap().value();
            for r in rank + 1..rows {
                let factor = f.mul_raw(m[r * cols + col], inv);
                if factor == 0 {
                    continue;
                }
                for j in col..cols {
                    let sub = f.mul_raw(factor, m[rank * cols + j]);
                    m[r * cols + j] = f.sub_raw(m[r * cols + j], sub);
                }
            }
            rank += 1;
            if rank == rows {
                if rank < cols {
                    det = 0;
                }
                break;
            }
        }
        RankDet {
            rank,
            det: self.is_square().then(|| f.elem(det)),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank_det().rank
    }

    /// Square with nonzero determinant.
    pub fn is_invertible(&self) -> bool {
        matches!(self.rank_det().det, Some(d) if !d.is_zero())
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            let row: Vec<String> = self.row(i).map(|v| v.to_string()).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
