use serde::Serialize;

use crate::curves::EllipticCurve;
use crate::error::{Error, Result};
use crate::ffpoly::{FpMatrix, FpPolynomial};
use crate::fibration::{surface_invariants, FibrationSpec, KodairaType};

use super::report::{CurveId, CurveOrdinarityReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseEntry {
    /// Branch-point id of the fiber, as listed by `singular_fibers`.
    pub fiber_id: usize,
    pub kodaira_type: KodairaType,
    pub euler: i64,
    pub multiplicity: u64,
}

/// Zero divisor of relative Frobenius on R¹π_*O_X.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HasseDivisor {
    pub p: u64,
    pub d: i64,
    pub entries: Vec<HasseEntry>,
    pub total_degree: u64,
}

/// Each non-multiple singular fiber contributes `(p − 1)·e/12`, where `e` is
/// its Euler number. Needs E ordinary.
pub fn hasse_divisor(s: &FibrationSpec, report: &CurveOrdinarityReport) -> Result<HasseDivisor> {
    match report.ordinary(CurveId::E) {
        None => {
            return Err(Error::Missing {
                clause: "hasse-divisor",
                missing: vec!["E".into()],
            })
        }
        Some(false) => {
            return Err(Error::Supersingular(
                "relative Frobenius is identically zero, the Hasse divisor is undefined".into(),
            ))
        }
        Some(true) => {}
    }
    let inv = surface_invariants(s)?;
    let p = s.field.characteristic();
    let mut entries = Vec::with_capacity(inv.fibers.len());
    for f in &inv.fibers {
        let num = (p - 1) * f.fiber.euler as u64;
        if !num.is_multiple_of(12) {
            return Err(Error::Inconsistent(format!(
                "fiber {} of type {}: (p-1)·{}/12 is not an integer for p = {p}",
                f.id, f.fiber.kodaira_type, f.fiber.euler
            )));
        }
        entries.push(HasseEntry {
            fiber_id: f.id,
            kodaira_type: f.fiber.kodaira_type,
            euler: f.fiber.euler,
            multiplicity: num / 12,
        });
    }
    let total_degree: u64 = entries.iter().map(|e| e.multiplicity).sum();
    if total_degree as i64 != inv.d * (p as i64 - 1) {
        return Err(Error::Inconsistent(format!(
            "Hasse divisor has degree {total_degree}, expected d(p-1) = {}",
            inv.d * (p as i64 - 1)
        )));
    }
    Ok(HasseDivisor {
        p,
        d: inv.d,
        entries,
        total_degree,
    })
}

/// Dehomogenized Hasse polynomial of a double-cover fibration, together with
/// the degree it is homogenized to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HassePolynomial {
    pub poly: FpPolynomial,
    pub homogeneous_degree: usize,
    /// E is supersingular and the polynomial is zero.
    pub supersingular: bool,
}

/// `H(E)·f^{(p−1)/2}` for the R = ℤ/2 fibration with branch polynomial `f`.
/// Homogenized to degree `(p − 1)/2 · 2⌈deg f / 2⌉`.
pub fn hasse_poly_z2(e: &EllipticCurve, branch: &FpPolynomial) -> Result<HassePolynomial> {
    if e.field() != branch.field() {
        return Err(Error::Inconsistent("E and the branch polynomial live over different fields".into()));
    }
    let deg = branch
        .degree()
        .filter(|_| branch.is_squarefree())
        .ok_or_else(|| Error::InvalidCurve(format!("branch polynomial {branch} is not squarefree")))?;
    let half = ((e.field().characteristic() - 1) / 2) as usize;
    let h = e.hasse_invariant();
    let poly = branch.pow(half as u64).scale(h);
    Ok(HassePolynomial {
        poly,
        homogeneous_degree: half * (deg + deg % 2),
        supersingular: h.is_zero(),
    })
}

/// Matrix of relative Frobenius H¹(O(−pd)) → H¹(O(−d)) in the basis
/// `1/(x^{d−m} y^m)`, m = 1…d−1. Entry (n, m) is `a_{p(d−m)−(d−n)}`.
pub fn h2_frobenius_matrix(hasse: &HassePolynomial, d: u64) -> Result<FpMatrix> {
    let field = hasse.poly.field();
    let p = field.characteristic();
    if d == 0 {
        return Err(Error::Inconsistent("d must be positive".into()));
    }
    let expected = ((p - 1) * d) as usize;
    if hasse.homogeneous_degree != expected || hasse.poly.degree().is_some_and(|k| k > expected) {
        return Err(Error::Inconsistent(format!(
            "Hasse polynomial has homogeneous degree {}, expected (p-1)d = {expected}",
            hasse.homogeneous_degree
        )));
    }
    let n = (d - 1) as usize;
    let mut m = FpMatrix::zero(field, n, n);
    for row in 1..=n as u64 {
        for col in 1..=n as u64 {
            let idx = (p * (d - col)) as i64 - (d - row) as i64;
            if idx >= 0 {
                m.set(row as usize - 1, col as usize - 1, hasse.poly.coeff(idx as usize));
            }
        }
    }
    Ok(m)
}
