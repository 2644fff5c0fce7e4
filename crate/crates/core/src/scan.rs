//! Reduction of one integral document at every prime up to a bound.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::document::SpecDocument;
use crate::error::{Error, Result};
use crate::ffpoly::is_prime;
use crate::ordinarity::{build_report, decide, CurveId};

pub const SCAN_PRIME_BOUND: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub p: u64,
    /// E has good reduction, the branch polynomial stays squarefree of the
    /// same degree, and the reduced spec is valid.
    pub good: bool,
    pub e_ordinary: Option<bool>,
    pub dp_ordinary: Option<bool>,
    /// Absent exactly when `good` is false.
    pub verdict: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub good_primes: usize,
    pub e_ordinary: usize,
    pub ordinary: usize,
}

impl ScanSummary {
    /// Fraction of good primes with an ordinary verdict.
    pub fn fraction(&self) -> f64 {
        ratio(self.ordinary, self.good_primes)
    }

    pub fn e_fraction(&self) -> f64 {
        ratio(self.e_ordinary, self.good_primes)
    }
}

fn ratio(n: usize, d: usize) -> f64 {
    if d == 0 {
        0.0
    } else {
        n as f64 / d as f64
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub p_max: u64,
    pub rows: Vec<ScanRow>,
    pub summary: ScanSummary,
}

fn bad(p: u64) -> ScanRow {
    ScanRow {
        p,
        good: false,
        e_ordinary: None,
        dp_ordinary: None,
        verdict: None,
    }
}

fn scan_prime(doc: &SpecDocument, p: u64) -> Result<ScanRow> {
    let s = match doc.at_prime(p) {
        Ok(s) => s,
        Err(Error::InvalidCurve(_) | Error::Invalid(_)) => return Ok(bad(p)),
        Err(e) => return Err(e),
    };
    if let (Some(coeffs), Some(f)) = (&doc.branch, &s.branch) {
        let int_degree = coeffs.iter().rposition(|&c| c != 0);
        if f.degree() != int_degree {
            return Ok(bad(p));
        }
    }
    let report = build_report(&s, &BTreeMap::new())?;
    let verdict = decide(&s, &report)?;
    Ok(ScanRow {
        p,
        good: true,
        e_ordinary: report.ordinary(CurveId::E),
        dp_ordinary: report.ordinary(CurveId::DPrime),
        verdict: Some(verdict.ordinary),
    })
}

/// Rows for every prime `5 ≤ p ≤ p_max`, in increasing order of p.
pub fn scan(doc: &SpecDocument, p_max: u64) -> Result<ScanReport> {
    if p_max > SCAN_PRIME_BOUND {
        return Err(Error::bound(format!(
            "scan bound {p_max} exceeds {SCAN_PRIME_BOUND}"
        )));
    }
    if doc.elliptic.is_none() {
        return Err(Error::Missing {
            clause: "scan",
            missing: vec!["E".into()],
        });
    }
    let primes: Vec<u64> = (5..=p_max).filter(|&p| is_prime(p)).collect();

    #[cfg(feature = "parallel")]
    let rows: Result<Vec<ScanRow>> = {
        use rayon::prelude::*;
        primes.par_iter().map(|&p| scan_prime(doc, p)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows: Result<Vec<ScanRow>> = primes.iter().map(|&p| scan_prime(doc, p)).collect();

    let rows = rows?;
    let good: Vec<&ScanRow> = rows.iter().filter(|r| r.good).collect();
    let summary = ScanSummary {
        good_primes: good.len(),
        e_ordinary: good.iter().filter(|r| r.e_ordinary == Some(true)).count(),
        ordinary: good.iter().filter(|r| r.verdict == Some(true)).count(),
    };
    Ok(ScanReport {
        p_max,
        rows,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(text: &str) -> SpecDocument {
        SpecDocument::parse(text).unwrap()
    }

    #[test]
    fn j_zero_product_follows_congruence() {
        let d = doc("R = \"trivial\"\n[E]\na = 0\nb = 1\n");
        let r = scan(&d, 100).unwrap();
        for row in &r.rows {
            assert!(row.good, "p = {} should be good", row.p);
            assert_eq!(row.verdict, Some(row.p % 3 == 1), "p = {}", row.p);
        }
        assert_eq!(r.rows.first().unwrap().p, 5);
        assert!(r.rows.windows(2).all(|w| w[0].p < w[1].p));
    }

    #[test]
    fn bad_primes_are_flagged() {
        // 4 + 27 = 31
        let d = doc("R = \"trivial\"\n[E]\na = 1\nb = 1\n");
        let r = scan(&d, 40).unwrap();
        let row = r.rows.iter().find(|row| row.p == 31).unwrap();
        assert!(!row.good && row.verdict.is_none());
        assert_eq!(r.summary.good_primes, r.rows.len() - 1);
    }

    #[test]
    fn branch_degree_drop_is_bad() {
        let d = doc("R = \"C2\"\nbranch = [1, 0, 0, 1, 7]\n[ram]\na2 = 4\n[E]\na = 1\nb = 1\n");
        let r = scan(&d, 13).unwrap();
        assert!(!r.rows.iter().find(|row| row.p == 7).unwrap().good);
        assert!(r.rows.iter().find(|row| row.p == 11).unwrap().dp_ordinary.is_some());
    }

    #[test]
    fn bound_and_missing_data() {
        let d = doc("R = \"trivial\"\n[E]\na = 0\nb = 1\n");
        assert!(matches!(scan(&d, 10_001), Err(Error::BoundExceeded(_))));
        let d = doc("R = \"trivial\"\n");
        assert!(matches!(scan(&d, 50), Err(Error::Missing { .. })));
        let d = doc("R = \"C2\"\n[ram]\na2 = 4\n[E]\na = 0\nb = 1\n");
        assert!(matches!(scan(&d, 50), Err(Error::Missing { .. })));
    }

    #[test]
    fn summary_matches_rows() {
        let d = doc("R = \"trivial\"\n[E]\na = 1\nb = 1\n");
        let r = scan(&d, 300).unwrap();
        let good = r.rows.iter().filter(|row| row.good).count();
        let ord = r.rows.iter().filter(|row| row.verdict == Some(true)).count();
        assert_eq!((r.summary.good_primes, r.summary.ordinary), (good, ord));
        assert_eq!(r.summary.fraction(), ord as f64 / good as f64);
    }
}
