//! Character line bundles and genera of the cover tower D′ → D″/D‴ → C.

use serde::Serialize;

use crate::error::Result;

use super::spec::{FibrationSpec, Ramification, Rotation};

/// `deg L_index = −numerator/denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct DegreeTerm {
    pub index: usize,
    pub numerator: i64,
    pub denominator: i64,
    pub formula: &'static str,
}

pub(crate) fn degree_terms(r: Rotation, ram: &Ramification) -> Vec<DegreeTerm> {
    let [a2, a3p, a3m, a4p, a4m, a6p, a6m] = [
        ram.a2, ram.a3p, ram.a3m, ram.a4p, ram.a4m, ram.a6p, ram.a6m,
    ]
    .map(|v| v as i64);
    let t = |index, numerator, denominator, formula| DegreeTerm {
        index,
        numerator,
        denominator,
        formula,
    };
    match r {
        Rotation::Trivial => vec![],
        Rotation::C2 => vec![t(1, a2, 2, "a2")],
        Rotation::C3 => vec![
            t(1, 2 * a3p + a3m, 3, "2a3p + a3m"),
            t(2, a3p + 2 * a3m, 3, "a3p + 2a3m"),
        ],
        Rotation::C4 => vec![
            t(1, 3 * a4p + a4m + 2 * a2, 4, "3a4p + a4m + 2a2"),
            t(2, a4p + a4m, 2, "a4p + a4m"),
            t(3, a4p + 3 * a4m + 2 * a2, 4, "a4p + 3a4m + 2a2"),
        ],
        Rotation::C6 => vec![
            t(
                1,
                5 * a6p + a6m + 4 * a3p + 2 * a3m + 3 * a2,
                6,
                "5a6p + a6m + 4a3p + 2a3m + 3a2",
            ),
            t(2, a6p + a3m + 2 * a6m + 2 * a3p, 3, "a6p + a3m + 2a6m + 2a3p"),
            t(3, a2 + a6p + a6m, 2, "a2 + a6p + a6m"),
            t(4, 2 * a6p + 2 * a3m + a6m + a3p, 3, "2a6p + 2a3m + a6m + a3p"),
            t(
                5,
                a6p + 5 * a6m + 2 * a3p + 4 * a3m + 3 * a2,
                6,
                "a6p + 5a6m + 2a3p + 4a3m + 3a2",
            ),
        ],
    }
}

/// Branch-point counts of D′ → C grouped by ramification index.
pub(crate) fn branch_counts(r: Rotation, ram: &Ramification) -> Vec<(u64, u64)> {
    match r {
        Rotation::Trivial => vec![],
        Rotation::C2 => vec![(2, ram.a2)],
        Rotation::C3 => vec![(3, ram.a3p + ram.a3m)],
        Rotation::C4 => vec![(4, ram.a4p + ram.a4m), (2, ram.a2)],
        Rotation::C6 => vec![(6, ram.a6p + ram.a6m), (3, ram.a3p + ram.a3m), (2, ram.a2)],
    }
}

/// `2g − 2 = n(2g_C − 2) + Σ (n/e)(e − 1)` for a degree-n cyclic cover.
fn twice_genus_minus_two(n: u64, base_genus: u64, branch: &[(u64, u64)]) -> i64 {
    let base = n as i64 * (2 * base_genus as i64 - 2);
    let ramified: i64 = branch
        .iter()
        .map(|&(e, count)| ((n / e) * (e - 1) * count) as i64)
        .sum();
    base + ramified
}

/// `2g − 2` for each curve of the tower, labelled. Used both by validation
/// and by [`genus_cover_tower`].
pub(crate) fn riemann_hurwitz(s: &FibrationSpec) -> Vec<(&'static str, i64)> {
    let ram = &s.ramification;
    let g = s.base_genus;
    let n = s.rotation.order();
    let mut out = vec![(
        "D'",
        twice_genus_minus_two(n, g, &branch_counts(s.rotation, ram)),
    )];
    match s.rotation {
        Rotation::C4 => {
            out.push(("D''", twice_genus_minus_two(2, g, &[(2, ram.a4p + ram.a4m)])));
        }
        Rotation::C6 => {
            out.push((
                "D''",
                twice_genus_minus_two(2, g, &[(2, ram.a2 + ram.a6p + ram.a6m)]),
            ));
            out.push((
                "D'''",
                twice_genus_minus_two(3, g, &[(3, ram.a6p + ram.a3m + ram.a6m + ram.a3p)]),
            ));
        }
        _ => {}
    }
    out
}

/// Genera of D′ = D/T and of the intermediate covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverTower {
    pub d_prime: u64,
    /// Intermediate double cover, for R = ℤ/4 and ℤ/6.
    pub d_double: Option<u64>,
    /// Intermediate triple cover, for R = ℤ/6.
    pub d_triple: Option<u64>,
}

pub fn genus_cover_tower(s: &FibrationSpec) -> Result<CoverTower> {
    s.validate()?;
    let mut tower = CoverTower {
        d_prime: 0,
        d_double: None,
        d_triple: None,
    };
    for (name, v) in riemann_hurwitz(s) {
        let g = ((v + 2) / 2) as u64;
        match name {
            "D'" => tower.d_prime = g,
            "D''" => tower.d_double = Some(g),
            _ => tower.d_triple = Some(g),
        }
    }
    Ok(tower)
}

/// `deg L₁, …, deg L_{n−1}`; empty for trivial R.
pub fn line_bundle_degrees(s: &FibrationSpec) -> Result<Vec<i64>> {
    s.validate()?;
    Ok(degree_terms(s.rotation, &s.ramification)
        .into_iter()
        .map(|t| -(t.numerator / t.denominator))
        .collect())
}
