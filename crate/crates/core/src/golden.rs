//! Built-in regression suite of published example values.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::curves::{EllipticCurve, HyperellipticCurve};
use crate::error::Result;
use crate::ffpoly::{FpPolynomial, PrimeField};
use crate::fibration::{
    classify_fiber, genus_cover_tower, line_bundle_degrees, surface_invariants, FibrationSpec,
    KodairaType, Ramification, Rotation, Sign, Stabilizer, Translation,
};
use crate::ordinarity::{
    build_report, check_supersingular_corollary, decide, hasse_divisor, hasse_poly_z2, Clause,
    CorollaryCheck, CurveId, CurveOrdinarityReport, OrdinarityVerdict, Scope, Supplied,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoldenResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// First monic squarefree polynomial of the given degree, in lexicographic
/// order of its lower coefficients, whose hyperelliptic curve has
/// Cartier–Manin determinant zero.
pub fn first_non_ordinary_branch(field: PrimeField, degree: usize) -> Option<FpPolynomial> {
    let p = field.characteristic();
    let total = p.checked_pow(degree as u32)?;
    (0..total).find_map(|mut idx| {
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            coeffs.push((idx % p) as i64);
            idx /= p;
        }
        coeffs.push(1);
        let f = FpPolynomial::from_i64(field, &coeffs);
        let h = HyperellipticCurve::new(f.clone()).ok()?;
        (!h.cartier_manin().is_invertible()).then_some(f)
    })
}

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).expect("golden primes are valid")
}

fn c2(p: u64, a2: u64) -> FibrationSpec {
    FibrationSpec::new(field(p), Rotation::C2, 0, Ramification { a2, ..Default::default() })
}

fn c4(p: u64, a4p: u64, a4m: u64) -> FibrationSpec {
    FibrationSpec::new(
        field(p),
        Rotation::C4,
        0,
        Ramification { a4p, a4m, a2: 1, ..Default::default() },
    )
}

type Check = fn() -> Result<Vec<(String, bool)>>;

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> (String, bool) {
    (format!("{what} = {got:?} (want {want:?})"), got == want)
}

fn fiber_types() -> Result<Vec<(String, bool)>> {
    let i0 = classify_fiber(Stabilizer::Rotation { order: 2, sign: Sign::Plus })?;
    let ii = classify_fiber(Stabilizer::Rotation { order: 6, sign: Sign::Minus })?;
    let mult = classify_fiber(Stabilizer::Translation { order: 5 })?;
    Ok(vec![
        eq("index 2 type", i0.kodaira_type, KodairaType::I0Star),
        eq("index 2 euler", i0.euler, 6),
        eq("index 6- type", ii.kodaira_type, KodairaType::IIStar),
        eq("index 6- euler", ii.euler, 10),
        eq("translation type", mult.kodaira_type, KodairaType::SmoothMultiple),
        eq("translation euler", mult.euler, 0),
    ])
}

fn rational_double_cover() -> Result<Vec<(String, bool)>> {
    let s = c2(5, 2);
    let inv = surface_invariants(&s)?;
    Ok(vec![
        eq("deg L1", line_bundle_degrees(&s)?, vec![-1]),
        eq("chi", inv.chi, 1),
        eq("euler", inv.euler_total, 12),
        eq("(h1, h2)", (inv.h1, inv.h2), (0, 0)),
        eq("rational", inv.rational, true),
    ])
}

fn rational_double_cover_verdict() -> Result<Vec<(String, bool)>> {
    let e = EllipticCurve::from_i64(field(5), 0, 1)?;
    let s = c2(5, 2).with_elliptic(e);
    let r = build_report(&s, &BTreeMap::new())?;
    let v = decide(&s, &r)?;
    Ok(vec![
        eq("trace of Frobenius", e.point_count()?.trace, 0),
        eq("E ordinary", e.is_ordinary(), false),
        eq("ordinary", v.ordinary, true),
        eq("clause", v.clause, Clause::RationalException),
        eq(
            "corollary",
            check_supersingular_corollary(&s, &v, &r)?,
            CorollaryCheck::Holds,
        ),
    ])
}

fn kummer_invariants() -> Result<Vec<(String, bool)>> {
    let s = c2(7, 4);
    let inv = surface_invariants(&s)?;
    let types: Vec<_> = inv.fibers.iter().map(|f| f.fiber.kodaira_type).collect();
    Ok(vec![
        eq("chi", inv.chi, 2),
        eq("euler", inv.euler_total, 24),
        eq("h2", inv.h2, 1),
        eq("K3 candidate", inv.k3_candidate, true),
        eq("fibers", types, vec![KodairaType::I0Star; 4]),
        eq("g(Dp)", genus_cover_tower(&s)?.d_prime, 1),
    ])
}

fn kummer_verdict() -> Result<Vec<(String, bool)>> {
    let f = field(7);
    let branch = first_non_ordinary_branch(f, 4).expect("a supersingular quartic exists mod 7");
    let s = c2(7, 4)
        .with_elliptic(EllipticCurve::from_i64(f, 0, 1)?)
        .with_branch(branch.clone());
    let r = build_report(&s, &BTreeMap::new())?;
    let v = decide(&s, &r)?;
    Ok(vec![
        (format!("branch = {branch}"), true),
        eq("E ordinary", r.ordinary(CurveId::E), Some(true)),
        eq("Dp ordinary", r.ordinary(CurveId::DPrime), Some(false)),
        eq("ordinary", v.ordinary, false),
        eq("clause", v.clause, Clause::Order2),
    ])
}

fn translation_product() -> Result<Vec<(String, bool)>> {
    let mut s = FibrationSpec::new(field(7), Rotation::Trivial, 2, Ramification::default());
    s.translation = Translation { n1: 3, n2: 1 };
    let r = CurveOrdinarityReport::new()
        .with(CurveId::E, 1, 1)?
        .with(CurveId::C, 2, 2)?;
    let v: OrdinarityVerdict = decide(&s, &r)?;
    Ok(vec![
        eq("ordinary", v.ordinary, true),
        eq("scope", v.scope, Scope::SingleX),
        eq("clause", v.clause, Clause::TrivialRotation),
    ])
}

fn corollary_violation() -> Result<Vec<(String, bool)>> {
    let s = FibrationSpec::new(field(5), Rotation::Trivial, 0, Ramification::default());
    let mut supplied = BTreeMap::new();
    supplied.insert(CurveId::E, Supplied::Supersingular);
    let r = build_report(&s, &supplied)?;
    let forged = OrdinarityVerdict {
        scope: Scope::SingleX,
        ordinary: true,
        clause: Clause::TrivialRotation,
        reasons: vec![],
    };
    let honest = decide(&s, &r)?;
    Ok(vec![
        (
            "forged ordinary verdict is a violation".into(),
            matches!(
                check_supersingular_corollary(&s, &forged, &r)?,
                CorollaryCheck::Violated(_)
            ),
        ),
        eq("decided ordinary", honest.ordinary, false),
    ])
}

fn hasse_multiplicities(s: &FibrationSpec) -> Result<(Vec<(KodairaType, u64)>, u64)> {
    let r = CurveOrdinarityReport::new().with(CurveId::E, 1, 1)?;
    let h = hasse_divisor(s, &r)?;
    let mut m: Vec<_> = h.entries.iter().map(|e| (e.kodaira_type, e.multiplicity)).collect();
    m.sort();
    Ok((m, h.total_degree))
}

fn double_cover_hasse() -> Result<Vec<(String, bool)>> {
    let (m, total) = hasse_multiplicities(&c2(5, 2))?;
    Ok(vec![
        eq(
            "multiplicities",
            m,
            vec![(KodairaType::I0Star, 2), (KodairaType::I0Star, 2)],
        ),
        eq("degree", total, 4),
    ])
}

fn order_four_plus() -> Result<Vec<(String, bool)>> {
    let s = c4(13, 2, 0);
    let (m, total) = hasse_multiplicities(&s)?;
    Ok(vec![
        eq("euler", surface_invariants(&s)?.euler_total, 12),
        eq("degree", total, 12),
        eq(
            "multiplicities",
            m,
            vec![(KodairaType::I0Star, 6), (KodairaType::III, 3), (KodairaType::III, 3)],
        ),
    ])
}

fn order_four_minus() -> Result<Vec<(String, bool)>> {
    let s = c4(13, 0, 2);
    let (m, total) = hasse_multiplicities(&s)?;
    let star: Vec<u64> = m
        .iter()
        .filter(|(t, _)| *t == KodairaType::IIIStar)
        .map(|&(_, k)| k)
        .collect();
    Ok(vec![
        eq("euler", surface_invariants(&s)?.euler_total, 24),
        eq("degree", total, 24),
        eq("III* multiplicities", star, vec![9, 9]),
    ])
}

fn supersingular_hasse_polynomial() -> Result<Vec<(String, bool)>> {
    let f = field(7);
    let ss = EllipticCurve::from_i64(f, 1, 0)?;
    let ord = EllipticCurve::from_i64(f, 0, 1)?;
    let branch = FpPolynomial::from_i64(f, &[1, 0, 0, 0, 1]);
    let zero = hasse_poly_z2(&ss, &branch)?;
    let h = hasse_poly_z2(&ord, &branch)?;
    Ok(vec![
        eq("supersingular polynomial is zero", zero.poly.is_zero(), true),
        eq("homogeneous degree", h.homogeneous_degree, 2 * 6),
    ])
}

fn degree_law() -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    for (s, d) in [(c2(13, 2), 1), (c4(13, 2, 0), 1), (c4(13, 0, 2), 2), (c2(13, 6), 3)] {
        let (_, total) = hasse_multiplicities(&s)?;
        out.push(eq(&format!("{} a2={} degree", s.rotation, s.ramification.a2), total, d * 12));
    }
    Ok(out)
}

const CASES: [(&str, Check); 12] = [
    ("fiber types and Euler numbers", fiber_types),
    ("rational double cover: invariants", rational_double_cover),
    ("rational double cover: verdict at p = 5", rational_double_cover_verdict),
    ("Kummer fibration: invariants", kummer_invariants),
    ("Kummer fibration: supersingular D' at p = 7", kummer_verdict),
    ("translation quotient with non-ordinary fiber", translation_product),
    ("supersingular E forces rationality", corollary_violation),
    ("Hasse divisor, two I0* fibers at p = 5", double_cover_hasse),
    ("Hasse divisor, C4 with III fibers at p = 13", order_four_plus),
    ("Hasse divisor, C4 with III* fibers at p = 13", order_four_minus),
    ("Hasse polynomial degenerations", supersingular_hasse_polynomial),
    ("Hasse degree law across configurations", degree_law),
];

/// Runs every case in a fixed order.
pub fn run_golden() -> Vec<GoldenResult> {
    CASES
        .iter()
        .map(|&(name, check)| match check() {
            Ok(items) => GoldenResult {
                name,
                passed: items.iter().all(|(_, ok)| *ok),
                detail: items
                    .iter()
                    .map(|(s, ok)| format!("{}{s}", if *ok { "" } else { "MISMATCH " }))
                    .collect::<Vec<_>>()
                    .join("; "),
            },
            Err(e) => GoldenResult {
                name,
                passed: false,
                detail: format!("error: {e}"),
            },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_cases_pass() {
        for r in run_golden() {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(run_golden(), run_golden());
    }

    #[test]
    fn supersingular_quartic_mod_seven() {
        let f = first_non_ordinary_branch(field(7), 4).unwrap();
        let h = HyperellipticCurve::new(f).unwrap();
        assert_eq!(h.genus(), 1);
        assert_eq!(h.p_rank(), 0);
    }
}
