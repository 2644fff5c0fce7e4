//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the lines always reach the terminal.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};

use isotriv::curves::{zeta_p_rank, EllipticCurve, HyperellipticCurve};
use isotriv::ffpoly::{is_prime, PrimeField};
use isotriv::fibration::{
    classify_fiber, genus_cover_tower, surface_invariants, FibrationSpec, KodairaType,
    Ramification, Rotation, Stabilizer,
};
use isotriv::golden::first_non_ordinary_branch;
use isotriv::ordinarity::{
    build_report, check_supersingular_corollary, decide, h2_frobenius_matrix, hasse_divisor,
    hasse_poly_z2, tower_genera, Clause, CorollaryCheck, CurveEntry, CurveId,
    CurveOrdinarityReport, OrdinarityVerdict, Provenance, Scope,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn c2(p: u64, a2: u64) -> FibrationSpec {
    FibrationSpec::new(field(p), Rotation::C2, 0, Ramification { a2, ..Default::default() })
}

fn rational_double_cover() -> Outcome {
    let s = c2(5, 2);
    let inv = surface_invariants(&s).map_err(|e| e.to_string())?;
    ensure(inv.chi == 1 && inv.euler_total == 12 && inv.rational, format!("{inv:?}"))?;
    let e = EllipticCurve::from_i64(field(5), 0, 1).unwrap();
    let trace = e.point_count().unwrap().trace;
    ensure(trace == 0, format!("a_5 = {trace}"))?;
    let s = s.with_elliptic(e);
    let v = decide(&s, &build_report(&s, &BTreeMap::new()).unwrap()).unwrap();
    ensure(
        v.ordinary && v.clause == Clause::RationalException,
        format!("{v:?}"),
    )?;
    Ok("chi 1, euler 12, rational; a_5 = 0; ordinary via rational-exception".into())
}

fn kummer() -> Outcome {
    let s = c2(7, 4);
    let inv = surface_invariants(&s).unwrap();
    let four_i0 = inv.fibers.len() == 4
        && inv.fibers.iter().all(|f| f.fiber.kodaira_type == KodairaType::I0Star);
    ensure(
        inv.chi == 2 && inv.euler_total == 24 && inv.k3_candidate && four_i0,
        format!("{inv:?}"),
    )?;
    ensure(genus_cover_tower(&s).unwrap().d_prime == 1, "g(D') != 1")?;
    let branch = first_non_ordinary_branch(field(7), 4).ok_or("no supersingular quartic mod 7")?;
    let e = EllipticCurve::from_i64(field(7), 0, 1).unwrap();
    ensure(e.is_ordinary(), "y^2 = x^3 + 1 should be ordinary at 7")?;
    let s = s.with_elliptic(e).with_branch(branch.clone());
    let v = decide(&s, &build_report(&s, &BTreeMap::new()).unwrap()).unwrap();
    ensure(!v.ordinary && v.clause == Clause::Order2, format!("{v:?}"))?;
    Ok(format!("chi 2, euler 24, 4 x I0*, g(D') = 1; branch {branch}: not ordinary"))
}

fn order_four_configurations() -> Outcome {
    let ordinary = CurveOrdinarityReport::new().with(CurveId::E, 1, 1).unwrap();
    let spec = |a4p, a4m| {
        FibrationSpec::new(
            field(13),
            Rotation::C4,
            0,
            Ramification { a4p, a4m, a2: 1, ..Default::default() },
        )
    };
    let plus = spec(2, 0);
    let h = hasse_divisor(&plus, &ordinary).unwrap();
    let mut m: Vec<u64> = h.entries.iter().map(|e| e.multiplicity).collect();
    m.sort();
    let euler = surface_invariants(&plus).unwrap().euler_total;
    ensure(euler == 12 && h.total_degree == 12 && m == [3, 3, 6], format!("{euler} {h:?}"))?;

    let minus = spec(0, 2);
    let h = hasse_divisor(&minus, &ordinary).unwrap();
    let euler = surface_invariants(&minus).unwrap().euler_total;
    let star: Vec<u64> = h
        .entries
        .iter()
        .filter(|e| e.kodaira_type == KodairaType::IIIStar)
        .map(|e| e.multiplicity)
        .collect();
    ensure(euler == 24 && h.total_degree == 24 && star == [9, 9], format!("{euler} {h:?}"))?;
    Ok("III config: euler 12, deg H 12, {3,3,6}; III* config: euler 24, deg H 24, III* mult 9".into())
}

fn noether() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2024);
    let mut n = 0;
    for r in Rotation::ALL {
        for _ in 0..100 {
            let s = common::random_valid_spec(&mut rng, r);
            let inv = surface_invariants(&s).map_err(|e| format!("{s:?}: {e}"))?;
            let sum: i64 = inv
                .fibers
                .iter()
                .map(|f| {
                    classify_fiber(Stabilizer::Rotation { order: f.index, sign: f.sign })
                        .unwrap()
                        .euler
                })
                .sum();
            ensure(12 * inv.chi == sum, format!("{s:?}: 12 chi = {}, sum {sum}", 12 * inv.chi))?;
            n += 1;
        }
    }
    Ok(format!("{n} random specs, 12 chi = sum of fiber Euler numbers"))
}

fn elliptic_oracle() -> Outcome {
    let mut n = 0;
    for p in [5u64, 7, 11] {
        for a in 0..p as i64 {
            for b in 0..p as i64 {
                let Ok(e) = EllipticCurve::from_i64(field(p), a, b) else { continue };
                let trace = e.point_count().unwrap().trace;
                ensure(
                    e.hasse_invariant().is_zero() == (trace.rem_euclid(p as i64) == 0),
                    format!("p = {p}, a = {a}, b = {b}"),
                )?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} curves, 0 mismatches"))
}

fn hyperelliptic_oracle() -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    for p in [5u64, 7, 11] {
        for _ in 0..50 {
            let f = common::random_squarefree(&mut rng, field(p), 5);
            let h = HyperellipticCurve::new(f.clone()).unwrap();
            let oracle = zeta_p_rank(&h).map_err(|e| e.to_string())?;
            ensure(h.p_rank() == oracle, format!("p = {p}, f = {f}: {} vs {oracle}", h.p_rank()))?;
        }
    }
    Ok("150 quintics, 0 mismatches".into())
}

fn h2_equivalence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(48);
    let mut invertible = 0;
    for p in [5u64, 7, 11] {
        let f = field(p);
        for d in [2u64, 3] {
            for _ in 0..50 {
                let e = loop {
                    let e = common::random_curve(&mut rng, f);
                    if e.is_ordinary() {
                        break e;
                    }
                };
                let branch = common::random_squarefree(&mut rng, f, 2 * d as usize);
                let m = h2_frobenius_matrix(&hasse_poly_z2(&e, &branch).unwrap(), d).unwrap();
                let cm = HyperellipticCurve::new(branch.clone()).unwrap().cartier_manin();
                ensure(
                    m.is_invertible() == cm.is_invertible(),
                    format!("p = {p}, d = {d}, f = {branch}"),
                )?;
                invertible += usize::from(m.is_invertible());
            }
        }
    }
    Ok(format!("300 cases ({invertible} invertible), 0 mismatches"))
}

fn congruences() -> Outcome {
    let mut n = 0;
    for p in (5..=50).filter(|&p| is_prime(p)) {
        let j0 = EllipticCurve::from_i64(field(p), 0, 1).unwrap();
        let j1728 = EllipticCurve::from_i64(field(p), 1, 0).unwrap();
        ensure(j0.is_ordinary() == (p % 3 == 1), format!("j = 0 at {p}"))?;
        ensure((p % 3 == 1) == (p % 6 == 1), format!("mod 6 at {p}"))?;
        ensure(j1728.is_ordinary() == (p % 4 == 1), format!("j = 1728 at {p}"))?;
        n += 1;
    }
    Ok(format!("{n} primes, 0 mismatches"))
}

fn supersingular_consequences() -> Outcome {
    let mut rng = StdRng::seed_from_u64(26);
    let (mut vanishing, mut reported) = (0, 0);
    for r in Rotation::ALL {
        for _ in 0..200 {
            let s = common::random_valid_spec(&mut rng, r);
            let inv = surface_invariants(&s).unwrap();
            let mut report = CurveOrdinarityReport::new();
            for (id, genus) in tower_genera(&s).unwrap() {
                let p_rank = if id == CurveId::E { 0 } else { rng.gen_range(0..=genus) };
                report
                    .insert(id, CurveEntry { genus, p_rank, provenance: Provenance::Supplied })
                    .unwrap();
            }
            let v = decide(&s, &report).unwrap();
            if inv.h2 > 0 {
                ensure(!v.ordinary, format!("{s:?} declared ordinary with h2 > 0"))?;
                vanishing += 1;
            }
            let honest = check_supersingular_corollary(&s, &v, &report).unwrap();
            ensure(!matches!(honest, CorollaryCheck::Violated(_)), format!("{s:?}: {honest:?}"))?;
            let forged = OrdinarityVerdict {
                scope: Scope::SingleX,
                ordinary: true,
                clause: v.clause,
                reasons: vec![],
            };
            let check = check_supersingular_corollary(&s, &forged, &report).unwrap();
            ensure(
                matches!(check, CorollaryCheck::Violated(_)) == !inv.rational,
                format!("{s:?}: forged verdict gave {check:?}"),
            )?;
            reported += usize::from(!inv.rational);
        }
    }
    Ok(format!(
        "{vanishing} specs with h2 > 0 all not ordinary; {reported} forged violations all reported"
    ))
}

fn scan_sanity() -> Outcome {
    let specs = concat!(env!("CARGO_MANIFEST_DIR"), "/specs");
    let run = |file: &str, pmax: &str| -> Result<String, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_isotriv"))
            .args(["scan", &format!("{specs}/{file}"), "--pmax", pmax])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), String::from_utf8_lossy(&out.stderr).to_string())?;
        Ok(String::from_utf8(out.stdout).unwrap())
    };
    let tsv = run("j0_product.toml", "100")?;
    let mut rows = 0;
    for line in tsv.lines().skip(1).filter(|l| !l.starts_with('#')) {
        let cols: Vec<&str> = line.split('\t').collect();
        let p: u64 = cols[0].parse().map_err(|_| format!("bad row {line}"))?;
        ensure(cols[1] == "1", format!("p = {p} flagged bad"))?;
        ensure((cols[4] == "1") == (p % 3 == 1), format!("p = {p}: verdict {}", cols[4]))?;
        rows += 1;
    }
    ensure(rows == 23, format!("{rows} rows for primes 5..100"))?;

    let tsv = run("generic_product.toml", "500")?;
    let (mut good, mut ord) = (0, 0);
    for line in tsv.lines().skip(1).filter(|l| !l.starts_with('#')) {
        let cols: Vec<&str> = line.split('\t').collect();
        if cols[1] == "1" {
            good += 1;
            ord += usize::from(cols[2] == "1");
        }
    }
    ensure(good > 0 && ord > 0, "no ordinary primes for y^2 = x^3 + x + 1")?;
    Ok(format!(
        "x^3+1: 23 primes, ordinary iff p = 1 mod 3; x^3+x+1: {ord}/{good} ordinary up to 500"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("rational double cover at p = 5", rational_double_cover),
        ("Kummer fibration with supersingular D'", kummer),
        ("C4 Hasse configurations at p = 13", order_four_configurations),
        ("Noether identity on random specs", noether),
        ("elliptic Hasse invariant vs point counts", elliptic_oracle),
        ("hyperelliptic p-rank vs zeta function", hyperelliptic_oracle),
        ("Frobenius on H2 vs Cartier-Manin", h2_equivalence),
        ("congruence laws for j = 0 and j = 1728", congruences),
        ("supersingular fiber consequences", supersingular_consequences),
        ("prime scan sanity", scan_sanity),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
