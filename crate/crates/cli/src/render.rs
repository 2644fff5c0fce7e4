use std::fmt::Write;

use isotriv::fibration::Sign;
use isotriv::golden::GoldenResult;
use isotriv::ordinarity::{CorollaryCheck, Provenance, Scope};
use isotriv::scan::{ScanReport, ScanRow};
use isotriv::SpecDocument;
use serde::Serialize;

use crate::commands::{DecisionOutput, InvariantsOutput};

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("outputs always serialize");
    s.push('\n');
    s
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn header(out: &mut String, doc: &SpecDocument) {
    let [n1, n2] = doc.translation;
    let _ = write!(out, "R = {}, T = Z/{n1} + Z/{n2}, g(C) = {}", doc.rotation, doc.genus_base);
    if let Some(p) = doc.p {
        let _ = write!(out, ", p = {p}");
    }
    out.push('\n');
}

pub fn invariants_text(o: &InvariantsOutput) -> String {
    let inv = &o.invariants;
    let mut out = String::new();
    header(&mut out, &o.spec);
    let degs: Vec<String> = inv.deg_l.iter().map(i64::to_string).collect();
    let _ = writeln!(out, "deg L_i       {}", if degs.is_empty() { "-".into() } else { degs.join(" ") });
    let _ = writeln!(out, "chi           {}", inv.chi);
    let _ = writeln!(out, "euler         {}", inv.euler_total);
    let _ = writeln!(out, "h1, h2        {}, {}", inv.h1, inv.h2);
    let _ = writeln!(out, "d             {}", inv.d);
    let _ = writeln!(out, "rational      {}", yes_no(inv.rational));
    let _ = writeln!(out, "K3 candidate  {}", yes_no(inv.k3_candidate));
    let mut tower = format!("g(D') = {}", inv.tower.d_prime);
    if let Some(g) = inv.tower.d_double {
        let _ = write!(tower, ", g(D'') = {g}");
    }
    if let Some(g) = inv.tower.d_triple {
        let _ = write!(tower, ", g(D''') = {g}");
    }
    let _ = writeln!(out, "cover tower   {tower}");
    let _ = writeln!(out, "singular fibers: {}", inv.fibers.len());
    for f in &inv.fibers {
        let sign = match (f.index, f.sign) {
            (2, _) => "",
            (_, Sign::Plus) => "+",
            (_, Sign::Minus) => "-",
        };
        let sing: Vec<&str> = f.fiber.singularities.iter().map(|s| s.label()).collect();
        let _ = writeln!(
            out,
            "  {:>3}  {:<4} euler {:>2}  index {}{sign:<1}  {}",
            f.id,
            f.fiber.kodaira_type.label(),
            f.fiber.euler,
            f.index,
            sing.join(" ")
        );
    }
    out
}

pub fn decision_text(o: &DecisionOutput) -> String {
    let mut out = String::new();
    header(&mut out, &o.spec);
    out.push_str("curves:\n");
    for (id, e) in o.curves.iter() {
        let _ = writeln!(
            out,
            "  {:<5} genus {}  p-rank {}  {}  ({})",
            id.name(),
            e.genus,
            e.p_rank,
            if e.ordinary() { "ordinary" } else { "not ordinary" },
            match e.provenance {
                Provenance::Computed => "computed",
                Provenance::Supplied => "supplied",
            }
        );
    }
    let v = &o.verdict;
    let scope = match v.scope {
        Scope::SingleX => "X",
        Scope::PairXXprime => "X and X'",
    };
    let _ = writeln!(
        out,
        "verdict: {scope} {} [{}]",
        if v.ordinary { "ordinary" } else { "not ordinary" },
        v.clause
    );
    for r in &v.reasons {
        let _ = writeln!(out, "  - {r}");
    }
    let check = match &o.supersingular_check {
        CorollaryCheck::Holds => "holds".to_string(),
        CorollaryCheck::Vacuous => "vacuous (E ordinary or unknown)".to_string(),
        CorollaryCheck::Violated(m) => format!("VIOLATED: {m}"),
    };
    let _ = writeln!(out, "supersingular-E check: {check}");
    if let Some(h) = &o.hasse_divisor {
        let _ = writeln!(out, "Hasse divisor: degree {} = d(p-1) = {}·{}", h.total_degree, h.d, h.p - 1);
        for e in &h.entries {
            let _ = writeln!(
                out,
                "  fiber {:>3}  {:<4} multiplicity {}",
                e.fiber_id,
                e.kodaira_type.label(),
                e.multiplicity
            );
        }
    }
    out
}

pub fn golden_text(results: &[GoldenResult]) -> String {
    let mut out = String::new();
    for r in results {
        let _ = writeln!(out, "{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name);
        if !r.passed {
            let _ = writeln!(out, "     {}", r.detail);
        }
    }
    let passed = results.iter().filter(|r| r.passed).count();
    let _ = writeln!(out, "{passed}/{} passed", results.len());
    out
}

fn flag(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "1",
        Some(false) => "0",
        None => "-",
    }
}

pub fn scan_tsv(report: &ScanReport) -> String {
    let mut out = String::from("p\tgood\tE_ord\tDp_ord\tverdict\n");
    for ScanRow {
        p,
        good,
        e_ordinary,
        dp_ordinary,
        verdict,
    } in &report.rows
    {
        let _ = writeln!(
            out,
            "{p}\t{}\t{}\t{}\t{}",
            flag(Some(*good)),
            flag(*e_ordinary),
            flag(*dp_ordinary),
            flag(*verdict)
        );
    }
    let s = &report.summary;
    let _ = writeln!(
        out,
        "# good primes {}, ordinary {} ({:.4}), E ordinary {} ({:.4})",
        s.good_primes,
        s.ordinary,
        s.fraction(),
        s.e_ordinary,
        s.e_fraction()
    );
    out
}

#[derive(Serialize)]
struct ScanJson<'a> {
    p_max: u64,
    rows: &'a [ScanRow],
    good_primes: usize,
    ordinary: usize,
    e_ordinary: usize,
    fraction: f64,
    e_fraction: f64,
}

pub fn scan_json(report: &ScanReport) -> String {
    let s = &report.summary;
    json(&ScanJson {
        p_max: report.p_max,
        rows: &report.rows,
        good_primes: s.good_primes,
        ordinary: s.ordinary,
        e_ordinary: s.e_ordinary,
        fraction: s.fraction(),
        e_fraction: s.e_fraction(),
    })
}
