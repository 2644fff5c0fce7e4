use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fibration::{surface_invariants, FibrationSpec, Rotation, SurfaceInvariants};

use super::report::{CurveEntry, CurveId, CurveOrdinarityReport};

/// Whether a verdict speaks about X alone or about X and X′ together.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    SingleX,
    PairXXprime,
}

/// The criterion that produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Clause {
    /// R trivial: E and C ordinary.
    TrivialRotation,
    /// R = ℤ/2: E and D′ ordinary.
    Order2,
    /// R = ℤ/3: D′ and E ordinary, for X and X′ together.
    Order3,
    /// R = ℤ/4: E, C ordinary and the p-rank of D′ over D″ is maximal.
    Order4,
    /// R = ℤ/6: E, C ordinary and the p-rank of D′ over D‴ is maximal.
    Order6,
    /// h¹ = h² = 0, nothing to check.
    RationalException,
    /// E supersingular and h² > 0: relative Frobenius vanishes on H².
    HVanishing,
}

impl Clause {
    pub fn label(self) -> &'static str {
        match self {
            Clause::TrivialRotation => "trivial-R",
            Clause::Order2 => "R-order-2",
            Clause::Order3 => "R-order-3",
            Clause::Order4 => "R-order-4",
            Clause::Order6 => "R-order-6",
            Clause::RationalException => "rational-exception",
            Clause::HVanishing => "h-vanishing",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrdinarityVerdict {
    pub scope: Scope,
    pub ordinary: bool,
    pub clause: Clause,
    pub reasons: Vec<String>,
}

fn clause_for(r: Rotation) -> Clause {
    match r {
        Rotation::Trivial => Clause::TrivialRotation,
        Rotation::C2 => Clause::Order2,
        Rotation::C3 => Clause::Order3,
        Rotation::C4 => Clause::Order4,
        Rotation::C6 => Clause::Order6,
    }
}

fn required(r: Rotation) -> &'static [CurveId] {
    use CurveId::*;
    match r {
        Rotation::Trivial => &[E, C],
        Rotation::C2 | Rotation::C3 => &[E, DPrime],
        Rotation::C4 => &[E, C, DPrime, DDouble],
        Rotation::C6 => &[E, C, DPrime, DTriple],
    }
}

fn describe(id: CurveId, e: &CurveEntry) -> String {
    format!(
        "{id}: genus {}, p-rank {} ({}, {})",
        e.genus,
        e.p_rank,
        if e.ordinary() { "ordinary" } else { "not ordinary" },
        match e.provenance {
            super::report::Provenance::Computed => "computed",
            super::report::Provenance::Supplied => "supplied",
        }
    )
}

/// Decides ordinarity of X (or of the pair X, X′ when R has order 3, 4 or 6)
/// from the ordinarity data of the curves in the tower.
pub fn decide(s: &FibrationSpec, report: &CurveOrdinarityReport) -> Result<OrdinarityVerdict> {
    let inv = surface_invariants(s)?;
    let scope = match s.rotation {
        Rotation::Trivial | Rotation::C2 => Scope::SingleX,
        _ => Scope::PairXXprime,
    };
    let partner: Option<SurfaceInvariants> = match scope {
        Scope::SingleX => None,
        Scope::PairXXprime => Some(surface_invariants(&s.flipped())?),
    };
    let mut reasons = Vec::new();

    let rational = inv.rational && partner.as_ref().is_none_or(|x| x.rational);
    if rational {
        reasons.push(format!("X: g_C = 0 and d = {}, so h1 = h2 = 0", inv.d));
        if partner.is_some() {
            reasons.push("X': also rational".to_string());
        }
        return Ok(OrdinarityVerdict {
            scope,
            ordinary: true,
            clause: Clause::RationalException,
            reasons,
        });
    }

    let clause = clause_for(s.rotation);
    let missing: Vec<String> = required(s.rotation)
        .iter()
        .filter(|id| report.get(**id).is_none())
        .map(|id| id.name().to_string())
        .collect();
    if !missing.is_empty() {
        return Err(Error::Missing {
            clause: clause.label(),
            missing,
        });
    }
    let entry = |id| *report.get(id).expect("checked above");

    let e = entry(CurveId::E);
    let h2 = partner.as_ref().map_or(inv.h2, |x| x.h2.max(inv.h2));
    if h2 > 0 && !e.ordinary() {
        reasons.push(describe(CurveId::E, &e));
        reasons.push(format!(
            "h2 = {h2} > 0, and relative Frobenius is zero for supersingular E"
        ));
        return Ok(OrdinarityVerdict {
            scope,
            ordinary: false,
            clause: Clause::HVanishing,
            reasons,
        });
    }

    let mut ordinary = true;
    for &id in required(s.rotation) {
        let en = entry(id);
        reasons.push(describe(id, &en));
        let needs_ordinary = match s.rotation {
            Rotation::C4 | Rotation::C6 => matches!(id, CurveId::E | CurveId::C),
            _ => true,
        };
        if needs_ordinary {
            ordinary &= en.ordinary();
        }
    }

    let lower = match s.rotation {
        Rotation::C4 => Some(CurveId::DDouble),
        Rotation::C6 => Some(CurveId::DTriple),
        _ => None,
    };
    if let Some(lower) = lower {
        let top = entry(CurveId::DPrime);
        let bottom = entry(lower);
        let genus_gap = top.genus as i64 - bottom.genus as i64;
        let rank_gap = top.p_rank as i64 - bottom.p_rank as i64;
        reasons.push(format!(
            "g(Dp) - g({lower}) = {genus_gap}, p-rank(Dp) - p-rank({lower}) = {rank_gap}"
        ));
        ordinary &= genus_gap == rank_gap;
        if s.rotation == Rotation::C6 {
            reasons.push("the verdict covers X, X' and D'' together".to_string());
        }
    }

    Ok(OrdinarityVerdict {
        scope,
        ordinary,
        clause,
        reasons,
    })
}

/// Outcome of checking that a supersingular E only appears under an
/// ordinary verdict when X is rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CorollaryCheck {
    Holds,
    /// E is ordinary or unknown, so there is nothing to check.
    Vacuous,
    Violated(String),
}

pub fn check_supersingular_corollary(
    s: &FibrationSpec,
    v: &OrdinarityVerdict,
    report: &CurveOrdinarityReport,
) -> Result<CorollaryCheck> {
    if report.ordinary(CurveId::E) != Some(false) {
        return Ok(CorollaryCheck::Vacuous);
    }
    if !v.ordinary {
        return Ok(CorollaryCheck::Holds);
    }
    let inv = surface_invariants(s)?;
    if inv.rational {
        Ok(CorollaryCheck::Holds)
    } else {
        Ok(CorollaryCheck::Violated(format!(
            "E is supersingular and X is declared ordinary, but g_C = {} and d = {}",
            s.base_genus, inv.d
        )))
    }
}
