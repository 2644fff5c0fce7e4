use std::collections::BTreeMap;

use isotriv::fibration::{surface_invariants, SurfaceInvariants};
use isotriv::ordinarity::{
    build_report, check_supersingular_corollary, decide as decide_spec, hasse_divisor,
    CorollaryCheck, CurveId, CurveOrdinarityReport, HasseDivisor, OrdinarityVerdict, Supplied,
};
use isotriv::{Result, SpecDocument};
use serde::Serialize;

#[derive(Serialize)]
pub struct InvariantsOutput {
    pub spec: SpecDocument,
    pub invariants: SurfaceInvariants,
}

#[derive(Serialize)]
pub struct DecisionOutput {
    pub spec: SpecDocument,
    pub curves: CurveOrdinarityReport,
    pub verdict: OrdinarityVerdict,
    pub supersingular_check: CorollaryCheck,
    pub hasse_divisor: Option<HasseDivisor>,
}

pub fn invariants(doc: &SpecDocument) -> Result<InvariantsOutput> {
    let s = doc.to_spec()?;
    Ok(InvariantsOutput {
        spec: doc.clone(),
        invariants: surface_invariants(&s)?,
    })
}

pub fn decide(doc: &SpecDocument, supplied: &BTreeMap<CurveId, Supplied>) -> Result<DecisionOutput> {
    let s = doc.to_spec()?;
    let curves = build_report(&s, supplied)?;
    let verdict = decide_spec(&s, &curves)?;
    let supersingular_check = check_supersingular_corollary(&s, &verdict, &curves)?;
    let hasse_divisor = match curves.ordinary(CurveId::E) {
        Some(true) => Some(hasse_divisor(&s, &curves)?),
        _ => None,
    };
    Ok(DecisionOutput {
        spec: doc.clone(),
        curves,
        verdict,
        supersingular_check,
        hasse_divisor,
    })
}
