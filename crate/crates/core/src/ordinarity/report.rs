use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::curves::HyperellipticCurve;
use crate::error::{Error, Result};
use crate::fibration::{genus_cover_tower, FibrationSpec, Rotation};

/// The curves whose ordinarity feeds the decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CurveId {
    /// The common fiber.
    E,
    /// The base.
    C,
    /// D′ = D/T, the R-cover of C.
    #[serde(rename = "Dp")]
    DPrime,
    /// The intermediate double cover.
    #[serde(rename = "Dpp")]
    DDouble,
    /// The intermediate triple cover.
    #[serde(rename = "Dppp")]
    DTriple,
}

impl CurveId {
    pub const ALL: [CurveId; 5] = [
        CurveId::E,
        CurveId::C,
        CurveId::DPrime,
        CurveId::DDouble,
        CurveId::DTriple,
    ];

    /// Short ASCII name used on the command line: `E`, `C`, `Dp`, `Dpp`, `Dppp`.
    pub fn name(self) -> &'static str {
        match self {
            CurveId::E => "E",
            CurveId::C => "C",
            CurveId::DPrime => "Dp",
            CurveId::DDouble => "Dpp",
            CurveId::DTriple => "Dppp",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == s)
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Computed,
    Supplied,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CurveEntry {
    pub genus: u64,
    pub p_rank: u64,
    pub provenance: Provenance,
}

impl CurveEntry {
    pub fn ordinary(&self) -> bool {
        self.p_rank == self.genus
    }
}

/// A user-supplied ordinarity fact about a curve without an explicit model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Supplied {
    Ordinary,
    Supersingular,
    PRank(u64),
}

impl Supplied {
    fn p_rank(self, genus: u64) -> u64 {
        match self {
            Supplied::Ordinary => genus,
            Supplied::Supersingular => 0,
            Supplied::PRank(r) => r,
        }
    }

    /// Parses `ordinary`, `supersingular` or a nonnegative p-rank.
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "ordinary" => Some(Supplied::Ordinary),
            "supersingular" => Some(Supplied::Supersingular),
            n => n.parse().ok().map(Supplied::PRank),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CurveOrdinarityReport {
    entries: BTreeMap<CurveId, CurveEntry>,
}

impl CurveOrdinarityReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds or replaces an entry; rejects a p-rank above the genus.
    pub fn insert(&mut self, id: CurveId, entry: CurveEntry) -> Result<()> {
        if entry.p_rank > entry.genus {
            return Err(Error::Inconsistent(format!(
                "{id}: p-rank {} exceeds genus {}",
                entry.p_rank, entry.genus
            )));
        }
        self.entries.insert(id, entry);
        Ok(())
    }

    pub fn with(mut self, id: CurveId, genus: u64, p_rank: u64) -> Result<Self> {
        self.insert(
            id,
            CurveEntry {
                genus,
                p_rank,
                provenance: Provenance::Supplied,
            },
        )?;
        Ok(self)
    }

    pub fn get(&self, id: CurveId) -> Option<&CurveEntry> {
        self.entries.get(&id)
    }

    pub fn ordinary(&self, id: CurveId) -> Option<bool> {
        self.get(id).map(CurveEntry::ordinary)
    }

    pub fn iter(&self) -> impl Iterator<Item = (CurveId, &CurveEntry)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }
}

/// The curves present in the tower of this spec, with their genera.
pub fn tower_genera(s: &FibrationSpec) -> Result<Vec<(CurveId, u64)>> {
    let tower = genus_cover_tower(s)?;
    let mut out = vec![(CurveId::E, 1), (CurveId::C, s.base_genus)];
    if s.rotation != Rotation::Trivial {
        out.push((CurveId::DPrime, tower.d_prime));
    }
    if let Some(g) = tower.d_double {
        out.push((CurveId::DDouble, g));
    }
    if let Some(g) = tower.d_triple {
        out.push((CurveId::DTriple, g));
    }
    Ok(out)
}

/// Fills in every curve that can be decided from the spec alone: E from its
/// model, curves of genus 0, and D′ from the branch polynomial. Supplied
/// facts cover the rest; a supplied fact that contradicts a computed one is
/// an error.
pub fn build_report(
    s: &FibrationSpec,
    supplied: &BTreeMap<CurveId, Supplied>,
) -> Result<CurveOrdinarityReport> {
    let genera = tower_genera(s)?;
    for id in supplied.keys() {
        if !genera.iter().any(|(g, _)| g == id) {
            return Err(Error::Inconsistent(format!(
                "curve {id} does not occur for R = {}",
                s.rotation
            )));
        }
    }

    let mut report = CurveOrdinarityReport::new();
    for (id, genus) in genera {
        let computed = computed_p_rank(s, id, genus)?;
        let given = supplied.get(&id).map(|v| v.p_rank(genus));
        let entry = match (computed, given) {
            (Some(c), Some(g)) if c != g => {
                return Err(Error::Inconsistent(format!(
                    "{id}: supplied p-rank {g} but the model gives {c}"
                )))
            }
            (Some(c), _) => CurveEntry {
                genus,
                p_rank: c,
                provenance: Provenance::Computed,
            },
            (None, Some(g)) => CurveEntry {
                genus,
                p_rank: g,
                provenance: Provenance::Supplied,
            },
            (None, None) => continue,
        };
        report.insert(id, entry)?;
    }
    Ok(report)
}

fn computed_p_rank(s: &FibrationSpec, id: CurveId, genus: u64) -> Result<Option<u64>> {
    if genus == 0 {
        return Ok(Some(0));
    }
    Ok(match id {
        CurveId::E => s.elliptic.map(|e| u64::from(e.is_ordinary())),
        CurveId::DPrime => match &s.branch {
            Some(f) if f.degree().unwrap_or(0) >= 3 => {
                let h = HyperellipticCurve::new(f.clone())?;
                debug_assert_eq!(h.genus() as u64, genus);
                Some(h.p_rank() as u64)
            }
            _ => None,
        },
        _ => None,
    })
}
