//! TOML description of a fibration, with integer models for E and the
//! branch polynomial so that one document can be reduced at many primes.
//!
//! ```toml
//! p = 7
//! R = "C2"
//! genus_base = 0
//! branch = [1, 0, 0, 0, 1]
//!
//! [ram]
//! a2 = 4
//!
//! [E]
//! a = 0
//! b = 1
//! ```

use serde::{Deserialize, Serialize};

use crate::curves::RationalCurve;
use crate::error::{Error, Result};
use crate::ffpoly::{FpPolynomial, PrimeField};
use crate::fibration::{FibrationSpec, Ramification, Rotation, Translation};

fn trivial_translation() -> [u64; 2] {
    [1, 1]
}

fn is_trivial_translation(t: &[u64; 2]) -> bool {
    *t == [1, 1]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    /// Absent for documents meant to be reduced at many primes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(rename = "R")]
    pub rotation: Rotation,
    #[serde(
        rename = "T",
        default = "trivial_translation",
        skip_serializing_if = "is_trivial_translation"
    )]
    pub translation: [u64; 2],
    #[serde(default)]
    pub genus_base: u64,
    /// Coefficients, lowest degree first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<Vec<i64>>,
    #[serde(default)]
    pub ram: Ramification,
    #[serde(rename = "E", default, skip_serializing_if = "Option::is_none")]
    pub elliptic: Option<RationalCurve>,
}

impl SpecDocument {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string().trim_end().to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("spec documents always serialize")
    }

    /// The spec at the document's own prime.
    pub fn to_spec(&self) -> Result<FibrationSpec> {
        let p = self.p.ok_or_else(|| Error::Missing {
            clause: "document",
            missing: vec!["p".into()],
        })?;
        self.at_prime(p)
    }

    /// Reduces the models mod `p` and validates the result.
    pub fn at_prime(&self, p: u64) -> Result<FibrationSpec> {
        let field = PrimeField::new(p)?;
        let mut s = FibrationSpec::new(field, self.rotation, self.genus_base, self.ram);
        s.translation = Translation {
            n1: self.translation[0],
            n2: self.translation[1],
        };
        if let Some(c) = self.elliptic {
            let c = RationalCurve::new(c.a, c.b)?;
            let e = c.reduce(field).ok_or_else(|| {
                Error::InvalidCurve(format!(
                    "y^2 = x^3 + {}x + {} has bad reduction at {p}",
                    c.a, c.b
                ))
            })?;
            s = s.with_elliptic(e);
        }
        if let Some(coeffs) = &self.branch {
            s = s.with_branch(FpPolynomial::from_i64(field, coeffs));
        }
        s.validate()?;
        Ok(s)
    }

    /// The document of a spec, with coefficients as residues in `[0, p)`.
    pub fn from_spec(s: &FibrationSpec) -> Self {
        Self {
            p: Some(s.field.characteristic()),
            rotation: s.rotation,
            translation: [s.translation.n1, s.translation.n2],
            genus_base: s.base_genus,
            branch: s
                .branch
                .as_ref()
                .map(|f| f.raw().iter().map(|&c| c as i64).collect()),
            ram: s.ramification,
            elliptic: s.elliptic.map(|e| RationalCurve {
                a: e.a().value() as i64,
                b: e.b().value() as i64,
            }),
        }
    }
}
