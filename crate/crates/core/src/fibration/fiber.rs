//! Singular fibers of the relatively minimal model, by stabilizer type.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result, Violation};

/// Whether a stabilizer generator acts on the local coordinate of D by the
/// fixed primitive root ξ_e (`Plus`) or by ξ_e⁻¹ (`Minus`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Stabilizer of a point of D, which lies either in T or in R.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Stabilizer {
    Translation { order: u64 },
    Rotation { order: u32, sign: Sign },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum KodairaType {
    SmoothMultiple,
    I0Star,
    II,
    IIStar,
    III,
    IIIStar,
    IV,
    IVStar,
}

impl KodairaType {
    /// l-adic Euler number of the fiber.
    pub fn euler(self) -> i64 {
        match self {
            KodairaType::SmoothMultiple => 0,
            KodairaType::I0Star => 6,
            KodairaType::II => 2,
            KodairaType::IIStar => 10,
            KodairaType::III => 3,
            KodairaType::IIIStar => 9,
            KodairaType::IV => 4,
            KodairaType::IVStar => 8,
        }
    }

    /// The type of the same fiber under the conjugate action.
    pub fn dual(self) -> Self {
        use KodairaType::*;
        match self {
            II => IIStar,
            IIStar => II,
            III => IIIStar,
            IIIStar => III,
            IV => IVStar,
            IVStar => IV,
            t => t,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            KodairaType::SmoothMultiple => "mE",
            KodairaType::I0Star => "I0*",
            KodairaType::II => "II",
            KodairaType::IIStar => "II*",
            KodairaType::III => "III",
            KodairaType::IIIStar => "III*",
            KodairaType::IV => "IV",
            KodairaType::IVStar => "IV*",
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Cyclic quotient singularities on (E × D)/G. `A_n` is the rational double
/// point; `A_{n,q}` is the quotient by (ξ, ξ^q) with ξ of order n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum QuotientSingularity {
    A1,
    A2,
    A3,
    A5,
    A31,
    A41,
    A61,
}

impl QuotientSingularity {
    pub fn label(self) -> &'static str {
        match self {
            QuotientSingularity::A1 => "A1",
            QuotientSingularity::A2 => "A2",
            QuotientSingularity::A3 => "A3",
            QuotientSingularity::A5 => "A5",
            QuotientSingularity::A31 => "A3,1",
            QuotientSingularity::A41 => "A4,1",
            QuotientSingularity::A61 => "A6,1",
        }
    }
}

impl fmt::Display for QuotientSingularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Intersection matrix of the resolved fiber before contracting −1 curves,
/// in the component order L₁ (the −1 curve), L₂, L₃, L₄.
pub type IntersectionMatrix = [[i64; 4]; 4];

pub const MATRIX_IV: IntersectionMatrix = [[-1, 1, 1, 1], [1, -3, 0, 0], [1, 0, -3, 0], [1, 0, 0, -3]];
pub const MATRIX_III: IntersectionMatrix = [[-1, 1, 1, 1], [1, -4, 0, 0], [1, 0, -2, 0], [1, 0, 0, -4]];
pub const MATRIX_II: IntersectionMatrix = [[-1, 1, 1, 1], [1, -6, 0, 0], [1, 0, -3, 0], [1, 0, 0, -2]];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberClass {
    pub kodaira_type: KodairaType,
    pub euler: i64,
    pub singularities: Vec<QuotientSingularity>,
    pub pre_blowdown_matrix: Option<IntersectionMatrix>,
    /// Multiplicities of L₁…L₄ in the resolved fiber, when a matrix is given.
    pub component_multiplicities: Option<[i64; 4]>,
    pub blowdowns: u32,
    /// For a multiple smooth fiber, its multiplicity.
    pub multiplicity: Option<u64>,
}

impl FiberClass {
    fn minimal(kodaira_type: KodairaType, singularities: Vec<QuotientSingularity>) -> Self {
        Self {
            kodaira_type,
            euler: kodaira_type.euler(),
            singularities,
            pre_blowdown_matrix: None,
            component_multiplicities: None,
            blowdowns: 0,
            multiplicity: None,
        }
    }

    fn contracted(
        kodaira_type: KodairaType,
        singularities: Vec<QuotientSingularity>,
        matrix: IntersectionMatrix,
        mult: [i64; 4],
        blowdowns: u32,
    ) -> Self {
        Self {
            pre_blowdown_matrix: Some(matrix),
            component_multiplicities: Some(mult),
            blowdowns,
            ..Self::minimal(kodaira_type, singularities)
        }
    }
}

pub fn classify_fiber(stab: Stabilizer) -> Result<FiberClass> {
    use KodairaType as K;
    use QuotientSingularity::*;
    let fiber = match stab {
        Stabilizer::Translation { order: 0 } => return Err(bad_order("translation", 0)),
        Stabilizer::Translation { order } => FiberClass {
            multiplicity: Some(order),
            ..FiberClass::minimal(K::SmoothMultiple, vec![])
        },
        Stabilizer::Rotation { order: 2, .. } => FiberClass::minimal(K::I0Star, vec![A1; 4]),
        Stabilizer::Rotation { order: 3, sign: Sign::Plus } => {
            FiberClass::contracted(K::IV, vec![A31; 3], MATRIX_IV, [3, 1, 1, 1], 1)
        }
        Stabilizer::Rotation { order: 3, sign: Sign::Minus } => {
            FiberClass::minimal(K::IVStar, vec![A2; 3])
        }
        Stabilizer::Rotation { order: 4, sign: Sign::Plus } => {
            FiberClass::contracted(K::III, vec![A41, A41, A1], MATRIX_III, [4, 1, 2, 1], 2)
        }
        Stabilizer::Rotation { order: 4, sign: Sign::Minus } => {
            FiberClass::minimal(K::IIIStar, vec![A1, A3, A3])
        }
        Stabilizer::Rotation { order: 6, sign: Sign::Plus } => {
            FiberClass::contracted(K::II, vec![A61, A31, A1], MATRIX_II, [6, 1, 2, 3], 3)
        }
        Stabilizer::Rotation { order: 6, sign: Sign::Minus } => {
            FiberClass::minimal(K::IIStar, vec![A5, A2, A1])
        }
        Stabilizer::Rotation { order, .. } => return Err(bad_order("rotation", order as u64)),
    };
    Ok(fiber)
}

fn bad_order(kind: &str, order: u64) -> Error {
    Error::Invalid(vec![Violation::new(
        "stabilizer",
        format!("no {kind} stabilizer of order {order}: rotations have order 2, 3, 4 or 6"),
    )])
}
