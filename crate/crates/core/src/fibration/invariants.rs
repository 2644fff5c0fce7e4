use serde::Serialize;

use crate::error::{Error, Result};

use super::fiber::{classify_fiber, FiberClass, Sign, Stabilizer};
use super::spec::{FibrationSpec, Ramification, Rotation};
use super::tower::{genus_cover_tower, line_bundle_degrees, CoverTower};

/// A branch point of D′ → C together with the fiber of X over it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchFiber {
    /// 1-based position in the canonical listing order
    /// (index 2, then 3±, 4±, 6±).
    pub id: usize,
    pub index: u32,
    pub sign: Sign,
    pub fiber: FiberClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    pub rotation: Rotation,
    /// `deg L₁, …, deg L_{n−1}`.
    pub deg_l: Vec<i64>,
    pub chi: i64,
    pub euler_total: i64,
    pub h1: u64,
    pub h2: u64,
    /// `−deg R¹π_*O_X`.
    pub d: i64,
    pub rational: bool,
    pub k3_candidate: bool,
    pub tower: CoverTower,
    pub fibers: Vec<BranchFiber>,
}

/// One singular fiber per branch point of D′ → C. Multiple fibers coming from
/// T are not listed.
pub fn singular_fibers(r: Rotation, ram: &Ramification) -> Result<Vec<BranchFiber>> {
    let groups: [(u32, Sign, u64); 7] = [
        (2, Sign::Plus, ram.a2),
        (3, Sign::Plus, ram.a3p),
        (3, Sign::Minus, ram.a3m),
        (4, Sign::Plus, ram.a4p),
        (4, Sign::Minus, ram.a4m),
        (6, Sign::Plus, ram.a6p),
        (6, Sign::Minus, ram.a6m),
    ];
    let mut out = Vec::new();
    if r == Rotation::Trivial {
        return Ok(out);
    }
    for (index, sign, count) in groups {
        if count == 0 {
            continue;
        }
        let fiber = classify_fiber(Stabilizer::Rotation { order: index, sign })?;
        for _ in 0..count {
            out.push(BranchFiber {
                id: out.len() + 1,
                index,
                sign,
                fiber: fiber.clone(),
            });
        }
    }
    Ok(out)
}

/// Euler number of X from the closed-form count of fiber types.
pub fn euler_closed_form(r: Rotation, ram: &Ramification) -> i64 {
    let [a2, a3p, a3m, a4p, a4m, a6p, a6m] = [
        ram.a2, ram.a3p, ram.a3m, ram.a4p, ram.a4m, ram.a6p, ram.a6m,
    ]
    .map(|v| v as i64);
    match r {
        Rotation::Trivial => 0,
        Rotation::C2 => 6 * a2,
        Rotation::C3 => 4 * a3p + 8 * a3m,
        Rotation::C4 => 3 * a4p + 9 * a4m + 6 * a2,
        Rotation::C6 => 2 * a6p + 10 * a6m + 4 * a3p + 8 * a3m + 6 * a2,
    }
}

pub fn surface_invariants(s: &FibrationSpec) -> Result<SurfaceInvariants> {
    let deg_l = line_bundle_degrees(s)?;
    let tower = genus_cover_tower(s)?;
    let fibers = singular_fibers(s.rotation, &s.ramification)?;
    let g = s.base_genus as i64;

    let (chi, d, h1, h2) = match deg_l.last() {
        // R trivial: R¹π_*O_X = O_C
        None => (0, 0, g + 1, g),
        Some(&top) => {
            let d = -top;
            // h¹ of a degree-(−d) line bundle; for d = 0 it is a nontrivial
            // torsion bundle and has no sections
            let h2 = g - 1 + d;
            (d, d, g, h2)
        }
    };

    let closed = euler_closed_form(s.rotation, &s.ramification);
    let summed: i64 = fibers.iter().map(|f| f.fiber.euler).sum();
    if closed != summed {
        return Err(Error::Inconsistent(format!(
            "Euler number {closed} from the closed form but {summed} from the fibers"
        )));
    }
    if 12 * chi != summed {
        return Err(Error::Inconsistent(format!(
            "Noether formula fails: 12·chi = {} but E_l = {summed}",
            12 * chi
        )));
    }

    Ok(SurfaceInvariants {
        rotation: s.rotation,
        deg_l,
        chi,
        euler_total: summed,
        h1: h1 as u64,
        h2: h2 as u64,
        d,
        rational: g == 0 && d == 1,
        k3_candidate: g == 0 && d == 2,
        tower,
        fibers,
    })
}
