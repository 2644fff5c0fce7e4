use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curves::{AutOrder, EllipticCurve};
use crate::error::{Error, Result, Violation};
use crate::ffpoly::{FpPolynomial, PrimeField};

use super::tower;

/// The rotation part R ⊂ Aut E of the group G = T ⋊ R.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rotation {
    #[serde(rename = "trivial")]
    Trivial,
    C2,
    C3,
    C4,
    C6,
}

impl Rotation {
    pub const ALL: [Rotation; 5] = [
        Rotation::Trivial,
        Rotation::C2,
        Rotation::C3,
        Rotation::C4,
        Rotation::C6,
    ];

    pub fn order(self) -> u64 {
        match self {
            Rotation::Trivial => 1,
            Rotation::C2 => 2,
            Rotation::C3 => 3,
            Rotation::C4 => 4,
            Rotation::C6 => 6,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Rotation::Trivial => "trivial",
            Rotation::C2 => "C2",
            Rotation::C3 => "C3",
            Rotation::C4 => "C4",
            Rotation::C6 => "C6",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.name() == s)
    }
}

impl fmt::Display for Rotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Translation subgroup T = ℤ/n₁ ⊕ ℤ/n₂ with n₂ | n₁.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Translation {
    pub n1: u64,
    pub n2: u64,
}

impl Translation {
    pub const TRIVIAL: Translation = Translation { n1: 1, n2: 1 };

    pub fn order(self) -> u64 {
        self.n1 * self.n2
    }
}

/// Branch points of the cyclic cover D′ → C, by ramification index and
/// by the sign of the character through which a stabilizer generator acts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Ramification {
    pub a2: u64,
    pub a3p: u64,
    pub a3m: u64,
    pub a4p: u64,
    pub a4m: u64,
    pub a6p: u64,
    pub a6m: u64,
}

impl Ramification {
    /// Swaps every `+` count with its `−` partner, the data of the conjugate
    /// action ρ′ on D.
    pub fn flipped(self) -> Self {
        Self {
            a2: self.a2,
            a3p: self.a3m,
            a3m: self.a3p,
            a4p: self.a4m,
            a4m: self.a4p,
            a6p: self.a6m,
            a6m: self.a6p,
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == Self::default()
    }

    fn fields(&self) -> [(&'static str, u64); 7] {
        [
            ("a2", self.a2),
            ("a3p", self.a3p),
            ("a3m", self.a3m),
            ("a4p", self.a4p),
            ("a4m", self.a4m),
            ("a6p", self.a6p),
            ("a6m", self.a6m),
        ]
    }
}

/// Everything defining an isotrivial elliptic fibration (E × D)/G → C.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationSpec {
    pub rotation: Rotation,
    pub translation: Translation,
    pub base_genus: u64,
    pub ramification: Ramification,
    pub field: PrimeField,
    /// The common fiber E, when an explicit model is known.
    pub elliptic: Option<EllipticCurve>,
    /// Branch locus on ℙ¹ of D′ → C for R = ℤ/2: the finite branch points
    /// are the roots, and ∞ is a branch point when the degree is odd.
    pub branch: Option<FpPolynomial>,
}

impl FibrationSpec {
    /// A spec with no explicit models and trivial T.
    pub fn new(field: PrimeField, rotation: Rotation, base_genus: u64, ram: Ramification) -> Self {
        Self {
            rotation,
            translation: Translation::TRIVIAL,
            base_genus,
            ramification: ram,
            field,
            elliptic: None,
            branch: None,
        }
    }

    pub fn with_elliptic(mut self, e: EllipticCurve) -> Self {
        self.elliptic = Some(e);
        self
    }

    pub fn with_branch(mut self, f: FpPolynomial) -> Self {
        self.branch = Some(f);
        self
    }

    pub fn group_order(&self) -> u64 {
        self.translation.order() * self.rotation.order()
    }

    /// The spec of X′, built from the conjugate action on D. Explicit
    /// models are kept.
    pub fn flipped(&self) -> Self {
        Self {
            ramification: self.ramification.flipped(),
            ..self.clone()
        }
    }

    /// [`validate_spec`] as a `Result`.
    pub fn validate(&self) -> Result<()> {
        validate_spec(self).map_err(Error::Invalid)
    }
}

/// Checks the group order against p, the shape of the ramification data,
/// integrality of every line-bundle degree, nonnegativity of the genera in
/// the cover tower, and consistency of the explicit models.
pub fn validate_spec(s: &FibrationSpec) -> std::result::Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    let p = s.field.characteristic();

    let Translation { n1, n2 } = s.translation;
    if n1 == 0 || n2 == 0 || n1 % n2 != 0 {
        out.push(Violation::new(
            "translation",
            format!("T = Z/{n1} + Z/{n2} needs n1, n2 >= 1 and n2 | n1"),
        ));
    } else if s.group_order().is_multiple_of(p) {
        out.push(Violation::new(
            "characteristic",
            format!("p = {p} divides |G| = {n1}*{n2}*{}", s.rotation.order()),
        ));
    }

    let allowed: &[&str] = match s.rotation {
        Rotation::Trivial => &[],
        Rotation::C2 => &["a2"],
        Rotation::C3 => &["a3p", "a3m"],
        Rotation::C4 => &["a4p", "a4m", "a2"],
        Rotation::C6 => &["a6p", "a6m", "a3p", "a3m", "a2"],
    };
    let mut shape_ok = true;
    for (name, v) in s.ramification.fields() {
        if v != 0 && !allowed.contains(&name) {
            shape_ok = false;
            out.push(Violation::new(
                "ramification-shape",
                format!(
                    "{name} = {v}: branch points of that index cannot occur for R = {}",
                    s.rotation
                ),
            ));
        }
    }

    if shape_ok {
        for term in tower::degree_terms(s.rotation, &s.ramification) {
            if term.numerator % term.denominator != 0 {
                out.push(Violation::new(
                    "integrality",
                    format!(
                        "deg L{} = -({})/{} = -{}/{} is not an integer",
                        term.index, term.formula, term.denominator, term.numerator, term.denominator
                    ),
                ));
            }
        }
        for (name, twice_g_minus_2) in tower::riemann_hurwitz(s) {
            if twice_g_minus_2 < -2 || twice_g_minus_2 % 2 != 0 {
                out.push(Violation::new(
                    "riemann-hurwitz",
                    format!(
                        "2g({name}) - 2 = {twice_g_minus_2} does not give a nonnegative integer genus"
                    ),
                ));
            }
        }
    }

    if let Some(e) = &s.elliptic {
        if e.field() != s.field {
            out.push(Violation::new(
                "model",
                format!("E is defined over {}, spec over {}", e.field(), s.field),
            ));
        } else {
            let need = match s.rotation {
                Rotation::C3 | Rotation::C6 => Some(AutOrder::Six),
                Rotation::C4 => Some(AutOrder::Four),
                _ => None,
            };
            if let Some(need) = need {
                if e.aut_order() != need {
                    out.push(Violation::new(
                        "model",
                        format!(
                            "R = {} must embed in Aut E, which needs j = {}; {e} has j = {}",
                            s.rotation,
                            if need == AutOrder::Six { 0 } else { 1728 },
                            e.j_invariant()
                        ),
                    ));
                }
            }
        }
    }

    if let Some(f) = &s.branch {
        if s.rotation != Rotation::C2 || s.base_genus != 0 {
            out.push(Violation::new(
                "model",
                "an explicit branch polynomial requires R = C2 and base genus 0",
            ));
        } else if f.field() != s.field {
            out.push(Violation::new(
                "model",
                format!("branch polynomial over {}, spec over {}", f.field(), s.field),
            ));
        } else if !f.is_squarefree() {
            out.push(Violation::new(
                "model",
                format!("branch polynomial {f} is not squarefree"),
            ));
        } else {
            let deg = f.degree().unwrap_or(0) as u64;
            let points = deg + deg % 2;
            if points != s.ramification.a2 {
                out.push(Violation::new(
                    "model",
                    format!(
                        "branch polynomial of degree {deg} gives {points} branch points (counting infinity when odd), but a2 = {}",
                        s.ramification.a2
                    ),
                ));
            }
        }
    }

    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn spec(r: Rotation, g: u64, ram: Ramification) -> FibrationSpec {
        FibrationSpec::new(f(7), r, g, ram)
    }

    fn rules(s: &FibrationSpec) -> Vec<&'static str> {
        validate_spec(s).err().unwrap_or_default().iter().map(|v| v.rule).collect()
    }

    #[test]
    fn odd_a2_is_not_integral() {
        let s = spec(Rotation::C2, 0, Ramification { a2: 3, ..Default::default() });
        assert!(rules(&s).contains(&"integrality"));
        let msg = validate_spec(&s).unwrap_err()[0].to_string();
        assert!(msg.contains("deg L1"), "{msg}");
    }

    #[test]
    fn c3_one_each_is_fine() {
        let s = spec(Rotation::C3, 0, Ramification { a3p: 1, a3m: 1, ..Default::default() });
        assert_eq!(validate_spec(&s), Ok(()));
    }

    #[test]
    fn index_two_points_need_even_rotation() {
        let s = spec(Rotation::C3, 0, Ramification { a2: 1, ..Default::default() });
        assert_eq!(rules(&s), vec!["ramification-shape"]);
        let s = spec(Rotation::Trivial, 1, Ramification { a4p: 1, ..Default::default() });
        assert_eq!(rules(&s), vec!["ramification-shape"]);
    }

    #[test]
    fn p_dividing_group_order() {
        let mut s = spec(Rotation::C2, 0, Ramification { a2: 4, ..Default::default() });
        s.translation = Translation { n1: 7, n2: 1 };
        assert_eq!(rules(&s), vec!["characteristic"]);
        s.translation = Translation { n1: 3, n2: 2 };
        assert_eq!(rules(&s), vec!["translation"]);
    }

    #[test]
    fn unramified_cover_of_the_line_is_impossible() {
        let s = spec(Rotation::C2, 0, Ramification::default());
        assert_eq!(rules(&s), vec!["riemann-hurwitz"]);
        let s = spec(Rotation::C2, 1, Ramification::default());
        assert_eq!(validate_spec(&s), Ok(()));
    }

    #[test]
    fn elliptic_model_must_admit_the_rotation() {
        let fld = f(13);
        let s = FibrationSpec::new(fld, Rotation::C3, 0, Ramification { a3p: 1, a3m: 1, ..Default::default() });
        let j0 = EllipticCurve::from_i64(fld, 0, 1).unwrap();
        let j1728 = EllipticCurve::from_i64(fld, 1, 0).unwrap();
        assert_eq!(validate_spec(&s.clone().with_elliptic(j0)), Ok(()));
        assert_eq!(rules(&s.with_elliptic(j1728)), vec!["model"]);
        let s = FibrationSpec::new(fld, Rotation::C4, 0, Ramification { a4p: 2, a2: 1, ..Default::default() });
        assert_eq!(validate_spec(&s.clone().with_elliptic(j1728)), Ok(()));
        assert_eq!(rules(&s.with_elliptic(j0)), vec!["model"]);
    }

    #[test]
    fn branch_polynomial_checks() {
        let fld = f(7);
        let ram = Ramification { a2: 4, ..Default::default() };
        let s = FibrationSpec::new(fld, Rotation::C2, 0, ram);
        let quartic = FpPolynomial::from_i64(fld, &[1, 0, 0, 1, 1]);
        assert!(quartic.is_squarefree());
        assert_eq!(validate_spec(&s.clone().with_branch(quartic)), Ok(()));
        // a cubic also has 4 branch points once infinity is counted
        let cubic = FpPolynomial::from_i64(fld, &[1, 0, 0, 1]);
        assert_eq!(validate_spec(&s.clone().with_branch(cubic)), Ok(()));
        let square = FpPolynomial::from_i64(fld, &[1, 2, 1]);
        assert_eq!(rules(&s.clone().with_branch(square)), vec!["model"]);
        let sextic = FpPolynomial::from_i64(fld, &[1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(rules(&s.with_branch(sextic)), vec!["model"]);
    }
}
