#![allow(dead_code)]

use isotriv::ffpoly::{FpPolynomial, PrimeField};
use isotriv::fibration::{FibrationSpec, Ramification, Rotation, Translation};
use rand::rngs::StdRng;
use rand::Rng;

pub const PRIMES: [u64; 10] = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn counts(rng: &mut StdRng, r: Rotation) -> Ramification {
    let mut c = |max: u64| rng.gen_range(0..=max);
    match r {
        Rotation::Trivial => Ramification::default(),
        Rotation::C2 => Ramification { a2: 2 * c(5), ..Default::default() },
        Rotation::C3 => Ramification { a3p: c(6), a3m: c(6), ..Default::default() },
        Rotation::C4 => Ramification { a4p: c(6), a4m: c(6), a2: c(4), ..Default::default() },
        Rotation::C6 => Ramification {
            a6p: c(4),
            a6m: c(4),
            a3p: c(4),
            a3m: c(4),
            a2: c(4),
            ..Default::default()
        },
    }
}

/// A random spec of the given rotation class that passes validation.
pub fn random_valid_spec(rng: &mut StdRng, r: Rotation) -> FibrationSpec {
    loop {
        let p = PRIMES[rng.gen_range(0..PRIMES.len())];
        let g = rng.gen_range(0..=3);
        let mut s = FibrationSpec::new(PrimeField::new(p).unwrap(), r, g, counts(rng, r));
        s.translation = match rng.gen_range(0..4) {
            0 => Translation { n1: 2, n2: 1 },
            1 => Translation { n1: 3, n2: 1 },
            2 => Translation { n1: 2, n2: 2 },
            _ => Translation::TRIVIAL,
        };
        if s.validate().is_ok() {
            return s;
        }
    }
}

/// A random monic squarefree polynomial of the given degree.
pub fn random_squarefree(rng: &mut StdRng, field: PrimeField, degree: usize) -> FpPolynomial {
    let p = field.characteristic() as i64;
    loop {
        let mut c: Vec<i64> = (0..degree).map(|_| rng.gen_range(0..p)).collect();
        c.push(1);
        let f = FpPolynomial::from_i64(field, &c);
        if f.is_squarefree() {
            return f;
        }
    }
}

/// A random nonsingular `(a, b)` over the field.
pub fn random_curve(rng: &mut StdRng, field: PrimeField) -> isotriv::curves::EllipticCurve {
    let p = field.characteristic() as i64;
    loop {
        let (a, b) = (rng.gen_range(0..p), rng.gen_range(0..p));
        if let Ok(e) = isotriv::curves::EllipticCurve::from_i64(field, a, b) {
            return e;
        }
    }
}
