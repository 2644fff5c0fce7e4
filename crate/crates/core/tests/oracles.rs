mod common;

use isotriv::curves::{zeta_p_rank, EllipticCurve, HyperellipticCurve};
use isotriv::ffpoly::{is_prime, FpPolynomial, PrimeField};
use rand::rngs::StdRng;
use rand::SeedableRng;

#[test]
fn hasse_invariant_vanishes_exactly_when_p_divides_the_trace() {
    for p in [5u64, 7, 11, 13] {
        let f = PrimeField::new(p).unwrap();
        for a in 0..p as i64 {
            for b in 0..p as i64 {
                let Ok(e) = EllipticCurve::from_i64(f, a, b) else { continue };
                let trace = e.point_count().unwrap().trace;
                assert_eq!(
                    e.hasse_invariant().is_zero(),
                    trace.rem_euclid(p as i64) == 0,
                    "p = {p}, a = {a}, b = {b}, trace {trace}"
                );
            }
        }
    }
}

#[test]
fn hyperelliptic_p_rank_matches_zeta_function() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for p in [5u64, 7, 11] {
        let f = PrimeField::new(p).unwrap();
        for degree in [5, 6] {
            for _ in 0..50 {
                let poly = common::random_squarefree(&mut rng, f, degree);
                let h = HyperellipticCurve::new(poly.clone()).unwrap();
                assert_eq!(h.p_rank(), zeta_p_rank(&h).unwrap(), "p = {p}, f = {poly}");
            }
        }
    }
}

#[test]
fn congruence_laws_up_to_fifty() {
    for p in (5..=50).filter(|&p| is_prime(p)) {
        let f = PrimeField::new(p).unwrap();
        let j0 = EllipticCurve::from_i64(f, 0, 1).unwrap();
        let j1728 = EllipticCurve::from_i64(f, 1, 0).unwrap();
        assert_eq!(j0.is_ordinary(), p % 3 == 1, "j = 0 at {p}");
        assert_eq!(j0.is_ordinary(), p % 6 == 1, "j = 0 at {p}, mod 6");
        assert_eq!(j1728.is_ordinary(), p % 4 == 1, "j = 1728 at {p}");
        // every j = 0 and j = 1728 model behaves the same way
        for c in 1..p as i64 {
            let e = EllipticCurve::from_i64(f, 0, c).unwrap();
            assert_eq!(e.is_ordinary(), p % 3 == 1);
            let e = EllipticCurve::from_i64(f, c, 0).unwrap();
            assert_eq!(e.is_ordinary(), p % 4 == 1);
        }
    }
}

#[test]
fn cubic_cartier_manin_is_the_hasse_invariant() {
    for p in [5u64, 7, 11, 13, 17] {
        let f = PrimeField::new(p).unwrap();
        for a in 0..p as i64 {
            for b in 0..p as i64 {
                let Ok(e) = EllipticCurve::from_i64(f, a, b) else { continue };
                let h = HyperellipticCurve::new(FpPolynomial::from_i64(f, &[b, a, 0, 1])).unwrap();
                assert_eq!(h.cartier_manin().get(0, 0), e.hasse_invariant());
            }
        }
    }
}
