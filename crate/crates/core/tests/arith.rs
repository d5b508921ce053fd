use proptest::prelude::*;
use rug::{Complex, Float, Integer, Rational};
use shavis_core::arith::rational::{format_rational, parse_rational, primitive_integer_vector};
use shavis_core::arith::reconstruct::{rational_reconstruct, rational_reconstruct_complex};
use shavis_core::arith::roots::complex_roots;
use shavis_core::arith::{BilinearForm, Mat3, UniPoly};

#[test]
fn parse_rejects_garbage() {
    for bad in ["", "1.5", "1/0", "x", "2/", "/3"] {
        assert!(parse_rational(bad).is_err(), "{bad}");
    }
    assert_eq!(parse_rational(" -6/4 ").unwrap(), Rational::from((-3, 2)));
}

#[test]
fn inverse_of_unimodular_matrix() {
    let m = Mat3::from_ints([[2, 1, 0], [1, 1, 0], [5, -3, 1]]);
    let inv = m.inverse().unwrap();
    assert_eq!(m.mul(&inv), Mat3::identity(&Rational::from(1)));
    assert!(Mat3::from_ints([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
        .inverse()
        .is_none());
}

#[test]
fn canonical_bilinear_form() {
    let b = BilinearForm::from_ints([[-8, 0, 4], [0, 2, 0], [6, 0, 0]]);
    let c = b.canonical();
    assert_eq!(
        c,
        BilinearForm::from_ints([[4, 0, -2], [0, -1, 0], [-3, 0, 0]])
    );
    assert_eq!(c.canonical(), c);
    assert_eq!(b.proportional_to(&c), Some(Rational::from(-2)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_text_round_trip(n in -1_000_000i64..1_000_000, d in 1i64..100_000) {
        let r = Rational::from((n, d));
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn reconstruction_recovers_small_fractions(n in -(1i64 << 20)..(1i64 << 20), d in 1i64..(1i64 << 20)) {
        let r = Rational::from((n, d));
        let v = Float::with_val(256, &r);
        let bound = Integer::from(1) << 60;
        prop_assert_eq!(rational_reconstruct(&v, &bound).unwrap(), r.clone());
        let z = Complex::with_val(256, (&r, 0));
        prop_assert_eq!(rational_reconstruct_complex(&z, &bound).unwrap(), r);
    }

    #[test]
    fn roots_of_a_product_of_linear_factors(rs in proptest::collection::vec(-20i64..=20, 1..7)) {
        let prec = 256;
        let roots: Vec<Complex> = rs.iter().map(|&r| Complex::with_val(prec, r)).collect();
        let p = UniPoly::from_roots(&roots, &Complex::with_val(prec, 1));
        let found = complex_roots(&p, 3).unwrap();
        prop_assert_eq!(found.len(), rs.len());
        for r in &roots {
            // multiple roots converge slowly, so the tolerance is loose
            let near = found.iter().any(|z| Complex::with_val(prec, z - r).abs().real().to_f64() < 1e-10);
            prop_assert!(near);
        }
    }

    #[test]
    fn primitive_vectors_are_coprime(v in proptest::collection::vec(-50i64..=50, 1..8), d in 1i64..30) {
        let q: Vec<Rational> = v.iter().map(|&n| Rational::from((n, d))).collect();
        let (p, c) = primitive_integer_vector(&q);
        let mut g = Integer::new();
        for (a, b) in p.iter().zip(&q) {
            prop_assert!(a.denom() == &1);
            prop_assert_eq!(a, &Rational::from(b * &c));
            g.gcd_mut(a.numer());
        }
        prop_assert!(g == 0 || g == 1);
    }
}
