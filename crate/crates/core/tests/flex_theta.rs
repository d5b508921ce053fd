use proptest::prelude::*;
use rug::Rational;
use shavis_core::arith::{numeric, Mat3, TernaryCubic};
use shavis_core::covariants::{hessian, invariants};
use shavis_core::data;
use shavis_core::flex::{dual_scheme, fermat_flexes, flex_points, hesse_labeling, rational_flexes};
use shavis_core::theta::{anti_isometry_check, stabilizer};

const PREC: u32 = 512;

#[test]
fn fermat_scheme_is_its_own_dual() {
    let phi = fermat_flexes(PREC);
    assert!(dual_scheme(&phi).unwrap().same_points(&phi));
    let computed = flex_points(&shavis_core::arith::cubic::named::fermat(), PREC).unwrap();
    assert!(computed.same_points(&phi));
}

#[test]
fn flexes_lie_on_the_curve_and_the_hessian() {
    let g = data::c1_681();
    let phi = flex_points(&g, PREC).unwrap();
    let (gc, hc) = (g.to_complex(PREC), hessian(&g).to_complex(PREC));
    let tol = numeric::threshold(PREC);
    for p in &phi.points {
        assert!(gc.relative_residual(p) < tol);
        assert!(hc.relative_residual(p) < tol);
    }
    assert!(hesse_labeling(&phi).is_ok());
}

#[test]
fn rational_flex_of_a_weierstrass_cubic() {
    let f = data::f681();
    let r = rational_flexes(&f, PREC).unwrap();
    assert_eq!(
        r,
        vec![[Rational::from(0), Rational::from(1), Rational::from(0)]]
    );
    assert!(rational_flexes(&data::c1_681(), PREC).unwrap().is_empty());
}

#[test]
fn singular_cubic_has_no_flex_scheme() {
    let nodal = TernaryCubic::from_ints([1, 0, 0, 0, -3, 0, 1, 0, 0, 1]);
    assert!(flex_points(&nodal, PREC).is_err());
}

#[test]
fn stabilizers_and_anti_isometry() {
    for phi in [
        fermat_flexes(PREC),
        flex_points(&data::c1_681(), PREC).unwrap(),
    ] {
        let r = anti_isometry_check(&phi).unwrap();
        for s in [&r.stabilizer, &r.dual_stabilizer] {
            assert_eq!(s.elements.len(), 9);
            assert!(s.is_abelian() && s.has_exponent_three());
            assert!(s.pairing_alternating() && s.pairing_nondegenerate());
        }
        assert!(r.stabilizer.acts_freely(&phi));
        assert!(r.onto && r.pairing_inverted);
    }
}

#[test]
fn stabilizer_is_conjugated_by_a_change_of_coordinates() {
    let phi = flex_points(&data::c1_681(), PREC).unwrap();
    let m = Mat3::from_ints([[1, 2, 0], [0, 1, -1], [3, 0, 1]]).to_complex(PREC);
    let s = stabilizer(&phi).unwrap();
    let moved = stabilizer(&phi.transform(&m)).unwrap();
    for g in &s.elements {
        assert!(moved.index_of(&g.conjugate(&m)).is_some());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(5))]

    #[test]
    fn dual_of_dual_is_the_scheme(c in proptest::array::uniform10(-9i64..=9)) {
        let g = TernaryCubic::from_ints(c);
        prop_assume!(!g.is_zero() && !invariants(&g).unwrap().is_singular());
        let phi = flex_points(&g, PREC).unwrap();
        let back = dual_scheme(&dual_scheme(&phi).unwrap()).unwrap();
        prop_assert!(back.same_points(&phi));
    }
}
