use rug::Rational;
use shavis_core::arith::numeric;
use shavis_core::arith::{BilinearForm, Mat3};
use shavis_core::data;
use shavis_core::ellcurve::IsoTransform;
use shavis_core::error::Error;
use shavis_core::flex::flex_points;
use shavis_core::genus2::{
    build_surface, interpolate_c, pipeline, push, push_3x3, run_on_surface, sample_d, verify_c,
    DSample, Options, SurfacePair,
};
use shavis_core::theta::stabilizer;

const PREC: u32 = 512;

fn surface_681() -> SurfacePair {
    build_surface(
        &data::f681(),
        &data::c1_681(),
        Some(&data::e681c1()),
        &Options::default(),
    )
    .unwrap()
}

#[test]
fn no_samples_is_empty() {
    assert!(sample_d(&surface_681(), 0, 0, PREC).unwrap().is_empty());
}

#[test]
fn samples_satisfy_all_three_equations() {
    let s = surface_681();
    let tol = numeric::threshold(PREC);
    let (f, g) = (s.f.to_complex(PREC), s.g.to_complex(PREC));
    for smp in sample_d(&s, 16, 3, PREC).unwrap() {
        assert!(f.relative_residual(&smp.x) < tol);
        assert!(g.relative_residual(&smp.u) < tol);
        assert!(s.incidence.relative_residual(&smp.x, &smp.u) < tol.to_f64());
    }
}

#[test]
fn sampling_is_a_deterministic_prefix() {
    let s = surface_681();
    let a = sample_d(&s, 5, 11, PREC).unwrap();
    let b = sample_d(&s, 9, 11, PREC).unwrap();
    for (p, q) in a.iter().zip(&b) {
        assert_eq!(p.x, q.x);
        assert_eq!(p.u, q.u);
    }
}

#[test]
fn pushing_twice_is_nine() {
    let s = surface_681();
    let (l1, l2) = (s.law1(PREC), s.law2(PREC));
    for smp in sample_d(&s, 4, 5, PREC).unwrap() {
        let once = push_3x3(&smp, &s, PREC).unwrap();
        let twice = push_3x3(&once, &s, PREC).unwrap();
        let nine = push(&smp, 9, 9, &l1, &l2, &s, PREC).unwrap();
        assert!(numeric::same_projective_point(&twice.x, &nine.x));
        assert!(numeric::same_projective_point(&twice.u, &nine.u));
    }
}

/// Translating a sample by an element of the theta group on the first
/// factor and its inverse transpose on the second stays on `D` and does not
/// move the image under `[3] x [3]`.
#[test]
fn delta_translates_collapse() {
    let s = surface_681();
    let theta = stabilizer(&flex_points(&s.f, PREC).unwrap()).unwrap();
    let mt = s.equivalence.clone().unwrap().to_complex(PREC);
    let mt_inv = mt.inverse().unwrap();
    let tol = numeric::threshold(PREC);
    let g = s.g.to_complex(PREC);
    for smp in sample_d(&s, 3, 7, PREC).unwrap() {
        let img = push_3x3(&smp, &s, PREC).unwrap();
        for el in &theta.elements {
            let x = el.apply(&smp.x);
            let dual = el.inverse_transpose();
            let u =
                numeric::normalize_projective(&mt_inv.apply(&dual.lift.apply(&mt.apply(&smp.u))));
            assert!(g.relative_residual(&u) < tol);
            assert!(s.incidence.relative_residual(&x, &u) < tol.to_f64());
            let moved = push_3x3(&DSample { x, u }, &s, PREC).unwrap();
            assert!(numeric::same_projective_point(&moved.x, &img.x));
            assert!(numeric::same_projective_point(&moved.u, &img.u));
        }
    }
}

#[test]
fn end_to_end_681_matches_reference_form() {
    let o = Options {
        reference: Some(data::c_form_681()),
        ..Options::default()
    };
    let b = pipeline(&data::f681(), &data::c1_681(), Some(&data::e681c1()), &o).unwrap();
    assert_eq!(b.reference_match, Some(true));
    assert_eq!(b.result.form, data::c_form_681());
    assert!(b.result.involution.exact == Some(true));
    assert!(b.result.distinct_from_incidence);
    assert_eq!(b.verify.samples, 20);
    assert_eq!(
        b.surface.rational_point,
        Some([10, 8, 7].map(Rational::from))
    );
    assert!(b
        .surface
        .pencil_member
        .proportional_to(&data::e2_member_681())
        .is_some());
}

#[test]
fn seed_and_precision_stability() {
    let s = surface_681();
    let base = run_on_surface(s.clone(), &Options::default()).unwrap();
    let other_seed = run_on_surface(
        s.clone(),
        &Options {
            seed: 99,
            ..Options::default()
        },
    )
    .unwrap();
    let doubled = run_on_surface(
        s,
        &Options {
            precision: 1024,
            ..Options::default()
        },
    )
    .unwrap();
    assert_eq!(base.result.form, other_seed.result.form);
    assert_eq!(base.result.form, doubled.result.form);
}

#[test]
fn perturbed_form_fails_verification() {
    let s = surface_681();
    let b = run_on_surface(s.clone(), &Options::default()).unwrap();
    let mut bad = b.result.clone();
    let mut e = bad.form.entries();
    e[0] += 1;
    bad.form = BilinearForm::from_entries(&e).unwrap();
    let err = verify_c(&bad, &s, 5, 1, 3, PREC).unwrap_err();
    assert!(matches!(err, Error::VerificationFailed { .. }));
    let empty = verify_c(&b.result, &s, 0, 1, 3, PREC).unwrap();
    assert!(empty.vacuous);
}

#[test]
fn too_few_images_is_underdetermined() {
    let s = surface_681();
    let imgs: Vec<_> = sample_d(&s, 6, 0, PREC)
        .unwrap()
        .iter()
        .map(|p| push_3x3(p, &s, PREC).unwrap())
        .collect();
    match interpolate_c(&imgs, &s, PREC) {
        Err(Error::NullSpaceDimension(d)) => assert!(d >= 2),
        other => panic!("expected an underdetermined system, got {other:?}"),
    }
}

/// Identity pushes on a pair with a planted incidence form give that form
/// back; negation on both factors gives its transform by the involutions.
#[test]
fn planted_form_round_trip() {
    let e1 = data::e681b1();
    let e2 = data::e681c1();
    let planted = BilinearForm::from_ints([[3, -1, 0], [2, 5, 7], [0, -4, 1]]);
    let s = SurfacePair::weierstrass(&e1, &e2, planted.clone());
    let (l1, l2) = (s.law1(PREC), s.law2(PREC));
    let smp = sample_d(&s, 20, 4, PREC).unwrap();
    let id: Vec<_> = smp
        .iter()
        .map(|p| push(p, 1, 1, &l1, &l2, &s, PREC).unwrap())
        .collect();
    assert_eq!(
        interpolate_c(&id, &s, PREC).unwrap().form,
        planted.canonical()
    );
    let neg: Vec<_> = smp
        .iter()
        .map(|p| push(p, -1, -1, &l1, &l2, &s, PREC).unwrap())
        .collect();
    let expect = planted
        .substitute(&e1.involution(), &e2.involution())
        .canonical();
    assert_eq!(interpolate_c(&neg, &s, PREC).unwrap().form, expect);
}

/// Changing the Weierstrass coordinates of `E2` by `N` transforms both the
/// incidence form and the result by `N`.
#[test]
fn covariance_under_change_of_model() {
    let s = surface_681();
    let tr = IsoTransform {
        u: Rational::from(2),
        r: Rational::from(-3),
        s: Rational::from(1),
        t: Rational::from((5, 2)),
    };
    let e2 = s.e2.transform(&tr).unwrap();
    let n = tr.matrix();
    let moved = SurfacePair::weierstrass(
        &s.e1,
        &e2,
        s.incidence
            .substitute(&Mat3::identity(&Rational::from(1)), &n),
    );
    let b = run_on_surface(moved, &Options::default()).unwrap();
    let expect = data::c_form_681()
        .substitute(&Mat3::identity(&Rational::from(1)), &n)
        .canonical();
    assert_eq!(b.result.form, expect);
}

#[test]
fn end_to_end_2006_without_target() {
    let b = pipeline(&data::f2006(), &data::c1_2006(), None, &Options::default()).unwrap();
    assert!(b.surface.certificate.is_some());
    assert!(b.result.involution.passed(PREC));
    assert!(b.result.distinct_from_incidence);
    assert!(!b.verify.vacuous);
}

#[test]
fn isogenous_target_is_rejected() {
    let e = build_surface(
        &data::f681(),
        &data::c1_681(),
        Some(&data::e681b1()),
        &Options::default(),
    )
    .unwrap_err();
    assert!(matches!(e, Error::IsogenousPair(_)));
}

#[test]
fn singular_covering_fails_at_build_surface() {
    let xyz = shavis_core::arith::cubic::named::xyz();
    let e = pipeline(&data::f681(), &xyz, None, &Options::default()).unwrap_err();
    match e {
        Error::Stage { stage, ref source } => {
            assert_eq!(stage, "build_surface");
            assert!(matches!(**source, Error::SingularInput));
        }
        other => panic!("unexpected {other:?}"),
    }
}
