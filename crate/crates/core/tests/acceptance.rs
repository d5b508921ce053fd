//! The acceptance suite. Prints one PASS or FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;
use shavis_core::arith::cubic::named::{fermat, xyz};
use shavis_core::arith::rational::qpow;
use shavis_core::arith::{BilinearForm, Mat3, TernaryCubic};
use shavis_core::covariants::pencil::span_rank;
use shavis_core::covariants::{
    caylean, dual_pencil, hessian, invariants, j_numeric, j_solve_on_pencil,
};
use shavis_core::data;
use shavis_core::ellcurve::{non_isogeny_certificate, point_search, IsoTransform};
use shavis_core::flex::{dual_scheme, fermat_flexes, flex_points, FlexScheme};
use shavis_core::genus2::{
    interpolate_c, pipeline, push, run_on_surface, sample_d, Options, SurfacePair,
};
use shavis_core::theta::anti_isometry_check;

const PREC: u32 = 512;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn random_cubic(rng: &mut ChaCha8Rng) -> TernaryCubic<Rational> {
    loop {
        let g = TernaryCubic::from_ints(std::array::from_fn(|_| rng.gen_range(-9..=9)));
        if !g.is_zero() && !invariants(&g).map(|i| i.is_singular()).unwrap_or(true) {
            return g;
        }
    }
}

fn random_invertible(rng: &mut ChaCha8Rng) -> Mat3<Rational> {
    loop {
        let m = Mat3::from_ints(std::array::from_fn(|_| {
            std::array::from_fn(|_| rng.gen_range(-3..=3))
        }));
        if m.det().cmp0().is_ne() {
            return m;
        }
    }
}

fn hessian_caylean_exactness() -> Outcome {
    let h = hessian(&fermat());
    let p = caylean(&fermat()).map_err(e)?;
    ensure(
        h == xyz().scale(&Rational::from(-108)),
        format!("hessian = {h}"),
    )?;
    ensure(
        p == xyz().scale(&Rational::from(-54)),
        format!("caylean = {p}"),
    )?;
    Ok(format!("H = {h}, P = {p}"))
}

fn known_contravariants() -> Outcome {
    let s1 = caylean(&data::f681())
        .map_err(e)?
        .proportional_to(&data::p_681());
    let s2 = caylean(&data::c1_681())
        .map_err(e)?
        .proportional_to(&data::p0_681());
    let (Some(s1), Some(s2)) = (s1.clone(), s2.clone()) else {
        return Err(format!("not proportional: {s1:?}, {s2:?}"));
    };
    ensure(s1 == 1 && s2 == 1, format!("scalars {s1}, {s2}"))?;
    Ok(format!("scalars {s1} and {s2}"))
}

fn dual_pencil_span() -> Outcome {
    let p = dual_pencil(&data::f681()).map_err(e)?;
    let p0 = dual_pencil(&data::c1_681()).map_err(e)?;
    let r = span_rank(&[p.a, p.b, data::p_681(), data::q_681()]);
    let r0 = span_rank(&[p0.a, p0.b, data::p0_681(), data::q0_681()]);
    ensure(r == 2 && r0 == 2, format!("ranks {r}, {r0}"))?;
    Ok("stacked ranks 2 and 2".into())
}

fn weight_laws() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for k in 0..20 {
        let f = random_cubic(&mut rng);
        let m = random_invertible(&mut rng);
        let d = m.det();
        let fm = f.act(&m);
        ensure(
            hessian(&fm) == hessian(&f).act(&m).scale(&qpow(&d, 2)),
            format!("hessian, trial {k}"),
        )?;
        let mit = m.inverse_transpose().expect("invertible");
        let lhs = caylean(&fm).map_err(e)?;
        let rhs = caylean(&f).map_err(e)?.act(&mit).scale(&qpow(&d, 4));
        ensure(lhs == rhs, format!("caylean, trial {k}"))?;
    }
    Ok("20 exact trials".into())
}

fn self_duality() -> Outcome {
    let phi0 = fermat_flexes(PREC);
    ensure(
        dual_scheme(&phi0).map_err(e)?.same_points(&phi0),
        "dual of the Fermat scheme",
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 0..5 {
        let phi = flex_points(&random_cubic(&mut rng), PREC).map_err(e)?;
        let back = dual_scheme(&dual_scheme(&phi).map_err(e)?).map_err(e)?;
        ensure(back.same_points(&phi), format!("double dual, cubic {k}"))?;
    }
    Ok("fermat scheme self-dual; double dual is the identity on 5 cubics".into())
}

fn theta(phi: &FlexScheme) -> Result<(), String> {
    let r = anti_isometry_check(phi).map_err(e)?;
    for s in [&r.stabilizer, &r.dual_stabilizer] {
        ensure(
            s.elements.len() == 9,
            format!("{} elements", s.elements.len()),
        )?;
        ensure(s.pairing_alternating(), "pairing not alternating")?;
        ensure(s.pairing_nondegenerate(), "pairing degenerate")?;
    }
    ensure(r.onto, "inverse transpose not onto")?;
    ensure(r.pairing_inverted, "pairing not inverted")
}

fn theta_anti_isometry() -> Outcome {
    theta(&fermat_flexes(PREC))?;
    theta(&flex_points(&data::c1_681(), PREC).map_err(e)?)?;
    Ok("both schemes: 9 elements, alternating nondegenerate pairing, inverted".into())
}

fn j_and_pencil_solving() -> Outcome {
    let j0 = Rational::from((-4096, 2043));
    let jv = j_numeric(&data::e681c1().cubic(), PREC).map_err(e)?;
    ensure(
        jv.exact.as_ref() == Some(&j0),
        format!("j = {:?}", jv.exact),
    )?;
    let sols = j_solve_on_pencil(&dual_pencil(&data::f681()).map_err(e)?, &j0, PREC).map_err(e)?;
    ensure(sols.len() == 1, format!("{} solutions", sols.len()))?;
    let s = sols[0].1.proportional_to(&data::e2_member_681());
    ensure(s.is_some(), "member not proportional to 55033 P - 235 Q")?;
    Ok(format!(
        "j = {j0}, one member, scalar {}",
        s.expect("checked")
    ))
}

fn point_search_criterion() -> Outcome {
    let pts = point_search(&data::c2_681(), 10);
    ensure(pts.contains(&[10, 8, 7]), format!("points {pts:?}"))?;
    let c1 = point_search(&data::c1_681(), 100);
    ensure(c1.is_empty(), format!("C1 points {c1:?}"))?;
    Ok(format!(
        "{} point(s) at bound 10 including [10:8:7]; none on C1 at bound 100",
        pts.len()
    ))
}

fn non_isogeny() -> Outcome {
    let c = non_isogeny_certificate(&data::e681b1(), &data::e681c1(), 99)
        .ok_or("no prime below 100")?;
    Ok(format!(
        "p = {}: {} vs {} points",
        c.prime, c.count1, c.count2
    ))
}

fn end_to_end_681() -> Outcome {
    let opts = Options {
        reference: Some(data::c_form_681()),
        ..Options::default()
    };
    let b = pipeline(&data::f681(), &data::c1_681(), Some(&data::e681c1()), &opts).map_err(e)?;
    ensure(
        b.reference_match == Some(true),
        format!("no convention matched; tried {:?}", b.tried),
    )?;
    ensure(
        !b.verify.vacuous && b.verify.samples == 20,
        "verification did not run on 20 samples",
    )?;
    let again = pipeline(
        &data::f681(),
        &data::c1_681(),
        Some(&data::e681c1()),
        &Options {
            seed: 1,
            ..opts.clone()
        },
    )
    .map_err(e)?;
    ensure(
        again.result.form == b.result.form,
        "forms differ between seeds",
    )?;
    Ok(format!(
        "{} under {}, verify residual {:.1e}",
        b.result.form,
        b.convention.label(),
        b.verify.max_residual
    ))
}

fn end_to_end_2006() -> Outcome {
    let b = pipeline(&data::f2006(), &data::c1_2006(), None, &Options::default()).map_err(e)?;
    let cert = b.surface.certificate.as_ref().ok_or("no certificate")?;
    ensure(!b.verify.vacuous, "vacuous verification")?;
    ensure(
        b.result.distinct_from_incidence,
        "form is the incidence form",
    )?;
    Ok(format!(
        "verified on {} fresh samples (residual {:.1e}); non-isogeny at p = {}",
        b.verify.samples, b.verify.max_residual, cert.prime
    ))
}

fn oracle_round_trip() -> Outcome {
    let (e1, e2) = (data::e681b1(), data::e681c1());
    let planted = BilinearForm::from_ints([[3, -1, 0], [2, 5, 7], [0, -4, 1]]);
    let s = SurfacePair::weierstrass(&e1, &e2, planted.clone());
    let (l1, l2) = (s.law1(PREC), s.law2(PREC));
    let smp = sample_d(&s, 20, 12, PREC).map_err(e)?;
    let img = smp
        .iter()
        .map(|p| push(p, 1, 1, &l1, &l2, &s, PREC))
        .collect::<Result<Vec<_>, _>>()
        .map_err(e)?;
    ensure(
        interpolate_c(&img, &s, PREC).map_err(e)?.form == planted.canonical(),
        "planted form not recovered",
    )?;

    // a change of model on E2 moves the recovered form by the same matrix
    let base = pipeline(
        &data::f681(),
        &data::c1_681(),
        Some(&e2),
        &Options::default(),
    )
    .map_err(e)?;
    let tr = IsoTransform {
        u: Rational::from(2),
        r: Rational::from(-3),
        s: Rational::from(1),
        t: Rational::from((5, 2)),
    };
    let n = tr.matrix();
    let id = Mat3::identity(&Rational::from(1));
    let moved = SurfacePair::weierstrass(
        &e1,
        &e2.transform(&tr).map_err(e)?,
        base.surface.incidence.substitute(&id, &n),
    );
    let got = run_on_surface(moved, &Options::default()).map_err(e)?;
    ensure(
        got.result.form == base.result.form.substitute(&id, &n).canonical(),
        "form not covariant under a change of model",
    )?;
    Ok("planted form recovered exactly; covariant under a change of model".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (
            "hessian and caylean of the Fermat cubic",
            hessian_caylean_exactness,
        ),
        ("known contravariants", known_contravariants),
        ("dual pencil span", dual_pencil_span),
        ("weight laws", weight_laws),
        ("self-duality and involution", self_duality),
        ("theta groups and anti-isometry", theta_anti_isometry),
        ("j and pencil solving", j_and_pencil_solving),
        ("point search", point_search_criterion),
        ("non-isogeny", non_isogeny),
        ("end to end 681", end_to_end_681),
        ("end to end 2006", end_to_end_2006),
        ("oracle round trip", oracle_round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 12 passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
