//! Numeric `j` of a plane cubic and solving `j = j0` along a pencil.

use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};

use super::invariants::invariants;
use super::pencil::{Pencil, PencilParameter};
use crate::arith::numeric;
use crate::arith::reconstruct::rational_reconstruct_complex;
use crate::arith::{Field, TernaryCubic};
use crate::ellcurve::flex_reduction;
use crate::error::{Error, Result};
use crate::flex::flex_points;

/// `j` of a cubic, exact when reconstruction certified it.
#[derive(Clone, Debug)]
pub struct JValue {
    pub numeric: Complex,
    pub exact: Option<Rational>,
}

/// `c4`, `c6` of a long Weierstrass model over any field.
pub fn c4_c6<T: Field>(a: &[T; 5]) -> (T, T) {
    let [a1, a2, a3, a4, a6] = a;
    let k = |v: i64| a1.int_like(v);
    let b2 = a1.clone() * a1 + &(k(4) * a2);
    let b4 = k(2) * a4 + &(a1.clone() * a3);
    let b6 = a3.clone() * a3 + &(k(4) * a6);
    let c4 = b2.clone() * &b2 - &(k(24) * &b4);
    let c6 = -(b2.clone() * &b2 * &b2) + &(k(36) * &b2 * &b4) - &(k(216) * &b6);
    (c4, c6)
}

/// Rescales `a_i -> a_i / u^i` (weights 1, 2, 3, 4, 6) so the largest
/// weighted size is 1; `j` is unchanged.
fn balanced(a: &[Complex; 5]) -> [Complex; 5] {
    const W: [u32; 5] = [1, 2, 3, 4, 6];
    let prec = a[0].prec().0;
    let mut u = Float::new(prec);
    for (c, w) in a.iter().zip(W) {
        let m = numeric::modulus(c);
        if !m.is_zero() {
            let r = Float::with_val(prec, m.ln() / w).exp();
            if r > u {
                u = r;
            }
        }
    }
    if u.is_zero() {
        return a.clone();
    }
    std::array::from_fn(|i| {
        let s = Float::with_val(prec, u.clone().pow(W[i]));
        Complex::with_val(prec, &a[i] / s)
    })
}

/// `j` via a numerically located flex moved to `[0:1:0]`.
///
/// The value is reconstructed with denominators up to about
/// `2^(prec/4) / sqrt(max(1, |j|))` and accepted only if the exact
/// invariants of `G` agree.
pub fn j_numeric(g: &TernaryCubic<Rational>, prec: u32) -> Result<JValue> {
    if invariants(g)?.is_singular() {
        return Err(Error::SingularInput);
    }
    let phi = flex_points(g, prec)?;
    let gc = g.to_complex(prec);
    let mut last = None;
    for flex in &phi.points {
        match flex_reduction(&gc, flex) {
            Ok((_, a)) => {
                let (c4, c6) = c4_c6(&balanced(&a));
                let c43 = c4.clone() * &c4 * &c4;
                let d = c43.clone() - &(c6.clone() * &c6);
                if d.is_negligible() {
                    return Err(Error::InsufficientPrecision(
                        "c4^3 - c6^2 vanished numerically".into(),
                    ));
                }
                let j = c43 * Complex::with_val(prec, 1728) / d;
                let size = numeric::modulus_f64(&j).max(1.0);
                let bits = (prec / 4).saturating_sub(2) as i32 - (size.log2() / 2.0).ceil() as i32;
                let bound = Integer::from(1) << bits.max(8) as u32;
                let exact = rational_reconstruct_complex(&j, &bound)
                    .ok()
                    .filter(|r| invariants(g).ok().and_then(|i| i.j()).as_ref() == Some(r));
                return Ok(JValue { numeric: j, exact });
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::InsufficientPrecision("no usable flex".into())))
}

/// The rational parameters of `p` whose member has `j = j0`.
///
/// `j` on the pencil is `1728 c4^3 / (c4^3 - c6^2)` with `c4`, `c6` exact
/// binary forms of degree 4 and 6, so the solutions are the rational roots
/// of `1728 c4^3 - j0 (c4^3 - c6^2)`; singular members are dropped.
pub fn j_solve_on_pencil(
    p: &Pencil,
    j0: &Rational,
    prec: u32,
) -> Result<Vec<(PencilParameter, TernaryCubic<Rational>)>> {
    let (c4, c6) = p.invariant_forms()?;
    let c43 = c4.mul(&c4).mul(&c4);
    let disc = c43.sub(&c6.mul(&c6));
    if disc.is_zero() {
        return Err(Error::SingularInput);
    }
    let num = c43.scale(&Rational::from(1728));
    // j constant on the pencil: numerator and discriminant proportional
    if crate::arith::rational::proportionality(&num.coeffs, &disc.coeffs).is_some() || num.is_zero()
    {
        return Err(Error::DegenerateJ);
    }
    let eq = num.sub(&disc.scale(j0));
    let mut out = Vec::new();
    for (s, t) in eq.rational_roots(prec, 0)? {
        if disc.eval(&s, &t).cmp0().is_eq() {
            continue;
        }
        let par = PencilParameter::new(s, t)?;
        let member = p.member(&par);
        out.push((par, member));
    }
    Ok(out)
}

/// Relative size of `j` reconstruction error, for reports.
pub fn j_residual(v: &JValue) -> f64 {
    match &v.exact {
        Some(r) => {
            let d = v.numeric.clone() - Complex::with_val(v.numeric.prec().0, r);
            let m = Float::with_val(53, numeric::modulus(&v.numeric))
                .to_f64()
                .max(1.0);
            numeric::modulus_f64(&d) / m
        }
        None => f64::INFINITY,
    }
}
