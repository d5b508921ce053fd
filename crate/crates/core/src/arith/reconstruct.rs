//! Rational reconstruction from high-precision approximations.

use rug::{Complex, Float, Integer, Rational};

use super::numeric;
use crate::error::{Error, Result};

/// Continued-fraction convergents of `v` with denominator at most `bound`.
fn convergents(v: &Float, bound: &Integer) -> Vec<Rational> {
    let prec = v.prec();
    let mut out = Vec::new();
    let (mut p0, mut q0) = (Integer::from(0), Integer::from(1));
    let (mut p1, mut q1) = (Integer::from(1), Integer::from(0));
    let mut x = v.clone();
    for _ in 0..(2 * prec as usize) {
        let a = x
            .clone()
            .floor()
            .to_integer()
            .expect("finite value in continued fraction");
        let p2 = Integer::from(&a * &p1) + &p0;
        let q2 = Integer::from(&a * &q1) + &q0;
        if q2 > *bound {
            break;
        }
        out.push(Rational::from((p2.clone(), q2.clone())));
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = x - Float::with_val(prec, &a);
        if frac.is_zero() {
            break;
        }
        x = frac.recip();
        if !x.is_finite() {
            break;
        }
    }
    out
}

/// Reconstructs `p/q` with `q <= bound` and `|v - p/q| <= err`.
///
/// Uniqueness needs `err < 1/(2 bound^2)`; below that every fitting rational
/// is a convergent of `v`, so the convergent scan is exhaustive.
pub fn rational_reconstruct_with_error(
    v: &Float,
    bound: &Integer,
    err: &Float,
) -> Result<Rational> {
    if !v.is_finite() {
        return Err(Error::ReconstructionFailed(format!("non-finite value {v}")));
    }
    let prec = v.prec();
    let fits: Vec<Rational> = convergents(v, bound)
        .into_iter()
        .filter(|c| Float::with_val(prec, v - c).abs() <= *err)
        .collect();
    let b2 = Float::with_val(prec, Integer::from(bound * bound));
    let unique_radius = Float::with_val(prec, b2 * 2u32).recip();
    if *err >= unique_radius {
        return match fits.len() {
            0 | 1 => Err(Error::InsufficientPrecision(format!(
                "error ball {:.3e} too wide for denominator bound {bound}",
                err.to_f64()
            ))),
            _ => Err(Error::AmbiguousReconstruction(
                fits[0].to_string(),
                fits[1].to_string(),
            )),
        };
    }
    fits.into_iter().next().ok_or_else(|| {
        Error::ReconstructionFailed(format!(
            "no rational with denominator <= {bound} near {}",
            v.to_string_radix(10, Some(30))
        ))
    })
}

/// Error ball `2^(-prec/2) max(1, |v|)`.
pub fn default_error(v: &Float) -> Float {
    let prec = v.prec();
    let m = Float::with_val(prec, v.abs_ref()).max(&Float::with_val(prec, 1));
    numeric::threshold(prec) * m
}

pub fn rational_reconstruct(v: &Float, bound: &Integer) -> Result<Rational> {
    rational_reconstruct_with_error(v, bound, &default_error(v))
}

/// Reconstructs a complex value that should be real and rational.
pub fn rational_reconstruct_complex(z: &Complex, bound: &Integer) -> Result<Rational> {
    let err = default_error(z.real());
    if Float::with_val(z.prec().0, z.imag().abs_ref()) > err {
        return Err(Error::ReconstructionFailed(format!(
            "imaginary part {:.3e} is not negligible",
            z.imag().to_f64()
        )));
    }
    rational_reconstruct_with_error(z.real(), bound, &err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::qf;

    #[test]
    fn one_third() {
        let v = Float::with_val(256, 1) / 3u32;
        let r = rational_reconstruct(&v, &Integer::from(1_000_000)).unwrap();
        assert_eq!(r, qf(1, 3));
    }

    #[test]
    fn negative_fraction() {
        let v = Float::with_val(512, &qf(-4096, 2043));
        let r = rational_reconstruct(&v, &Integer::from(1_000_000)).unwrap();
        assert_eq!(r, qf(-4096, 2043));
    }

    #[test]
    fn pi_has_no_small_rational() {
        let pi = numeric::pi(256);
        let bound = Integer::from(1000);
        assert!(rational_reconstruct(&pi, &bound).is_err());
        // brute force: nothing with q <= 1000 sits in the ball
        let err = default_error(&pi);
        for q in 1..=1000i64 {
            let p = Float::with_val(256, &pi * q).round().to_integer().unwrap();
            let c = Rational::from((p, q));
            assert!(Float::with_val(256, &pi - &c).abs() > err);
        }
    }

    #[test]
    fn wide_ball_is_flagged() {
        let v = Float::with_val(64, 1) / 3u32;
        let err = Float::with_val(64, 1e-3);
        let e = rational_reconstruct_with_error(&v, &Integer::from(1000), &err).unwrap_err();
        assert!(matches!(
            e,
            Error::InsufficientPrecision(_) | Error::AmbiguousReconstruction(..)
        ));
    }

    #[test]
    fn integers_and_zero() {
        for n in [-17i64, 0, 5] {
            let v = Float::with_val(200, n);
            assert_eq!(
                rational_reconstruct(&v, &Integer::from(10)).unwrap(),
                Rational::from(n)
            );
        }
    }
}
