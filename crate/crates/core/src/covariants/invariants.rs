//! The invariants `c4`, `c6` of a ternary cubic, its discriminant and `j`.
//!
//! They are read off the Hessian pencil: for every cubic `F`,
//!
//! `H(F + t H(F)) = (3 c4 t + 6 c6 t^2 + 3 c4^2 t^3) F + (1 - 3 c4 t^2 - 2 c6 t^3) H(F)`.
//!
//! With this normalization a Weierstrass cubic `y^2 z + a1 xyz + a3 yz^2 -
//! (x^3 + a2 x^2 z + a4 x z^2 + a6 z^3)` has the usual `c4`, `c6` of its model,
//! `c4(F∘M) = d^4 c4(F)` and `c6(F∘M) = d^6 c6(F)`.

use rug::Rational;

use super::forms::hessian;
use crate::arith::rational::{q, qpow};
use crate::arith::{Field, TernaryCubic};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct CubicInvariants {
    pub c4: Rational,
    pub c6: Rational,
}

impl CubicInvariants {
    /// `(c4^3 - c6^2) / 1728`.
    pub fn discriminant(&self) -> Rational {
        let c43 = qpow(&self.c4, 3);
        let c62 = Rational::from(self.c6.square_ref());
        (c43 - c62) / 1728
    }

    pub fn is_singular(&self) -> bool {
        self.discriminant().cmp0().is_eq()
    }

    /// `1728 c4^3 / (c4^3 - c6^2)`; `None` when singular.
    pub fn j(&self) -> Option<Rational> {
        if self.is_singular() {
            return None;
        }
        let c43 = qpow(&self.c4, 3);
        let d = c43.clone() - Rational::from(self.c6.square_ref());
        Some(c43 * 1728 / d)
    }
}

/// Writes `g = a F + b H` exactly; `None` if impossible or not unique.
fn pencil_coordinates<T: Field>(
    f: &TernaryCubic<T>,
    h: &TernaryCubic<T>,
    g: &TernaryCubic<T>,
) -> Option<(T, T)> {
    let rows: Vec<Vec<T>> = (0..10)
        .map(|i| {
            vec![
                f.coeffs[i].clone(),
                h.coeffs[i].clone(),
                g.coeffs[i].clone(),
            ]
        })
        .collect();
    let mut m = rows;
    let piv = crate::arith::mat::rref(&mut m);
    if piv != [0, 1] {
        return None;
    }
    Some((m[0][2].clone(), m[1][2].clone()))
}

fn invariants_direct(f: &TernaryCubic<Rational>) -> Option<CubicInvariants> {
    let h = hessian(f);
    let b_at = |t: i64| -> Option<Rational> {
        let g = f.add(&h.scale(&q(t)));
        let (_, b) = pencil_coordinates(f, &h, &hessian(&g))?;
        Some(b)
    };
    let bp = b_at(1)?;
    let bm = b_at(-1)?;
    let c4 = (q(2) - &bp - &bm) / 6;
    let c6 = (bm - bp) / 4;
    Some(CubicInvariants { c4, c6 })
}

/// A fixed generic cubic used to perturb degenerate inputs.
fn perturbation() -> TernaryCubic<Rational> {
    TernaryCubic::from_ints([1, 0, -2, 3, 1, 0, 2, 5, 0, 7])
}

/// Exact `c4`, `c6` of any ternary cubic.
///
/// When `F` and `H(F)` are proportional (triangles, cones, ...) the
/// invariants are recovered from the polynomials `e -> c4(F + e K)` and
/// `e -> c6(F + e K)` by interpolation at `e = 0`.
pub fn invariants(f: &TernaryCubic<Rational>) -> Result<CubicInvariants> {
    if let Some(inv) = invariants_direct(f) {
        return Ok(inv);
    }
    let k = perturbation();
    let mut xs = Vec::new();
    let mut c4s = Vec::new();
    let mut c6s = Vec::new();
    for e in 1..40i64 {
        let g = f.add(&k.scale(&q(e)));
        if let Some(inv) = invariants_direct(&g) {
            xs.push(q(e));
            c4s.push(inv.c4);
            c6s.push(inv.c6);
            if xs.len() == 7 {
                break;
            }
        }
    }
    if xs.len() < 7 {
        return Err(Error::Internal(
            "no usable perturbation for invariants".into(),
        ));
    }
    let p4 = crate::arith::UniPoly::interpolate(&xs[..5], &c4s[..5]);
    let p6 = crate::arith::UniPoly::interpolate(&xs, &c6s);
    let zero = q(0);
    Ok(CubicInvariants {
        c4: p4.eval(&zero),
        c6: p6.eval(&zero),
    })
}

/// Exact `j`; `SingularInput` for singular cubics.
pub fn j_exact(f: &TernaryCubic<Rational>) -> Result<Rational> {
    invariants(f)?.j().ok_or(Error::SingularInput)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cubic::named::{fermat, xyz};
    use crate::arith::rational::qf;

    /// `y^2 z + a1 xyz + a3 yz^2 - (x^3 + a2 x^2 z + a4 xz^2 + a6 z^3)`.
    fn weierstrass(a: [i64; 5]) -> TernaryCubic<Rational> {
        let [a1, a2, a3, a4, a6] = a;
        TernaryCubic::from_ints([-1, 0, -a2, 0, a1, -a4, 0, 1, a3, -a6])
    }

    /// Textbook b/c-invariants, used as an independent oracle.
    fn model_c4_c6(a: [i64; 5]) -> (Rational, Rational) {
        let [a1, a2, a3, a4, a6] = a.map(q);
        let b2 = a1.clone() * &a1 + q(4) * &a2;
        let b4 = q(2) * &a4 + a1.clone() * &a3;
        let b6 = a3.clone() * &a3 + q(4) * &a6;
        let c4 = b2.clone() * &b2 - q(24) * &b4;
        let c6 = -(b2.clone() * &b2 * &b2) + q(36) * &b2 * &b4 - q(216) * &b6;
        (c4, c6)
    }

    #[test]
    fn weierstrass_normalization() {
        for a in [
            [1, 1, 0, -1154, -15345],
            [0, -1, 1, 0, 2],
            [1, -1, 1, -3, 7],
        ] {
            let inv = invariants(&weierstrass(a)).unwrap();
            let (c4, c6) = model_c4_c6(a);
            assert_eq!(inv.c4, c4);
            assert_eq!(inv.c6, c6);
        }
    }

    #[test]
    fn e2_j_invariant() {
        let j = j_exact(&weierstrass([0, -1, 1, 0, 2])).unwrap();
        assert_eq!(j, qf(-4096, 2043));
    }

    #[test]
    fn fermat_and_triangle() {
        let inv = invariants(&fermat()).unwrap();
        assert_eq!(inv.c4, q(0));
        assert!(!inv.is_singular());
        assert!(invariants(&xyz()).unwrap().is_singular());
        let reducible = fermat().scale(&q(36)).sub(&xyz().scale(&q(108)));
        assert!(invariants(&reducible).unwrap().is_singular());
    }

    #[test]
    fn weights_under_substitution() {
        let f = TernaryCubic::from_ints([2, -1, 0, 3, 1, -4, 1, 0, 2, 5]);
        let m = crate::arith::Mat3::from_ints([[1, 2, 0], [0, 1, -1], [3, 0, 1]]);
        let d = m.det();
        let a = invariants(&f).unwrap();
        let b = invariants(&f.act(&m)).unwrap();
        assert_eq!(b.c4, a.c4 * qpow(&d, 4));
        assert_eq!(b.c6, a.c6 * qpow(&d, 6));
    }
}
