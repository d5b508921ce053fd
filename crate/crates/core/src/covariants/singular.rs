//! Singularity tests for single cubics and for pencils.

use rug::{Complex, Float, Integer, Rational};

use super::invariants::invariants;
use super::pencil::{Pencil, PencilParameter};
use crate::arith::numeric::{self, normalize_projective};
use crate::arith::poly::UniPoly;
use crate::arith::reconstruct::rational_reconstruct_complex;
use crate::arith::resultant::resultant;
use crate::arith::roots::{complex_roots, newton_polish};
use crate::arith::{Form, Mat3, TernaryCubic};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub enum Witness {
    Rational([Rational; 3]),
    Numeric([Complex; 3]),
}

#[derive(Clone, Debug)]
pub struct SingularityReport {
    pub singular: bool,
    pub witness: Option<Witness>,
}

/// Decides whether `G` is singular.
///
/// The verdict is the exact vanishing of the discriminant `(c4^3 - c6^2)/1728`.
/// For singular cubics a common zero of the partials is located
/// numerically and returned, exact when it reconstructs to a rational point
/// that passes substitution.
pub fn is_singular(g: &TernaryCubic<Rational>, prec: u32) -> Result<SingularityReport> {
    if g.is_zero() {
        return Err(Error::InvalidInput("zero cubic".into()));
    }
    let singular = invariants(g)?.is_singular();
    let witness = if singular {
        find_witness(g, prec)
    } else {
        None
    };
    Ok(SingularityReport { singular, witness })
}

fn partials_vanish_exactly(g: &TernaryCubic<Rational>, p: &[Rational; 3]) -> bool {
    g.gradient(p).iter().all(|c| c.cmp0().is_eq())
}

const WITNESS_FRAMES: [[[i64; 3]; 3]; 2] = [
    [[2, 1, 3], [1, 3, -1], [-1, 2, 5]],
    [[3, -2, 1], [1, 1, 4], [2, 5, -3]],
];

fn find_witness(g: &TernaryCubic<Rational>, prec: u32) -> Option<Witness> {
    // exact coordinate points first
    let unit =
        |i: usize| -> [Rational; 3] { std::array::from_fn(|k| Rational::from(i64::from(k == i))) };
    for i in 0..3 {
        let p = unit(i);
        if partials_vanish_exactly(g, &p) {
            return Some(Witness::Rational(p));
        }
    }
    for frame in &WITNESS_FRAMES {
        let m = Mat3::from_ints(*frame);
        if let Some(w) = witness_in_frame(g, &m, prec) {
            return Some(w);
        }
    }
    None
}

fn witness_in_frame(g: &TernaryCubic<Rational>, m: &Mat3<Rational>, prec: u32) -> Option<Witness> {
    let gm = g.act(m).to_form();
    let one = Rational::from(1);
    let gx = gm.partial(0);
    let gy = gm.partial(1);
    let res = resultant(&gx, &gy, 1, &one);
    // dehomogenize z = 1
    let deg = res.terms().map(|(e, _)| e[0]).max()? as usize;
    let mut c = vec![Rational::new(); deg + 1];
    for (e, v) in res.terms() {
        c[e[0] as usize] += v;
    }
    let r = UniPoly::new(c);
    if r.degree().unwrap_or(0) == 0 {
        return None;
    }
    let rc = r.to_complex(prec);
    let xs = complex_roots(&rc, 0).ok()?;
    let grad: [Form<Complex>; 3] =
        std::array::from_fn(|i| gm.partial(i).map(|v| Complex::with_val(prec, v)));
    let mc = m.to_complex(prec);
    for x in xs {
        // roots of gx(x, y, 1) in y
        let mut yc = vec![Complex::new(prec); 3];
        for (e, v) in grad[0].terms() {
            let mut t = v.clone();
            for _ in 0..e[0] {
                t *= &x;
            }
            yc[e[1] as usize] += &t;
        }
        let py = UniPoly::new(yc);
        let ys = match py.degree() {
            Some(d) if d >= 1 => complex_roots(&py, 1).ok()?,
            _ => continue,
        };
        for y in ys {
            let y = newton_polish(&py, y, 4);
            let p = [x.clone(), y, Complex::with_val(prec, 1)];
            let scale = numeric::norm(&p);
            let ok = grad.iter().all(|d| {
                let v = numeric::modulus(&d.eval(&p));
                v < Float::with_val(prec, numeric::threshold(prec / 2) * &scale)
            });
            if !ok {
                continue;
            }
            let q = normalize_projective(&mc.apply(&p));
            let bound = Integer::from(1) << (prec / 8);
            let exact: Option<[Rational; 3]> = (|| {
                Some([
                    rational_reconstruct_complex(&q[0], &bound).ok()?,
                    rational_reconstruct_complex(&q[1], &bound).ok()?,
                    rational_reconstruct_complex(&q[2], &bound).ok()?,
                ])
            })();
            if let Some(e) = exact {
                if partials_vanish_exactly(g, &e) {
                    return Some(Witness::Rational(e));
                }
            }
            return Some(Witness::Numeric(q));
        }
    }
    None
}

/// Singular members of a pencil.
#[derive(Clone, Debug)]
pub struct SingularMembers {
    /// Exact rational parameters of singular members.
    pub rational: Vec<PencilParameter>,
    /// Number of distinct singular members over the complex numbers.
    pub total: usize,
    /// Numeric parameters `s/t` of all singular members with `t != 0`.
    pub numeric: Vec<Complex>,
}

/// Locates the singular members of `sA + tB`.
///
/// The discriminant restricted to the pencil is a binary form of degree 12,
/// assembled exactly from the invariant forms; for a pencil of cubics
/// through nine points in Hesse position it is a cube of a quartic, so
/// exactly four distinct roots are expected.
pub fn singular_members(p: &Pencil, prec: u32) -> Result<SingularMembers> {
    let disc = p.discriminant_form()?;
    if disc.is_zero() {
        return Err(Error::WrongCount(usize::MAX));
    }
    let total = disc.distinct_root_count();
    if total != 4 {
        return Err(Error::WrongCount(total));
    }
    let rational = disc
        .rational_roots(prec, 0)?
        .into_iter()
        .map(|(s, t)| PencilParameter::new(s, t))
        .collect::<Result<Vec<_>>>()?;
    let sf = disc.affine().squarefree();
    let numeric = match sf.degree() {
        Some(d) if d >= 1 => complex_roots(&sf.to_complex(prec), 0)?,
        _ => vec![],
    };
    Ok(SingularMembers {
        rational,
        total,
        numeric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cubic::named::{fermat, xyz};
    use crate::arith::rational::q;

    #[test]
    fn examples() {
        let r = is_singular(&xyz(), 256).unwrap();
        assert!(r.singular);
        match r.witness {
            Some(Witness::Rational(p)) => assert_eq!(p, [q(1), q(0), q(0)]),
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(!is_singular(&fermat(), 256).unwrap().singular);
        let reducible = fermat().scale(&q(36)).sub(&xyz().scale(&q(108)));
        let r = is_singular(&reducible, 256).unwrap();
        assert!(r.singular);
        // singular points of x^3+y^3+z^3-3xyz are [1:w:w^2]; [1:1:1] is rational
        match r.witness {
            Some(Witness::Rational(p)) => assert!(partials_vanish_exactly(&reducible, &p)),
            Some(Witness::Numeric(p)) => {
                let c = reducible.to_complex(256);
                assert!(c
                    .gradient(&p)
                    .iter()
                    .all(|v| numeric::modulus_f64(v) < 1e-40));
            }
            None => panic!("no witness"),
        }
    }

    #[test]
    fn fermat_hesse_pencil() {
        let p = Pencil::new(fermat(), xyz().scale(&q(-108))).unwrap();
        let sm = singular_members(&p, 256).unwrap();
        assert_eq!(sm.total, 4);
        let expect = vec![
            PencilParameter::from_ints(0, 1).unwrap(),
            PencilParameter::from_ints(36, 1).unwrap(),
        ];
        let mut got = sm.rational.clone();
        got.sort();
        assert_eq!(got, expect);
        // the remaining two are a complex-conjugate pair
        let nonreal: Vec<_> = sm
            .numeric
            .iter()
            .filter(|z| z.imag().clone().abs() > 1e-30)
            .collect();
        assert_eq!(nonreal.len(), 2);
        let sum = nonreal[0].clone().conj() - nonreal[1];
        assert!(numeric::modulus_f64(&sum) < 1e-40);
    }
}
