//! Reduction of a pointed smooth plane cubic to Weierstrass form.
//!
//! A flex origin needs only a linear change of coordinates. Otherwise the
//! tangent at `O` meets the curve again in `P1`; in coordinates with
//! `P1 = [1:0:0]`, `O = [0:1:0]` and tangent `Z = 0` the cubic reads
//!
//! `c X^2 Y + Z (a X^2 + b XY + g Y^2 + d XZ + e YZ + k Z^2)`,
//!
//! and `t = Y/Z`, `s = (cY + aZ) X / Z^2` satisfy a Weierstrass equation
//! (projection from `P1`).

use rug::{Complex, Rational};

use super::law::{rescale, same_point, PointedLaw};
use super::weierstrass::WeierstrassModel;
use crate::arith::form::Form;
use crate::arith::{Field, Mat3, TernaryCubic};
use crate::covariants::invariants;
use crate::error::{Error, Result};

/// A smooth plane cubic with a rational origin.
#[derive(Clone, Debug, PartialEq)]
pub struct PointedCubic {
    pub cubic: TernaryCubic<Rational>,
    pub origin: [Rational; 3],
}

impl PointedCubic {
    pub fn new(cubic: TernaryCubic<Rational>, origin: [Rational; 3]) -> Result<Self> {
        if origin.iter().all(|c| c.cmp0().is_eq()) {
            return Err(Error::InvalidInput("origin [0:0:0]".into()));
        }
        if cubic.eval(&origin).cmp0().is_ne() {
            return Err(Error::InvalidInput("origin is not on the cubic".into()));
        }
        if invariants(&cubic)?.is_singular() {
            return Err(Error::SingularInput);
        }
        Ok(PointedCubic { cubic, origin })
    }

    pub fn law(&self) -> PointedLaw<Rational> {
        PointedLaw::new(self.cubic.clone(), self.origin.clone())
    }

    pub fn law_complex(&self, prec: u32) -> PointedLaw<Complex> {
        PointedLaw::new(
            self.cubic.to_complex(prec),
            self.origin.clone().map(|c| Complex::with_val(prec, c)),
        )
    }

    pub fn origin_is_flex(&self) -> bool {
        let law = self.law();
        same_point(&law.third(&self.origin, &self.origin), &self.origin)
    }
}

/// A map of the plane given by three forms of equal degree, with explicit
/// values at the finitely many points where all three vanish.
#[derive(Clone, Debug)]
pub struct CubicMap {
    pub comps: [Form<Rational>; 3],
    pub exceptions: Vec<([Rational; 3], [Rational; 3])>,
}

impl CubicMap {
    pub fn linear(m: &Mat3<Rational>) -> Self {
        CubicMap {
            comps: std::array::from_fn(|i| Form::linear(&m.m[i])),
            exceptions: vec![],
        }
    }

    fn compose_linear(&self, m: &Mat3<Rational>) -> Self {
        let subs: [Form<Rational>; 3] = std::array::from_fn(|i| Form::linear(&m.m[i]));
        let one = Rational::from(1);
        CubicMap {
            comps: std::array::from_fn(|i| self.comps[i].compose(&subs, &one)),
            exceptions: self.exceptions.clone(),
        }
    }

    pub fn apply<T: Field>(&self, p: &[T; 3]) -> [T; 3] {
        let like = &p[0];
        let r: [T; 3] =
            std::array::from_fn(|i| self.comps[i].map(|c| like.rational_like(c)).eval(p));
        let scale = p.iter().map(|c| c.pivot_weight()).fold(0.0, f64::max);
        let deg = self
            .comps
            .iter()
            .filter_map(|f| f.terms().next().map(|(e, _)| e[0] + e[1] + e[2]))
            .max()
            .unwrap_or(1);
        let rw = r.iter().map(|c| c.pivot_weight()).fold(0.0, f64::max);
        let vanishes = rw == 0.0 || (scale > 0.0 && rw / scale.powi(deg as i32) < 1e-30);
        if vanishes {
            for (src, dst) in &self.exceptions {
                let s = src.clone().map(|c| like.rational_like(&c));
                if same_point(&s, p) {
                    return dst.clone().map(|c| like.rational_like(&c));
                }
            }
        }
        rescale(&r)
    }
}

#[derive(Clone, Debug)]
pub struct NagellReduction {
    pub model: WeierstrassModel,
    /// From the cubic to the Weierstrass model (origin to `[0:1:0]`).
    pub forward: CubicMap,
    /// From the Weierstrass model back to the cubic.
    pub inverse: CubicMap,
    /// `[x:y:z] = L [X:Y:Z]` when the origin is a flex.
    pub linear: Option<Mat3<Rational>>,
}

fn unit<T: Field>(like: &T, k: usize) -> [T; 3] {
    let mut e: [T; 3] = std::array::from_fn(|_| like.zero_like());
    e[k] = like.one_like();
    e
}

fn cross<T: Field>(a: &[T; 3], b: &[T; 3]) -> [T; 3] {
    [
        a[1].clone() * &b[2] - &(a[2].clone() * &b[1]),
        a[2].clone() * &b[0] - &(a[0].clone() * &b[2]),
        a[0].clone() * &b[1] - &(a[1].clone() * &b[0]),
    ]
}

fn max_weight<T: Field>(v: &[T]) -> f64 {
    v.iter().map(|c| c.pivot_weight()).fold(0.0, f64::max)
}

/// Linear reduction at a flex.
///
/// Returns `L` with `G ∘ L` a scalar multiple of a Weierstrass cubic whose
/// origin `[0:1:0]` is `flex`, and the coefficients `a1, a2, a3, a4, a6`.
pub fn flex_reduction<T: Field>(g: &TernaryCubic<T>, flex: &[T; 3]) -> Result<(Mat3<T>, [T; 5])> {
    let like = &flex[0];
    let l = g.gradient(flex);
    if max_weight(&l) == 0.0 {
        return Err(Error::SingularInput);
    }
    // a second point on the tangent line
    let mut c1: Option<[T; 3]> = None;
    let mut best = -1.0;
    for k in 0..3 {
        let d = cross(&l, &unit(like, k));
        let w = max_weight(&d);
        if w > 0.0 && !same_point(&d, flex) && w > best {
            best = w;
            c1 = Some(d);
        }
    }
    let c1 = c1.ok_or_else(|| Error::DegenerateTangent("no tangent direction".into()))?;
    let k = (0..3)
        .max_by(|&a, &b| l[a].pivot_weight().total_cmp(&l[b].pivot_weight()))
        .unwrap();
    let mut c3 = unit(like, k);
    c3[k] = like.one_like() / &l[k];
    let m = Mat3::from_cols([c1, flex.clone(), c3]);
    let gm = g.act(&m);
    let c = &gm.coeffs;
    let size = max_weight(c);
    // v^3, u v^2 and u^2 v vanish for a flex with tangent w = 0
    for i in [1usize, 3, 6] {
        if c[i].pivot_weight() > size * 1e-20 && !(c[i].clone() / &c[7]).is_negligible() {
            return Err(Error::DegenerateTangent("origin is not a flex".into()));
        }
    }
    let (a, e) = (c[0].clone(), c[7].clone());
    if a.is_negligible() || e.is_negligible() {
        return Err(Error::SingularInput);
    }
    let ae = a.clone() * &e;
    let d = Mat3::diag([-ae.clone(), a.clone() * &ae, like.one_like()]);
    let md = m.mul(&d);
    let w = g.act(&md);
    let lead = w.coeffs[7].clone();
    let n: Vec<T> = w.coeffs.iter().map(|x| x.clone() / &lead).collect();
    let coeffs = [
        n[4].clone(),
        -n[2].clone(),
        n[8].clone(),
        -n[5].clone(),
        -n[9].clone(),
    ];
    Ok((md, coeffs))
}

/// Weierstrass model of a pointed cubic with explicit maps both ways.
pub fn nagell(pc: &PointedCubic) -> Result<NagellReduction> {
    if pc.origin_is_flex() {
        let (l, a) = flex_reduction(&pc.cubic, &pc.origin)?;
        let model = WeierstrassModel::new(a)?;
        let inv = l.inverse().ok_or(Error::SingularInput)?;
        return Ok(NagellReduction {
            model,
            forward: CubicMap::linear(&inv),
            inverse: CubicMap::linear(&l),
            linear: Some(l),
        });
    }
    non_flex(pc)
}

fn non_flex(pc: &PointedCubic) -> Result<NagellReduction> {
    let law = pc.law();
    let o = pc.origin.clone();
    let p1 = law.third(&o, &o);
    let l = pc.cubic.gradient(&o);
    let k = (0..3)
        .find(|&k| l[k].cmp0().is_ne())
        .ok_or(Error::SingularInput)?;
    let mut c3 = unit(&l[0], k);
    c3[k] = Rational::from(1) / &l[k];
    let m = Mat3::from_cols([p1.clone(), o.clone(), c3]);
    let minv = m
        .inverse()
        .ok_or_else(|| Error::DegenerateTangent("tangent point equals origin".into()))?;
    let gm = pc.cubic.act(&m);
    let c = &gm.coeffs;
    if [0usize, 3, 6].iter().any(|&i| c[i].cmp0().is_ne()) {
        return Err(Error::Internal("tangent frame has the wrong shape".into()));
    }
    let cc = c[1].clone();
    let (al, be, ga, de, ep, ze) = (&c[2], &c[4], &c[7], &c[5], &c[8], &c[9]);
    if cc.cmp0().is_eq() || ga.cmp0().is_eq() {
        return Err(Error::SingularInput);
    }
    let cg = Rational::from(&cc * ga);
    let rho = -cg.clone();
    let kappa = Rational::from(cg.square_ref());
    let k2 = Rational::from(kappa.square_ref());
    let a1 = Rational::from(be * &rho) / &kappa;
    let a3 = de.clone() / &kappa;
    let rho2 = Rational::from(rho.square_ref());
    let a2 = -(Rational::from(&cc * ep) + Rational::from(al * ga)) * &rho2 / &k2;
    let a4 = -(Rational::from(&cc * ze) + Rational::from(al * ep)) * &rho / &k2;
    let a6 = -Rational::from(al * ze) / &k2;
    let model = WeierstrassModel::new([a1, a2, a3, a4, a6])?;

    let one = Rational::from(1);
    let var = |i| Form::var(&one, i);
    let (x, y, z) = (var(0), var(1), var(2));
    // (T : S : W) = (YZ / rho : (cY + aZ) X / kappa : Z^2)
    let cy_az = y.scale(&cc).add(&z.scale(al));
    let fwd = [
        y.mul(&z).scale(&(Rational::from(1) / &rho)),
        cy_az.mul(&x).scale(&(Rational::from(1) / &kappa)),
        z.mul(&z),
    ];
    // (X : Y : Z) = (kappa S W : rho T (c rho T + a W) : (c rho T + a W) W)
    let (t, s, w) = (var(0), var(1), var(2));
    let lin = t.scale(&Rational::from(&cc * &rho)).add(&w.scale(al));
    let inv = [
        s.mul(&w).scale(&kappa),
        t.mul(&lin).scale(&rho),
        lin.mul(&w),
    ];

    let zero3 = |v: [Rational; 3]| v;
    let infinity = zero3([Rational::new(), one.clone(), Rational::new()]);
    let t1 = -Rational::from(al / &cc) / &rho;
    let s1 = (Rational::from(al * be) / &cc - de) / &kappa;
    let p1_image = [t1.clone(), s1, one.clone()];
    // the other point on the tangent at P1
    let lhs = de.clone() - Rational::from(al * be) / &cc;
    let r = if lhs.cmp0().is_eq() {
        [one.clone(), Rational::new(), Rational::new()]
    } else {
        let a2c = Rational::from(al.square_ref()) / Rational::from(cc.square_ref());
        let rhs = -(a2c * ga - Rational::from(ep * al) / &cc + ze);
        [rhs / &lhs, -Rational::from(al / &cc), one.clone()]
    };
    let forward = CubicMap {
        comps: fwd,
        exceptions: vec![
            (
                [Rational::new(), one.clone(), Rational::new()],
                infinity.clone(),
            ),
            ([one.clone(), Rational::new(), Rational::new()], p1_image),
        ],
    }
    .compose_linear(&minv);
    let forward = CubicMap {
        exceptions: vec![
            (o.clone(), infinity.clone()),
            (p1, forward.exceptions[1].1.clone()),
        ],
        ..forward
    };
    let inverse_local = CubicMap {
        comps: inv,
        exceptions: vec![],
    };
    let inverse = CubicMap {
        comps: std::array::from_fn(|i| {
            // [x:y:z] = M [X:Y:Z]
            let mut f = Form::zero();
            for j in 0..3 {
                if m.m[i][j].cmp0().is_ne() {
                    f = f.add(&inverse_local.comps[j].scale(&m.m[i][j]));
                }
            }
            f
        }),
        exceptions: vec![(infinity, o), ([t1, Rational::new(), one], m.apply(&r))],
    };
    Ok(NagellReduction {
        model,
        forward,
        inverse,
        linear: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::numeric;
    use crate::arith::rational::{q, qf};
    use crate::data;
    use crate::ellcurve::law::WeierstrassLaw;
    use crate::ellcurve::weierstrass::isomorphic_over_q;

    fn ipt(v: [i64; 3]) -> [Rational; 3] {
        v.map(q)
    }

    /// Complex points on `g` from lines through a fixed point.
    fn complex_points(g: &TernaryCubic<Rational>, prec: u32, n: usize) -> Vec<[Complex; 3]> {
        let gc = g.to_complex(prec);
        let mut out = Vec::new();
        for k in 1..=n as i64 {
            // the line z = k/7 x + (k-3) y, parametrized by x = 1, y = t
            let a = [
                numeric::cxi(prec, 1),
                numeric::cxi(prec, 0),
                Complex::with_val(prec, qf(k, 7)),
            ];
            let b = [
                numeric::cxi(prec, 0),
                numeric::cxi(prec, 1),
                numeric::cxi(prec, k - 3),
            ];
            let ga = gc.gradient(&a);
            let gb = gc.gradient(&b);
            let coeffs = vec![
                gc.eval(&a),
                numeric::dot(&ga, &b),
                numeric::dot(&gb, &a),
                gc.eval(&b),
            ];
            let poly = crate::arith::UniPoly::new(coeffs);
            let t = crate::arith::roots::complex_roots(&poly, k as u64).unwrap()[0].clone();
            out.push(std::array::from_fn(|i| a[i].clone() + &(t.clone() * &b[i])));
        }
        out
    }

    #[test]
    fn weierstrass_input_is_fixed() {
        let e = data::e681c1();
        let pc = PointedCubic::new(e.cubic(), ipt([0, 1, 0])).unwrap();
        let red = nagell(&pc).unwrap();
        assert!(isomorphic_over_q(&red.model, &e).is_some());
        assert!(same_point(
            &red.forward.apply(&ipt([1, 1, 1])),
            &ipt([1, 1, 1])
        ));
    }

    #[test]
    fn fermat_flex_gives_j_zero() {
        let pc = PointedCubic::new(crate::arith::cubic::named::fermat(), ipt([1, -1, 0])).unwrap();
        assert!(pc.origin_is_flex());
        let red = nagell(&pc).unwrap();
        assert_eq!(red.model.c4(), q(0));
        assert_eq!(red.model.j(), q(0));
    }

    #[test]
    fn non_flex_origin_on_the_e2_member() {
        let g = data::c2_681();
        let pc = PointedCubic::new(g.clone(), ipt([10, 8, 7])).unwrap();
        assert!(!pc.origin_is_flex());
        let red = nagell(&pc).unwrap();
        assert_eq!(red.model.j(), qf(-4096, 2043));
        assert!(isomorphic_over_q(&red.model, &data::e681c1()).is_some());
        // the origin and its tangent point go where they should
        let wl = WeierstrassLaw::new(&red.model, &q(0));
        assert_eq!(red.forward.apply(&pc.origin), wl.zero());
        let o2 = pc.law().third(&pc.origin, &pc.origin);
        let img = red.forward.apply(&o2);
        assert!(red.model.contains(&img));
        assert!(same_point(&red.inverse.apply(&img), &o2));
    }

    #[test]
    fn maps_are_inverse_on_samples() {
        let prec = 256;
        let g = data::c2_681();
        let pc = PointedCubic::new(g.clone(), ipt([10, 8, 7])).unwrap();
        let red = nagell(&pc).unwrap();
        let wl = WeierstrassLaw::new(&red.model, &Complex::new(prec));
        let pl = pc.law_complex(prec);
        for p in complex_points(&g, prec, 6) {
            let img = red.forward.apply(&p);
            assert!(wl.contains(&img));
            assert!(same_point(&red.inverse.apply(&img), &p));
            // [3] commutes with the reduction
            let lhs = red.forward.apply(&pl.mul(3, &p));
            let rhs = wl.mul(3, &img);
            assert!(same_point(&lhs, &rhs));
        }
    }
}
