//! The nine flex points of a smooth plane cubic.

use rug::{Complex, Float, Rational};

use crate::arith::numeric::{self, normalize_projective, projective_distance};
use crate::arith::poly::UniPoly;
use crate::arith::resultant::resultant;
use crate::arith::roots::complex_roots;
use crate::arith::{Form, Mat3, TernaryCubic};
use crate::covariants::{hessian, invariants};
use crate::error::{Error, Result};

/// Nine projective points, each normalized so its largest-modulus
/// coordinate is 1.
#[derive(Clone, Debug)]
pub struct FlexScheme {
    pub points: Vec<[Complex; 3]>,
    pub precision: u32,
    /// The cubic the scheme was computed from, when there is one.
    pub source: Option<TernaryCubic<Rational>>,
}

impl FlexScheme {
    pub fn new(points: Vec<[Complex; 3]>, precision: u32) -> Result<Self> {
        if points.len() != 9 {
            return Err(Error::DegenerateIntersection(format!(
                "{} points instead of 9",
                points.len()
            )));
        }
        let points: Vec<_> = points.iter().map(normalize_projective).collect();
        let s = FlexScheme {
            points,
            precision,
            source: None,
        };
        let sep = s.min_separation();
        if sep < numeric::threshold_f64(precision).max(1e-300) * 1e6 {
            return Err(Error::DegenerateIntersection(format!(
                "points not distinct (separation {sep:e})"
            )));
        }
        Ok(s)
    }

    /// Smallest pairwise projective distance.
    pub fn min_separation(&self) -> f64 {
        let mut m = f64::INFINITY;
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                m = m.min(projective_distance(&self.points[i], &self.points[j]).to_f64());
            }
        }
        m
    }

    /// `M Φ`.
    pub fn transform(&self, m: &Mat3<Complex>) -> FlexScheme {
        FlexScheme {
            points: self
                .points
                .iter()
                .map(|p| normalize_projective(&m.apply(p)))
                .collect(),
            precision: self.precision,
            source: None,
        }
    }

    /// True when both schemes have the same points, in any order.
    pub fn same_points(&self, other: &FlexScheme) -> bool {
        numeric::point_sets_equal(&self.points, &other.points)
    }

    pub fn reordered(&self, order: &[usize]) -> FlexScheme {
        FlexScheme {
            points: order.iter().map(|&i| self.points[i].clone()).collect(),
            precision: self.precision,
            source: self.source.clone(),
        }
    }
}

/// The flex scheme of the Fermat cubic in closed form:
/// `[-ζ:1:0], [0:-ζ:1], [1:0:-ζ]` for the cube roots of unity `ζ`.
pub fn fermat_flexes(prec: u32) -> FlexScheme {
    let mut pts = Vec::new();
    let zero = Complex::new(prec);
    let one = Complex::with_val(prec, 1);
    for k in 0..3 {
        let mz = -numeric::cube_root_of_unity(prec, k);
        pts.push([mz.clone(), one.clone(), zero.clone()]);
        pts.push([zero.clone(), mz.clone(), one.clone()]);
        pts.push([one.clone(), zero.clone(), mz]);
    }
    FlexScheme::new(pts, prec).expect("Fermat flexes are distinct")
}

/// Coordinate changes tried in turn until the projection to the x-line
/// separates the nine flexes.
const FRAMES: [[[i64; 3]; 3]; 4] = [
    [[1, 2, -1], [3, 1, 2], [-2, 1, 4]],
    [[2, -1, 3], [1, 4, 1], [3, 2, -5]],
    [[5, 1, -2], [-1, 3, 7], [2, -4, 1]],
    [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
];

/// `x`-coefficients of a form in `x, y` after setting `z = 1`.
fn dehomogenize_x(f: &Form<Rational>) -> UniPoly<Rational> {
    let deg = f.terms().map(|(e, _)| e[0]).max().unwrap_or(0) as usize;
    let mut c = vec![Rational::new(); deg + 1];
    for (e, v) in f.terms() {
        debug_assert_eq!(e[1], 0);
        c[e[0] as usize] += v;
    }
    UniPoly::new(c)
}

/// Polynomial in `y` obtained by fixing `x` and `z = 1`.
fn slice_y(f: &Form<Complex>, x: &Complex) -> UniPoly<Complex> {
    let prec = x.prec().0;
    let deg = f.terms().map(|(e, _)| e[1]).max().unwrap_or(0) as usize;
    let mut c = vec![Complex::new(prec); deg + 1];
    for (e, v) in f.terms() {
        let mut t = v.clone();
        for _ in 0..e[0] {
            t *= x;
        }
        c[e[1] as usize] += &t;
    }
    UniPoly::new(c)
}

/// Newton's method on the affine system `G(x,y,1) = H(x,y,1) = 0`.
fn polish(
    g: &Form<Complex>,
    h: &Form<Complex>,
    mut x: Complex,
    mut y: Complex,
) -> (Complex, Complex) {
    let prec = x.prec().0;
    let (gx, gy, hx, hy) = (g.partial(0), g.partial(1), h.partial(0), h.partial(1));
    let one = Complex::with_val(prec, 1);
    for _ in 0..(8 + prec.ilog2() as usize) {
        let p = [x.clone(), y.clone(), one.clone()];
        let (gv, hv) = (g.eval(&p), h.eval(&p));
        let (a, b, c, d) = (gx.eval(&p), gy.eval(&p), hx.eval(&p), hy.eval(&p));
        let det = a.clone() * &d - b.clone() * &c;
        if det.is_zero() {
            break;
        }
        let dx = (d * &gv - b * &hv) / &det;
        let dy = (a * &hv - c * &gv) / &det;
        let small =
            numeric::modulus(&dx) + numeric::modulus(&dy) < Float::with_val(prec, 1) >> (prec - 8);
        x -= &dx;
        y -= &dy;
        if small {
            break;
        }
    }
    (x, y)
}

/// The nine flexes of `G`, as the intersection `G = H(G) = 0`.
///
/// In a generic frame the x-coordinates of the flexes are the roots of
/// `Res_y(G, H)`, a polynomial of degree 9; each root is lifted to the `y`
/// among the roots of `G` where `H` is smallest and polished by Newton's
/// method on the pair.
pub fn flex_points(g: &TernaryCubic<Rational>, prec: u32) -> Result<FlexScheme> {
    if g.is_zero() || invariants(g)?.is_singular() {
        return Err(Error::SingularInput);
    }
    let one = Rational::from(1);
    let mut last_err = None;
    for frame in &FRAMES {
        let m = Mat3::from_ints(*frame);
        let gm = g.act(&m);
        let hm = hessian(&gm);
        let (gf, hf) = (gm.to_form(), hm.to_form());
        let res = dehomogenize_x(&resultant(&gf, &hf, 1, &one));
        if res.degree() != Some(9) || res.squarefree().degree() != Some(9) {
            last_err.get_or_insert(Error::DegenerateIntersection(
                "projection not separating".into(),
            ));
            continue;
        }
        let xs = complex_roots(&res.to_complex(prec), 0)?;
        let (gc, hc) = (
            gf.map(|c| Complex::with_val(prec, c)),
            hf.map(|c| Complex::with_val(prec, c)),
        );
        let mc = m.to_complex(prec);
        let mut pts = Vec::with_capacity(9);
        let mut ok = true;
        for x in xs {
            let ys = complex_roots(&slice_y(&gc, &x), 1)?;
            let one_c = Complex::with_val(prec, 1);
            let y = ys
                .into_iter()
                .min_by(|a, b| {
                    let ha = numeric::modulus(&hc.eval(&[x.clone(), a.clone(), one_c.clone()]));
                    let hb = numeric::modulus(&hc.eval(&[x.clone(), b.clone(), one_c.clone()]));
                    ha.partial_cmp(&hb).unwrap()
                })
                .expect("cubic in y has roots");
            let (x, y) = polish(&gc, &hc, x, y);
            let p = normalize_projective(&mc.apply(&[x, y, one_c]));
            pts.push(p);
        }
        let scheme = match FlexScheme::new(pts, prec) {
            Ok(s) => s,
            Err(e) => {
                last_err = Some(e);
                continue;
            }
        };
        // residual check on the original cubic and its Hessian
        let gcx = g.to_complex(prec);
        let hcx = hessian(g).to_complex(prec);
        let tol = numeric::threshold(prec);
        for p in &scheme.points {
            if gcx.relative_residual(p) >= tol || hcx.relative_residual(p) >= tol {
                ok = false;
            }
        }
        if ok {
            return Ok(FlexScheme {
                source: Some(g.clone()),
                ..scheme
            });
        }
        last_err = Some(Error::DegenerateIntersection(
            "residuals above threshold".into(),
        ));
    }
    Err(last_err.unwrap_or_else(|| Error::DegenerateIntersection("no frame worked".into())))
}

/// The flexes of `G` with rational coordinates, certified exactly,
/// as primitive integer vectors with positive first nonzero entry.
pub fn rational_flexes(g: &TernaryCubic<Rational>, prec: u32) -> Result<Vec<[Rational; 3]>> {
    let phi = flex_points(g, prec)?;
    let h = hessian(g);
    let bound = rug::Integer::from(1) << (prec / 4 - 2);
    let mut out = Vec::new();
    for p in &phi.points {
        let mut v = Vec::with_capacity(3);
        for c in p {
            match crate::arith::reconstruct::rational_reconstruct_complex(c, &bound) {
                Ok(r) => v.push(r),
                Err(_) => break,
            }
        }
        if v.len() < 3 {
            continue;
        }
        let (v, _) = crate::arith::rational::primitive_integer_vector(&v);
        let pt: [Rational; 3] = v.try_into().expect("three coordinates");
        if g.eval(&pt).cmp0().is_eq() && h.eval(&pt).cmp0().is_eq() && !out.contains(&pt) {
            out.push(pt);
        }
    }
    out.sort();
    Ok(out)
}
