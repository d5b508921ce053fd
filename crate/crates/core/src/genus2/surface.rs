use rug::{Complex, Rational};

use super::pipeline::Options;
use crate::arith::rational::q;
use crate::arith::{BilinearForm, Mat3, TernaryCubic};
use crate::covariants::pencil::DualPencilTransport;
use crate::covariants::{
    dual_pencil, invariants, j_solve_on_pencil, linear_equivalence, PencilParameter,
};
use crate::ellcurve::{
    nagell, non_isogeny_certificate, point_search, NonIsogeny, PointedCubic, PointedLaw,
    WeierstrassLaw, WeierstrassModel,
};
use crate::error::{Error, ErrorClass, Result};
use crate::flex::rational_flexes;

/// `E1 x E2` in `P^2 x P^2` together with the curve `D` and everything
/// needed to run the group laws on both factors.
#[derive(Clone, Debug)]
pub struct SurfacePair {
    /// Weierstrass cubic of `E1` in `x, y, z`; origin `[0:1:0]`.
    pub f: TernaryCubic<Rational>,
    pub e1: WeierstrassModel,
    /// Model of `E2` in `u, v, w`.
    pub g: TernaryCubic<Rational>,
    pub origin2: [Rational; 3],
    /// Weierstrass model of `E2`; equal to `g` when `weierstrass2`.
    pub e2: WeierstrassModel,
    pub weierstrass2: bool,
    /// `D` is `x^T B u = 0` on the surface.
    pub incidence: BilinearForm,
    pub inv1: Mat3<Rational>,
    /// The negation on `g`, when it is linear (flex origin).
    pub inv2: Option<Mat3<Rational>>,
    /// `(s:t)` on the dual pencil of the covering cubic.
    pub parameter: Option<PencilParameter>,
    /// The member `C_t` of that pencil.
    pub member: Option<TernaryCubic<Rational>>,
    /// The corresponding member of the dual pencil of `F`.
    pub pencil_member: TernaryCubic<Rational>,
    /// `M` with `pencil_member ∘ M` proportional to `g`.
    pub equivalence: Option<Mat3<Rational>>,
    /// A rational point on `member`.
    pub rational_point: Option<[Rational; 3]>,
    pub certificate: Option<NonIsogeny>,
    /// Set when a target model was requested but no linear equivalence
    /// to it exists, so the pencil model is used instead.
    pub fell_back: bool,
}

/// The group law on the second factor.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Factor2 {
    Weierstrass(WeierstrassLaw<Complex>),
    Pointed(PointedLaw<Complex>),
}

impl Factor2 {
    pub fn mul(&self, m: i64, p: &[Complex; 3]) -> [Complex; 3] {
        match self {
            Factor2::Weierstrass(l) => l.mul(m, p),
            Factor2::Pointed(l) => l.mul(m, p),
        }
    }

    pub fn neg(&self, p: &[Complex; 3]) -> [Complex; 3] {
        match self {
            Factor2::Weierstrass(l) => l.neg(p),
            Factor2::Pointed(l) => l.neg(p),
        }
    }
}

impl SurfacePair {
    /// Both factors in Weierstrass form with an arbitrary incidence form.
    pub fn weierstrass(
        e1: &WeierstrassModel,
        e2: &WeierstrassModel,
        incidence: BilinearForm,
    ) -> Self {
        SurfacePair {
            f: e1.cubic(),
            e1: e1.clone(),
            g: e2.cubic(),
            origin2: [q(0), q(1), q(0)],
            e2: e2.clone(),
            weierstrass2: true,
            incidence,
            inv1: e1.involution(),
            inv2: Some(e2.involution()),
            parameter: None,
            member: None,
            pencil_member: e2.cubic(),
            equivalence: None,
            rational_point: None,
            certificate: None,
            fell_back: false,
        }
    }

    pub fn origin1(&self) -> [Rational; 3] {
        [q(0), q(1), q(0)]
    }

    pub fn law1(&self, prec: u32) -> WeierstrassLaw<Complex> {
        WeierstrassLaw::new(&self.e1, &Complex::new(prec))
    }

    pub fn law2(&self, prec: u32) -> Factor2 {
        if self.weierstrass2 {
            Factor2::Weierstrass(WeierstrassLaw::new(&self.e2, &Complex::new(prec)))
        } else {
            Factor2::Pointed(PointedLaw::new(
                self.g.to_complex(prec),
                self.origin2.clone().map(|c| Complex::with_val(prec, c)),
            ))
        }
    }
}

/// First point of `g` found with height bounds `5, 10, 20, ...` up to `bound`.
fn first_point(g: &TernaryCubic<Rational>, bound: i64) -> Option<[Rational; 3]> {
    let mut h = 5.min(bound);
    while h > 0 {
        if let Some(p) = point_search(g, h).into_iter().next() {
            return Some(p.map(Rational::from));
        }
        if h >= bound {
            break;
        }
        h = (2 * h).min(bound);
    }
    None
}

/// Primitive integer points of `P^2` ordered by height, then lexicographically.
fn points_by_height(bound: i64) -> impl Iterator<Item = [i64; 3]> {
    (0..=bound).flat_map(move |h| {
        let mut v = Vec::new();
        for x in -h..=h {
            for y in -h..=h {
                for z in -h..=h {
                    if x.abs().max(y.abs()).max(z.abs()) != h {
                        continue;
                    }
                    let first = [x, y, z].into_iter().find(|&c| c != 0);
                    if first.is_none_or(|c| c < 0) {
                        continue;
                    }
                    let g = num_gcd(num_gcd(x.abs(), y.abs()), z.abs());
                    if g == 1 {
                        v.push([x, y, z]);
                    }
                }
            }
        }
        v
    })
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// The pair in the pencil model: `G` itself with a rational origin,
/// preferring a rational flex.
#[allow(clippy::too_many_arguments)]
fn pencil_pair(
    e1: &WeierstrassModel,
    g0: TernaryCubic<Rational>,
    parameter: PencilParameter,
    member: TernaryCubic<Rational>,
    rational_point: Option<[Rational; 3]>,
    certificate: NonIsogeny,
    opts: &Options,
) -> Result<SurfacePair> {
    let origin = match rational_flexes(&g0, opts.precision)?.into_iter().next() {
        Some(p) => p,
        None => {
            first_point(&g0, opts.height_bound).ok_or(Error::NoRationalPoint(opts.height_bound))?
        }
    };
    let pc = PointedCubic::new(g0.clone(), origin.clone())?;
    let red = nagell(&pc)?;
    let inv2 = match &red.linear {
        Some(l) => {
            let li = l.inverse().ok_or(Error::SingularInput)?;
            Some(l.mul(&red.model.involution()).mul(&li))
        }
        None => None,
    };
    Ok(SurfacePair {
        f: e1.cubic(),
        e1: e1.clone(),
        g: g0.clone(),
        origin2: origin,
        e2: red.model,
        weierstrass2: false,
        incidence: BilinearForm::incidence(),
        inv1: e1.involution(),
        inv2,
        parameter: Some(parameter),
        member: Some(member),
        pencil_member: g0,
        equivalence: None,
        rational_point,
        certificate: Some(certificate),
        fell_back: false,
    })
}

/// Builds `E1 x E2` from the Weierstrass cubic of `E1` and a plane cubic
/// model `delta` of a 3-covering of `E1`.
///
/// With a target, `E2` is the member of the dual pencil of `delta` with the
/// target's `j`, moved to the target's Weierstrass coordinates. Without one,
/// members through rational points are tried by height until one is smooth,
/// provably not isogenous to `E1`, and has a rational origin. With only a
/// target `j` in the options, the members with that `j` are tried instead.
pub fn build_surface(
    f: &TernaryCubic<Rational>,
    delta: &TernaryCubic<Rational>,
    target: Option<&WeierstrassModel>,
    opts: &Options,
) -> Result<SurfacePair> {
    let prec = opts.precision;
    let e1 = WeierstrassModel::from_cubic(f)
        .ok_or_else(|| Error::InvalidInput("E1 cubic is not a Weierstrass cubic".into()))?;
    if delta.is_zero() {
        return Err(Error::InvalidInput("zero covering cubic".into()));
    }
    if invariants(delta)?.is_singular() {
        return Err(Error::SingularInput);
    }
    let dpc = dual_pencil(delta)?;
    let tr = DualPencilTransport::new(delta, f).map_err(|_| {
        Error::InvalidInput("covering cubic does not have the invariants of E1".into())
    })?;

    if let Some(w2) = target {
        let cert = non_isogeny_certificate(&e1, w2, opts.iso_bound)
            .ok_or(Error::IsogenousPair(opts.iso_bound))?;
        let sols = j_solve_on_pencil(&dpc, &w2.j(), prec)?;
        if sols.is_empty() {
            return Err(Error::NoJMatch);
        }
        let w2c = w2.cubic();
        let mut fallback = None;
        for (par, ct) in sols {
            let g0 = tr
                .apply(&ct)
                .ok_or_else(|| Error::Internal("member left the dual pencil".into()))?;
            let rp = first_point(&ct, opts.height_bound);
            if let Some(mt) = linear_equivalence(&w2c, &g0, prec)? {
                return Ok(SurfacePair {
                    f: f.clone(),
                    e1: e1.clone(),
                    g: w2c,
                    origin2: [q(0), q(1), q(0)],
                    e2: w2.clone(),
                    weierstrass2: true,
                    incidence: BilinearForm::new(mt.clone()),
                    inv1: e1.involution(),
                    inv2: Some(w2.involution()),
                    parameter: Some(par),
                    member: Some(ct),
                    pencil_member: g0,
                    equivalence: Some(mt),
                    rational_point: rp,
                    certificate: Some(cert),
                    fell_back: false,
                });
            }
            if fallback.is_none() {
                fallback = Some((g0, par, ct, rp));
            }
        }
        let (g0, par, ct, rp) = fallback.expect("at least one solution");
        let mut pair = pencil_pair(&e1, g0, par, ct, rp, cert, opts)
            .map_err(|_| Error::NoLinearEquivalence)?;
        pair.fell_back = true;
        return Ok(pair);
    }

    if let Some(j) = &opts.target_j {
        let sols = j_solve_on_pencil(&dpc, j, prec)?;
        if sols.is_empty() {
            return Err(Error::NoJMatch);
        }
        let mut last = Error::NoJMatch;
        for (par, ct) in sols {
            let g0 = tr
                .apply(&ct)
                .ok_or_else(|| Error::Internal("member left the dual pencil".into()))?;
            let jac = WeierstrassModel::jacobian_of(&g0)?;
            let Some(cert) = non_isogeny_certificate(&e1, &jac, opts.iso_bound) else {
                last = Error::IsogenousPair(opts.iso_bound);
                continue;
            };
            let rp = first_point(&ct, opts.height_bound);
            match pencil_pair(&e1, g0, par, ct, rp, cert, opts) {
                Ok(pair) => return Ok(pair),
                Err(e) => last = e,
            }
        }
        return Err(last);
    }

    let mut seen = Vec::new();
    for r in points_by_height(opts.height_bound) {
        let r = r.map(Rational::from);
        let (a, b) = (dpc.a.eval(&r), dpc.b.eval(&r));
        if a.cmp0().is_eq() && b.cmp0().is_eq() {
            continue;
        }
        let par = PencilParameter::new(b, -a)?;
        if seen.contains(&par) {
            continue;
        }
        seen.push(par.clone());
        let ct = dpc.member(&par);
        if invariants(&ct)?.is_singular() {
            continue;
        }
        let Some(g0) = tr.apply(&ct) else { continue };
        let Ok(jac) = WeierstrassModel::jacobian_of(&g0) else {
            continue;
        };
        let Some(cert) = non_isogeny_certificate(&e1, &jac, opts.iso_bound) else {
            continue;
        };
        match pencil_pair(&e1, g0, par, ct, Some(r), cert, opts) {
            Ok(pair) => return Ok(pair),
            // more members will not help
            Err(e) if e.class() == ErrorClass::Precision => return Err(e),
            Err(_) => {}
        }
    }
    Err(Error::NoRationalPoint(opts.height_bound))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heights_are_primitive_and_ordered() {
        let pts: Vec<_> = points_by_height(1).collect();
        assert_eq!(pts.len(), 13);
        assert_eq!(pts[0], [0, 0, 1]);
        assert!(
            points_by_height(2).all(|p| num_gcd(num_gcd(p[0].abs(), p[1].abs()), p[2].abs()) == 1)
        );
    }
}
