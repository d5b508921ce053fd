//! Pencils of cubics, the Hesse pencil and the dual pencil.

use rug::Rational;

use super::forms::{caylean, hessian};
use super::invariants::{invariants, CubicInvariants};
use crate::arith::binary::BinaryForm;
use crate::arith::mat::{kernel_basis, rank, rref};
use crate::arith::rational::{primitive_integer_vector, q, qpow};
use crate::arith::TernaryCubic;
use crate::error::{Error, Result};

/// A point `[s:t]` of the projective line, stored canonically as coprime
/// integers with positive first nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PencilParameter {
    pub s: Rational,
    pub t: Rational,
}

impl PencilParameter {
    pub fn new(s: Rational, t: Rational) -> Result<Self> {
        if s.cmp0().is_eq() && t.cmp0().is_eq() {
            return Err(Error::InvalidInput("pencil parameter [0:0]".into()));
        }
        let (v, _) = primitive_integer_vector(&[s, t]);
        let [s, t]: [Rational; 2] = v.try_into().expect("two entries");
        Ok(PencilParameter { s, t })
    }

    pub fn from_ints(s: i64, t: i64) -> Result<Self> {
        Self::new(q(s), q(t))
    }
}

impl std::fmt::Display for PencilParameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}:{}]", self.s, self.t)
    }
}

/// The pencil `{ s A + t B }` spanned by two independent cubics.
#[derive(Clone, Debug, PartialEq)]
pub struct Pencil {
    pub a: TernaryCubic<Rational>,
    pub b: TernaryCubic<Rational>,
}

impl Pencil {
    pub fn new(a: TernaryCubic<Rational>, b: TernaryCubic<Rational>) -> Result<Self> {
        let rows = vec![a.coeffs.to_vec(), b.coeffs.to_vec()];
        if rank(&rows) < 2 {
            return Err(Error::InvalidInput(
                "pencil basis cubics are linearly dependent".into(),
            ));
        }
        Ok(Pencil { a, b })
    }

    /// `F, H(F)`.
    pub fn hesse(f: &TernaryCubic<Rational>) -> Result<Self> {
        Self::new(f.clone(), hessian(f))
    }

    pub fn member(&self, p: &PencilParameter) -> TernaryCubic<Rational> {
        TernaryCubic::combine(&p.s, &self.a, &p.t, &self.b)
    }

    pub fn member_st(&self, s: &Rational, t: &Rational) -> TernaryCubic<Rational> {
        TernaryCubic::combine(s, &self.a, t, &self.b)
    }

    /// `Some((s, t))` with `g = s A + t B` exactly.
    pub fn coordinates(&self, g: &TernaryCubic<Rational>) -> Option<(Rational, Rational)> {
        let mut m: Vec<Vec<Rational>> = (0..10)
            .map(|i| {
                vec![
                    self.a.coeffs[i].clone(),
                    self.b.coeffs[i].clone(),
                    g.coeffs[i].clone(),
                ]
            })
            .collect();
        let piv = rref(&mut m);
        (piv == [0, 1]).then(|| (m[0][2].clone(), m[1][2].clone()))
    }

    pub fn contains(&self, g: &TernaryCubic<Rational>) -> bool {
        self.coordinates(g).is_some()
    }

    /// Parameter of the member proportional to `g`, when `g` is in the span.
    pub fn parameter_of(&self, g: &TernaryCubic<Rational>) -> Option<PencilParameter> {
        let (s, t) = self.coordinates(g)?;
        PencilParameter::new(s, t).ok()
    }

    /// `c4(sA + tB)` and `c6(sA + tB)` as binary forms of degree 4 and 6.
    pub fn invariant_forms(&self) -> Result<(BinaryForm, BinaryForm)> {
        let mut c4 = Vec::new();
        let mut c6 = Vec::new();
        for k in 0..=6i64 {
            let inv = invariants(&self.member_st(&q(k), &q(1)))?;
            c4.push(inv.c4);
            c6.push(inv.c6);
        }
        let f4 = BinaryForm::interpolate(4, &c4[..5]);
        // the two spare values certify the degree-4 fit
        for k in 5..=6 {
            if f4.eval(&q(k as i64), &q(1)) != c4[k] {
                return Err(Error::Internal("c4 on a pencil is not a quartic".into()));
            }
        }
        Ok((f4, BinaryForm::interpolate(6, &c6)))
    }

    /// `c4^3 - c6^2` on the pencil (1728 times the discriminant), degree 12.
    pub fn discriminant_form(&self) -> Result<BinaryForm> {
        let (c4, c6) = self.invariant_forms()?;
        Ok(c4.mul(&c4).mul(&c4).sub(&c6.mul(&c6)))
    }
}

fn default_dual_parameters() -> Vec<(i64, i64)> {
    vec![(1, 0), (0, 1), (1, 1), (1, -1), (2, 1)]
}

/// The dual pencil of a smooth cubic: the span of the Cayleans of the
/// members of its Hesse pencil.
pub fn dual_pencil(f: &TernaryCubic<Rational>) -> Result<Pencil> {
    dual_pencil_with(f, &default_dual_parameters())
}

/// [`dual_pencil`] from an explicit list of Hesse-pencil parameters; more
/// parameters are appended if the sampled Cayleans span less than a plane.
pub fn dual_pencil_with(f: &TernaryCubic<Rational>, params: &[(i64, i64)]) -> Result<Pencil> {
    if f.is_zero() || invariants(f)?.is_singular() {
        return Err(Error::SingularInput);
    }
    let h = hessian(f);
    let mut rows = Vec::new();
    let mut used: Vec<(i64, i64)> = params.to_vec();
    for extra in 3..12i64 {
        rows.clear();
        for &(s, t) in &used {
            rows.push(
                caylean(&TernaryCubic::combine(&q(s), f, &q(t), &h))?
                    .coeffs
                    .to_vec(),
            );
        }
        let mut m = rows.clone();
        let piv = rref(&mut m);
        match piv.len() {
            2 => {
                let basis: Vec<TernaryCubic<Rational>> = m[..2]
                    .iter()
                    .map(|r| {
                        let (v, _) = primitive_integer_vector(r);
                        TernaryCubic::new(std::array::from_fn(|i| v[i].clone()))
                    })
                    .collect();
                return Pencil::new(basis[0].clone(), basis[1].clone());
            }
            n if n > 2 => return Err(Error::Internal(format!("Cayleans span {n} dimensions"))),
            _ => used.push((extra, 1)),
        }
    }
    Err(Error::RankDeficient(rank(&rows)))
}

/// Rank of the stacked coefficient vectors of `cubics`.
pub fn span_rank(cubics: &[TernaryCubic<Rational>]) -> usize {
    let rows: Vec<Vec<Rational>> = cubics.iter().map(|c| c.coeffs.to_vec()).collect();
    rank(&rows)
}

/// Linear identification of the dual pencils of two cubics that are
/// projectively equivalent over an extension field.
///
/// If `C = lambda F∘M`, the Hessian pencils correspond via
/// `s C + t H(C) <-> s F + mu t H(F)` with `mu = lambda^2 det(M)^2`, which is
/// rational and determined by the invariants. Applying the Caylean to both
/// sides gives a linear map between the two dual pencils, fixed up to one
/// global scalar.
#[derive(Clone, Debug)]
pub struct DualPencilTransport {
    pub mu: Rational,
    /// Basis of the source dual pencil: `P(C)`, `P(H(C))`.
    source: [TernaryCubic<Rational>; 2],
    /// Matching basis of the target dual pencil: `P(F)`, `P(mu H(F))`.
    target: [TernaryCubic<Rational>; 2],
}

impl DualPencilTransport {
    pub fn new(c: &TernaryCubic<Rational>, f: &TernaryCubic<Rational>) -> Result<Self> {
        let ic = invariants(c)?;
        let iff = invariants(f)?;
        if ic.is_singular() || iff.is_singular() {
            return Err(Error::SingularInput);
        }
        let mu = transport_scale(&ic, &iff)?;
        let (hc, hf) = (hessian(c), hessian(f));
        let source = [caylean(c)?, caylean(&hc)?];
        let target = [caylean(f)?, caylean(&hf.scale(&mu))?];
        if span_rank(&source) < 2 || span_rank(&target) < 2 {
            return Err(Error::RankDeficient(1));
        }
        let tr = DualPencilTransport { mu, source, target };
        // consistency on a third member of each Hesse pencil
        let probe_c = caylean(&c.add(&hc))?;
        let probe_f = caylean(&f.add(&hf.scale(&tr.mu)))?;
        match tr.apply(&probe_c) {
            Some(img) if img.proportional_to(&probe_f).is_some() => Ok(tr),
            _ => Err(Error::Internal(
                "dual pencils do not correspond; cubics are not equivalent".into(),
            )),
        }
    }

    /// Image of a member of the source dual pencil.
    pub fn apply(&self, g: &TernaryCubic<Rational>) -> Option<TernaryCubic<Rational>> {
        let p = Pencil {
            a: self.source[0].clone(),
            b: self.source[1].clone(),
        };
        let (s, t) = p.coordinates(g)?;
        Some(TernaryCubic::combine(
            &s,
            &self.target[0],
            &t,
            &self.target[1],
        ))
    }
}

/// `mu` with `c4(C) = mu^2 c4(F)` and `c6(C) = mu^3 c6(F)`.
fn transport_scale(c: &CubicInvariants, f: &CubicInvariants) -> Result<Rational> {
    let zero4 = c.c4.cmp0().is_eq();
    let zero6 = c.c6.cmp0().is_eq();
    if zero4 != f.c4.cmp0().is_eq() || zero6 != f.c6.cmp0().is_eq() {
        return Err(Error::Internal("cubics have different j-invariants".into()));
    }
    let mu = match (zero4, zero6) {
        (false, false) => Rational::from(&c.c6 / &f.c6) / Rational::from(&c.c4 / &f.c4),
        (true, false) => crate::arith::rational::rational_root(&(c.c6.clone() / &f.c6), 3)
            .ok_or_else(|| Error::Internal("no rational transport scale (j = 0)".into()))?,
        (false, true) => crate::arith::rational::rational_sqrt(&(c.c4.clone() / &f.c4))
            .ok_or_else(|| Error::Internal("no rational transport scale (j = 1728)".into()))?,
        (true, true) => return Err(Error::SingularInput),
    };
    if qpow(&mu, 2) * &f.c4 != c.c4 || qpow(&mu, 3) * &f.c6 != c.c6 {
        return Err(Error::Internal("cubics have different j-invariants".into()));
    }
    Ok(mu)
}

/// Right kernel helper used by callers that need explicit span relations.
pub fn relations(cubics: &[TernaryCubic<Rational>]) -> Vec<Vec<Rational>> {
    let rows: Vec<Vec<Rational>> = (0..10)
        .map(|i| cubics.iter().map(|c| c.coeffs[i].clone()).collect())
        .collect();
    kernel_basis(&rows, cubics.len(), &q(1))
}
