use rayon::prelude::*;
use rug::{Complex, Integer, Rational};

use super::sample::{push, sample_d, ImagePair};
use super::surface::SurfacePair;
use crate::arith::mat::complex_kernel;
use crate::arith::numeric;
use crate::arith::reconstruct::rational_reconstruct_complex;
use crate::arith::BilinearForm;
use crate::error::{Error, Result};

/// Invariance of the curve under `(-1) x (-1)`.
#[derive(Clone, Debug)]
pub struct InvolutionReport {
    /// `inv1^T B inv2` proportional to `B`; `None` when the negation on
    /// the second factor is not linear.
    pub exact: Option<bool>,
    /// Largest relative residual of the form at negated image pairs.
    pub numeric_max: f64,
    pub checked: usize,
}

impl InvolutionReport {
    pub fn passed(&self, prec: u32) -> bool {
        self.exact != Some(false) && self.numeric_max < numeric::threshold_f64(prec)
    }
}

/// The bilinear form cutting out the image of `D`.
#[derive(Clone, Debug)]
pub struct CResult {
    /// Canonical: coprime integers, positive first nonzero entry.
    pub form: BilinearForm,
    pub samples_used: usize,
    /// Smallest accepted pivot of the interpolation matrix.
    pub conditioning: f64,
    pub max_fit_residual: f64,
    pub involution: InvolutionReport,
    /// The form is not a multiple of the incidence form of `D`.
    pub distinct_from_incidence: bool,
}

/// Fits a bilinear form through the image pairs.
///
/// All nine monomials `x_i u_j` are used; the numeric null space must be a
/// line, whose direction is normalized at its largest entry and
/// reconstructed coordinate by coordinate.
pub fn interpolate_c(images: &[ImagePair], s: &SurfacePair, prec: u32) -> Result<CResult> {
    let rows: Vec<Vec<Complex>> = images
        .iter()
        .map(|p| {
            let mut r = Vec::with_capacity(9);
            for xi in &p.x {
                for uj in &p.u {
                    r.push(xi.clone() * uj);
                }
            }
            r
        })
        .collect();
    let (kernel, conditioning) = complex_kernel(&rows, 9, prec);
    if kernel.len() != 1 {
        return Err(Error::NullSpaceDimension(kernel.len()));
    }
    let v = &kernel[0];
    let k = (0..9)
        .max_by(|&a, &b| numeric::modulus(&v[a]).total_cmp(&numeric::modulus(&v[b])))
        .expect("nine entries");
    let pivot = v[k].clone();
    let bound = Integer::from(1) << (prec / 4 - 2);
    let coeffs = v
        .iter()
        .map(|c| rational_reconstruct_complex(&(c.clone() / &pivot), &bound))
        .collect::<Result<Vec<Rational>>>()?;
    let form = BilinearForm::from_entries(&coeffs)
        .expect("nine entries")
        .canonical();
    if form.is_zero() {
        return Err(Error::ReconstructionFailed("zero form".into()));
    }
    let max_fit_residual = images
        .iter()
        .map(|p| form.relative_residual(&p.x, &p.u))
        .fold(0.0, f64::max);

    let law1 = s.law1(prec);
    let law2 = s.law2(prec);
    let numeric_max = images
        .par_iter()
        .map(|p| form.relative_residual(&law1.neg(&p.x), &law2.neg(&p.u)))
        .reduce(|| 0.0, f64::max);
    let exact = s.inv2.as_ref().map(|i2| {
        form.substitute(&s.inv1, i2)
            .proportional_to(&form)
            .is_some()
    });
    Ok(CResult {
        distinct_from_incidence: form.proportional_to(&s.incidence).is_none(),
        form,
        samples_used: images.len(),
        conditioning,
        max_fit_residual,
        involution: InvolutionReport {
            exact,
            numeric_max,
            checked: images.len(),
        },
    })
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub samples: usize,
    pub max_residual: f64,
    pub threshold: f64,
    /// No samples were drawn, so nothing was checked.
    pub vacuous: bool,
}

/// Evaluates the form at the images of `n_fresh` new points of `D`.
pub fn verify_c(
    r: &CResult,
    s: &SurfacePair,
    n_fresh: usize,
    seed: u64,
    m2: i64,
    prec: u32,
) -> Result<VerifyReport> {
    let threshold = numeric::threshold_f64(prec);
    if n_fresh == 0 {
        return Ok(VerifyReport {
            samples: 0,
            max_residual: 0.0,
            threshold,
            vacuous: true,
        });
    }
    let (law1, law2) = (s.law1(prec), s.law2(prec));
    let fresh = sample_d(s, n_fresh, seed, prec)?;
    let residuals = fresh
        .par_iter()
        .map(|smp| {
            let img = push(smp, 3, m2, &law1, &law2, s, prec)?;
            Ok(r.form.relative_residual(&img.x, &img.u))
        })
        .collect::<Result<Vec<f64>>>()?;
    let max_residual = residuals.into_iter().fold(0.0, f64::max);
    if max_residual >= threshold {
        return Err(Error::VerificationFailed {
            residual: max_residual,
            threshold,
        });
    }
    Ok(VerifyReport {
        samples: n_fresh,
        max_residual,
        threshold,
        vacuous: false,
    })
}
