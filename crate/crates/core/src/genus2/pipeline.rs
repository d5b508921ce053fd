use rayon::prelude::*;
use rug::Rational;

use super::interp::{interpolate_c, verify_c, CResult, VerifyReport};
use super::sample::{push, sample_d, ImagePair};
use super::surface::{build_surface, SurfacePair};
use crate::arith::numeric::DEFAULT_PRECISION;
use crate::arith::{BilinearForm, TernaryCubic};
use crate::ellcurve::WeierstrassModel;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Options {
    pub precision: u32,
    pub seed: u64,
    /// Height bound for rational point searches.
    pub height_bound: i64,
    /// Initial number of samples of `D`; doubled (up to 4x) while the
    /// interpolation is underdetermined.
    pub samples: usize,
    /// Fresh samples for the final verification.
    pub fresh: usize,
    /// Primes up to this bound are tried for a non-isogeny certificate.
    pub iso_bound: u64,
    /// A known form to match; the conventions are tried in order.
    pub reference: Option<BilinearForm>,
    /// Selects the member of the dual pencil by `j` when no target model
    /// is given; `E2` then stays in the pencil model.
    pub target_j: Option<Rational>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            precision: DEFAULT_PRECISION,
            seed: 0,
            height_bound: 100,
            samples: 24,
            fresh: 20,
            iso_bound: 500,
            reference: None,
            target_j: None,
        }
    }
}

/// How the image of `D` is formed. Both use the stored origins; the second
/// composes with the negation on `E2`, which flips `Δ` to the graph of
/// `-λ` and gives the same curve up to `1 x (-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    ThreeThree,
    ThreeMinusThree,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::ThreeThree, Convention::ThreeMinusThree];

    pub fn multiplier2(self) -> i64 {
        match self {
            Convention::ThreeThree => 3,
            Convention::ThreeMinusThree => -3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Convention::ThreeThree => "[3]x[3]",
            Convention::ThreeMinusThree => "[3]x[-3]",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Bundle {
    pub surface: SurfacePair,
    pub result: CResult,
    pub convention: Convention,
    /// `Some(true)` when the reference form was matched under `convention`.
    pub reference_match: Option<bool>,
    /// The canonical form obtained under each convention that was tried.
    pub tried: Vec<(Convention, BilinearForm)>,
    pub verify: VerifyReport,
    pub j2: Rational,
    pub options: Options,
}

fn images_for(
    s: &SurfacePair,
    samples: &[super::DSample],
    conv: Convention,
    prec: u32,
) -> Result<Vec<ImagePair>> {
    let (law1, law2) = (s.law1(prec), s.law2(prec));
    samples
        .par_iter()
        .map(|smp| push(smp, 3, conv.multiplier2(), &law1, &law2, s, prec))
        .collect()
}

/// Samples, pushes and interpolates under one convention, enlarging the
/// sample set while the null space is more than a line.
fn fit(s: &SurfacePair, conv: Convention, opts: &Options) -> Result<CResult> {
    let prec = opts.precision;
    let mut n = opts.samples.max(12);
    let cap = 4 * n;
    loop {
        let smp = sample_d(s, n, opts.seed, prec).map_err(Error::at("sample_D"))?;
        let img = images_for(s, &smp, conv, prec).map_err(Error::at("push_3x3"))?;
        match interpolate_c(&img, s, prec) {
            Err(Error::NullSpaceDimension(d)) if d > 1 && n < cap => n *= 2,
            r => return r.map_err(Error::at("interpolate_C")),
        }
    }
}

/// build_surface, sample_D, push_3x3, interpolate_C and verify_C.
pub fn pipeline(
    f: &TernaryCubic<Rational>,
    delta: &TernaryCubic<Rational>,
    target: Option<&WeierstrassModel>,
    opts: &Options,
) -> Result<Bundle> {
    let s = build_surface(f, delta, target, opts).map_err(Error::at("build_surface"))?;
    run_on_surface(s, opts)
}

/// The pipeline after `build_surface`.
pub fn run_on_surface(s: SurfacePair, opts: &Options) -> Result<Bundle> {
    let prec = opts.precision;
    let mut tried = Vec::new();
    let mut chosen: Option<(Convention, CResult)> = None;
    let mut reference_match = None;
    for conv in Convention::ALL {
        let r = fit(&s, conv, opts)?;
        tried.push((conv, r.form.clone()));
        match &opts.reference {
            None => {
                chosen = Some((conv, r));
                break;
            }
            Some(reference) => {
                if r.form.proportional_to(reference).is_some() {
                    reference_match = Some(true);
                    chosen = Some((conv, r));
                    break;
                }
                if chosen.is_none() {
                    chosen = Some((conv, r));
                }
                reference_match = Some(false);
            }
        }
    }
    let (convention, result) = chosen.expect("at least one convention");
    if !result.involution.passed(prec) {
        return Err(Error::at("interpolate_C")(Error::VerificationFailed {
            residual: result.involution.numeric_max,
            threshold: crate::arith::numeric::threshold_f64(prec),
        }));
    }
    if !result.distinct_from_incidence {
        return Err(Error::at("interpolate_C")(Error::Internal(
            "interpolated form is the incidence form of D".into(),
        )));
    }
    let verify = verify_c(
        &result,
        &s,
        opts.fresh,
        opts.seed.wrapping_add(0x9e37_79b9_7f4a_7c15),
        convention.multiplier2(),
        prec,
    )
    .map_err(Error::at("verify_C"))?;
    let j2 = s.e2.j();
    Ok(Bundle {
        surface: s,
        result,
        convention,
        reference_match,
        tried,
        verify,
        j2,
        options: opts.clone(),
    })
}
