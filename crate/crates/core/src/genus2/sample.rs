use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rug::{Complex, Float};

use super::surface::{Factor2, SurfacePair};
use crate::arith::numeric::{self, cross, dot, normalize_projective};
use crate::arith::poly::UniPoly;
use crate::arith::roots::{complex_roots, newton_polish};
use crate::arith::TernaryCubic;
use crate::ellcurve::WeierstrassLaw;
use crate::error::{Error, Result};

/// A pair of projective points, on `F` and on `G`.
#[derive(Clone, Debug)]
pub struct DSample {
    pub x: [Complex; 3],
    pub u: [Complex; 3],
}

pub type ImagePair = DSample;

/// `G(p + l q)` as a polynomial in `l`.
fn on_line(g: &TernaryCubic<Complex>, p: &[Complex; 3], q: &[Complex; 3]) -> UniPoly<Complex> {
    UniPoly::new(vec![
        g.eval(p),
        dot(&g.gradient(p), q),
        dot(&g.gradient(q), p),
        g.eval(q),
    ])
}

fn line_roots(
    g: &TernaryCubic<Complex>,
    p: &[Complex; 3],
    q: &[Complex; 3],
    seed: u64,
) -> Vec<[Complex; 3]> {
    let poly = on_line(g, p, q);
    if poly.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    let Ok(roots) = complex_roots(&poly, seed) else {
        return vec![];
    };
    roots
        .into_iter()
        .map(|l| {
            let l = newton_polish(&poly, l, 4);
            normalize_projective(&std::array::from_fn(|i| {
                p[i].clone() + &(l.clone() * &q[i])
            }))
        })
        .collect()
}

/// Typical size of an `x`-coordinate on the model.
fn x_scale(s: &SurfacePair) -> f64 {
    let a = s.e1.coeffs();
    let w = [1, 2, 3, 4, 6];
    let mut u: f64 = 1.0;
    for (c, w) in a.iter().zip(w) {
        let v = c.to_f64().abs();
        if v > 0.0 {
            u = u.max(v.powf(1.0 / w as f64));
        }
    }
    u * u
}

fn one_sample(s: &SurfacePair, seed: u64, k: u64, prec: u32, ctx: &Ctx) -> Option<DSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k);
    let re: f64 = rng.gen_range(-2.0..2.0);
    let im: f64 = rng.gen_range(-2.0..2.0);
    let x0 = Complex::with_val(prec, (re * ctx.scale, im * ctx.scale));
    let zero = Complex::new(prec);
    let one = Complex::with_val(prec, 1);
    let base = [x0, zero.clone(), one.clone()];
    let dir = [zero.clone(), one, zero];
    let xs = line_roots(&ctx.f, &base, &dir, k);
    if xs.is_empty() {
        return None;
    }
    let x = xs[rng.gen_range(0..xs.len())].clone();
    // the line B^T x in the second plane
    let l: [Complex; 3] = std::array::from_fn(|j| {
        let mut acc = Complex::new(prec);
        for (i, xi) in x.iter().enumerate() {
            acc += &(xi.clone() * &ctx.b[i][j]);
        }
        acc
    });
    let kmax = (0..3)
        .max_by(|&a, &b| numeric::modulus(&l[a]).total_cmp(&numeric::modulus(&l[b])))
        .expect("three entries");
    let others: Vec<usize> = (0..3).filter(|&i| i != kmax).collect();
    let unit = |i: usize| -> [Complex; 3] {
        std::array::from_fn(|j| Complex::with_val(prec, u8::from(i == j)))
    };
    let p = cross(&l, &unit(others[0]));
    let q = cross(&l, &unit(others[1]));
    let us = line_roots(&ctx.g, &p, &q, k ^ 0x5bd1);
    if us.is_empty() {
        return None;
    }
    let u = us[rng.gen_range(0..us.len())].clone();
    let smp = DSample { x, u };
    valid(s, &smp, ctx).then_some(smp)
}

struct Ctx {
    f: TernaryCubic<Complex>,
    g: TernaryCubic<Complex>,
    b: [[Complex; 3]; 3],
    scale: f64,
    tol: Float,
}

impl Ctx {
    fn new(s: &SurfacePair, prec: u32) -> Self {
        Ctx {
            f: s.f.to_complex(prec),
            g: s.g.to_complex(prec),
            b: std::array::from_fn(|i| {
                std::array::from_fn(|j| Complex::with_val(prec, &s.incidence.m.m[i][j]))
            }),
            scale: x_scale(s),
            tol: numeric::threshold(prec),
        }
    }
}

fn valid(s: &SurfacePair, smp: &DSample, ctx: &Ctx) -> bool {
    ctx.f.relative_residual(&smp.x) < ctx.tol
        && ctx.g.relative_residual(&smp.u) < ctx.tol
        && s.incidence.relative_residual(&smp.x, &smp.u) < ctx.tol.to_f64()
}

/// `n` points of `D`, deterministic in `seed`.
///
/// Sample `k` uses its own random stream, so the output is independent of
/// scheduling and `sample_d(n)` is a prefix of `sample_d(m)` for `n <= m`.
pub fn sample_d(s: &SurfacePair, n: usize, seed: u64, prec: u32) -> Result<Vec<DSample>> {
    let ctx = Ctx::new(s, prec);
    let mut out = Vec::with_capacity(n);
    let mut next = 0u64;
    let cap = 4 * n as u64 + 32;
    while out.len() < n {
        if next >= cap {
            return Err(Error::InsufficientPrecision(format!(
                "only {} of {n} samples of D passed the residual checks",
                out.len()
            )));
        }
        let batch = (n - out.len()) as u64 + 4;
        let got: Vec<Option<DSample>> = (next..next + batch)
            .into_par_iter()
            .map(|k| one_sample(s, seed, k, prec, &ctx))
            .collect();
        next += batch;
        out.extend(got.into_iter().flatten());
    }
    out.truncate(n);
    Ok(out)
}

/// `([m1] x [m2])` of a sample, residual-checked on both factors.
pub fn push(
    smp: &DSample,
    m1: i64,
    m2: i64,
    law1: &WeierstrassLaw<Complex>,
    law2: &Factor2,
    s: &SurfacePair,
    prec: u32,
) -> Result<ImagePair> {
    let x = normalize_projective(&law1.mul(m1, &smp.x));
    let u = normalize_projective(&law2.mul(m2, &smp.u));
    let tol = numeric::threshold(prec);
    let rf = s.f.to_complex(prec).relative_residual(&x);
    let rg = s.g.to_complex(prec).relative_residual(&u);
    if rf >= tol || rg >= tol {
        return Err(Error::InsufficientPrecision(format!(
            "image residuals {:.3e}, {:.3e}",
            rf.to_f64(),
            rg.to_f64()
        )));
    }
    Ok(ImagePair { x, u })
}

/// `([3] x [3])` of a sample.
pub fn push_3x3(smp: &DSample, s: &SurfacePair, prec: u32) -> Result<ImagePair> {
    push(smp, 3, 3, &s.law1(prec), &s.law2(prec), s, prec)
}
