//! Simultaneous polynomial root finding (Aberth–Ehrlich).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::ops::Pow;
use rug::{Complex, Float};

use super::field::Field;
use super::numeric;
use super::poly::UniPoly;
use crate::error::{Error, Result};

/// A root together with its multiplicity after clustering.
#[derive(Clone, Debug)]
pub struct Root {
    pub value: Complex,
    pub multiplicity: usize,
}

/// All `deg p` complex roots of `p`, at the precision of its coefficients.
///
/// Iterates at twice the working precision from a seeded random circle and
/// checks `|p(r)| < 2^(-prec/2) ||p|| max(1,|r|)^deg` on exit.
pub fn complex_roots(p: &UniPoly<Complex>, seed: u64) -> Result<Vec<Complex>> {
    let n = match p.degree() {
        None | Some(0) => return Err(Error::InvalidInput("root finding needs degree >= 1".into())),
        Some(n) => n,
    };
    let prec = p.coeffs()[0].prec().0;
    let ip = 2 * prec;
    let q = p.map(|c| Complex::with_val(ip, c)).monic();
    let a = q.coeffs();
    if n == 1 {
        return Ok(vec![Complex::with_val(prec, -a[0].clone())]);
    }

    // radius: geometric mean of root moduli, bounded below
    let a0 = numeric::modulus(&a[0]);
    let mut radius = if a0.is_zero() {
        Float::with_val(ip, 1)
    } else {
        Float::with_val(ip, a0.ln() / n as u32).exp()
    };
    if radius < 1e-3 {
        radius = Float::with_val(ip, 1e-3);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tau = numeric::pi(ip) * 2u32;
    let offset: f64 = rng.gen();
    let mut z: Vec<Complex> = (0..n)
        .map(|k| {
            let jitter: f64 = rng.gen_range(0.9..1.1);
            let ang = Float::with_val(ip, (k as f64 + offset) / n as f64) * &tau;
            let r = Float::with_val(ip, &radius * jitter);
            Complex::with_val(ip, (ang.clone().cos() * &r, ang.sin() * &r))
        })
        .collect();

    let dp = q.derivative();
    let eps = Float::with_val(ip, 1) >> (ip - 16);
    let cap = 200 + 4 * ip as usize;
    let mut done = vec![false; n];
    for _ in 0..cap {
        if done.iter().all(|&d| d) {
            break;
        }
        for i in 0..n {
            if done[i] {
                continue;
            }
            let pv = q.eval(&z[i]);
            let scale = backward_scale(a, &z[i]);
            if numeric::modulus(&pv) <= Float::with_val(ip, &eps * &scale) {
                done[i] = true;
                continue;
            }
            let ratio = pv / dp.eval(&z[i]);
            let mut s = Complex::new(ip);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    let d = z[i].clone() - zj;
                    if !d.is_zero() {
                        s += d.recip();
                    }
                }
            }
            let denom = Complex::with_val(ip, 1) - ratio.clone() * &s;
            let w = ratio / denom;
            let small = numeric::modulus(&w)
                <= Float::with_val(
                    ip,
                    &eps * numeric::modulus(&z[i]).max(&Float::with_val(ip, 1)),
                );
            z[i] -= &w;
            if small {
                done[i] = true;
            }
        }
    }
    if !done.iter().all(|&d| d) {
        return Err(Error::NonConvergence { iterations: cap });
    }

    let tol = numeric::threshold(prec);
    let pnorm = p.norm();
    let out: Vec<Complex> = z.into_iter().map(|r| Complex::with_val(prec, r)).collect();
    for r in &out {
        let m = numeric::modulus(r).max(&Float::with_val(prec, 1));
        let bound = Float::with_val(prec, &tol * &pnorm) * Float::with_val(prec, m.pow(n as u32));
        if numeric::modulus(&p.eval(r)) >= bound {
            return Err(Error::NonConvergence { iterations: cap });
        }
    }
    Ok(out)
}

fn backward_scale(a: &[Complex], z: &Complex) -> Float {
    let prec = z.prec().0;
    let m = numeric::modulus(z);
    let mut acc = Float::new(prec);
    for c in a.iter().rev() {
        acc *= &m;
        acc += numeric::modulus(c);
    }
    acc
}

/// Groups roots closer than `2^(-prec/4)` (relative) and averages each group.
pub fn cluster_roots(roots: &[Complex]) -> Vec<Root> {
    let Some(first) = roots.first() else {
        return vec![];
    };
    let prec = first.prec().0;
    let tol = Float::with_val(prec, 1) >> (prec / 4);
    let mut out: Vec<(Vec<Complex>, Complex)> = Vec::new();
    for r in roots {
        let scale = numeric::modulus(r).max(&Float::with_val(prec, 1));
        let hit = out.iter_mut().find(|(_, c)| {
            numeric::modulus(&(c.clone() - r)) < Float::with_val(prec, &tol * &scale)
        });
        match hit {
            Some((members, c)) => {
                members.push(r.clone());
                let k = members.len() as u32;
                let sum = members.iter().fold(Complex::new(prec), |acc, m| acc + m);
                *c = sum / k;
            }
            None => out.push((vec![r.clone()], r.clone())),
        }
    }
    out.into_iter()
        .map(|(m, c)| Root {
            value: c,
            multiplicity: m.len(),
        })
        .collect()
}

/// Newton refinement of a simple root; returns the polished value.
pub fn newton_polish(p: &UniPoly<Complex>, mut z: Complex, steps: usize) -> Complex {
    let dp = p.derivative();
    for _ in 0..steps {
        let d = dp.eval(&z);
        if d.is_negligible() {
            break;
        }
        let step = p.eval(&z) / d;
        z -= &step;
    }
    z
}
