//! Working-precision helpers for `rug::Complex` values.
//!
//! All numeric decisions are made against `2^(-prec/2)`, relative to the
//! size of the quantities involved.

use rug::float::Constant;
use rug::{Complex, Float, Rational};

/// Default working precision in bits.
pub const DEFAULT_PRECISION: u32 = 512;

/// The decision threshold `2^(-prec/2)`.
pub fn threshold(prec: u32) -> Float {
    Float::with_val(prec, 1) >> (prec / 2)
}

pub fn threshold_f64(prec: u32) -> f64 {
    // Underflows to zero above ~2000 bits; callers only use it for reports.
    2f64.powi(-((prec / 2) as i32))
}

pub fn cx(prec: u32, r: &Rational) -> Complex {
    Complex::with_val(prec, r)
}

pub fn cxi(prec: u32, v: i64) -> Complex {
    Complex::with_val(prec, v)
}

pub fn modulus(z: &Complex) -> Float {
    Float::with_val(z.prec().0, z.abs_ref())
}

pub fn modulus_f64(z: &Complex) -> f64 {
    Float::with_val(53, z.abs_ref()).to_f64()
}

/// Euclidean norm of a complex vector.
pub fn norm(v: &[Complex]) -> Float {
    let prec = v.first().map(|z| z.prec().0).unwrap_or(53);
    let mut acc = Float::new(prec);
    for z in v {
        acc += Float::with_val(prec, z.norm_ref());
    }
    acc.sqrt()
}

/// Primitive cube root of unity `exp(2 pi i k / 3)`.
pub fn cube_root_of_unity(prec: u32, k: u32) -> Complex {
    Complex::with_val(prec, Complex::root_of_unity(3, k % 3))
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

/// Scales a projective point so that its largest-modulus coordinate is 1.
pub fn normalize_projective(p: &[Complex; 3]) -> [Complex; 3] {
    let k = (0..3)
        .max_by(|&a, &b| {
            modulus(&p[a])
                .partial_cmp(&modulus(&p[b]))
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap_or(0);
    let s = p[k].clone();
    [p[0].clone() / &s, p[1].clone() / &s, p[2].clone() / &s]
}

pub fn cross(a: &[Complex; 3], b: &[Complex; 3]) -> [Complex; 3] {
    [
        a[1].clone() * &b[2] - a[2].clone() * &b[1],
        a[2].clone() * &b[0] - a[0].clone() * &b[2],
        a[0].clone() * &b[1] - a[1].clone() * &b[0],
    ]
}

pub fn dot(a: &[Complex; 3], b: &[Complex; 3]) -> Complex {
    a[0].clone() * &b[0] + a[1].clone() * &b[1] + a[2].clone() * &b[2]
}

/// Scale-invariant distance between two projective points:
/// `|a x b| / (|a| |b|)`, i.e. the sine of the angle between the lines.
pub fn projective_distance(a: &[Complex; 3], b: &[Complex; 3]) -> Float {
    let c = cross(a, b);
    norm(&c) / (norm(a) * norm(b))
}

pub fn same_projective_point(a: &[Complex; 3], b: &[Complex; 3]) -> bool {
    let prec = a[0].prec().0;
    projective_distance(a, b) < threshold(prec)
}

/// Greedy nearest matching of two projective point sets.
///
/// Returns `perm` with `a[i] ~ b[perm[i]]` and the largest matched distance,
/// or `None` when the sizes differ.
pub fn match_point_sets(a: &[[Complex; 3]], b: &[[Complex; 3]]) -> Option<(Vec<usize>, f64)> {
    if a.len() != b.len() {
        return None;
    }
    let mut used = vec![false; b.len()];
    let mut perm = Vec::with_capacity(a.len());
    let mut worst = 0f64;
    for p in a {
        let mut best: Option<(usize, Float)> = None;
        for (j, q) in b.iter().enumerate() {
            if used[j] {
                continue;
            }
            let d = projective_distance(p, q);
            if best.as_ref().is_none_or(|(_, bd)| d < *bd) {
                best = Some((j, d));
            }
        }
        let (j, d) = best?;
        used[j] = true;
        worst = worst.max(d.to_f64());
        perm.push(j);
    }
    Some((perm, worst))
}

/// True when the two sets agree as sets of projective points within the
/// working threshold.
pub fn point_sets_equal(a: &[[Complex; 3]], b: &[[Complex; 3]]) -> bool {
    let prec = a.first().map(|p| p[0].prec().0).unwrap_or(53);
    match match_point_sets(a, b) {
        Some((_, worst)) => Float::with_val(prec, worst) < threshold(prec),
        None => false,
    }
}

pub fn to_complex_point(prec: u32, p: &[Rational; 3]) -> [Complex; 3] {
    [cx(prec, &p[0]), cx(prec, &p[1]), cx(prec, &p[2])]
}

pub fn format_complex(z: &Complex, digits: usize) -> String {
    let re = z.real().to_string_radix(10, Some(digits));
    let im = z.imag().to_string_radix(10, Some(digits));
    format!("{re} + {im}i")
}
