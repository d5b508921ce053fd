//! Helpers around exact `rug::Rational` scalars.

use rug::{Integer, Rational};

use crate::error::{Error, Result};

pub fn q(n: i64) -> Rational {
    Rational::from(n)
}

pub fn qf(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

/// Parses `"12"`, `"-3/4"` (whitespace tolerant).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::InvalidInput(format!("not a rational: {s:?}"));
    if let Some((n, d)) = t.split_once('/') {
        let n: Integer = n.trim().parse().map_err(|_| bad())?;
        let d: Integer = d.trim().parse().map_err(|_| bad())?;
        if d.cmp0().is_eq() {
            return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
        }
        Ok(Rational::from((n, d)))
    } else {
        let n: Integer = t.parse().map_err(|_| bad())?;
        Ok(Rational::from(n))
    }
}

/// `r^n` for a non-negative exponent.
pub fn qpow(r: &Rational, n: u32) -> Rational {
    let mut acc = Rational::from(1);
    for _ in 0..n {
        acc *= r;
    }
    acc
}

/// Lossless text form: `"n"` or `"n/d"`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Scales a vector to coprime integers with positive first nonzero entry.
///
/// Returns the scaled vector and the factor `c` with `scaled = c * v`.
/// The zero vector is returned unchanged with factor 1.
pub fn primitive_integer_vector(v: &[Rational]) -> (Vec<Rational>, Rational) {
    let Some(first) = v.iter().find(|c| c.cmp0().is_ne()) else {
        return (v.to_vec(), Rational::from(1));
    };
    let mut lcm = Integer::from(1);
    for c in v {
        lcm.lcm_mut(c.denom());
    }
    let ints: Vec<Integer> = v
        .iter()
        .map(|c| Integer::from(c.numer() * &lcm) / c.denom())
        .collect();
    let mut g = Integer::new();
    for i in &ints {
        g.gcd_mut(i);
    }
    let mut factor = Rational::from((lcm, g));
    if first.cmp0().is_lt() {
        factor = -factor;
    }
    let scaled = v.iter().map(|c| Rational::from(c * &factor)).collect();
    (scaled, factor)
}

/// Scales a vector so that its first nonzero entry is 1.
pub fn monic_vector(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|c| c.cmp0().is_ne()) {
        Some(lead) => {
            let lead = lead.clone();
            v.iter().map(|c| Rational::from(c / &lead)).collect()
        }
        None => v.to_vec(),
    }
}

/// If `a = c * b` for some nonzero rational `c`, returns `c`.
pub fn proportionality(a: &[Rational], b: &[Rational]) -> Option<Rational> {
    if a.len() != b.len() {
        return None;
    }
    let k = b.iter().position(|c| c.cmp0().is_ne())?;
    if a[k].cmp0().is_eq() {
        return None;
    }
    let c = Rational::from(&a[k] / &b[k]);
    a.iter()
        .zip(b)
        .all(|(x, y)| *x == Rational::from(y * &c))
        .then_some(c)
}

/// Exact square root of a rational, when it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    rational_root(r, 2)
}

/// Exact `n`-th root of a rational (the positive one for even `n`).
pub fn rational_root(r: &Rational, n: u32) -> Option<Rational> {
    if r.cmp0().is_lt() && n.is_multiple_of(2) {
        return None;
    }
    let neg = r.cmp0().is_lt();
    let num = r.numer().clone().abs();
    let den = r.denom().clone();
    let (a, ra) = num.root_rem(Integer::new(), n);
    let (b, rb) = den.root_rem(Integer::new(), n);
    if ra.cmp0().is_ne() || rb.cmp0().is_ne() {
        return None;
    }
    let root = Rational::from((a, b));
    Some(if neg { -root } else { root })
}

/// Content-free integer form of `v` (vector of integers, positive leading).
pub fn integer_content_free(v: &[Rational]) -> Vec<Integer> {
    primitive_integer_vector(v)
        .0
        .into_iter()
        .map(|c| c.into_numer_denom().0)
        .collect()
}
