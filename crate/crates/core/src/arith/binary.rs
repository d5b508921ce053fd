//! Binary forms in a pencil parameter `(s, t)` and their rational roots.

use rug::{Complex, Integer, Rational};

use super::poly::UniPoly;
use super::rational::qpow;
use super::reconstruct::rational_reconstruct_complex;
use super::roots::complex_roots;
use crate::error::Result;

/// `sum_k c_k s^k t^(d-k)` of formal degree `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm {
    pub degree: usize,
    /// Coefficient of `s^k t^(d-k)` at index `k`.
    pub coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(degree: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(degree + 1, Rational::new());
        BinaryForm { degree, coeffs }
    }

    /// Interpolates a form of degree `d` from its values on `(k, 1)`, `k = 0..=d`.
    pub fn interpolate(degree: usize, values: &[Rational]) -> Self {
        assert_eq!(values.len(), degree + 1);
        let xs: Vec<Rational> = (0..=degree as i64).map(Rational::from).collect();
        let p = UniPoly::interpolate(&xs, values);
        Self::new(degree, p.coeffs().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.cmp0().is_eq())
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Rational {
        let mut acc = Rational::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            let sk = qpow(s, k as u32);
            let tk = qpow(t, (self.degree - k) as u32);
            acc += Rational::from(c * &sk) * tk;
        }
        acc
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut c = vec![Rational::new(); self.degree + o.degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += Rational::from(a * b);
            }
        }
        Self::new(self.degree + o.degree, c)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self::new(
            self.degree,
            self.coeffs.iter().map(|c| Rational::from(c * r)).collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.degree, o.degree);
        Self::new(
            self.degree,
            self.coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| Rational::from(a - b))
                .collect(),
        )
    }

    /// Dehomogenization `f(s, 1)`.
    pub fn affine(&self) -> UniPoly<Rational> {
        UniPoly::new(self.coeffs.clone())
    }

    /// Multiplicity of the root `[1:0]` (number of vanishing top coefficients).
    pub fn infinity_multiplicity(&self) -> usize {
        self.coeffs
            .iter()
            .rev()
            .take_while(|c| c.cmp0().is_eq())
            .count()
    }

    /// Number of distinct projective roots over the complex numbers.
    pub fn distinct_root_count(&self) -> usize {
        let inf = usize::from(self.infinity_multiplicity() > 0);
        inf + self.affine().squarefree().degree().unwrap_or(0)
    }

    /// Distinct rational projective roots, as `(s, t)`.
    pub fn rational_roots(&self, prec: u32, seed: u64) -> Result<Vec<(Rational, Rational)>> {
        let mut out = Vec::new();
        if self.infinity_multiplicity() > 0 {
            out.push((Rational::from(1), Rational::new()));
        }
        for r in rational_roots(&self.affine(), prec, seed)? {
            out.push((r, Rational::from(1)));
        }
        Ok(out)
    }
}

fn bits(r: &Rational) -> u32 {
    r.numer().significant_bits() + r.denom().significant_bits()
}

/// Distinct rational roots of `p`, certified by exact evaluation.
///
/// Roots are located numerically on the square-free part at a precision
/// scaled to the coefficient size; every rational root `a/b` of the
/// primitive integer polynomial has `b | lead`, which bounds the search.
pub fn rational_roots(p: &UniPoly<Rational>, prec: u32, seed: u64) -> Result<Vec<Rational>> {
    let sf = p.squarefree();
    let Some(deg) = sf.degree() else {
        return Ok(vec![]);
    };
    if deg == 0 {
        return Ok(vec![]);
    }
    let (ints, _) = super::rational::primitive_integer_vector(sf.coeffs());
    let maxbits = ints.iter().map(bits).max().unwrap_or(1);
    let lead = Integer::from(ints[deg].numer().abs_ref());
    let work = prec.max(8 * maxbits + 256);
    let cp = UniPoly::new(ints.clone()).map(|c| Complex::with_val(work, c));
    let roots = complex_roots(&cp, seed)?;
    let mut out: Vec<Rational> = Vec::new();
    for z in roots {
        let Ok(r) = rational_reconstruct_complex(&z, &lead) else {
            continue;
        };
        if sf.eval(&r).cmp0().is_eq() && !out.contains(&r) {
            out.push(r);
        }
    }
    out.sort();
    Ok(out)
}
