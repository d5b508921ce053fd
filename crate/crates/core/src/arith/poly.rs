//! Dense univariate polynomials, coefficients stored low degree first.

use rug::{Complex, Float, Rational};

use super::field::Field;
use super::numeric;

#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Field> UniPoly<T> {
    /// Builds from low-to-high coefficients, dropping exact zero leading terms.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.pivot_weight() == 0.0) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut it = self.coeffs.iter().rev();
        let Some(first) = it.next() else {
            return x.zero_like();
        };
        let mut acc = first.clone();
        for c in it {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &c.int_like(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => v.push(a.clone() + b),
                (Some(a), None) => v.push(a.clone()),
                (None, Some(b)) => v.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        Self::new(v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let z = self.coeffs[0].zero_like();
        let mut v = vec![z; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += &(a.clone() * b);
            }
        }
        Self::new(v)
    }

    /// Euclidean division; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut qv = vec![lead.zero_like(); r.len() - dd];
        for k in (0..qv.len()).rev() {
            let c = r[k + dd].clone() / &lead;
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &(c.clone() * dc);
            }
            qv[k] = c;
        }
        r.truncate(dd);
        (Self::new(qv), Self::new(r))
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => self.scale(&(l.one_like() / l)),
            None => Self::zero(),
        }
    }

    /// The polynomial `(x - r)`.
    pub fn linear_root(r: &T) -> Self {
        Self::new(vec![-r.clone(), r.one_like()])
    }

    pub fn from_roots(roots: &[T], like: &T) -> Self {
        let mut p = Self::constant(like.one_like());
        for r in roots {
            p = p.mul(&Self::linear_root(r));
        }
        p
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> UniPoly<U> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl UniPoly<Rational> {
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| Rational::from(v)).collect())
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free part `p / gcd(p, p')`, monic.
    pub fn squarefree(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn to_complex(&self, prec: u32) -> UniPoly<Complex> {
        self.map(|c| Complex::with_val(prec, c))
    }

    /// Lagrange interpolation through `(xs[i], ys[i])`.
    pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Self {
        assert_eq!(xs.len(), ys.len());
        let one = Rational::from(1);
        let mut out = Self::zero();
        for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
            let mut basis = Self::constant(one.clone());
            let mut denom = one.clone();
            for (j, xj) in xs.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&Self::linear_root(xj));
                    denom *= Rational::from(xi - xj);
                }
            }
            out = out.add(&basis.scale(&Rational::from(yi / &denom)));
        }
        out
    }
}

impl UniPoly<Complex> {
    /// Coefficient 2-norm.
    pub fn norm(&self) -> Float {
        numeric::norm(&self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::q;

    #[test]
    fn division_and_gcd() {
        // (x-1)^2 (x+2)
        let p = UniPoly::from_ints(&[2, -3, 0, 1]);
        let d = UniPoly::from_ints(&[-1, 1]);
        let (quo, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(quo, UniPoly::from_ints(&[-2, 1, 1]));
        assert_eq!(p.squarefree(), UniPoly::from_ints(&[-2, 1, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = UniPoly::from_ints(&[5, 0, -3, 7]);
        let xs: Vec<_> = (0..4).map(q).collect();
        let ys: Vec<_> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(UniPoly::interpolate(&xs, &ys), p);
    }
}
