//! Bilinear forms in `(x, y, z) x (u, v, w)`, used as curve equations on
//! products of two planes.

use std::fmt;

use rug::{Complex, Rational};

use super::field::Field;
use super::mat::Mat3;
use super::rational::{primitive_integer_vector, proportionality, q};

/// `sum m[i][j] X_i U_j` with `X = (x, y, z)` and `U = (u, v, w)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    pub m: Mat3<Rational>,
}

const XS: [&str; 3] = ["x", "y", "z"];
const US: [&str; 3] = ["u", "v", "w"];

impl BilinearForm {
    pub fn new(m: Mat3<Rational>) -> Self {
        BilinearForm { m }
    }

    pub fn from_ints(m: [[i64; 3]; 3]) -> Self {
        Self::new(Mat3::from_ints(m))
    }

    /// `xu + yv + zw`.
    pub fn incidence() -> Self {
        Self::new(Mat3::identity(&q(1)))
    }

    /// Row-major coefficients.
    pub fn entries(&self) -> Vec<Rational> {
        self.m.entries().cloned().collect()
    }

    pub fn from_entries(v: &[Rational]) -> Option<Self> {
        if v.len() != 9 {
            return None;
        }
        Some(Self::new(Mat3::from_rows(std::array::from_fn(|i| {
            std::array::from_fn(|j| v[3 * i + j].clone())
        }))))
    }

    pub fn is_zero(&self) -> bool {
        self.m.entries().all(|c| c.cmp0().is_eq())
    }

    /// Coprime integers with positive first nonzero entry.
    pub fn canonical(&self) -> Self {
        let (v, _) = primitive_integer_vector(&self.entries());
        Self::from_entries(&v).expect("nine entries")
    }

    /// `Some(c)` with `self = c * other`.
    pub fn proportional_to(&self, other: &Self) -> Option<Rational> {
        proportionality(&self.entries(), &other.entries())
    }

    pub fn eval<T: Field>(&self, x: &[T; 3], u: &[T; 3]) -> T {
        let mut acc = x[0].zero_like();
        for i in 0..3 {
            for j in 0..3 {
                let c = &self.m.m[i][j];
                if c.cmp0().is_ne() {
                    acc += &(x[i].rational_like(c) * &x[i] * &u[j]);
                }
            }
        }
        acc
    }

    /// Relative residual `|B(x, u)| / (|B| |x| |u|)`.
    pub fn relative_residual(&self, x: &[Complex; 3], u: &[Complex; 3]) -> f64 {
        let v = self.eval(x, u);
        let bn: f64 = self
            .m
            .entries()
            .map(|c| c.to_f64() * c.to_f64())
            .sum::<f64>()
            .sqrt();
        let nx = crate::arith::numeric::norm(x).to_f64();
        let nu = crate::arith::numeric::norm(u).to_f64();
        crate::arith::numeric::modulus_f64(&v) / (bn * nx * nu)
    }

    /// The form `(x, u) -> B(A x, C u)`, i.e. the matrix `A^T M C`.
    pub fn substitute(&self, a: &Mat3<Rational>, c: &Mat3<Rational>) -> Self {
        Self::new(a.transpose().mul(&self.m).mul(c))
    }
}

impl fmt::Display for BilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 0..3 {
            for j in 0..3 {
                let c = &self.m.m[i][j];
                if c.cmp0().is_eq() {
                    continue;
                }
                let neg = c.cmp0().is_lt();
                let abs = Rational::from(c.abs_ref());
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                } else {
                    write!(f, " {} ", if neg { '-' } else { '+' })?;
                }
                first = false;
                if abs != 1 {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}{}", XS[i], US[j])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_canonical() {
        let b = BilinearForm::from_ints([[-8, -2, 80], [0, -4, -2], [310, 0, -2628]]);
        let c = b.canonical();
        assert_eq!(
            c.to_string(),
            "4*xu + xv - 40*xw + 2*yv + yw - 155*zu + 1314*zw"
        );
        assert_eq!(b.proportional_to(&c), Some(q(-2)));
    }

    #[test]
    fn substitution_is_dot_product_invariant() {
        let m = Mat3::from_ints([[1, 2, 0], [0, 1, 3], [1, 0, 1]]);
        let mit = m.inverse_transpose().unwrap();
        let d = BilinearForm::incidence().substitute(&m, &mit);
        assert_eq!(d, BilinearForm::incidence());
    }
}
