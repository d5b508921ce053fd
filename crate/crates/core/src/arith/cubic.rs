//! Ternary cubic forms in the fixed monomial order
//! `x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3`.

use std::fmt;

use rug::{Complex, Rational};

use super::field::Field;
use super::form::{Exp3, Form};
use super::mat::Mat3;
use super::rational::{primitive_integer_vector, proportionality};
use crate::error::{Error, Result};

pub const MONOMIALS: [Exp3; 10] = [
    [3, 0, 0],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];

/// Tag written into serialized documents.
pub const MONOMIAL_ORDER_TAG: &str = "x^3,x^2y,x^2z,xy^2,xyz,xz^2,y^3,y^2z,yz^2,z^3";

#[derive(Clone, Debug, PartialEq)]
pub struct TernaryCubic<T> {
    pub coeffs: [T; 10],
}

impl<T: Field> TernaryCubic<T> {
    pub fn new(coeffs: [T; 10]) -> Self {
        TernaryCubic { coeffs }
    }

    pub fn zero(like: &T) -> Self {
        TernaryCubic {
            coeffs: std::array::from_fn(|_| like.zero_like()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_negligible())
    }

    pub fn to_form(&self) -> Form<T> {
        let mut f = Form::zero();
        for (e, c) in MONOMIALS.iter().zip(&self.coeffs) {
            if c.pivot_weight() != 0.0 {
                f.add_term(*e, c.clone());
            }
        }
        f
    }

    /// Reads a homogeneous cubic back from a [`Form`].
    pub fn from_form(f: &Form<T>, like: &T) -> Result<Self> {
        let mut out = Self::zero(like);
        for (e, c) in f.terms() {
            match MONOMIALS.iter().position(|m| m == e) {
                Some(i) => out.coeffs[i] += c,
                None if c.pivot_weight() == 0.0 => {}
                None => {
                    return Err(Error::Internal(format!(
                        "form is not a homogeneous cubic (monomial {e:?})"
                    )))
                }
            }
        }
        Ok(out)
    }

    pub fn eval(&self, p: &[T; 3]) -> T {
        let (x, y, z) = (&p[0], &p[1], &p[2]);
        let c = &self.coeffs;
        // Horner-ish grouping by powers of x
        let y2 = y.clone() * y;
        let z2 = z.clone() * z;
        let yz = y.clone() * z;
        let cubic_yz = c[6].clone() * &(y2.clone() * y)
            + c[7].clone() * &(y2.clone() * z)
            + c[8].clone() * &(z2.clone() * y)
            + c[9].clone() * &(z2.clone() * z);
        let quad_yz = c[3].clone() * &y2 + c[4].clone() * &yz + c[5].clone() * &z2;
        let lin_yz = c[1].clone() * y + c[2].clone() * z;
        ((c[0].clone() * x + &lin_yz) * x + &quad_yz) * x + &cubic_yz
    }

    pub fn gradient(&self, p: &[T; 3]) -> [T; 3] {
        let f = self.to_form();
        [
            f.partial(0).eval(p),
            f.partial(1).eval(p),
            f.partial(2).eval(p),
        ]
    }

    /// `F ∘ M`: substitutes `v -> M v`, so `act(act(F, A), B) = act(F, A B)`.
    pub fn act(&self, m: &Mat3<T>) -> Self {
        let like = &self.coeffs[0];
        let subs: [Form<T>; 3] = std::array::from_fn(|i| Form::linear(&m.m[i]));
        let g = self.to_form().compose(&subs, &like.one_like());
        Self::from_form(&g, like).expect("linear substitution keeps degree 3")
    }

    pub fn add(&self, o: &Self) -> Self {
        TernaryCubic {
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() + &o.coeffs[i]),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        TernaryCubic {
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() - &o.coeffs[i]),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        TernaryCubic {
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() * s),
        }
    }

    /// `s A + t B`.
    pub fn combine(s: &T, a: &Self, t: &T, b: &Self) -> Self {
        a.scale(s).add(&b.scale(t))
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> TernaryCubic<U> {
        TernaryCubic {
            coeffs: std::array::from_fn(|i| f(&self.coeffs[i])),
        }
    }
}

impl TernaryCubic<Rational> {
    pub fn from_ints(c: [i64; 10]) -> Self {
        TernaryCubic {
            coeffs: c.map(Rational::from),
        }
    }

    pub fn to_complex(&self, prec: u32) -> TernaryCubic<Complex> {
        self.map(|c| Complex::with_val(prec, c))
    }

    /// Content-free integer representative with positive first nonzero
    /// coefficient, and the scalar `c` with `primitive = c * self`.
    pub fn primitive(&self) -> (Self, Rational) {
        let (v, c) = primitive_integer_vector(&self.coeffs);
        (
            TernaryCubic {
                coeffs: std::array::from_fn(|i| v[i].clone()),
            },
            c,
        )
    }

    /// `Some(c)` with `self = c * other`.
    pub fn proportional_to(&self, other: &Self) -> Option<Rational> {
        proportionality(&self.coeffs, &other.coeffs)
    }
}

impl TernaryCubic<Complex> {
    /// Coefficient 2-norm.
    pub fn norm(&self) -> rug::Float {
        super::numeric::norm(&self.coeffs)
    }

    /// Residual `|G(p)| / (|G| |p|^3)`, scale invariant.
    pub fn relative_residual(&self, p: &[Complex; 3]) -> rug::Float {
        let v = self.eval(p);
        let np = super::numeric::norm(p);
        let d = self.norm() * np.clone() * &np * &np;
        super::numeric::modulus(&v) / d
    }
}

fn monomial_name(e: &Exp3) -> String {
    let mut s = String::new();
    for (v, &k) in ["x", "y", "z"].iter().zip(e) {
        match k {
            0 => {}
            1 => s.push_str(v),
            _ => s.push_str(&format!("{v}^{k}")),
        }
    }
    s
}

impl fmt::Display for TernaryCubic<Rational> {
    /// Human-readable form such as `x^3 + y^3 - 3*xyz`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in MONOMIALS.iter().zip(&self.coeffs) {
            if c.cmp0().is_eq() {
                continue;
            }
            let neg = c.cmp0().is_lt();
            let a = Rational::from(c.abs_ref());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if a == 1 {
                write!(f, "{}", monomial_name(e))?;
            } else {
                write!(f, "{a}*{}", monomial_name(e))?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Commonly used exact cubics.
pub mod named {
    use super::*;

    pub fn fermat() -> TernaryCubic<Rational> {
        TernaryCubic::from_ints([1, 0, 0, 0, 0, 0, 1, 0, 0, 1])
    }

    pub fn xyz() -> TernaryCubic<Rational> {
        TernaryCubic::from_ints([0, 0, 0, 0, 1, 0, 0, 0, 0, 0])
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;
    use crate::arith::rational::q;
    use proptest::prelude::*;

    #[test]
    fn act_examples() {
        let f = fermat();
        assert_eq!(f.act(&Mat3::identity(&q(1))), f);
        let d = Mat3::diag([q(2), q(1), q(1)]);
        assert_eq!(
            f.act(&d),
            TernaryCubic::from_ints([8, 0, 0, 0, 0, 0, 1, 0, 0, 1])
        );
        let shift = Mat3::from_ints([[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
        assert_eq!(f.act(&shift), f);
    }

    #[test]
    fn display() {
        let c = TernaryCubic::from_ints([1, 0, 0, 0, -3, 0, 1, 0, 0, 2]);
        assert_eq!(c.to_string(), "x^3 - 3*xyz + y^3 + 2*z^3");
    }

    #[test]
    fn eval_matches_form_eval() {
        let c = TernaryCubic::from_ints([1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
        let p = [q(2), q(-1), q(3)];
        assert_eq!(c.eval(&p), c.to_form().eval(&p));
    }

    fn small_matrix() -> impl Strategy<Value = [[i64; 3]; 3]> {
        proptest::array::uniform3(proptest::array::uniform3(-4i64..=4))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn act_is_a_right_action(
            c in proptest::array::uniform10(-5i64..=5),
            a in small_matrix(),
            b in small_matrix(),
        ) {
            let f = TernaryCubic::from_ints(c);
            let (ma, mb) = (Mat3::from_ints(a), Mat3::from_ints(b));
            prop_assert_eq!(f.act(&ma).act(&mb), f.act(&ma.mul(&mb)));
        }

        #[test]
        fn act_evaluates_at_transformed_point(
            c in proptest::array::uniform10(-5i64..=5),
            a in small_matrix(),
            p in proptest::array::uniform3(-6i64..=6),
        ) {
            let f = TernaryCubic::from_ints(c);
            let m = Mat3::from_ints(a);
            let v = p.map(Rational::from);
            prop_assert_eq!(f.act(&m).eval(&v), f.eval(&m.apply(&v)));
        }
    }
}
