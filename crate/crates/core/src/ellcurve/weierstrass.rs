//! Long Weierstrass models `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.

use std::fmt;

use rug::Rational;

use crate::arith::rational::{q, qpow, rational_root};
use crate::arith::{Mat3, TernaryCubic};
use crate::covariants::invariants;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeierstrassModel {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
}

/// `x = u^2 x' + r`, `y = u^3 y' + s u^2 x' + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoTransform {
    pub u: Rational,
    pub r: Rational,
    pub s: Rational,
    pub t: Rational,
}

impl IsoTransform {
    pub fn identity() -> Self {
        IsoTransform {
            u: q(1),
            r: q(0),
            s: q(0),
            t: q(0),
        }
    }

    /// The projective substitution matrix `[x:y:z] = N [x':y':z']`.
    pub fn matrix(&self) -> Mat3<Rational> {
        let u2 = Rational::from(self.u.square_ref());
        let u3 = Rational::from(&u2 * &self.u);
        Mat3::from_rows([
            [u2.clone(), q(0), self.r.clone()],
            [Rational::from(&self.s * &u2), u3, self.t.clone()],
            [q(0), q(0), q(1)],
        ])
    }
}

impl WeierstrassModel {
    pub fn new(a: [Rational; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a;
        let w = WeierstrassModel { a1, a2, a3, a4, a6 };
        if w.discriminant().cmp0().is_eq() {
            return Err(Error::SingularInput);
        }
        Ok(w)
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self> {
        Self::new(a.map(q))
    }

    /// `y^2 = x^3 - 27 c4 x - 54 c6`.
    pub fn from_c4_c6(c4: &Rational, c6: &Rational) -> Result<Self> {
        Self::new([
            q(0),
            q(0),
            q(0),
            Rational::from(c4 * -27),
            Rational::from(c6 * -54),
        ])
    }

    /// Jacobian of a smooth plane cubic, from its invariants.
    pub fn jacobian_of(g: &TernaryCubic<Rational>) -> Result<Self> {
        let inv = invariants(g)?;
        if inv.is_singular() {
            return Err(Error::SingularInput);
        }
        Self::from_c4_c6(&inv.c4, &inv.c6)
    }

    pub fn coeffs(&self) -> [Rational; 5] {
        [
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
            self.a6.clone(),
        ]
    }

    pub fn b2(&self) -> Rational {
        Rational::from(self.a1.square_ref()) + Rational::from(&self.a2 * 4)
    }

    pub fn b4(&self) -> Rational {
        Rational::from(&self.a4 * 2) + Rational::from(&self.a1 * &self.a3)
    }

    pub fn b6(&self) -> Rational {
        Rational::from(self.a3.square_ref()) + Rational::from(&self.a6 * 4)
    }

    pub fn b8(&self) -> Rational {
        let a1 = &self.a1;
        let (a2, a3, a4, a6) = (&self.a2, &self.a3, &self.a4, &self.a6);
        Rational::from(a1.square_ref()) * a6 + Rational::from(a2 * a6) * 4
            - Rational::from(a1 * a3) * a4
            + Rational::from(a2 * a3) * a3
            - Rational::from(a4.square_ref())
    }

    pub fn c4(&self) -> Rational {
        let b2 = self.b2();
        Rational::from(b2.square_ref()) - self.b4() * 24
    }

    pub fn c6(&self) -> Rational {
        let b2 = self.b2();
        -qpow(&b2, 3) + b2 * self.b4() * 36 - self.b6() * 216
    }

    pub fn discriminant(&self) -> Rational {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        -Rational::from(b2.square_ref()) * &b8
            - qpow(&b4, 3) * 8
            - Rational::from(b6.square_ref()) * 27
            + b2 * b4 * b6 * 9
    }

    pub fn j(&self) -> Rational {
        qpow(&self.c4(), 3) / self.discriminant()
    }

    /// `y^2 z + a1 xyz + a3 yz^2 - x^3 - a2 x^2 z - a4 xz^2 - a6 z^3`.
    pub fn cubic(&self) -> TernaryCubic<Rational> {
        let n = |r: &Rational| -r.clone();
        TernaryCubic::new([
            q(-1),
            q(0),
            n(&self.a2),
            q(0),
            self.a1.clone(),
            n(&self.a4),
            q(0),
            q(1),
            self.a3.clone(),
            n(&self.a6),
        ])
    }

    /// Reads a model off a cubic of the exact shape produced by [`Self::cubic`],
    /// up to an overall scalar.
    pub fn from_cubic(g: &TernaryCubic<Rational>) -> Option<Self> {
        let lead = g.coeffs[7].clone();
        if lead.cmp0().is_eq() {
            return None;
        }
        let c: Vec<Rational> = g.coeffs.iter().map(|c| Rational::from(c / &lead)).collect();
        let zero_at = [1usize, 3, 6];
        if c[0] != -1 || zero_at.iter().any(|&i| c[i].cmp0().is_ne()) {
            return None;
        }
        Self::new([
            c[4].clone(),
            -c[2].clone(),
            c[8].clone(),
            -c[5].clone(),
            -c[9].clone(),
        ])
        .ok()
    }

    /// The negation map `(x, y) -> (x, -y - a1 x - a3)` as a matrix.
    pub fn involution(&self) -> Mat3<Rational> {
        Mat3::from_rows([
            [q(1), q(0), q(0)],
            [-self.a1.clone(), q(-1), -self.a3.clone()],
            [q(0), q(0), q(1)],
        ])
    }

    pub fn contains(&self, p: &[Rational; 3]) -> bool {
        self.cubic().eval(p).cmp0().is_eq()
    }

    /// The model in the coordinates `x', y'` of `tr`.
    pub fn transform(&self, tr: &IsoTransform) -> Result<Self> {
        let IsoTransform { u, r, s, t } = tr;
        if u.cmp0().is_eq() {
            return Err(Error::InvalidInput(
                "u = 0 in a change of coordinates".into(),
            ));
        }
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let s2 = Rational::from(s.square_ref());
        let r2 = Rational::from(r.square_ref());
        let t2 = Rational::from(t.square_ref());
        let n1 = a1.clone() + Rational::from(s * 2);
        let n2 = a2.clone() - Rational::from(s * a1) + Rational::from(r * 3) - &s2;
        let n3 = a3.clone() + Rational::from(r * a1) + Rational::from(t * 2);
        let n4 = a4.clone() - Rational::from(s * a3) + Rational::from(r * a2) * 2
            - (t.clone() + Rational::from(r * s)) * a1
            + r2.clone() * 3
            - Rational::from(s * t) * 2;
        let n6 = a6.clone() + Rational::from(r * a4) + r2.clone() * a2 + r2 * r
            - Rational::from(t * a3)
            - t2
            - Rational::from(r * t) * a1;
        Self::new([
            n1 / u,
            n2 / qpow(u, 2),
            n3 / qpow(u, 3),
            n4 / qpow(u, 4),
            n6 / qpow(u, 6),
        ])
    }
}

impl fmt::Display for WeierstrassModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{},{},{}]",
            self.a1, self.a2, self.a3, self.a4, self.a6
        )
    }
}

/// Finds `tr` with `w1.transform(tr) == w2`, if the models are isomorphic over Q.
pub fn isomorphic_over_q(w1: &WeierstrassModel, w2: &WeierstrassModel) -> Option<IsoTransform> {
    if w1.j() != w2.j() {
        return None;
    }
    let (c4a, c6a, c4b, c6b) = (w1.c4(), w1.c6(), w2.c4(), w2.c6());
    // c4' = c4 / u^4, c6' = c6 / u^6
    let u = if c4a.cmp0().is_eq() {
        rational_root(&(c6a / c6b), 6)?
    } else if c6a.cmp0().is_eq() {
        rational_root(&(c4a / c4b), 4)?
    } else {
        let u2 = (c6a * &c4b) / (c4a * &c6b);
        rational_root(&u2, 2)?
    };
    for u in [u.clone(), -u] {
        let s: Rational = (Rational::from(&u * &w2.a1) - &w1.a1) / 2u32;
        let r = (Rational::from(u.square_ref()) * &w2.a2 - &w1.a2
            + Rational::from(&s * &w1.a1)
            + Rational::from(s.square_ref()))
            / 3;
        let t = (qpow(&u, 3) * &w2.a3 - &w1.a3 - Rational::from(&r * &w1.a1)) / 2;
        let tr = IsoTransform { u, r, s, t };
        if w1.transform(&tr).ok().as_ref() == Some(w2) {
            return Some(tr);
        }
    }
    None
}

pub mod named {
    use super::WeierstrassModel;

    /// `y^2 + xy = x^3 + x^2 - 1154x - 15345`.
    pub fn e681b1() -> WeierstrassModel {
        WeierstrassModel::from_ints([1, 1, 0, -1154, -15345]).expect("nonsingular")
    }

    /// `y^2 + y = x^3 - x^2 + 2`.
    pub fn e681c1() -> WeierstrassModel {
        WeierstrassModel::from_ints([0, -1, 1, 0, 2]).expect("nonsingular")
    }

    /// `y^2 + xy = x^3 + x^2 - 58293654x - 171333232940`.
    pub fn e2006e1() -> WeierstrassModel {
        WeierstrassModel::from_ints([1, 1, 0, -58293654, -171333232940]).expect("nonsingular")
    }
}
