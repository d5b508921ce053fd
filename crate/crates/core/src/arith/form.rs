//! Sparse polynomials in the three plane coordinates `x, y, z`.

use std::collections::BTreeMap;

use super::field::Field;

/// Exponent vector `[i, j, k]` for `x^i y^j z^k`.
pub type Exp3 = [u32; 3];

#[derive(Clone, Debug, PartialEq)]
pub struct Form<T> {
    terms: BTreeMap<Exp3, T>,
}

impl<T: Field> Default for Form<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Field> Form<T> {
    pub fn zero() -> Self {
        Form {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(c: T, e: Exp3) -> Self {
        let mut f = Self::zero();
        f.add_term(e, c);
        f
    }

    /// The coordinate function `x`, `y` or `z` (index 0, 1, 2).
    pub fn var(one: &T, i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(one.one_like(), e)
    }

    /// Linear form `a x + b y + c z`.
    pub fn linear(c: &[T; 3]) -> Self {
        let mut f = Self::zero();
        for (i, ci) in c.iter().enumerate() {
            let mut e = [0; 3];
            e[i] = 1;
            f.add_term(e, ci.clone());
        }
        f
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp3, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exp3) -> Option<&T> {
        self.terms.get(e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.is_negligible())
    }

    pub fn add_term(&mut self, e: Exp3, c: T) {
        match self.terms.get_mut(&e) {
            Some(v) => *v += &c,
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Drops exactly-zero coefficients (exact fields only ever produce these).
    pub fn trim(mut self) -> Self {
        self.terms.retain(|_, c| c.pivot_weight() != 0.0);
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out.trim()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out.trim()
    }

    pub fn scale(&self, s: &T) -> Self {
        Form {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c.clone() * s))
                .collect(),
        }
        .trim()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(
                    [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]],
                    ca.clone() * cb,
                );
            }
        }
        out.trim()
    }

    pub fn pow(&self, n: u32, one: &T) -> Self {
        let mut out = Self::monomial(one.one_like(), [0, 0, 0]);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn partial(&self, var: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut ne = *e;
            ne[var] -= 1;
            out.add_term(ne, c.clone() * &c.int_like(e[var] as i64));
        }
        out.trim()
    }

    pub fn eval(&self, p: &[T; 3]) -> T {
        let mut acc = p[0].zero_like();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t *= &p[i];
                }
            }
            acc += &t;
        }
        acc
    }

    /// Substitutes `x -> subs[0], y -> subs[1], z -> subs[2]`.
    pub fn compose(&self, subs: &[Form<T>; 3], one: &T) -> Self {
        let max_deg = self
            .terms
            .keys()
            .flat_map(|e| e.iter().copied())
            .max()
            .unwrap_or(0);
        let powers: Vec<Vec<Form<T>>> = subs
            .iter()
            .map(|s| {
                let mut v = vec![Form::monomial(one.one_like(), [0, 0, 0])];
                for k in 1..=max_deg as usize {
                    let next = v[k - 1].mul(s);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut t = Form::monomial(c.clone(), [0, 0, 0]);
            for i in 0..3 {
                if e[i] > 0 {
                    t = t.mul(&powers[i][e[i] as usize]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Exact division by the monomial `x y z`; `None` if some term lacks a factor.
    pub fn div_xyz(&self) -> Option<Self> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            if e.contains(&0) {
                return None;
            }
            out.add_term([e[0] - 1, e[1] - 1, e[2] - 1], c.clone());
        }
        Some(out)
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Form<U> {
        Form {
            terms: self.terms.iter().map(|(e, c)| (*e, f(c))).collect(),
        }
    }
}

/// `det` of a 3x3 matrix of forms, by cofactor expansion.
pub fn det3<T: Field>(m: &[[Form<T>; 3]; 3]) -> Form<T> {
    let minor = |a: &Form<T>, b: &Form<T>, c: &Form<T>, d: &Form<T>| a.mul(d).sub(&b.mul(c));
    let t0 = m[0][0].mul(&minor(&m[1][1], &m[1][2], &m[2][1], &m[2][2]));
    let t1 = m[0][1].mul(&minor(&m[1][0], &m[1][2], &m[2][0], &m[2][2]));
    let t2 = m[0][2].mul(&minor(&m[1][0], &m[1][1], &m[2][0], &m[2][1]));
    t0.sub(&t1).add(&t2)
}
