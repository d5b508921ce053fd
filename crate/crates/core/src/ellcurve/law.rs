//! Chord-tangent group laws, written once over [`Field`] so they run
//! exactly over `Rational` and numerically over `Complex`.

use crate::arith::{Field, TernaryCubic};

use super::weierstrass::WeierstrassModel;

/// Index of the coordinate with the largest pivot weight.
fn pivot<T: Field>(p: &[T; 3]) -> usize {
    (0..3)
        .max_by(|&a, &b| p[a].pivot_weight().total_cmp(&p[b].pivot_weight()))
        .unwrap_or(0)
}

/// Projective equality, exact for rationals and within threshold for complex.
pub fn same_point<T: Field>(a: &[T; 3], b: &[T; 3]) -> bool {
    let k = pivot(a);
    if a[k].pivot_weight() == 0.0 || b[k].is_negligible() {
        return false;
    }
    let s = b[k].clone() / &a[k];
    (0..3).all(|i| b[i].near(&(a[i].clone() * &s)))
}

fn is_zero_vec<T: Field>(p: &[T; 3]) -> bool {
    p.iter().all(|c| c.is_negligible())
}

/// Scales so the pivot coordinate is 1 (keeps complex values well sized).
pub fn rescale<T: Field>(p: &[T; 3]) -> [T; 3] {
    let k = pivot(p);
    if p[k].pivot_weight() == 0.0 {
        return p.clone();
    }
    let inv = p[k].one_like() / &p[k];
    std::array::from_fn(|i| p[i].clone() * &inv)
}

fn dot<T: Field>(a: &[T; 3], b: &[T; 3]) -> T {
    a[0].clone() * &b[0] + a[1].clone() * &b[1] + a[2].clone() * &b[2]
}

/// The chord-tangent law on a Weierstrass model with origin `[0:1:0]`.
#[derive(Clone, Debug)]
pub struct WeierstrassLaw<T> {
    pub a: [T; 5],
}

impl<T: Field> WeierstrassLaw<T> {
    pub fn new(w: &WeierstrassModel, like: &T) -> Self {
        WeierstrassLaw {
            a: w.coeffs().map(|c| like.rational_like(&c)),
        }
    }

    pub fn zero(&self) -> [T; 3] {
        let z = self.a[0].zero_like();
        [z.clone(), z.one_like(), z]
    }

    fn affine(&self, p: &[T; 3]) -> Option<(T, T)> {
        let k = pivot(p);
        if p[k].pivot_weight() == 0.0 {
            return None;
        }
        // the z coordinate is negligible relative to the pivot at infinity
        let zr = p[2].clone() / &p[k];
        if zr.is_negligible() {
            return None;
        }
        Some((p[0].clone() / &p[2], p[1].clone() / &p[2]))
    }

    fn proj(&self, a: Option<(T, T)>) -> [T; 3] {
        match a {
            None => self.zero(),
            Some((x, y)) => {
                let one = x.one_like();
                [x, y, one]
            }
        }
    }

    pub fn neg(&self, p: &[T; 3]) -> [T; 3] {
        let [a1, _, a3, _, _] = &self.a;
        let r = self.affine(p).map(|(x, y)| {
            let ny = -y - &(a1.clone() * &x) - a3;
            (x, ny)
        });
        self.proj(r)
    }

    pub fn add(&self, p: &[T; 3], q: &[T; 3]) -> [T; 3] {
        let [a1, a2, a3, a4, _] = &self.a;
        let (Some((x1, y1)), Some((x2, y2))) = (self.affine(p), self.affine(q)) else {
            return if self.affine(p).is_none() {
                q.clone()
            } else {
                p.clone()
            };
        };
        let lam;
        let nu;
        if x1.near(&x2) {
            let sum = y1.clone() + &y2 + &(a1.clone() * &x2) + a3;
            if sum.is_negligible() {
                return self.zero();
            }
            let x1s = x1.clone() * &x1;
            let num = x1s.clone() * &x1.int_like(3) + &(a2.clone() * &x1 * &x1.int_like(2)) + a4
                - &(a1.clone() * &y1);
            let den = y1.clone() * &y1.int_like(2) + &(a1.clone() * &x1) + a3;
            lam = num / &den;
            let a6 = &self.a[4];
            let num_nu =
                -(x1s.clone() * &x1) + &(a4.clone() * &x1) + &(a6.clone() * &x1.int_like(2))
                    - &(a3.clone() * &y1);
            nu = num_nu / &den;
        } else {
            lam = (y2.clone() - &y1) / &(x2.clone() - &x1);
            nu = (y1.clone() * &x2 - &(y2.clone() * &x1)) / &(x2.clone() - &x1);
        }
        let x3 = lam.clone() * &lam + &(a1.clone() * &lam) - a2 - &x1 - &x2;
        let y3 = -((lam + a1) * &x3) - &nu - a3;
        self.proj(Some((x3, y3)))
    }

    pub fn mul(&self, m: i64, p: &[T; 3]) -> [T; 3] {
        let mut base = if m < 0 { self.neg(p) } else { p.clone() };
        let mut n = m.unsigned_abs();
        let mut acc = self.zero();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    pub fn contains(&self, p: &[T; 3]) -> bool {
        let [a1, a2, a3, a4, a6] = &self.a;
        let (x, y, z) = (&p[0], &p[1], &p[2]);
        let lhs = y.clone() * y * z + &(a1.clone() * x * y * z) + &(a3.clone() * y * z * z);
        let rhs = x.clone() * x * x
            + &(a2.clone() * x * x * z)
            + &(a4.clone() * x * z * z)
            + &(a6.clone() * z * z * z);
        lhs.near(&rhs)
    }
}

/// The chord-tangent law on an arbitrary smooth plane cubic with a chosen
/// origin: `P + Q` is the third point on the line through `O` and `P * Q`,
/// where `P * Q` is the third point on the line `PQ`.
#[derive(Clone, Debug)]
pub struct PointedLaw<T> {
    pub cubic: TernaryCubic<T>,
    pub origin: [T; 3],
}

impl<T: Field> PointedLaw<T> {
    pub fn new(cubic: TernaryCubic<T>, origin: [T; 3]) -> Self {
        PointedLaw { cubic, origin }
    }

    /// `P * Q`. For `P = Q` the line is the tangent at `P`.
    ///
    /// On the line, `G(l P + m Q) = l^2 m A + l m^2 B + m^3 G(Q)` with
    /// `A = grad G(P) . Q` and `B = grad G(Q) . P`. For a chord `G(Q) = 0` and
    /// the third root is `B P - A Q`; on the tangent `A = 0` and it is
    /// `G(Q) P - B Q`.
    pub fn third(&self, p: &[T; 3], q: &[T; 3]) -> [T; 3] {
        let tangent = same_point(p, q);
        let q = if tangent {
            self.tangent_direction(p)
        } else {
            q.clone()
        };
        let gq = self.cubic.gradient(&q);
        let b = dot(&gq, p);
        let r: [T; 3] = if tangent {
            let c = self.cubic.eval(&q);
            std::array::from_fn(|i| c.clone() * &p[i] - &(b.clone() * &q[i]))
        } else {
            let a = dot(&self.cubic.gradient(p), &q);
            std::array::from_fn(|i| b.clone() * &p[i] - &(a.clone() * &q[i]))
        };
        if is_zero_vec(&r) {
            // only at a flex, whose tangent meets the curve in P alone
            return rescale(p);
        }
        rescale(&r)
    }

    /// A point on the tangent line at `p` other than `p`.
    fn tangent_direction(&self, p: &[T; 3]) -> [T; 3] {
        let g = self.cubic.gradient(p);
        let mut best: Option<[T; 3]> = None;
        let mut bw = -1.0;
        for k in 0..3 {
            let mut e: [T; 3] = std::array::from_fn(|_| g[0].zero_like());
            e[k] = g[0].one_like();
            // d = g x e lies on the tangent line
            let d = [
                g[1].clone() * &e[2] - &(g[2].clone() * &e[1]),
                g[2].clone() * &e[0] - &(g[0].clone() * &e[2]),
                g[0].clone() * &e[1] - &(g[1].clone() * &e[0]),
            ];
            if same_point(&d, p) || is_zero_vec(&d) {
                continue;
            }
            let w = d.iter().map(|c| c.pivot_weight()).fold(0.0, f64::max);
            if w > bw {
                bw = w;
                best = Some(d);
            }
        }
        best.expect("a smooth point has a tangent line")
    }

    pub fn add(&self, p: &[T; 3], q: &[T; 3]) -> [T; 3] {
        let r = self.third(p, q);
        self.third(&self.origin, &r)
    }

    pub fn neg(&self, p: &[T; 3]) -> [T; 3] {
        let o2 = self.third(&self.origin, &self.origin);
        self.third(&o2, p)
    }

    pub fn mul(&self, m: i64, p: &[T; 3]) -> [T; 3] {
        let mut base = if m < 0 { self.neg(p) } else { p.clone() };
        let mut n = m.unsigned_abs();
        let mut acc = self.origin.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }
}
