//! 3x3 matrices and dense linear algebra over a [`Field`].

use rug::{Complex, Float, Rational};

use super::field::Field;
use super::numeric;

#[derive(Clone, Debug, PartialEq)]
pub struct Mat3<T> {
    pub m: [[T; 3]; 3],
}

impl<T: Field> Mat3<T> {
    pub fn from_rows(m: [[T; 3]; 3]) -> Self {
        Mat3 { m }
    }

    pub fn from_cols(c: [[T; 3]; 3]) -> Self {
        let [a, b, d] = c;
        let [a0, a1, a2] = a;
        let [b0, b1, b2] = b;
        let [d0, d1, d2] = d;
        Mat3 {
            m: [[a0, b0, d0], [a1, b1, d1], [a2, b2, d2]],
        }
    }

    pub fn identity(like: &T) -> Self {
        Self::diag([like.one_like(), like.one_like(), like.one_like()])
    }

    pub fn diag(d: [T; 3]) -> Self {
        let z = d[0].zero_like();
        let [a, b, c] = d;
        Mat3 {
            m: [
                [a, z.clone(), z.clone()],
                [z.clone(), b, z.clone()],
                [z.clone(), z, c],
            ],
        }
    }

    pub fn col(&self, j: usize) -> [T; 3] {
        [
            self.m[0][j].clone(),
            self.m[1][j].clone(),
            self.m[2][j].clone(),
        ]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let e = |i: usize, j: usize| {
            self.m[i][0].clone() * &o.m[0][j]
                + self.m[i][1].clone() * &o.m[1][j]
                + self.m[i][2].clone() * &o.m[2][j]
        };
        Mat3 {
            m: [
                [e(0, 0), e(0, 1), e(0, 2)],
                [e(1, 0), e(1, 1), e(1, 2)],
                [e(2, 0), e(2, 1), e(2, 2)],
            ],
        }
    }

    pub fn apply(&self, v: &[T; 3]) -> [T; 3] {
        let r = |i: usize| {
            self.m[i][0].clone() * &v[0]
                + self.m[i][1].clone() * &v[1]
                + self.m[i][2].clone() * &v[2]
        };
        [r(0), r(1), r(2)]
    }

    pub fn transpose(&self) -> Self {
        let m = &self.m;
        Mat3 {
            m: [
                [m[0][0].clone(), m[1][0].clone(), m[2][0].clone()],
                [m[0][1].clone(), m[1][1].clone(), m[2][1].clone()],
                [m[0][2].clone(), m[1][2].clone(), m[2][2].clone()],
            ],
        }
    }

    pub fn det(&self) -> T {
        let m = &self.m;
        m[0][0].clone() * &(m[1][1].clone() * &m[2][2] - m[1][2].clone() * &m[2][1])
            - m[0][1].clone() * &(m[1][0].clone() * &m[2][2] - m[1][2].clone() * &m[2][0])
            + m[0][2].clone() * &(m[1][0].clone() * &m[2][1] - m[1][1].clone() * &m[2][0])
    }

    pub fn adjugate(&self) -> Self {
        let m = &self.m;
        let c = |a: usize, b: usize, c_: usize, d: usize| {
            m[a][b].clone() * &m[c_][d] - m[a][d].clone() * &m[c_][b]
        };
        Mat3 {
            m: [
                [c(1, 1, 2, 2), -c(0, 1, 2, 2), c(0, 1, 1, 2)],
                [-c(1, 0, 2, 2), c(0, 0, 2, 2), -c(0, 0, 1, 2)],
                [c(1, 0, 2, 1), -c(0, 0, 2, 1), c(0, 0, 1, 1)],
            ],
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_negligible() {
            return None;
        }
        Some(self.adjugate().scale(&(d.one_like() / &d)))
    }

    /// `M^{-T}`.
    pub fn inverse_transpose(&self) -> Option<Self> {
        self.inverse().map(|m| m.transpose())
    }

    pub fn scale(&self, s: &T) -> Self {
        let m = &self.m;
        let f = |i: usize, j: usize| m[i][j].clone() * s;
        Mat3 {
            m: [
                [f(0, 0), f(0, 1), f(0, 2)],
                [f(1, 0), f(1, 1), f(1, 2)],
                [f(2, 0), f(2, 1), f(2, 2)],
            ],
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.m.iter().flat_map(|r| r.iter())
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Mat3<U> {
        let m = &self.m;
        Mat3 {
            m: [
                [f(&m[0][0]), f(&m[0][1]), f(&m[0][2])],
                [f(&m[1][0]), f(&m[1][1]), f(&m[1][2])],
                [f(&m[2][0]), f(&m[2][1]), f(&m[2][2])],
            ],
        }
    }
}

impl Mat3<Rational> {
    pub fn from_ints(m: [[i64; 3]; 3]) -> Self {
        Mat3 {
            m: m.map(|r| r.map(Rational::from)),
        }
    }

    pub fn to_complex(&self, prec: u32) -> Mat3<Complex> {
        self.map(|c| Complex::with_val(prec, c))
    }
}

impl Mat3<Complex> {
    /// Scales so the largest-modulus entry is 1.
    pub fn normalized(&self) -> Self {
        let mut best = self.m[0][0].clone();
        let mut bm = numeric::modulus(&best);
        for e in self.entries() {
            let m = numeric::modulus(e);
            if m > bm {
                bm = m;
                best = e.clone();
            }
        }
        self.scale(&(best.one_like() / &best))
    }

    /// `Some(c)` when `self = c * I` within the working threshold.
    pub fn scalar_value(&self) -> Option<Complex> {
        let prec = self.m[0][0].prec().0;
        let c = self.m[0][0].clone();
        let scale = numeric::modulus(&c).max(&Float::with_val(prec, 1));
        let tol = numeric::threshold(prec) * scale;
        for i in 0..3 {
            for j in 0..3 {
                let target = if i == j { c.clone() } else { c.zero_like() };
                let d = numeric::modulus(&(self.m[i][j].clone() - &target));
                if d >= tol {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Largest entry-wise deviation from a scalar matrix, relative to the scalar.
    pub fn scalar_deviation(&self) -> f64 {
        let c = self.m[0][0].clone();
        let scale = numeric::modulus_f64(&c).max(1.0);
        let mut worst = 0f64;
        for i in 0..3 {
            for j in 0..3 {
                let target = if i == j { c.clone() } else { c.zero_like() };
                worst = worst.max(numeric::modulus_f64(&(self.m[i][j].clone() - &target)) / scale);
            }
        }
        worst
    }

    /// Projective equality: `self` and `other` agree up to a scalar.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        let a = self.normalized();
        let b = other.normalized();
        let flat = |m: &Mat3<Complex>| m.entries().cloned().collect::<Vec<_>>();
        let (fa, fb) = (flat(&a), flat(&b));
        // pick the pivot of `a` and rescale `b` to agree there
        let k = (0..9)
            .max_by(|&i, &j| {
                numeric::modulus(&fa[i])
                    .partial_cmp(&numeric::modulus(&fa[j]))
                    .unwrap()
            })
            .unwrap();
        if fb[k].is_negligible() {
            return false;
        }
        let s = fa[k].clone() / &fb[k];
        fa.iter().zip(&fb).all(|(x, y)| x.near(&(y.clone() * &s)))
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
///
/// Exact for rationals (first nonzero pivot, deterministic); for complex
/// matrices uses partial pivoting on the largest modulus and treats
/// negligible pivots as zero.
pub fn rref<T: Field>(a: &mut [Vec<T>]) -> Vec<usize> {
    let rows = a.len();
    if rows == 0 {
        return vec![];
    }
    let cols = a[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut best = None;
        let mut bw = 0f64;
        for (i, row) in a.iter().enumerate().skip(r) {
            let w = row[c].pivot_weight();
            // strict `>` keeps the first nonzero row for rationals (all weigh 1)
            if w > bw && !row[c].is_negligible() {
                bw = w;
                best = Some(i);
            }
        }
        let Some(p) = best else { continue };
        a.swap(r, p);
        let inv = a[r][c].one_like() / &a[r][c];
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].pivot_weight() == 0.0 {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &(pv.clone() * &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Field>(a: &[Vec<T>]) -> usize {
    let mut m = a.to_vec();
    rref(&mut m).len()
}

/// Basis of the right null space `{v : A v = 0}`.
pub fn kernel_basis<T: Field>(a: &[Vec<T>], cols: usize, like: &T) -> Vec<Vec<T>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![like.zero_like(); cols];
            v[f] = like.one_like();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Solves the square system `A x = b`; `None` when singular.
pub fn solve<T: Field>(a: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let n = a.len();
    let mut aug: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Numeric null space of a complex matrix with full pivoting.
///
/// Rows are normalized to unit length first; a pivot is considered zero when
/// it falls below `2^(-prec/2)`. Returns the basis and the smallest accepted
/// pivot modulus (a conditioning indicator).
pub fn complex_kernel(a: &[Vec<Complex>], cols: usize, prec: u32) -> (Vec<Vec<Complex>>, f64) {
    let mut m: Vec<Vec<Complex>> = a
        .iter()
        .map(|row| {
            let n = numeric::norm(row);
            if n.is_zero() {
                row.clone()
            } else {
                row.iter().map(|c| c.clone() / &n).collect()
            }
        })
        .collect();
    let rows = m.len();
    let tol = numeric::threshold(prec);
    let mut col_perm: Vec<usize> = (0..cols).collect();
    let mut rank = 0;
    let mut min_pivot = f64::INFINITY;
    while rank < rows.min(cols) {
        let mut best = (rank, rank);
        let mut bm = Float::new(prec);
        for (i, row) in m.iter().enumerate().skip(rank) {
            for (j, v) in row.iter().enumerate().skip(rank) {
                let mv = numeric::modulus(v);
                if mv > bm {
                    bm = mv;
                    best = (i, j);
                }
            }
        }
        if bm < tol {
            break;
        }
        min_pivot = min_pivot.min(bm.to_f64());
        m.swap(rank, best.0);
        for row in m.iter_mut() {
            row.swap(rank, best.1);
        }
        col_perm.swap(rank, best.1);
        let inv = m[rank][rank].one_like() / &m[rank][rank];
        for v in m[rank].iter_mut() {
            *v *= &inv;
        }
        let prow = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == rank {
                continue;
            }
            let f = row[rank].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                *v -= &(pv.clone() * &f);
            }
        }
        rank += 1;
    }
    let like = Complex::new(prec);
    let mut basis = Vec::new();
    for f in rank..cols {
        let mut v = vec![like.clone(); cols];
        v[col_perm[f]] = like.one_like();
        for r in 0..rank {
            v[col_perm[r]] = -m[r][f].clone();
        }
        basis.push(v);
    }
    (basis, min_pivot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::q;

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect()
    }

    #[test]
    fn kernel_examples() {
        let one = q(1);
        let id = rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(kernel_basis(&id, 3, &one).is_empty());
        let zero = rows(&[&[0, 0, 0]]);
        assert_eq!(kernel_basis(&zero, 3, &one).len(), 3);
        let a = rows(&[&[1, 1, 0], &[0, 1, 1]]);
        let k = kernel_basis(&a, 3, &one);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        // span{(1,-1,1)}
        assert_eq!(v[0].clone() * q(-1), v[1]);
        assert_eq!(v[0], v[2]);
    }

    #[test]
    fn inverse_and_det() {
        let m = Mat3::from_ints([[2, 1, 0], [0, 1, 3], [1, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat3::identity(&q(1)));
        assert_eq!(m.det(), q(2 + 3));
    }

    #[test]
    fn complex_kernel_rank_one_deficiency() {
        let prec = 256;
        let a: Vec<Vec<Complex>> = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
            .iter()
            .map(|r| r.iter().map(|&x| Complex::with_val(prec, x)).collect())
            .collect();
        let (k, _) = complex_kernel(&a, 3, prec);
        assert_eq!(k.len(), 1);
        for row in &a {
            let s = row
                .iter()
                .zip(&k[0])
                .fold(Complex::new(prec), |acc, (x, y)| acc + x.clone() * y);
            assert!(s.is_negligible());
        }
    }
}
