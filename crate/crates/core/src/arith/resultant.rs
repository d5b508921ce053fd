//! Sylvester resultants of polynomials in `x, y, z`.

use std::collections::HashMap;

use super::field::Field;
use super::form::Form;

/// Coefficients of `p` as a polynomial in variable `var` (low degree first).
pub fn coefficients_in<T: Field>(p: &Form<T>, var: usize) -> Vec<Form<T>> {
    let deg = p.terms().map(|(e, _)| e[var]).max().unwrap_or(0) as usize;
    let mut out = vec![Form::zero(); deg + 1];
    for (e, c) in p.terms() {
        let mut ne = *e;
        ne[var] = 0;
        out[e[var] as usize].add_term(ne, c.clone());
    }
    out
}

/// `Res_var(p, q)`, the Sylvester determinant; exact over exact fields.
///
/// The determinant is expanded by minors along rows with memoization over
/// column subsets, which needs no division in the coefficient ring.
pub fn resultant<T: Field>(p: &Form<T>, q: &Form<T>, var: usize, one: &T) -> Form<T> {
    let a = coefficients_in(p, var);
    let b = coefficients_in(q, var);
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return Form::monomial(one.one_like(), [0, 0, 0]);
    }
    // Sylvester rows: n shifts of a, m shifts of b (highest degree first)
    let mut rows: Vec<Vec<Form<T>>> = Vec::with_capacity(size);
    for i in 0..n {
        let mut r = vec![Form::zero(); size];
        for (k, c) in a.iter().rev().enumerate() {
            r[i + k] = c.clone();
        }
        rows.push(r);
    }
    for i in 0..m {
        let mut r = vec![Form::zero(); size];
        for (k, c) in b.iter().rev().enumerate() {
            r[i + k] = c.clone();
        }
        rows.push(r);
    }
    det_by_minors(&rows, one)
}

fn det_by_minors<T: Field>(rows: &[Vec<Form<T>>], one: &T) -> Form<T> {
    let n = rows.len();
    assert!(n <= 20, "matrix too large for minor expansion");
    let mut memo: HashMap<u32, Form<T>> = HashMap::new();
    // det of rows[n-k..] restricted to the k columns in `mask`
    fn go<T: Field>(
        rows: &[Vec<Form<T>>],
        mask: u32,
        one: &T,
        memo: &mut HashMap<u32, Form<T>>,
    ) -> Form<T> {
        let k = mask.count_ones() as usize;
        if k == 0 {
            return Form::monomial(one.one_like(), [0, 0, 0]);
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let r = rows.len() - k;
        let mut acc = Form::zero();
        let mut sign_neg = false;
        for c in 0..rows.len() {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = &rows[r][c];
            if !entry.is_zero() {
                let minor = go(rows, mask & !(1 << c), one, memo);
                let term = entry.mul(&minor);
                acc = if sign_neg {
                    acc.sub(&term)
                } else {
                    acc.add(&term)
                };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(mask, acc.clone());
        acc
    }
    go(rows, (1u32 << n) - 1, one, &mut memo)
}
