//! Height-bounded search for rational points on plane cubics.

use rayon::prelude::*;
use rug::{Integer, Rational};

use crate::arith::rational::primitive_integer_vector;
use crate::arith::TernaryCubic;

const FILTER_PRIMES: [u64; 3] = [7, 11, 13];

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    fn g(mut a: i64, mut b: i64) -> i64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a.abs()
    }
    g(g(a, b), c)
}

fn monomials(x: i64, y: i64, z: i64) -> [i128; 10] {
    let (x, y, z) = (x as i128, y as i128, z as i128);
    [
        x * x * x,
        x * x * y,
        x * x * z,
        x * y * y,
        x * y * z,
        x * z * z,
        y * y * y,
        y * y * z,
        y * z * z,
        z * z * z,
    ]
}

enum Evaluator {
    Small([i128; 10]),
    Big {
        coeffs: Vec<Integer>,
        residues: Vec<(u64, [u64; 10])>,
    },
}

impl Evaluator {
    fn new(g: &TernaryCubic<Rational>, bound: i64) -> Self {
        let (v, _) = primitive_integer_vector(&g.coeffs);
        let ints: Vec<Integer> = v.into_iter().map(|c| c.into_numer_denom().0).collect();
        let b3 = (bound as i128).pow(3);
        let fits = ints.iter().all(|c| {
            c.to_i64()
                .is_some_and(|c| (c as i128).abs().checked_mul(b3 * 16).is_some())
        });
        if fits {
            return Evaluator::Small(std::array::from_fn(|i| ints[i].to_i64().unwrap() as i128));
        }
        let residues = FILTER_PRIMES
            .iter()
            .map(|&p| {
                let pm = Integer::from(p);
                let r = std::array::from_fn(|i| {
                    let v = Integer::from(&ints[i] % &pm);
                    let v = if v.cmp0().is_lt() { v + &pm } else { v };
                    v.to_u64().unwrap()
                });
                (p, r)
            })
            .collect();
        Evaluator::Big {
            coeffs: ints,
            residues,
        }
    }

    fn vanishes(&self, x: i64, y: i64, z: i64) -> bool {
        let m = monomials(x, y, z);
        match self {
            Evaluator::Small(c) => c.iter().zip(&m).map(|(a, b)| a * b).sum::<i128>() == 0,
            Evaluator::Big { coeffs, residues } => {
                // cheap modular rejection before the exact evaluation
                for (p, r) in residues {
                    let p = *p as i128;
                    let s: i128 = r
                        .iter()
                        .zip(&m)
                        .map(|(a, b)| (*a as i128) * b.rem_euclid(p))
                        .sum();
                    if s % p != 0 {
                        return false;
                    }
                }
                let mut acc = Integer::new();
                for (c, mm) in coeffs.iter().zip(&m) {
                    acc += c * Integer::from(*mm);
                }
                acc.cmp0().is_eq()
            }
        }
    }
}

/// All primitive integer points `[x:y:z]` of `g` with `max(|x|,|y|,|z|) <= bound`,
/// sign-normalized (first nonzero coordinate positive), in lexicographic order.
pub fn point_search(g: &TernaryCubic<Rational>, bound: i64) -> Vec<[i64; 3]> {
    if bound <= 0 || g.is_zero() {
        return vec![];
    }
    let ev = Evaluator::new(g, bound);
    (0..=bound)
        .into_par_iter()
        .map(|x| {
            let mut hits = Vec::new();
            let ys: Vec<i64> = if x == 0 {
                (0..=bound).collect()
            } else {
                (-bound..=bound).collect()
            };
            for y in ys {
                let zs: Vec<i64> = if x == 0 && y == 0 {
                    vec![1]
                } else {
                    (-bound..=bound).collect()
                };
                for z in zs {
                    if gcd3(x, y, z) == 1 && ev.vanishes(x, y, z) {
                        hits.push([x, y, z]);
                    }
                }
            }
            hits
        })
        .flatten()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cubic::named::fermat;
    use crate::data;

    #[test]
    fn fermat_small_points() {
        let pts = point_search(&fermat(), 1);
        assert_eq!(pts, vec![[0, 1, -1], [1, -1, 0], [1, 0, -1]]);
    }

    #[test]
    fn member_cubic_has_the_known_point() {
        let pts = point_search(&data::c2_681(), 10);
        assert!(pts.contains(&[10, 8, 7]));
    }

    #[test]
    fn planted_point_is_found() {
        // a cubic through [3:-5:7]: subtract its value times z^3 / 343
        let base = TernaryCubic::from_ints([2, 1, 0, -3, 4, 1, 5, 0, -2, 0]);
        let p = [Rational::from(3), Rational::from(-5), Rational::from(7)];
        let v = base.eval(&p) / Rational::from(343);
        let mut c = base.clone();
        c.coeffs[9] -= &v;
        assert!(point_search(&c, 7).contains(&[3, -5, 7]));
        assert!(!point_search(&c, 6).contains(&[3, -5, 7]));
    }

    #[test]
    fn big_coefficients_take_the_filtered_path() {
        let big = Integer::from(1) << 100u32;
        let mut c = fermat();
        for k in 0..10 {
            c.coeffs[k] *= Rational::from(&big);
        }
        assert_eq!(point_search(&c, 1), point_search(&fermat(), 1));
    }
}
