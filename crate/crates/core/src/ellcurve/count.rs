//! Point counts of reductions mod p and trace-mismatch certificates of
//! non-isogeny.

use rug::{Integer, Rational};

use super::weierstrass::WeierstrassModel;

fn reduce(r: &Rational, p: u64) -> Option<u64> {
    let pm = Integer::from(p);
    let d = Integer::from(r.denom() % &pm);
    if d.cmp0().is_eq() {
        return None;
    }
    let inv = d.invert(&pm).ok()?;
    let n = Integer::from(r.numer() % &pm);
    let v = (n * inv) % &pm;
    let v = if v.cmp0().is_lt() { v + &pm } else { v };
    v.to_u64()
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

/// `#E(F_p)` for a prime of good reduction, `None` otherwise.
pub fn count_points_mod_p(w: &WeierstrassModel, p: u64) -> Option<u64> {
    let a: Vec<u64> = w
        .coeffs()
        .iter()
        .map(|c| reduce(c, p))
        .collect::<Option<_>>()?;
    if reduce(&w.discriminant(), p)? == 0 {
        return None;
    }
    let (a1, a2, a3, a4, a6) = (a[0], a[1], a[2], a[3], a[4]);
    let mut count = 1u64;
    for x in 0..p {
        let rhs = (((x * x % p) * x) % p + a2 * (x * x % p) + a4 * x + a6) % p;
        let lin = (a1 * x + a3) % p;
        for y in 0..p {
            let lhs = (y * y + lin * y) % p;
            if lhs == rhs {
                count += 1;
            }
        }
    }
    Some(count)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonIsogeny {
    pub prime: u64,
    pub count1: u64,
    pub count2: u64,
}

/// The first good prime `p <= bound` where the two reductions have different
/// numbers of points. Isogenous curves never have one, so a hit proves
/// non-isogeny; `None` is inconclusive.
pub fn non_isogeny_certificate(
    w1: &WeierstrassModel,
    w2: &WeierstrassModel,
    bound: u64,
) -> Option<NonIsogeny> {
    for p in primes_up_to(bound) {
        let (Some(n1), Some(n2)) = (count_points_mod_p(w1, p), count_points_mod_p(w2, p)) else {
            continue;
        };
        if n1 != n2 {
            return Some(NonIsogeny {
                prime: p,
                count1: n1,
                count2: n2,
            });
        }
    }
    None
}
