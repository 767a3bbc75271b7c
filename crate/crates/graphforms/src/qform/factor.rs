//! Integer factorization: trial division, Miller–Rabin, Pollard rho
//! (Brent variant) under an iteration budget.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Iteration budget per composite before giving up on a cofactor.
pub const RHO_BUDGET: u64 = 1_000_000;

/// Exact factorization of `|n|`; when the budget runs out the remaining
/// composite cofactor is reported explicitly rather than guessed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// `(prime, multiplicity)` pairs, ascending.
    pub factors: Vec<(BigInt, u32)>,
    /// Composite part left unfactored under the budget, if any.
    pub unfactored: Option<BigInt>,
}

impl Factorization {
    /// Multiset of primes, with repetition.
    pub fn primes_with_multiplicity(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        for (p, k) in &self.factors {
            for _ in 0..*k {
                out.push(p.clone());
            }
        }
        out
    }

    pub fn distinct_prime_count(&self) -> usize {
        self.factors.len()
    }

    pub fn product(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (p, k) in &self.factors {
            acc *= p.pow(*k);
        }
        if let Some(c) = &self.unfactored {
            acc *= c;
        }
        acc
    }
}

/// Factor `|n|`, `n != 0`.
pub fn prime_factorization(n: &BigInt) -> Factorization {
    assert!(!n.is_zero(), "factorization of a nonzero integer");
    let mut remaining = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut push = |p: BigInt, k: u32, factors: &mut Vec<(BigInt, u32)>| {
        if let Some(e) = factors.iter_mut().find(|(q, _)| *q == p) {
            e.1 += k;
        } else {
            factors.push((p, k));
        }
    };
    for small in SMALL_PRIMES {
        let p = BigInt::from(small);
        if &p * &p > remaining {
            break;
        }
        let mut k = 0u32;
        while (&remaining % &p).is_zero() {
            remaining /= &p;
            k += 1;
        }
        if k > 0 {
            push(p, k, &mut factors);
        }
    }
    let mut unfactored = None;
    let mut stack = vec![remaining];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if miller_rabin(&m) {
            push(m, 1, &mut factors);
            continue;
        }
        // perfect powers of a prime fall out of rho as equal halves, fine
        match pollard_brent(&m, RHO_BUDGET) {
            Some(d) => {
                stack.push(&m / &d);
                stack.push(d);
            }
            None => {
                unfactored = Some(match unfactored {
                    None => m,
                    Some(prev) => prev * m,
                });
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Factorization { factors, unfactored }
}

const SMALL_PRIMES: [u32; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Strong probable-prime test; deterministic well past 3e24 with this base
/// set, probabilistic beyond.
pub fn miller_rabin(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    for p in SMALL_PRIMES {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - BigInt::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let a = BigInt::from(a);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's cycle variant of Pollard rho; returns a nontrivial divisor or
/// `None` when the budget is exhausted.
fn pollard_brent(n: &BigInt, budget: u64) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    let mut spent = 0u64;
    for c in 1u64.. {
        if spent >= budget {
            return None;
        }
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut d = BigInt::one();
        let mut q = BigInt::one();
        let mut r = 1u64;
        let mut saved = x.clone();
        'outer: while d.is_one() {
            y = x.clone();
            for _ in 0..r {
                x = f(&x);
            }
            let mut k = 0u64;
            while k < r && d.is_one() {
                saved = x.clone();
                let batch = 128.min(r - k);
                for _ in 0..batch {
                    x = f(&x);
                    let diff = (&x - &y).abs();
                    if diff.is_zero() {
                        // cycle collapsed; restart with the next constant
                        break 'outer;
                    }
                    q = (&q * diff) % n;
                }
                spent += batch;
                if spent >= budget {
                    return None;
                }
                d = q.gcd(n);
                k += batch;
            }
            r *= 2;
        }
        if d == *n {
            // backtrack one by one from the saved point; the collision
            // happened within the last batch
            let mut x2 = saved;
            for _ in 0..257 {
                x2 = f(&x2);
                let diff = (&x2 - &y).abs();
                if diff.is_zero() {
                    break;
                }
                d = diff.gcd(n);
                if !d.is_one() {
                    break;
                }
            }
        }
        if !d.is_one() && d != *n {
            return Some(d);
        }
        // try the next polynomial constant
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factor_i64(n: i64) -> Vec<(i64, u32)> {
        let f = prime_factorization(&BigInt::from(n));
        assert!(f.unfactored.is_none());
        f.factors
            .into_iter()
            .map(|(p, k)| (i64::try_from(p).unwrap(), k))
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(factor_i64(60), vec![(2, 2), (3, 1), (5, 1)]);
        assert_eq!(factor_i64(1), vec![]);
        assert_eq!(factor_i64(-97), vec![(97, 1)]);
        assert_eq!(factor_i64(1024), vec![(2, 10)]);
    }

    #[test]
    fn product_recovers_input() {
        for n in [2_310i64, 104_729, 600_851_475_143, 9_007_199_254_740_881] {
            let f = prime_factorization(&BigInt::from(n));
            assert_eq!(f.product(), BigInt::from(n));
            assert!(f.unfactored.is_none());
        }
    }

    #[test]
    fn big_semiprime() {
        let p = BigInt::from(1_000_000_007u64);
        let q = BigInt::from(998_244_353u64);
        let f = prime_factorization(&(&p * &q));
        assert_eq!(f.factors, vec![(q, 1), (p, 1)]);
    }

    #[test]
    fn miller_rabin_basics() {
        assert!(miller_rabin(&BigInt::from(2)));
        assert!(miller_rabin(&BigInt::from(1_000_000_007u64)));
        assert!(!miller_rabin(&BigInt::from(1)));
        assert!(!miller_rabin(&BigInt::from(561))); // Carmichael
        assert!(!miller_rabin(&BigInt::from(1_000_000_007u64 * 3)));
    }
}
