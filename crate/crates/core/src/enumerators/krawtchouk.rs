//! Exact Krawtchouk polynomials.
//!
//! `P_s(x; n) = Σ_j (-1)^j C(x, j) C(n - x, s - j)` for the binary case and
//! `K_s(x; n, q) = Σ_j (-1)^j (q - 1)^(s - j) C(x, j) C(n - x, s - j)` in
//! general. Tables are filled with the three-term recurrence
//!
//! `(s + 1) K_{s+1}(x) = ((n - s)(q - 1) + s - q x) K_s(x) - (q - 1)(n - s + 1) K_{s-1}(x)`
//!
//! and memoized per `(n, q)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Binomial coefficient as an exact integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Evaluates the defining sum directly. Slow; used to validate tables.
pub fn krawtchouk_sum(s: u32, x: u32, n: u32, q: u32) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=s {
        let term = BigInt::from(binomial(x as u64, j as u64) * binomial((n - x) as u64, (s - j) as u64))
            * BigInt::from(q - 1).pow(s - j);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// All values `K_s(x; n, q)` for `0 ≤ s, x ≤ n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KrawtchoukTable {
    n: u32,
    q: u32,
    values: Vec<BigInt>,
}

impl KrawtchoukTable {
    pub fn new(n: u32, q: u32) -> KrawtchoukTable {
        assert!(q >= 2, "alphabet size must be at least 2");
        let w = n as usize + 1;
        let mut values = vec![BigInt::zero(); w * w];
        let (nb, qb) = (BigInt::from(n), BigInt::from(q));
        let q1 = &qb - 1;
        for x in 0..=n {
            let xb = BigInt::from(x);
            values[x as usize] = BigInt::one();
            if n == 0 {
                continue;
            }
            values[w + x as usize] = &q1 * &nb - &qb * &xb;
            for s in 1..n {
                let sb = BigInt::from(s);
                let a = (&nb - &sb) * &q1 + &sb - &qb * &xb;
                let b = &q1 * (&nb - &sb + 1);
                let num = a * &values[s as usize * w + x as usize] - b * &values[(s as usize - 1) * w + x as usize];
                values[(s as usize + 1) * w + x as usize] = num / (sb + 1);
            }
        }
        KrawtchoukTable { n, q, values }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn get(&self, s: u32, x: u32) -> &BigInt {
        assert!(s <= self.n && x <= self.n, "Krawtchouk index out of range");
        &self.values[s as usize * (self.n as usize + 1) + x as usize]
    }
}

type Cache = Mutex<HashMap<(u32, u32), Arc<KrawtchoukTable>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared memoized table for `(n, q)`.
pub fn table(n: u32, q: u32) -> Arc<KrawtchoukTable> {
    let mut guard = cache().lock().expect("krawtchouk cache poisoned");
    guard.entry((n, q)).or_insert_with(|| Arc::new(KrawtchoukTable::new(n, q))).clone()
}

/// Seeds the memo with a precomputed table, e.g. one loaded from disk.
pub fn install_table(t: KrawtchoukTable) {
    let mut guard = cache().lock().expect("krawtchouk cache poisoned");
    guard.insert((t.n, t.q), Arc::new(t));
}

/// Binary Krawtchouk polynomial `P_s(x; n)`.
pub fn krawtchouk(s: u32, x: u32, n: u32) -> BigInt {
    table(n, 2).get(s, x).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_zero_and_one() {
        for n in 0..12 {
            for x in 0..=n {
                assert_eq!(krawtchouk(0, x, n), BigInt::one());
                if n > 0 {
                    assert_eq!(krawtchouk(1, x, n), BigInt::from(n as i64 - 2 * x as i64));
                }
            }
        }
        assert_eq!(krawtchouk(1, 1, 4), BigInt::from(2));
    }

    #[test]
    fn recurrence_matches_definition() {
        for q in [2, 4] {
            for n in 0..=32 {
                let t = KrawtchoukTable::new(n, q);
                for s in 0..=n {
                    for x in 0..=n {
                        assert_eq!(t.get(s, x), &krawtchouk_sum(s, x, n, q), "n={n} q={q} s={s} x={x}");
                    }
                }
            }
        }
    }

    #[test]
    fn orthogonality() {
        for n in 0..=16u32 {
            let t = table(n, 2);
            for r in 0..=n {
                for s in 0..=n {
                    let sum: BigInt =
                        (0..=n).map(|x| BigInt::from(binomial(n as u64, x as u64)) * t.get(r, x) * t.get(s, x)).sum();
                    let expected =
                        if r == s { BigInt::from(binomial(n as u64, r as u64)) << n as usize } else { BigInt::zero() };
                    assert_eq!(sum, expected);
                }
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 4), BigUint::from(210u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(64, 32), BigUint::from(1832624140942590534u64));
    }
}
