//! Integer factorisation: trial division, Miller-Rabin and Pollard rho (Brent).
//!
//! Sized for the integers this crate meets (cyclotomic values and group
//! orders at desk scale), not for cryptographic inputs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 1_000_000;

// Deterministic for n < 3.3e24; beyond that the answer is a strong
// probable prime to all of these bases.
const MR_BASES: [u32; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// A positive integer stored as its prime factorisation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactoredInteger {
    factors: BTreeMap<BigUint, u32>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds from `(prime, exponent)` pairs. Primality is checked.
    pub fn from_pairs<P: Into<BigUint>>(pairs: impl IntoIterator<Item = (P, u32)>) -> Self {
        let mut out = Self::one();
        for (p, e) in pairs {
            let p = p.into();
            assert!(is_prime(&p), "{p} is not prime");
            out.insert(p, e);
        }
        out
    }

    fn insert(&mut self, p: BigUint, e: u32) {
        if e > 0 {
            *self.factors.entry(p).or_insert(0) += e;
        }
    }

    pub fn value(&self) -> BigUint {
        self.factors.iter().map(|(p, e)| p.pow(*e)).product()
    }

    pub fn exponent(&self, p: &BigUint) -> u32 {
        self.factors.get(p).copied().unwrap_or(0)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.exponent(&BigUint::from(p))
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BigUint, &u32)> {
        self.factors.iter()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&mut self, other: &FactoredInteger) {
        for (p, e) in &other.factors {
            self.insert(p.clone(), *e);
        }
    }

    pub fn pow(&self, k: u32) -> FactoredInteger {
        FactoredInteger {
            factors: self
                .factors
                .iter()
                .filter(|_| k > 0)
                .map(|(p, e)| (p.clone(), e * k))
                .collect(),
        }
    }

    /// Exact division; `None` if `other` does not divide `self`.
    pub fn checked_div(&self, other: &FactoredInteger) -> Option<FactoredInteger> {
        let mut out = self.clone();
        for (p, e) in &other.factors {
            let have = out.factors.get_mut(p)?;
            if *have < *e {
                return None;
            }
            *have -= e;
            if *have == 0 {
                out.factors.remove(p);
            }
        }
        Some(out)
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigUint::from(n))
}

pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            if small == p {
                return true;
            }
            if small % p == 0 {
                return false;
            }
        }
        if small < 41 * 41 {
            return true;
        }
    }
    miller_rabin(n)
}

fn miller_rabin(n: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for a in MR_BASES {
        let a = BigUint::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_1 {
                continue 'bases;
            }
            if x == one {
                return false;
            }
        }
        return false;
    }
    true
}

/// Factorisation of a machine-word integer as ascending `(prime, exponent)` pairs.
pub fn factorize_u64(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1);
    factorize(&BigUint::from(n))
        .iter()
        .map(|(p, e)| (p.to_u64().unwrap(), *e))
        .collect()
}

/// Full prime factorisation of `n >= 1`.
pub fn factorize(n: &BigUint) -> FactoredInteger {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut out = FactoredInteger::one();
    let mut rest = n.clone();

    let push_small = |rest: &mut BigUint, p: u64| {
        let mut e = 0;
        while rem_u64(rest, p) == 0 {
            *rest /= p;
            e += 1;
        }
        e
    };

    for p in [2u64, 3, 5] {
        let e = push_small(&mut rest, p);
        out.insert(BigUint::from(p), e);
    }
    // Wheel mod 30 over the candidates 7, 11, 13, ...
    let wheel = [4u64, 2, 4, 2, 4, 6, 2, 6];
    let mut p = 7u64;
    let mut i = 0;
    while p <= TRIAL_LIMIT {
        if let Some(r) = rest.to_u64() {
            if r == 1 {
                return out;
            }
            if p.saturating_mul(p) > r {
                out.insert(rest, 1);
                return out;
            }
        }
        let e = push_small(&mut rest, p);
        out.insert(BigUint::from(p), e);
        if p == 997 && is_prime(&rest) {
            out.insert(rest, 1);
            return out;
        }
        p += wheel[i];
        i = (i + 1) % wheel.len();
    }

    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            out.insert(m, 1);
            continue;
        }
        let d = pollard_brent(&m);
        let co = &m / &d;
        stack.push(d);
        stack.push(co);
    }
    out
}

fn rem_u64(n: &BigUint, p: u64) -> u64 {
    n.iter_u64_digits()
        .rev()
        .fold(0u128, |acc, d| ((acc << 64) | d as u128) % p as u128) as u64
}

/// A nontrivial divisor of the composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    for c in 1u32.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let batch = 64u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..batch.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += batch;
            }
            r *= 2;
        }
        if &g == n {
            // The batch overshot; step one at a time from the saved point.
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_primes() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(!is_prime_u64(1681)); // 41^2
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(is_prime_u64(1_000_000_007));
    }

    #[test]
    fn factors_large_semiprime() {
        // Both factors lie above the trial-division limit.
        let p = BigUint::from(1_000_000_007u64);
        let q = BigUint::from(998_244_353u64);
        let f = factorize(&(&p * &q * &p));
        assert_eq!(f.exponent(&p), 2);
        assert_eq!(f.exponent(&q), 1);
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn factors_cyclotomic_value() {
        // 2^64 + 1 = 274177 · 67280421310721
        let n = BigUint::from(2u32).pow(64) + 1u32;
        let f = factorize(&n);
        assert_eq!(f.to_string(), "274177·67280421310721");
    }

    #[test]
    fn display_and_division() {
        let a = FactoredInteger::from_pairs([(2u32, 4), (3, 2), (5, 1), (11, 1)]);
        assert_eq!(a.to_string(), "2^4·3^2·5·11");
        assert_eq!(a.value(), BigUint::from(7920u32));
        let b = FactoredInteger::from_pairs([(3u32, 2)]);
        assert_eq!(a.checked_div(&b).unwrap().value(), BigUint::from(880u32));
        assert!(b.checked_div(&a).is_none());
        assert_eq!(FactoredInteger::one().to_string(), "1");
    }

    proptest! {
        #[test]
        fn factor_roundtrip(n in 1u64..u64::MAX / 2) {
            let f = factorize(&BigUint::from(n));
            prop_assert_eq!(f.value(), BigUint::from(n));
            for p in f.primes() {
                prop_assert!(is_prime(p));
            }
            prop_assert_eq!(factorize(&f.value()), f);
        }
    }
}
