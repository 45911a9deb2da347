//! Exact integer number theory used throughout the classifier.
//!
//! Everything here works on plain `u64` inputs (group parameters, primes
//! `r`, cyclotomic indices) and returns arbitrary-precision values where
//! the result can outgrow a machine word, e.g. `Φ_m(q)`.

mod factor;

pub use factor::{factorize, factorize_u64, is_prime, is_prime_u64, FactoredInteger};

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumTheoryError {
    #[error("{r} divides {q}; multiplicative order is undefined")]
    DividesBase { q: u64, r: u64 },
    #[error("no residue modulo {r} has multiplicative order {m} ({m} does not divide {r} - 1)")]
    OrderNotDividing { r: u64, m: u64 },
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
}

/// Möbius function.
pub fn mobius(n: u64) -> i8 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let f = factorize_u64(n);
    if f.iter().any(|(_, e)| *e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi is defined for n >= 1");
    factorize_u64(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize_u64(n) {
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Evaluates the `m`-th cyclotomic polynomial at the integer `q >= 2`.
///
/// Uses `Φ_m(q) = ∏_{d | m} (q^d - 1)^{μ(m/d)}`: the positive-μ factors
/// form the numerator, the negative ones the denominator, and the final
/// division is exact.
pub fn cyclotomic_eval(m: u64, q: u64) -> BigUint {
    assert!(m >= 1 && q >= 2, "cyclotomic_eval needs m >= 1, q >= 2");
    let base = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for d in divisors(m) {
        let term = base.pow(d as u32) - 1u32;
        match mobius(m / d) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    let (quot, rem) = num.div_rem(&den);
    assert!(
        rem.is_zero(),
        "inexact cyclotomic division for m={m}, q={q}"
    );
    quot
}

/// Largest `s` with `r^s | n`.
pub fn padic_val(r: u64, n: &BigUint) -> u32 {
    assert!(r >= 2, "padic_val needs r >= 2");
    assert!(!n.is_zero(), "padic_val of zero is unbounded");
    let r = BigUint::from(r);
    let mut n = n.clone();
    let mut s = 0;
    loop {
        let (quot, rem) = n.div_rem(&r);
        if !rem.is_zero() {
            return s;
        }
        n = quot;
        s += 1;
    }
}

pub fn padic_val_u64(r: u64, mut n: u64) -> u32 {
    assert!(r >= 2 && n >= 1);
    let mut s = 0;
    while n.is_multiple_of(r) {
        n /= r;
        s += 1;
    }
    s
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `q` modulo the prime `r`.
pub fn mult_order(q: u64, r: u64) -> Result<u64, NumTheoryError> {
    if q.is_multiple_of(r) {
        return Err(NumTheoryError::DividesBase { q, r });
    }
    let mut order = r - 1;
    for (p, _) in factorize_u64(r - 1) {
        while order.is_multiple_of(p) && pow_mod(q, order / p, r) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// Whether `q` has multiplicative order exactly `m` modulo the prime `p`.
///
/// Works for primes of any size, which the Zsigmondy filter needs since the
/// prime factors of `Φ_m(q)` can exceed a machine word.
pub fn has_order(q: u64, m: u64, p: &BigUint) -> bool {
    let q = BigUint::from(q);
    if (&q % p).is_zero() {
        return false;
    }
    if !q.modpow(&BigUint::from(m), p).is_one() {
        return false;
    }
    factorize_u64(m)
        .iter()
        .all(|&(l, _)| !q.modpow(&BigUint::from(m / l), p).is_one())
}

/// Smallest generator of `(Z/rZ)^*` for an odd prime `r`.
pub fn primitive_root(r: u64) -> Result<u64, NumTheoryError> {
    if r < 3 || !is_prime_u64(r) {
        return Err(NumTheoryError::NotOddPrime(r));
    }
    let prime_factors: Vec<u64> = factorize_u64(r - 1).into_iter().map(|(p, _)| p).collect();
    Ok((2..r)
        .find(|&g| {
            prime_factors
                .iter()
                .all(|&p| pow_mod(g, (r - 1) / p, r) != 1)
        })
        .expect("every prime has a primitive root"))
}

/// All residues in `[1, r)` of multiplicative order exactly `m`, ascending.
///
/// These are `e^{(r-1)i/m}` for a primitive root `e` and `1 <= i <= m`
/// with `gcd(i, m) = 1`.
pub fn order_m_residues(r: u64, m: u64) -> Result<Vec<u64>, NumTheoryError> {
    let e = primitive_root(r)?;
    if m == 0 || !(r - 1).is_multiple_of(m) {
        return Err(NumTheoryError::OrderNotDividing { r, m });
    }
    let step = (r - 1) / m;
    let mut out: Vec<u64> = (1..=m)
        .filter(|i| i.gcd(&m) == 1)
        .map(|i| pow_mod(e, step * i, r))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// A set of residues modulo a fixed modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueClassSet {
    modulus: u64,
    residues: Vec<u64>,
}

impl ResidueClassSet {
    pub fn new(modulus: u64, residues: impl IntoIterator<Item = u64>) -> Self {
        assert!(modulus >= 1);
        let set: BTreeSet<u64> = residues.into_iter().map(|x| x % modulus).collect();
        ResidueClassSet {
            modulus,
            residues: set.into_iter().collect(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn contains(&self, q: u64) -> bool {
        self.residues.binary_search(&(q % self.modulus)).is_ok()
    }

    /// Keeps only the residues accepted by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(u64) -> bool) -> Self {
        ResidueClassSet {
            modulus: self.modulus,
            residues: self.residues.iter().copied().filter(|&x| keep(x)).collect(),
        }
    }
}

impl fmt::Display for ResidueClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.residues.iter().map(u64::to_string).collect();
        write!(f, "{{{}}} mod {}", list.join(","), self.modulus)
    }
}

/// Residues `x` modulo `r^2` with `ord_r(x) = m` and `r ∥ x^m - 1`.
///
/// Each order-`m` class modulo `r` has `r` lifts modulo `r^2`; exactly one
/// of them satisfies `x^m ≡ 1 (mod r^2)` and is dropped, so the result has
/// `φ(m)·(r-1)` elements. For `m = 1` this is `{1 + kr : 1 <= k < r}`.
pub fn lifted_residues(r: u64, m: u64) -> Result<ResidueClassSet, NumTheoryError> {
    let base = order_m_residues(r, m)?;
    let r2 = r * r;
    let lifts = base
        .iter()
        .flat_map(|&e| (0..r).map(move |k| e + k * r))
        .filter(|&x| pow_mod(x, m, r2) != 1);
    Ok(ResidueClassSet::new(r2, lifts))
}

/// Primes `p` with `ord_p(q) = m`: the primitive prime divisors of `q^m - 1`.
pub fn zsigmondy_primes(q: u64, m: u64) -> BTreeSet<BigUint> {
    let value = cyclotomic_eval(m, q);
    factorize(&value)
        .primes()
        .filter(|p| has_order(q, m, p))
        .cloned()
        .collect()
}

/// `Z_m(q)`: the part of `Φ_m(q)` made of primitive prime divisors.
/// Equals 1 when there are none.
pub fn zsigmondy_part(q: u64, m: u64) -> BigUint {
    let value = cyclotomic_eval(m, q);
    factorize(&value)
        .iter()
        .filter(|(p, _)| has_order(q, m, p))
        .map(|(p, e)| p.pow(*e))
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn brute_order(q: u64, r: u64) -> u64 {
        (1..r).find(|&k| pow_mod(q, k, r) == 1).unwrap()
    }

    fn brute_phi(n: u64) -> u64 {
        (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
    }

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(7), -1);
        assert_eq!(mobius(6), 1);
    }

    #[test]
    fn phi_matches_coprime_count() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(30), 8);
        for n in 1..300 {
            assert_eq!(euler_phi(n), brute_phi(n), "n={n}");
        }
    }

    #[test]
    fn cyclotomic_small_values() {
        assert_eq!(cyclotomic_eval(1, 2), BigUint::from(1u32));
        assert_eq!(cyclotomic_eval(6, 2), BigUint::from(3u32));
        assert_eq!(cyclotomic_eval(18, 2), BigUint::from(57u32));
        // Φ_4(q) = q^2 + 1, Φ_12(q) = q^4 - q^2 + 1
        assert_eq!(cyclotomic_eval(4, 10), BigUint::from(101u32));
        assert_eq!(cyclotomic_eval(12, 10), BigUint::from(9901u32));
    }

    #[test]
    fn valuations() {
        assert_eq!(padic_val(3, &BigUint::from(1u32)), 0);
        assert_eq!(padic_val(3, &BigUint::from(57u32)), 1);
        assert_eq!(padic_val(5, &BigUint::from(161050u32)), 2);
        assert_eq!(padic_val_u64(2, 96), 5);
    }

    #[test]
    fn orders() {
        assert_eq!(mult_order(4, 3).unwrap(), 1);
        assert_eq!(mult_order(2, 7).unwrap(), 3);
        assert_eq!(mult_order(7, 5).unwrap(), 4);
        assert_eq!(
            mult_order(9, 3),
            Err(NumTheoryError::DividesBase { q: 9, r: 3 })
        );
        for r in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            for q in 2..200 {
                if q % r != 0 {
                    let m = mult_order(q, r).unwrap();
                    assert_eq!(m, brute_order(q, r));
                    assert_eq!((r - 1) % m, 0);
                }
            }
        }
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(3).unwrap(), 2);
        assert_eq!(primitive_root(5).unwrap(), 2);
        assert_eq!(primitive_root(7).unwrap(), 3);
        assert_eq!(primitive_root(23).unwrap(), 5);
        assert!(primitive_root(9).is_err());
        assert!(primitive_root(2).is_err());
    }

    #[test]
    fn order_m_residue_sets() {
        assert_eq!(order_m_residues(5, 2).unwrap(), vec![4]);
        assert_eq!(order_m_residues(5, 4).unwrap(), vec![2, 3]);
        assert_eq!(order_m_residues(3, 1).unwrap(), vec![1]);
        assert_eq!(
            order_m_residues(7, 4),
            Err(NumTheoryError::OrderNotDividing { r: 7, m: 4 })
        );
        for r in [3u64, 5, 7, 11, 13, 31] {
            for m in divisors(r - 1) {
                let brute: Vec<u64> = (1..r).filter(|&x| brute_order(x, r) == m).collect();
                let got = order_m_residues(r, m).unwrap();
                assert_eq!(got, brute);
                assert_eq!(got.len() as u64, euler_phi(m));
            }
        }
    }

    #[test]
    fn lifted_residue_sets() {
        assert_eq!(lifted_residues(5, 1).unwrap().residues(), &[6, 11, 16, 21]);
        assert_eq!(lifted_residues(3, 1).unwrap().residues(), &[4, 7]);
        // 24 ≡ -1 (mod 25) squares to 1 mod 25, so 5^2 | 24^2 - 1.
        assert_eq!(lifted_residues(5, 2).unwrap().residues(), &[4, 9, 14, 19]);
        // 7^4 = 2401 ≡ 1 (mod 25), and 18 ≡ -7.
        assert_eq!(
            lifted_residues(5, 4).unwrap().residues(),
            &[2, 3, 8, 12, 13, 17, 22, 23]
        );
        assert_eq!(lifted_residues(3, 2).unwrap().residues(), &[2, 5]);
        assert!(lifted_residues(7, 4).is_err());
    }

    #[test]
    fn lifted_cardinality() {
        for r in [3u64, 5, 7, 11, 13] {
            for m in divisors(r - 1) {
                let set = lifted_residues(r, m).unwrap();
                assert_eq!(set.modulus(), r * r);
                assert_eq!(set.len() as u64, euler_phi(m) * (r - 1));
            }
        }
    }

    #[test]
    fn zsigmondy_examples() {
        assert!(zsigmondy_primes(2, 6).is_empty());
        assert!(zsigmondy_primes(7, 2).is_empty());
        assert!(zsigmondy_primes(2, 1).is_empty());
        assert_eq!(
            zsigmondy_primes(2, 4),
            BTreeSet::from([BigUint::from(5u32)])
        );
        assert_eq!(
            zsigmondy_primes(2, 2),
            BTreeSet::from([BigUint::from(3u32)])
        );
        assert_eq!(zsigmondy_part(2, 6), BigUint::one());
        assert_eq!(zsigmondy_part(2, 4), BigUint::from(5u32));
        assert_eq!(zsigmondy_part(4, 3), BigUint::from(7u32));
        assert_eq!(zsigmondy_part(7, 2), BigUint::one());
    }

    #[test]
    fn zsigmondy_filter_matches_divisibility_definition() {
        // p | Φ_m(q) is primitive iff p ∤ q^i - 1 for all i < m.
        for q in 2..16u64 {
            for m in 1..16u64 {
                let value = cyclotomic_eval(m, q);
                let expected: BTreeSet<BigUint> = factorize(&value)
                    .primes()
                    .filter(|p| {
                        let p = p.to_u64().unwrap();
                        pow_mod(q, m, p) == 1 && (1..m).all(|i| pow_mod(q, i, p) != 1)
                    })
                    .cloned()
                    .collect();
                assert_eq!(zsigmondy_primes(q, m), expected, "q={q} m={m}");
            }
        }
    }
}
