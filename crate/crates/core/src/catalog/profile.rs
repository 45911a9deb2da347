//! Cyclotomic factorisation of group orders:
//! `|L(q)| = (1/d) · q^h · ∏_m Φ_m(q)^{e_L(m)}`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::{LieFamily, LieGroup};
use crate::numtheory::{cyclotomic_eval, pow_mod};

/// Columns of the exceptional table, in this order:
/// 2B2, 3D4, G2, 2G2, F4, 2F4, E6, 2E6, E7, E8.
const EXCEPTIONAL_ROWS: [(u32, [u32; 10]); 17] = [
    (1, [1, 2, 2, 1, 4, 2, 6, 4, 7, 8]),
    (2, [0, 2, 2, 1, 4, 2, 4, 6, 7, 8]),
    (3, [0, 2, 1, 0, 2, 0, 3, 2, 3, 4]),
    (4, [1, 0, 0, 0, 2, 2, 2, 2, 2, 4]),
    (5, [0, 0, 0, 0, 0, 0, 1, 0, 1, 2]),
    (6, [0, 2, 1, 1, 2, 1, 2, 3, 3, 4]),
    (7, [0, 0, 0, 0, 0, 0, 0, 0, 1, 1]),
    (8, [0, 0, 0, 0, 1, 0, 1, 1, 1, 2]),
    (9, [0, 0, 0, 0, 0, 0, 1, 0, 1, 1]),
    (10, [0, 0, 0, 0, 0, 0, 0, 1, 1, 2]),
    (12, [0, 1, 0, 0, 1, 1, 1, 1, 1, 2]),
    (14, [0, 0, 0, 0, 0, 0, 0, 0, 1, 1]),
    (15, [0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (18, [0, 0, 0, 0, 0, 0, 0, 1, 1, 1]),
    (20, [0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (24, [0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (30, [0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
];

const EXCEPTIONAL_H: [u32; 10] = [2, 12, 6, 3, 24, 12, 36, 36, 63, 120];

fn exceptional_column(family: LieFamily) -> Option<usize> {
    LieFamily::EXCEPTIONAL.iter().position(|f| *f == family)
}

fn lcm2(x: u32) -> u32 {
    x.lcm(&2)
}

/// The exponent of `Φ_x(q)` in the cyclotomic factorisation of the family.
pub fn e_l(family: LieFamily, x: u32) -> u32 {
    assert!(x >= 1, "cyclotomic index starts at 1");
    match family {
        LieFamily::Psl(n) => {
            if x == 1 {
                n - 1
            } else {
                n / x
            }
        }
        LieFamily::Psu(n) => {
            if x == 2 {
                n - 1
            } else if x % 4 == 2 {
                2 * n / x
            } else {
                n / lcm2(x)
            }
        }
        LieFamily::Psp(n) | LieFamily::OmegaOdd(n) => 2 * n / lcm2(x),
        LieFamily::POmegaPlus(n) => {
            if n % x != 0 && (2 * n) % x == 0 {
                2 * n / x - 1
            } else {
                2 * n / lcm2(x)
            }
        }
        LieFamily::POmegaMinus(n) => {
            if n % x == 0 {
                2 * n / lcm2(x) - 1
            } else {
                2 * n / lcm2(x)
            }
        }
        exceptional => {
            let col = exceptional_column(exceptional).unwrap();
            EXCEPTIONAL_ROWS
                .iter()
                .find(|(m, _)| *m == x)
                .map_or(0, |(_, row)| row[col])
        }
    }
}

/// Largest `x` with `e_L(x) > 0`.
pub fn max_cyclotomic_index(family: LieFamily) -> u32 {
    match family {
        LieFamily::Psl(n) => n,
        LieFamily::Psu(n)
        | LieFamily::Psp(n)
        | LieFamily::OmegaOdd(n)
        | LieFamily::POmegaPlus(n)
        | LieFamily::POmegaMinus(n) => 2 * n,
        exceptional => {
            let col = exceptional_column(exceptional).unwrap();
            EXCEPTIONAL_ROWS
                .iter()
                .filter(|(_, row)| row[col] > 0)
                .map(|(m, _)| *m)
                .max()
                .unwrap()
        }
    }
}

/// `h`, the exponent of `q` in the order.
pub fn q_exponent(family: LieFamily) -> u32 {
    match family {
        LieFamily::Psl(n) | LieFamily::Psu(n) => n * (n - 1) / 2,
        LieFamily::Psp(n) | LieFamily::OmegaOdd(n) => n * n,
        LieFamily::POmegaPlus(n) | LieFamily::POmegaMinus(n) => n * (n - 1),
        exceptional => EXCEPTIONAL_H[exceptional_column(exceptional).unwrap()],
    }
}

/// `d`, the denominator, evaluated at `q`.
pub fn denominator(family: LieFamily, q: u64) -> u64 {
    let g = |a: u64, b: u64| a.gcd(&b);
    match family {
        LieFamily::Psl(n) => g(n as u64, q - 1),
        LieFamily::Psu(n) => g(n as u64, q + 1),
        LieFamily::Psp(_) | LieFamily::OmegaOdd(_) | LieFamily::E7 => g(2, q - 1),
        // (4, q^n ∓ 1), read off from q^n mod 4
        LieFamily::POmegaPlus(n) => g(4, (pow_mod(q, n as u64, 4) + 3) % 4),
        LieFamily::POmegaMinus(n) => g(4, (pow_mod(q, n as u64, 4) + 1) % 4),
        LieFamily::E6 => g(3, q - 1),
        LieFamily::TwistedE6 => g(3, q + 1),
        _ => 1,
    }
}

/// The triple `(d, h, {m → e_L(m)})` for a concrete group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycloProfile {
    pub d: u64,
    pub h: u32,
    pub e: BTreeMap<u32, u32>,
}

pub fn cyclo_profile(group: &LieGroup) -> CycloProfile {
    let family = group.family();
    let e = (1..=max_cyclotomic_index(family))
        .map(|m| (m, e_l(family, m)))
        .filter(|(_, e)| *e > 0)
        .collect();
    CycloProfile {
        d: denominator(family, group.q().q()),
        h: q_exponent(family),
        e,
    }
}

/// The group order assembled from its cyclotomic profile.
///
/// Panics if the division by `d` is inexact, which would mean the encoded
/// tables are wrong.
pub fn order_cyclotomic(group: &LieGroup) -> BigUint {
    let q = group.q().q();
    let profile = cyclo_profile(group);
    let mut total = BigUint::from(q).pow(profile.h);
    for (&m, &e) in &profile.e {
        total *= cyclotomic_eval(m as u64, q).pow(e);
    }
    let (quot, rem) = total.div_rem(&BigUint::from(profile.d));
    assert!(
        rem.is_zero(),
        "cyclotomic order of {group} is not divisible by d = {}",
        profile.d
    );
    quot
}
