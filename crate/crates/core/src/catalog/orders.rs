//! Group orders from the classical product formulas.
//!
//! This path never touches the cyclotomic tables, so it serves as an
//! independent check on them.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use super::{cyclo_profile, GroupId, LieFamily};
use crate::numtheory::{cyclotomic_eval, factorize, factorize_u64, is_prime_u64, FactoredInteger};

fn minus_one(q: &BigUint, i: u32) -> BigUint {
    q.pow(i) - 1u32
}

fn plus_one(q: &BigUint, i: u32) -> BigUint {
    q.pow(i) + 1u32
}

fn exact_div(n: BigUint, d: &BigUint) -> BigUint {
    let (quot, rem) = n.div_rem(d);
    assert!(rem.is_zero(), "order formula division is inexact");
    quot
}

fn lie_order(family: LieFamily, q: u64) -> BigUint {
    let qb = BigUint::from(q);
    let q = &qb;
    let gcd = |a: u64, b: BigUint| BigUint::from(a).gcd(&b);
    match family {
        LieFamily::Psl(n) => {
            let prod: BigUint = (2..=n).map(|i| minus_one(q, i)).product();
            let num = q.pow(n * (n - 1) / 2) * prod;
            exact_div(num, &gcd(n as u64, q - 1u32))
        }
        LieFamily::Psu(n) => {
            let prod: BigUint = (2..=n)
                .map(|i| {
                    if i % 2 == 0 {
                        minus_one(q, i)
                    } else {
                        plus_one(q, i)
                    }
                })
                .product();
            let num = q.pow(n * (n - 1) / 2) * prod;
            exact_div(num, &gcd(n as u64, q + 1u32))
        }
        LieFamily::Psp(n) | LieFamily::OmegaOdd(n) => {
            let prod: BigUint = (1..=n).map(|i| minus_one(q, 2 * i)).product();
            exact_div(q.pow(n * n) * prod, &gcd(2, q - 1u32))
        }
        LieFamily::POmegaPlus(n) => {
            let prod: BigUint = (1..n).map(|i| minus_one(q, 2 * i)).product();
            let num = q.pow(n * (n - 1)) * minus_one(q, n) * prod;
            exact_div(num, &gcd(4, minus_one(q, n)))
        }
        LieFamily::POmegaMinus(n) => {
            let prod: BigUint = (1..n).map(|i| minus_one(q, 2 * i)).product();
            let num = q.pow(n * (n - 1)) * plus_one(q, n) * prod;
            exact_div(num, &gcd(4, plus_one(q, n)))
        }
        LieFamily::Suzuki => q.pow(2) * plus_one(q, 2) * minus_one(q, 1),
        LieFamily::TriD4 => {
            q.pow(12) * (q.pow(8) + q.pow(4) + 1u32) * minus_one(q, 6) * minus_one(q, 2)
        }
        LieFamily::G2 => q.pow(6) * minus_one(q, 6) * minus_one(q, 2),
        LieFamily::Ree => q.pow(3) * plus_one(q, 3) * minus_one(q, 1),
        LieFamily::F4 => {
            q.pow(24) * minus_one(q, 12) * minus_one(q, 8) * minus_one(q, 6) * minus_one(q, 2)
        }
        LieFamily::TwistedF4 => {
            q.pow(12) * plus_one(q, 6) * minus_one(q, 4) * plus_one(q, 3) * minus_one(q, 1)
        }
        LieFamily::E6 => {
            let prod: BigUint = [12, 9, 8, 6, 5, 2]
                .iter()
                .map(|&i| minus_one(q, i))
                .product();
            exact_div(q.pow(36) * prod, &gcd(3, q - 1u32))
        }
        LieFamily::TwistedE6 => {
            let prod = minus_one(q, 12)
                * plus_one(q, 9)
                * minus_one(q, 8)
                * minus_one(q, 6)
                * plus_one(q, 5)
                * minus_one(q, 2);
            exact_div(q.pow(36) * prod, &gcd(3, q + 1u32))
        }
        LieFamily::E7 => {
            let prod: BigUint = [18, 14, 12, 10, 8, 6, 2]
                .iter()
                .map(|&i| minus_one(q, i))
                .product();
            exact_div(q.pow(63) * prod, &gcd(2, q - 1u32))
        }
        LieFamily::E8 => {
            let prod: BigUint = [30, 24, 20, 18, 14, 12, 8, 2]
                .iter()
                .map(|&i| minus_one(q, i))
                .product();
            q.pow(120) * prod
        }
    }
}

/// The order of `g`, computed without the cyclotomic tables.
pub fn order_closed_form(g: &GroupId) -> BigUint {
    match g {
        GroupId::Alternating(n) => {
            let fact: BigUint = (1..=*n).map(BigUint::from).product::<BigUint>();
            fact / 2u32
        }
        GroupId::Lie(l) => lie_order(l.family(), l.q().q()),
        GroupId::Sporadic(s) => s.record().order.value(),
    }
}

/// The prime factorisation of `|g|`.
///
/// Lie-type orders are factored one cyclotomic value at a time, which
/// keeps the numbers handed to the factoriser small.
pub fn order_factored(g: &GroupId) -> FactoredInteger {
    match g {
        GroupId::Alternating(n) => {
            let n = *n as u64;
            let mut pairs = Vec::new();
            for p in (2..=n).filter(|&p| is_prime_u64(p)) {
                let mut v = 0;
                let mut power = p;
                while power <= n {
                    v += (n / power) as u32;
                    power *= p;
                }
                pairs.push((p, if p == 2 { v - 1 } else { v }));
            }
            FactoredInteger::from_pairs(pairs)
        }
        GroupId::Lie(l) => {
            let profile = cyclo_profile(l);
            let q = l.q();
            let mut out = FactoredInteger::from_pairs([(q.p(), q.f() * profile.h)]);
            for (&m, &e) in &profile.e {
                out.mul(&factorize(&cyclotomic_eval(m as u64, q.q())).pow(e));
            }
            let d = FactoredInteger::from_pairs(factorize_u64(profile.d));
            out.checked_div(&d)
                .expect("d divides the cyclotomic product")
        }
        GroupId::Sporadic(s) => s.record().order,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Sporadic;
    use num_traits::One;

    fn order(g: GroupId) -> BigUint {
        order_closed_form(&g)
    }

    #[test]
    fn known_orders() {
        assert_eq!(order(GroupId::Alternating(5)), BigUint::from(60u32));
        assert_eq!(
            order(GroupId::lie(LieFamily::Psu(4), 2).unwrap()),
            BigUint::from(25920u32)
        );
        assert_eq!(
            order(GroupId::Sporadic(Sporadic::M11)),
            BigUint::from(7920u32)
        );
        assert_eq!(
            order(GroupId::lie(LieFamily::Suzuki, 8).unwrap()),
            BigUint::from(29120u32)
        );
        assert_eq!(
            order(GroupId::lie(LieFamily::G2, 3).unwrap()),
            BigUint::from(4245696u32)
        );
        assert_eq!(
            order(GroupId::lie(LieFamily::Ree, 27).unwrap()),
            BigUint::from(10073444472u64)
        );
        assert_eq!(
            order(GroupId::lie(LieFamily::TriD4, 2).unwrap()),
            BigUint::from(211341312u64)
        );
        assert_eq!(
            order(GroupId::lie(LieFamily::TwistedF4, 8).unwrap()),
            "264905352699586176614400".parse::<BigUint>().unwrap()
        );
        assert_eq!(
            order(GroupId::lie(LieFamily::POmegaPlus(4), 2).unwrap()),
            BigUint::from(174182400u64)
        );
        assert_eq!(
            order(GroupId::lie(LieFamily::POmegaMinus(4), 2).unwrap()),
            BigUint::from(197406720u64)
        );
        assert_eq!(
            order(GroupId::lie(LieFamily::E6, 2).unwrap()),
            "214841575522005575270400".parse::<BigUint>().unwrap()
        );
        assert_eq!(
            order(GroupId::lie(LieFamily::Psl(3), 2).unwrap()),
            BigUint::from(168u32)
        );
        assert!(order(GroupId::lie(LieFamily::E8, 2).unwrap()) > BigUint::one());
    }

    #[test]
    fn factored_orders() {
        for g in [
            GroupId::Alternating(12),
            GroupId::lie(LieFamily::Psl(3), 4).unwrap(),
            GroupId::lie(LieFamily::E6, 4).unwrap(),
            GroupId::lie(LieFamily::Psu(7), 3).unwrap(),
            GroupId::Sporadic(Sporadic::Co1),
        ] {
            assert_eq!(order_factored(&g).value(), order(g), "{g}");
        }
        let f = order_factored(&GroupId::Alternating(5));
        assert_eq!(f.to_string(), "2^2·3·5");
    }
}
