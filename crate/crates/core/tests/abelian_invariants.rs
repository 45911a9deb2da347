use num_bigint::BigUint;
use proptest::prelude::*;

use sylowscope::catalog::{
    order_closed_form, order_cyclotomic, order_factored, parse_group, GroupId, LieFamily, LieGroup,
    Sporadic,
};
use sylowscope::classifier::{
    classify, is_elementary_abelian, ElementaryWitness, Governing, Rule, VerdictKind,
};
use sylowscope::enumerator::prime_powers;
use sylowscope::numtheory::{
    cyclotomic_eval, divisors, euler_phi, is_prime_u64, lifted_residues, mult_order, padic_val,
    pow_mod,
};

fn small_prime_powers() -> Vec<u64> {
    prime_powers(400).collect()
}

fn odd_primes() -> Vec<u64> {
    (3..=41).filter(|&r| is_prime_u64(r)).collect()
}

prop_compose! {
    fn lie_group()(
        family in prop::sample::select(LieFamily::all_up_to(8)),
        q in prop::sample::select(small_prime_powers()),
    ) -> Option<LieGroup> {
        LieGroup::new(family, q).ok()
    }
}

fn any_group() -> impl Strategy<Value = GroupId> {
    prop_oneof![
        (5u32..60).prop_map(GroupId::Alternating),
        prop::sample::select(Sporadic::ALL.to_vec()).prop_map(GroupId::Sporadic),
        lie_group().prop_filter_map("valid group", |g| g.map(GroupId::Lie)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cyclotomic_product_is_q_power_minus_one(q in 2u64..200, m in 1u64..40) {
        let prod: BigUint = divisors(m).into_iter().map(|d| cyclotomic_eval(d, q)).product();
        prop_assert_eq!(prod, BigUint::from(q).pow(m as u32) - 1u32);
    }

    #[test]
    fn mult_order_is_minimal(q in 2u64..10_000, r in prop::sample::select(odd_primes())) {
        prop_assume!(q % r != 0);
        let m = mult_order(q, r).unwrap();
        prop_assert_eq!(pow_mod(q, m, r), 1);
        prop_assert!((1..m).all(|i| pow_mod(q, i, r) != 1));
        prop_assert_eq!((r - 1) % m, 0);
    }

    #[test]
    fn lifted_residues_are_exactly_the_lift_one_classes(
        r in prop::sample::select(odd_primes()),
        pick in 0usize..16,
    ) {
        let ms = divisors(r - 1);
        let m = ms[pick % ms.len()];
        let set = lifted_residues(r, m).unwrap();
        prop_assert_eq!(set.len() as u64, euler_phi(m) * (r - 1));
        for x in (1..r * r).filter(|x| x % r != 0) {
            let lift = BigUint::from(x).pow(m as u32) - 1u32;
            let exact = mult_order(x, r).unwrap() == m && lift != BigUint::ZERO && padic_val(r, &lift) == 1;
            prop_assert_eq!(set.contains(x), exact, "x = {}", x);
        }
    }

    #[test]
    fn valuation_matches_closed_form(g in any_group(), r in prop::sample::select(odd_primes())) {
        let v = classify(&g, r).unwrap();
        prop_assert_eq!(v.valuation, padic_val(r, &order_closed_form(&g)));
        if let Some(s) = &v.structure {
            prop_assert_eq!(s.log_order(), v.valuation);
        }
        prop_assert_eq!(v.kind == VerdictKind::Trivial, v.valuation == 0);
    }

    #[test]
    fn order_paths_agree(g in lie_group()) {
        if let Some(g) = g {
            prop_assert_eq!(order_cyclotomic(&g), order_closed_form(&GroupId::Lie(g)));
        }
    }

    #[test]
    fn factored_order_multiplies_back(g in any_group()) {
        prop_assert_eq!(order_factored(&g).value(), order_closed_form(&g));
    }

    #[test]
    fn group_names_round_trip(g in any_group()) {
        prop_assert_eq!(parse_group(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn cross_characteristic_abelian_iff_no_higher_factor(
        g in lie_group(),
        r in prop::sample::select(odd_primes()),
    ) {
        let Some(g) = g else { return Ok(()) };
        prop_assume!(g.q().p() != r);
        let v = classify(&GroupId::Lie(g), r).unwrap();
        prop_assume!(v.kind != VerdictKind::Trivial);
        let Governing::Order(m) = v.m else { panic!("cross characteristic without m") };
        let e_mr = sylowscope::catalog::e_l(g.family(), (m * r) as u32);
        match v.rule {
            Rule::ExceptionPsl3 | Rule::ExceptionPsu3 => prop_assert_eq!(v.t, 1),
            _ => prop_assert_eq!(v.kind == VerdictKind::Abelian, e_mr == 0),
        }
    }

    #[test]
    fn elementary_witness_is_consistent(
        g in lie_group(),
        r in prop::sample::select(odd_primes()),
    ) {
        let Some(g) = g else { return Ok(()) };
        let id = GroupId::Lie(g);
        let v = classify(&id, r).unwrap();
        match is_elementary_abelian(&id, r) {
            Ok(check) => {
                let structure = v.structure.unwrap();
                prop_assert_eq!(check.elementary, structure.is_elementary());
                if let ElementaryWitness::Residues(set) = check.witness {
                    prop_assert_eq!(set.contains(g.q().q()), check.elementary);
                }
            }
            Err(_) => prop_assert_eq!(v.kind, VerdictKind::Nonabelian),
        }
    }
}

#[test]
fn defining_characteristic_only_psl2_is_abelian() {
    for family in LieFamily::all_up_to(6) {
        for q in [4u64, 5, 7, 8, 9, 11, 25, 27, 32] {
            let Ok(g) = LieGroup::new(family, q) else {
                continue;
            };
            let v = classify(&GroupId::Lie(g), g.q().p().max(3)).unwrap();
            if g.q().p() == 2 {
                continue;
            }
            assert_eq!(
                v.kind == VerdictKind::Abelian,
                family == LieFamily::Psl(2),
                "{}",
                GroupId::Lie(g)
            );
        }
    }
}
