use std::collections::BTreeSet;

use sylowscope::catalog::{GroupId, LieFamily, LieGroup, Sporadic};
use sylowscope::classifier::{classify, AbelianStructure, VerdictKind};
use sylowscope::enumerator::{
    enumerate_by_structure, instantiate, prime_powers, EnumMatch, Scope, Target,
};

const RANK_BOUND: u32 = 12;

fn targets() -> Vec<Target> {
    let mut out = Vec::new();
    for r in [3u64, 5, 7, 11, 13] {
        for (s, k) in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (1, 4)] {
            out.push(Target { r, s, k });
        }
    }
    out
}

fn has_structure(g: &GroupId, r: u64, target: &AbelianStructure) -> bool {
    let v = classify(g, r).unwrap();
    v.kind == VerdictKind::Abelian && v.structure.as_ref() == Some(target)
}

fn admitted(matches: &[EnumMatch], g: &GroupId) -> bool {
    matches.iter().any(|m| match (m, g) {
        (EnumMatch::Lie(l), GroupId::Lie(lg)) => l.family == lg.family() && l.admits(lg.q().q()),
        (EnumMatch::DefiningCharacteristic { group }, _) => group == g,
        (EnumMatch::Alternating { from, to, .. }, GroupId::Alternating(n)) => from <= n && n <= to,
        (EnumMatch::Sporadic { group, .. }, GroupId::Sporadic(s)) => group == s,
        _ => false,
    })
}

#[test]
fn every_instantiation_has_the_target_structure() {
    for target in targets() {
        let structure = target.structure();
        let matches = enumerate_by_structure(target, &Scope::ALL, RANK_BOUND).unwrap();
        for m in &matches {
            for g in instantiate(m, 10_000) {
                assert!(
                    has_structure(&g, target.r, &structure),
                    "{g} from {m} is not {structure}"
                );
            }
        }
    }
}

#[test]
fn every_matching_group_is_covered() {
    let lie: Vec<GroupId> = LieFamily::all_up_to(RANK_BOUND)
        .into_iter()
        .flat_map(|f| prime_powers(200).filter_map(move |q| LieGroup::new(f, q).ok()))
        .map(GroupId::Lie)
        .collect();
    let mut groups = lie;
    groups.extend((5..=200).map(GroupId::Alternating));
    groups.extend(Sporadic::ALL.map(GroupId::Sporadic));
    for target in targets() {
        let structure = target.structure();
        let matches = enumerate_by_structure(target, &Scope::ALL, RANK_BOUND).unwrap();
        for g in &groups {
            if has_structure(g, target.r, &structure) {
                assert!(
                    admitted(&matches, g),
                    "{g} has {structure} but no match covers it"
                );
            }
        }
    }
}

#[test]
fn output_order_is_deterministic() {
    let target = Target { r: 5, s: 1, k: 2 };
    let a = enumerate_by_structure(target, &Scope::ALL, RANK_BOUND).unwrap();
    let b = enumerate_by_structure(
        target,
        &[Scope::Sporadic, Scope::Lie, Scope::Alternating],
        RANK_BOUND,
    )
    .unwrap();
    assert_eq!(a, b);
}

#[test]
fn c5_squared_families() {
    let target = Target { r: 5, s: 1, k: 2 };
    let matches = enumerate_by_structure(target, &[Scope::Lie], RANK_BOUND).unwrap();
    let by_m = |m: u64| -> BTreeSet<String> {
        matches
            .iter()
            .filter_map(|x| match x {
                EnumMatch::Lie(l) if l.m == m => Some(l.family.to_string()),
                _ => None,
            })
            .collect()
    };
    let set = |items: &[&str]| items.iter().map(|s| s.to_string()).collect::<BTreeSet<_>>();
    assert_eq!(
        by_m(1),
        set(&[
            "PSL(3,q)",
            "PSU(4,q)",
            "PSU(5,q)",
            "PSp(4,q)",
            "Omega(5,q)",
            "3D4(q)",
            "G2(q)"
        ])
    );
    assert_eq!(
        by_m(2),
        set(&[
            "PSL(4,q)",
            "PSL(5,q)",
            "PSU(3,q)",
            "PSp(4,q)",
            "Omega(5,q)",
            "3D4(q)",
            "G2(q)"
        ])
    );
    assert_eq!(
        by_m(4),
        set(&[
            "PSL(8,q)",
            "PSL(9,q)",
            "PSL(10,q)",
            "PSL(11,q)",
            "PSU(8,q)",
            "PSU(9,q)",
            "PSU(10,q)",
            "PSU(11,q)",
            "POmega+(8,q)",
            "POmega+(10,q)",
            "POmega+(12,q)",
            "PSp(8,q)",
            "PSp(10,q)",
            "Omega(9,q)",
            "Omega(11,q)",
            "POmega-(10,q)",
            "F4(q)",
            "2F4(q)",
            "E6(q)",
            "2E6(q)",
            "E7(q)",
        ])
    );
    for m in &matches {
        if let EnumMatch::Lie(l) = m {
            let expected: &[u64] = match l.m {
                1 => &[6, 11, 16, 21],
                2 => &[4, 9, 14, 19],
                _ => &[2, 3, 8, 12, 13, 17, 22, 23],
            };
            assert_eq!(l.residues.residues(), expected, "{}", l.family);
        }
    }
}

#[test]
fn exception_matches_at_three() {
    let target = Target { r: 3, s: 1, k: 2 };
    let matches = enumerate_by_structure(target, &[Scope::Lie], RANK_BOUND).unwrap();
    let psl3 = matches
        .iter()
        .find_map(|m| match m {
            EnumMatch::Lie(l) if l.family == LieFamily::Psl(3) => Some(l),
            _ => None,
        })
        .unwrap();
    assert_eq!(psl3.residues.modulus(), 9);
    assert_eq!(psl3.residues.residues(), &[4, 7]);
}
