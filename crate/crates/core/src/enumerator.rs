//! Inverse queries: which simple groups have Sylow `r`-subgroup `C_{r^s}^k`.
//!
//! Lie-type answers are symbolic, a family plus a congruence condition on
//! `q`. [`instantiate`] turns a symbolic match into concrete groups.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::catalog::{e_l, GroupId, LieFamily, LieGroup, PrimePower, Sporadic};
use crate::classifier::{classify, AbelianStructure, Rule, VerdictKind};
use crate::numtheory::{
    divisors, is_prime_u64, lifted_residues, order_m_residues, padic_val_u64, pow_mod,
    ResidueClassSet,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("m = {m} does not divide {r} - 1")]
    OrderNotDividing { r: u64, m: u64 },
    #[error("target structure {0} is not homogeneous or not over the requested prime")]
    BadTarget(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Alternating,
    Lie,
    Sporadic,
}

impl Scope {
    pub const ALL: [Scope; 3] = [Scope::Alternating, Scope::Lie, Scope::Sporadic];
}

/// The target `C_{r^s}^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Target {
    pub r: u64,
    pub s: u32,
    pub k: u32,
}

impl Target {
    pub fn structure(&self) -> AbelianStructure {
        AbelianStructure::homogeneous(self.r, self.s, self.k)
    }

    pub fn from_structure(structure: &AbelianStructure) -> Result<Target, EnumError> {
        match structure.shape() {
            Some((s, k)) if s > 0 => Ok(Target {
                r: structure.prime,
                s,
                k,
            }),
            _ => Err(EnumError::BadTarget(structure.to_string())),
        }
    }
}

/// A family of Lie type with a condition on `q`.
///
/// `q` qualifies when `q mod residues.modulus()` is in `residues` and,
/// if `lift` is set, `v_r(q^m - 1) = lift`. For elementary targets the
/// residues are taken modulo `r^2` and already encode the lift.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LieMatch {
    pub family: LieFamily,
    pub r: u64,
    pub m: u64,
    pub residues: ResidueClassSet,
    pub lift: Option<u32>,
    pub rule: Rule,
}

impl LieMatch {
    pub fn admits(&self, q: u64) -> bool {
        if q.is_multiple_of(self.r) || !self.residues.contains(q) {
            return false;
        }
        if let Some(base) = self.family.twisted_base() {
            match PrimePower::new(q) {
                Ok(pp) if pp.p() == base && pp.f() % 2 == 1 => {}
                _ => return false,
            }
        }
        match self.lift {
            Some(s) => lift_of(q, self.m, self.r) == s,
            None => true,
        }
    }
}

/// `v_r(q^m - 1)`, assuming `ord_r(q) = m`.
fn lift_of(q: u64, m: u64, r: u64) -> u32 {
    let lift = num_bigint::BigUint::from(q).pow(m as u32) - 1u32;
    crate::numtheory::padic_val(r, &lift)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumMatch {
    /// `A_n` for `from <= n <= to`.
    Alternating {
        from: u32,
        to: u32,
        rule: Rule,
    },
    Lie(LieMatch),
    /// `PSL_2(r^k)`.
    DefiningCharacteristic {
        group: GroupId,
    },
    Sporadic {
        group: Sporadic,
        rule: Rule,
    },
}

impl EnumMatch {
    pub fn rule(&self) -> Rule {
        match self {
            EnumMatch::Alternating { rule, .. } => *rule,
            EnumMatch::Lie(l) => l.rule,
            EnumMatch::DefiningCharacteristic { .. } => Rule::DefiningCharacteristic,
            EnumMatch::Sporadic { rule, .. } => *rule,
        }
    }

    pub fn scope(&self) -> Scope {
        match self {
            EnumMatch::Alternating { .. } => Scope::Alternating,
            EnumMatch::Lie(_) | EnumMatch::DefiningCharacteristic { .. } => Scope::Lie,
            EnumMatch::Sporadic { .. } => Scope::Sporadic,
        }
    }

    fn sort_key(&self) -> (Scope, String, u32, u64) {
        match self {
            EnumMatch::Alternating { from, .. } => (Scope::Alternating, String::new(), *from, 0),
            EnumMatch::DefiningCharacteristic { group } => (
                Scope::Lie,
                "PSL".to_string(),
                2,
                group.as_lie().map_or(0, |l| l.q().q()),
            ),
            EnumMatch::Lie(l) => (
                Scope::Lie,
                l.family.tag().to_string(),
                l.family.rank().unwrap_or(0),
                l.m,
            ),
            EnumMatch::Sporadic { group, .. } => (Scope::Sporadic, String::new(), *group as u32, 0),
        }
    }
}

impl fmt::Display for EnumMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumMatch::Alternating { from, to, .. } if from == to => write!(f, "A({from})"),
            EnumMatch::Alternating { from, to, .. } => write!(f, "A(n), {from} <= n <= {to}"),
            EnumMatch::Lie(l) => {
                write!(f, "{}, m = {}, q in {}", l.family, l.m, l.residues)?;
                if let Some(s) = l.lift {
                    write!(f, " with v_{}(q^{} - 1) = {s}", l.r, l.m)?;
                }
                Ok(())
            }
            EnumMatch::DefiningCharacteristic { group } => write!(f, "{group}"),
            EnumMatch::Sporadic { group, .. } => f.write_str(group.name()),
        }
    }
}

impl Serialize for EnumMatch {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("scope", &self.scope())?;
        match self {
            EnumMatch::Alternating { from, to, .. } => {
                map.serialize_entry("family", "A")?;
                map.serialize_entry("n_from", from)?;
                map.serialize_entry("n_to", to)?;
            }
            EnumMatch::Lie(l) => {
                map.serialize_entry("family", &l.family.to_string())?;
                map.serialize_entry("m", &l.m)?;
                map.serialize_entry("modulus", &l.residues.modulus())?;
                map.serialize_entry("residues", l.residues.residues())?;
                map.serialize_entry("lift", &l.lift)?;
            }
            EnumMatch::DefiningCharacteristic { group } => {
                map.serialize_entry("group", &group.to_string())?;
            }
            EnumMatch::Sporadic { group, .. } => {
                map.serialize_entry("group", group.name())?;
            }
        }
        map.serialize_entry("rule", &self.rule())?;
        map.end()
    }
}

fn check_odd_prime(r: u64) -> Result<(), EnumError> {
    if r == 2 || !is_prime_u64(r) {
        return Err(EnumError::NotOddPrime(r));
    }
    Ok(())
}

/// Residues of the odd powers of `p`.
fn odd_power_residues(p: u64, modulus: u64) -> BTreeSet<u64> {
    let mut seen = BTreeSet::new();
    let mut x = p % modulus;
    let p2 = pow_mod(p, 2, modulus);
    while seen.insert(x) {
        x = x * p2 % modulus;
    }
    seen
}

/// Restricts a condition to the values `q = p^{odd}` a twisted family
/// allows. Returns `None` if no such `q` qualifies.
fn restrict_twisted(
    family: LieFamily,
    r: u64,
    m: u64,
    residues: ResidueClassSet,
    lift: Option<u32>,
) -> Option<ResidueClassSet> {
    let Some(p) = family.twisted_base() else {
        return Some(residues);
    };
    if p == r {
        return None;
    }
    let s = lift.unwrap_or(1);
    let fine = r.pow(s + 1);
    let reachable: BTreeSet<u64> = odd_power_residues(p, fine)
        .into_iter()
        .filter(|&x| residues.contains(x))
        .filter(|&x| {
            // exactly r^s divides x^m - 1, read modulo r^{s+1}
            let rem = (pow_mod(x, m, fine) + fine - 1) % fine;
            rem != 0 && padic_val_u64(r, rem) == s
        })
        .map(|x| x % residues.modulus())
        .collect();
    let restricted = residues.filter(|x| reachable.contains(&x));
    (!restricted.is_empty()).then_some(restricted)
}

fn lie_matches(target: Target, rank_bound: u32) -> Vec<EnumMatch> {
    let Target { r, s, k } = target;
    let mut out = Vec::new();
    for m in divisors(r - 1) {
        let (residues, lift) = if s == 1 {
            (lifted_residues(r, m).expect("m divides r - 1"), None)
        } else {
            let base = order_m_residues(r, m).expect("m divides r - 1");
            (ResidueClassSet::new(r, base), Some(s))
        };
        for family in LieFamily::all_up_to(rank_bound) {
            if e_l(family, m as u32) != k || e_l(family, (m * r) as u32) != 0 {
                continue;
            }
            if let Some(residues) = restrict_twisted(family, r, m, residues.clone(), lift) {
                out.push(EnumMatch::Lie(LieMatch {
                    family,
                    r,
                    m,
                    residues,
                    lift,
                    rule: Rule::CyclotomicStructure,
                }));
            }
        }
    }
    if r == 3 && s == 1 && k == 2 {
        for (family, m, set, rule) in [
            (LieFamily::Psl(3), 1, [4, 7], Rule::ExceptionPsl3),
            (LieFamily::Psu(3), 2, [2, 5], Rule::ExceptionPsu3),
        ] {
            out.push(EnumMatch::Lie(LieMatch {
                family,
                r,
                m,
                residues: ResidueClassSet::new(9, set),
                lift: None,
                rule,
            }));
        }
    }
    if s == 1 {
        if let Ok(group) = GroupId::lie(LieFamily::Psl(2), r.pow(k)) {
            out.push(EnumMatch::DefiningCharacteristic { group });
        }
    }
    out
}

/// All simple groups (symbolically) whose Sylow `r`-subgroup is `C_{r^s}^k`.
pub fn enumerate_by_structure(
    target: Target,
    scope: &[Scope],
    rank_bound: u32,
) -> Result<Vec<EnumMatch>, EnumError> {
    let Target { r, s, k } = target;
    check_odd_prime(r)?;
    if s == 0 || k == 0 {
        return Err(EnumError::BadTarget(target.structure().to_string()));
    }
    let mut out = Vec::new();
    if scope.contains(&Scope::Alternating) && s == 1 {
        let lo = (k as u64 * r).max(5);
        let hi = ((k as u64 + 1) * r - 1).min(r * r - 1);
        if lo <= hi {
            let rule = if k == 2 {
                Rule::AlternatingPair
            } else {
                Rule::Alternating
            };
            out.push(EnumMatch::Alternating {
                from: lo as u32,
                to: hi as u32,
                rule,
            });
        }
    }
    if scope.contains(&Scope::Lie) {
        out.extend(lie_matches(target, rank_bound));
    }
    if scope.contains(&Scope::Sporadic) && s == 1 {
        for group in Sporadic::ALL {
            let v = classify(&GroupId::Sporadic(group), r).expect("r is an odd prime");
            if v.kind == VerdictKind::Abelian && v.valuation == k {
                out.push(EnumMatch::Sporadic {
                    group,
                    rule: v.rule,
                });
            }
        }
    }
    out.sort_by_key(EnumMatch::sort_key);
    Ok(out)
}

/// Prime powers `2 <= q <= bound`.
pub fn prime_powers(bound: u64) -> impl Iterator<Item = u64> {
    (2..=bound).filter(|&q| PrimePower::new(q).is_ok())
}

/// Concrete groups covered by a match, with `q <= q_bound` for Lie families.
pub fn instantiate(m: &EnumMatch, q_bound: u64) -> Vec<GroupId> {
    match m {
        EnumMatch::Alternating { from, to, .. } => {
            (*from..=*to).map(GroupId::Alternating).collect()
        }
        EnumMatch::Lie(l) => prime_powers(q_bound)
            .filter(|&q| l.admits(q))
            .filter_map(|q| LieGroup::new(l.family, q).ok().map(GroupId::Lie))
            .collect(),
        EnumMatch::DefiningCharacteristic { group } => vec![*group],
        EnumMatch::Sporadic { group, .. } => vec![GroupId::Sporadic(*group)],
    }
}

/// Elementary-abelian conditions for one family at one order `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub family: String,
    pub r: u64,
    pub m: u64,
    /// Classes of `q` for which `r ∥ q^m - 1` (restricted to attainable
    /// `q` for twisted families).
    pub residues: ResidueClassSet,
    /// `e_L(m·r)`: the Sylow subgroup is abelian iff this is 0.
    pub criterion: u32,
    pub abelian: bool,
    /// `C_r^{e_L(m)}`, the structure when abelian and elementary.
    pub structure: AbelianStructure,
    pub rule: Rule,
}

/// The classes of `q` giving an elementary abelian Sylow `r`-subgroup.
pub fn congruence_conditions(
    family: LieFamily,
    r: u64,
    m: u64,
) -> Result<CongruenceReport, EnumError> {
    check_odd_prime(r)?;
    if m == 0 || !(r - 1).is_multiple_of(m) {
        return Err(EnumError::OrderNotDividing { r, m });
    }
    let exception = match (family, r, m) {
        (LieFamily::Psl(3), 3, 1) => Some((ResidueClassSet::new(9, [4, 7]), Rule::ExceptionPsl3)),
        (LieFamily::Psu(3), 3, 2) => Some((ResidueClassSet::new(9, [2, 5]), Rule::ExceptionPsu3)),
        _ => None,
    };
    let criterion = e_l(family, (m * r) as u32);
    if let Some((residues, rule)) = exception {
        return Ok(CongruenceReport {
            family: family.to_string(),
            r,
            m,
            residues,
            criterion,
            abelian: true,
            structure: AbelianStructure::homogeneous(3, 1, 2),
            rule,
        });
    }
    let residues = lifted_residues(r, m).expect("m divides r - 1");
    let residues = restrict_twisted(family, r, m, residues.clone(), None)
        .unwrap_or_else(|| ResidueClassSet::new(residues.modulus(), []));
    let abelian = criterion == 0;
    Ok(CongruenceReport {
        family: family.to_string(),
        r,
        m,
        residues,
        criterion,
        abelian,
        structure: AbelianStructure::homogeneous(r, 1, e_l(family, m as u32)),
        rule: if abelian {
            Rule::CyclotomicStructure
        } else {
            Rule::CyclotomicCriterion
        },
    })
}
