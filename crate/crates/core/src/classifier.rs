//! Sylow subgroup classification.
//!
//! For an odd prime `r` the dispatch is:
//!
//! * `r` does not divide `|G|`: trivial.
//! * Alternating `A_n`: abelian iff `n < r^2`, and then `C_r^{⌊n/r⌋}`.
//! * Lie type in characteristic `r`: abelian only for `PSL_2(q)`, which has
//!   Sylow subgroup `C_r^f` for `q = r^f`.
//! * Lie type with `r ∤ q`: with `m = ord_r(q)` and `r^t ∥ q^m - 1` the
//!   Sylow subgroup is abelian iff `e_L(m·r) = 0`, and is then
//!   `C_{r^t}^{e_L(m)}`. The two exceptions are `PSL_3(q)` with `r = 3`,
//!   `m = 1` and `PSU_3(q)` with `r = 3`, `m = 2`, both abelian `C_3^2`
//!   exactly when `t = 1`.
//! * Sporadic: table lookup, plus the groups whose Sylow order is at most
//!   `r^2` (always abelian).
//!
//! `r = 2` is handled separately by [`classify_sylow2`].

use std::fmt;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::catalog::{
    cyclo_profile, e_l, max_cyclotomic_index, psl2_alias, GroupId, LieFamily, LieGroup, Sporadic,
};
use crate::numtheory::{
    cyclotomic_eval, is_prime_u64, lifted_residues, mult_order, padic_val, padic_val_u64,
    ResidueClassSet,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("r = 2 is handled by the Sylow 2-subgroup classification")]
    EvenPrime,
    #[error("{r} divides q = {q}")]
    DefiningCharacteristic { r: u64, q: u64 },
    #[error("m = {m} is not the multiplicative order of {q} modulo {r}")]
    WrongOrder { q: u64, r: u64, m: u64 },
    #[error("the Sylow {r}-subgroup of {group} is not abelian")]
    Nonabelian { group: String, r: u64 },
}

/// Which rule decided a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `r` does not divide the group order.
    Coprime,
    /// Alternating groups: abelian iff `n < r^2`.
    Alternating,
    /// Alternating groups with Sylow subgroup `C_r × C_r` (`2r <= n < 3r`).
    AlternatingPair,
    /// Lie type, `r` the characteristic.
    DefiningCharacteristic,
    /// Lie type, nonabelian because `e_L(m·r) ≠ 0`.
    CyclotomicCriterion,
    /// Lie type, abelian `C_{r^t}^{e_L(m)}`.
    CyclotomicStructure,
    ExceptionPsl3,
    ExceptionPsu3,
    /// Sporadic groups, from the published table.
    SporadicTable,
    /// Sporadic groups, `r >= 17` divides the order exactly once.
    SporadicCyclic,
    /// Sporadic groups with `|S|_r <= r^2` not marked in the table.
    SporadicSmallOrder,
    /// Walter's list of simple groups with abelian Sylow 2-subgroups.
    Walter,
}

impl Rule {
    pub fn tag(&self) -> &'static str {
        match self {
            Rule::Coprime => "coprime",
            Rule::Alternating => "alternating",
            Rule::AlternatingPair => "alternating-pair",
            Rule::DefiningCharacteristic => "defining-characteristic",
            Rule::CyclotomicCriterion => "cyclotomic-criterion",
            Rule::CyclotomicStructure => "cyclotomic-structure",
            Rule::ExceptionPsl3 => "exc-psl3",
            Rule::ExceptionPsu3 => "exc-psu3",
            Rule::SporadicTable => "sporadic-table",
            Rule::SporadicCyclic => "sporadic-cyclic",
            Rule::SporadicSmallOrder => "sporadic-small-order",
            Rule::Walter => "walter",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for AbelianStructure {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictKind {
    Trivial,
    Abelian,
    Nonabelian,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::Trivial => "trivial",
            VerdictKind::Abelian => "abelian",
            VerdictKind::Nonabelian => "nonabelian",
        })
    }
}

/// The multiplicative order `m` governing a cross-characteristic verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Governing {
    Order(u64),
    Defining,
    Absent,
}

impl Serialize for Governing {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Governing::Order(m) => s.serialize_u64(*m),
            Governing::Defining => s.serialize_str("defining"),
            Governing::Absent => s.serialize_none(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicFactor {
    /// The factor is `C_{r^exponent}`.
    pub exponent: u32,
    pub multiplicity: u32,
}

/// An abelian `r`-group written as a product of cyclic factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianStructure {
    pub prime: u64,
    pub factors: Vec<CyclicFactor>,
}

impl AbelianStructure {
    pub fn trivial(prime: u64) -> Self {
        AbelianStructure {
            prime,
            factors: Vec::new(),
        }
    }

    /// `C_{r^exponent}^multiplicity`.
    pub fn homogeneous(prime: u64, exponent: u32, multiplicity: u32) -> Self {
        if exponent == 0 || multiplicity == 0 {
            return Self::trivial(prime);
        }
        AbelianStructure {
            prime,
            factors: vec![CyclicFactor {
                exponent,
                multiplicity,
            }],
        }
    }

    /// `log_r` of the group order.
    pub fn log_order(&self) -> u32 {
        self.factors
            .iter()
            .map(|f| f.exponent * f.multiplicity)
            .sum()
    }

    pub fn is_elementary(&self) -> bool {
        self.factors.iter().all(|f| f.exponent == 1)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.factors.len() <= 1
    }

    /// The `(exponent, multiplicity)` pair of a homogeneous structure.
    pub fn shape(&self) -> Option<(u32, u32)> {
        match self.factors.as_slice() {
            [] => Some((0, 0)),
            [f] => Some((f.exponent, f.multiplicity)),
            _ => None,
        }
    }
}

impl fmt::Display for AbelianStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|c| {
                let order = (self.prime as u128).pow(c.exponent);
                if c.multiplicity == 1 {
                    format!("C{order}")
                } else {
                    format!("C{order}^{}", c.multiplicity)
                }
            })
            .collect();
        f.write_str(&parts.join(" x "))
    }
}

/// Parses `C<n>` or `C<n>^<k>` with `n` a prime power, e.g. `C5^2`, `C25`.
impl std::str::FromStr for AbelianStructure {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected a structure like C5^2 or C25, got {text:?}");
        let body = text.trim().strip_prefix('C').ok_or_else(bad)?;
        let (order, mult) = match body.split_once('^') {
            Some((n, k)) => (n, k.parse::<u32>().map_err(|_| bad())?),
            None => (body, 1),
        };
        let order: u64 = order.parse().map_err(|_| bad())?;
        let pp = crate::catalog::PrimePower::new(order).map_err(|_| bad())?;
        if mult == 0 {
            return Err(bad());
        }
        Ok(AbelianStructure::homogeneous(pp.p(), pp.f(), mult))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowVerdict {
    pub group: GroupId,
    pub r: u64,
    pub m: Governing,
    /// `v_r(q^m - 1)` for cross-characteristic Lie verdicts, else 0.
    pub t: u32,
    /// `v_r(|G|)`.
    pub valuation: u32,
    pub kind: VerdictKind,
    /// Present for trivial and abelian verdicts, except the Walter cases
    /// `J1` and `2G2(q)` whose structure is not emitted.
    pub structure: Option<AbelianStructure>,
    pub rule: Rule,
}

impl SylowVerdict {
    pub fn is_abelian(&self) -> bool {
        self.kind != VerdictKind::Nonabelian
    }
}

fn check_odd_prime(r: u64) -> Result<(), ClassifyError> {
    if r == 2 {
        return Err(ClassifyError::EvenPrime);
    }
    if !is_prime_u64(r) {
        return Err(ClassifyError::NotPrime(r));
    }
    Ok(())
}

/// `Σ_{j>=1} v_r(Φ_{m·r^j}(q)) · e_L(m·r^j)`: the extra powers of `r`
/// contributed by the cyclotomic factors above `Φ_m`.
pub fn tilde_e(g: &LieGroup, r: u64, m: u64) -> Result<u32, ClassifyError> {
    check_odd_prime(r)?;
    let q = g.q().q();
    let order = mult_order(q, r).map_err(|_| ClassifyError::DefiningCharacteristic { r, q })?;
    if order != m {
        return Err(ClassifyError::WrongOrder { q, r, m });
    }
    let family = g.family();
    let bound = max_cyclotomic_index(family) as u64;
    let mut total = 0;
    let mut index = m * r;
    while index <= bound {
        let e = e_l(family, index as u32);
        if e > 0 {
            total += padic_val(r, &cyclotomic_eval(index, q)) * e;
        }
        index *= r;
    }
    Ok(total)
}

fn lie_valuation(g: &LieGroup, r: u64) -> u32 {
    let q = g.q();
    if q.p() == r {
        return q.f() * cyclo_profile(g).h;
    }
    let profile = cyclo_profile(g);
    let d_part = padic_val_u64(r, profile.d);
    if r == 2 {
        let sum: u32 = profile
            .e
            .iter()
            .map(|(&m, &e)| padic_val(2, &cyclotomic_eval(m as u64, q.q())) * e)
            .sum();
        return sum - d_part;
    }
    let (m, t) = order_and_lift(q.q(), r);
    t * e_l(g.family(), m as u32) + tilde_e(g, r, m).expect("preconditions hold") - d_part
}

/// `v_r(|G|)` for any prime `r`, computed from the structure of the group
/// rather than from its order.
pub fn r_valuation_of_order(g: &GroupId, r: u64) -> u32 {
    match g {
        GroupId::Alternating(n) => {
            let n = *n as u64;
            let mut v = 0u32;
            let mut power = r;
            while power <= n {
                v += (n / power) as u32;
                power = match power.checked_mul(r) {
                    Some(p) => p,
                    None => break,
                };
            }
            if r == 2 {
                v - 1
            } else {
                v
            }
        }
        GroupId::Lie(l) => lie_valuation(l, r),
        GroupId::Sporadic(s) => s.record().order.exponent_of(r),
    }
}

/// `(m, t)` with `m = ord_r(q)` and `r^t ∥ q^m - 1`.
pub fn order_and_lift(q: u64, r: u64) -> (u64, u32) {
    let m = mult_order(q, r).expect("r is coprime to q");
    let lift = BigUint::from(q).pow(m as u32) - 1u32;
    (m, padic_val(r, &lift))
}

fn verdict(
    group: &GroupId,
    r: u64,
    m: Governing,
    t: u32,
    valuation: u32,
    structure: Option<AbelianStructure>,
    rule: Rule,
) -> SylowVerdict {
    let kind = match &structure {
        _ if valuation == 0 => VerdictKind::Trivial,
        Some(_) => VerdictKind::Abelian,
        None => VerdictKind::Nonabelian,
    };
    if let Some(s) = &structure {
        assert_eq!(
            s.log_order(),
            valuation,
            "structure {s} disagrees with v_{r}(|{group}|) = {valuation}"
        );
    }
    SylowVerdict {
        group: *group,
        r,
        m,
        t,
        valuation,
        kind,
        structure,
        rule,
    }
}

fn classify_lie(group: &GroupId, g: &LieGroup, r: u64, valuation: u32) -> SylowVerdict {
    let q = g.q();
    let family = g.family();
    if q.p() == r {
        let structure =
            (family == LieFamily::Psl(2)).then(|| AbelianStructure::homogeneous(r, 1, q.f()));
        return verdict(
            group,
            r,
            Governing::Defining,
            0,
            valuation,
            structure,
            Rule::DefiningCharacteristic,
        );
    }
    let (m, t) = order_and_lift(q.q(), r);
    let gov = Governing::Order(m);
    if r == 3 && t == 1 {
        let exception = match (family, m) {
            (LieFamily::Psl(3), 1) => Some(Rule::ExceptionPsl3),
            (LieFamily::Psu(3), 2) => Some(Rule::ExceptionPsu3),
            _ => None,
        };
        if let Some(rule) = exception {
            // The diagonal torus of order 9 is the whole Sylow 3-subgroup.
            // This equals C_{3^t}^{e_L(m)} at t = 1, e_L(m) = 2 by coincidence.
            let structure = AbelianStructure::homogeneous(3, 1, 2);
            return verdict(group, r, gov, t, valuation, Some(structure), rule);
        }
    }
    if e_l(family, (m * r) as u32) == 0 {
        let structure = AbelianStructure::homogeneous(r, t, e_l(family, m as u32));
        verdict(
            group,
            r,
            gov,
            t,
            valuation,
            Some(structure),
            Rule::CyclotomicStructure,
        )
    } else {
        verdict(group, r, gov, t, valuation, None, Rule::CyclotomicCriterion)
    }
}

fn classify_sporadic(group: &GroupId, s: Sporadic, r: u64, valuation: u32) -> SylowVerdict {
    let record = s.record();
    let rule = if r >= 17 {
        Some(Rule::SporadicCyclic)
    } else if record.marked_abelian(r) {
        Some(Rule::SporadicTable)
    } else if valuation <= 2 {
        Some(Rule::SporadicSmallOrder)
    } else {
        None
    };
    let structure = rule.map(|_| AbelianStructure::homogeneous(r, 1, valuation));
    verdict(
        group,
        r,
        Governing::Absent,
        0,
        valuation,
        structure,
        rule.unwrap_or(Rule::SporadicTable),
    )
}

/// Classifies the Sylow `r`-subgroup of `g` for an odd prime `r`.
pub fn classify(g: &GroupId, r: u64) -> Result<SylowVerdict, ClassifyError> {
    check_odd_prime(r)?;
    let valuation = r_valuation_of_order(g, r);
    if valuation == 0 {
        let m = match g {
            GroupId::Lie(l) => Governing::Order(mult_order(l.q().q(), r).expect("coprime")),
            _ => Governing::Absent,
        };
        return Ok(verdict(
            g,
            r,
            m,
            0,
            0,
            Some(AbelianStructure::trivial(r)),
            Rule::Coprime,
        ));
    }
    Ok(match g {
        GroupId::Alternating(n) => {
            let n = *n as u64;
            if n < r * r {
                let k = (n / r) as u32;
                let rule = if k == 2 {
                    Rule::AlternatingPair
                } else {
                    Rule::Alternating
                };
                verdict(
                    g,
                    r,
                    Governing::Absent,
                    0,
                    valuation,
                    Some(AbelianStructure::homogeneous(r, 1, k)),
                    rule,
                )
            } else {
                verdict(
                    g,
                    r,
                    Governing::Absent,
                    0,
                    valuation,
                    None,
                    Rule::Alternating,
                )
            }
        }
        GroupId::Lie(l) => classify_lie(g, l, r, valuation),
        GroupId::Sporadic(s) => classify_sporadic(g, *s, r, valuation),
    })
}

/// Sylow 2-subgroups, by Walter's list: `PSL_2(2^f)` with `f >= 2`,
/// `PSL_2(q)` with `q ≡ 3, 5 (mod 8)`, `J1` and `2G2(3^{2k+1})`.
pub fn classify_sylow2(g: &GroupId) -> SylowVerdict {
    let valuation = r_valuation_of_order(g, 2);
    let target = psl2_alias(g).unwrap_or(*g);
    let structure = match &target {
        GroupId::Lie(l) if l.family() == LieFamily::Psl(2) => {
            let q = l.q();
            if q.p() == 2 {
                Some(Some(AbelianStructure::homogeneous(2, 1, q.f())))
            } else if matches!(q.q() % 8, 3 | 5) {
                Some(Some(AbelianStructure::homogeneous(2, 1, 2)))
            } else {
                None
            }
        }
        GroupId::Lie(l) if l.family() == LieFamily::Ree => Some(None),
        GroupId::Sporadic(Sporadic::J1) => Some(None),
        _ => None,
    };
    let m = match g {
        GroupId::Lie(l) if l.q().p() == 2 => Governing::Defining,
        _ => Governing::Absent,
    };
    let (kind, structure) = match structure {
        Some(s) => (VerdictKind::Abelian, s),
        None => (VerdictKind::Nonabelian, None),
    };
    if let Some(s) = &structure {
        assert_eq!(s.log_order(), valuation, "Walter structure for {g}");
    }
    SylowVerdict {
        group: *g,
        r: 2,
        m,
        t: 0,
        valuation,
        kind,
        structure,
        rule: Rule::Walter,
    }
}

/// Evidence for an elementary-abelian verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "residues")]
pub enum ElementaryWitness {
    /// `r` does not divide the order.
    Trivial,
    /// The structure is elementary whenever it is abelian.
    AlwaysElementary,
    /// Elementary iff `q mod r^2` lies in this set.
    Residues(ResidueClassSet),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryCheck {
    pub elementary: bool,
    pub witness: ElementaryWitness,
}

/// Whether an abelian Sylow `r`-subgroup is elementary abelian.
pub fn is_elementary_abelian(g: &GroupId, r: u64) -> Result<ElementaryCheck, ClassifyError> {
    let v = classify(g, r)?;
    let structure = match (&v.kind, &v.structure) {
        (VerdictKind::Nonabelian, _) | (_, None) => {
            return Err(ClassifyError::Nonabelian {
                group: g.to_string(),
                r,
            })
        }
        (VerdictKind::Trivial, _) => {
            return Ok(ElementaryCheck {
                elementary: true,
                witness: ElementaryWitness::Trivial,
            })
        }
        (_, Some(s)) => s,
    };
    let witness = match (v.rule, v.m) {
        (Rule::CyclotomicStructure, Governing::Order(m)) => {
            ElementaryWitness::Residues(lifted_residues(r, m).expect("m divides r - 1"))
        }
        _ => ElementaryWitness::AlwaysElementary,
    };
    Ok(ElementaryCheck {
        elementary: structure.is_elementary(),
        witness,
    })
}
