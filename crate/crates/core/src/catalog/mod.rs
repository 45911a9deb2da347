//! The universe of finite simple groups handled by the classifier.
//!
//! A [`GroupId`] is always valid: constructing one checks that `q` is a
//! prime power of the right shape and that the group is simple.

mod orders;
mod parse;
mod profile;
mod sporadic;

pub use orders::{order_closed_form, order_factored};
pub use parse::{parse_family_pattern, parse_group};
pub use profile::{cyclo_profile, e_l, max_cyclotomic_index, order_cyclotomic, CycloProfile};
pub use sporadic::{sporadic_record, Sporadic, SporadicRecord, TableAnomaly, GRID_PRIMES};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::numtheory::factorize_u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("syntax error in {input:?}: {reason}")]
    Syntax { input: String, reason: String },
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{family} needs q = {base}^(2k+1), got q = {q}")]
    TwistedShape {
        family: &'static str,
        base: u64,
        q: u64,
    },
    #[error("{group} is not simple ({reason})")]
    NotSimple { group: String, reason: &'static str },
}

impl GroupError {
    /// Stable short code naming the violated rule.
    pub fn code(&self) -> &'static str {
        match self {
            GroupError::Syntax { .. } => "syntax",
            GroupError::NotPrimePower(_) => "not-prime-power",
            GroupError::TwistedShape { .. } => "twisted-constraint",
            GroupError::NotSimple { .. } => "not-simple",
        }
    }

    pub fn is_syntax(&self) -> bool {
        matches!(self, GroupError::Syntax { .. })
    }

    pub(crate) fn syntax(input: &str, reason: impl Into<String>) -> Self {
        GroupError::Syntax {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

/// A prime power `q = p^f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    q: u64,
    p: u64,
    f: u32,
}

impl PrimePower {
    pub fn new(q: u64) -> Result<Self, GroupError> {
        if q < 2 {
            return Err(GroupError::NotPrimePower(q));
        }
        match factorize_u64(q).as_slice() {
            [(p, f)] => Ok(PrimePower { q, p: *p, f: *f }),
            _ => Err(GroupError::NotPrimePower(q)),
        }
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The characteristic.
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// A family of groups of Lie type together with its rank parameter.
///
/// Rank conventions: `Psl(n)` is PSL_n, `Psu(n)` is PSU_n, `Psp(n)` is
/// PSp_{2n}, `OmegaOdd(n)` is Ω_{2n+1}, `POmegaPlus(n)`/`POmegaMinus(n)` are
/// PΩ±_{2n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LieFamily {
    Psl(u32),
    Psu(u32),
    Psp(u32),
    OmegaOdd(u32),
    POmegaPlus(u32),
    POmegaMinus(u32),
    Suzuki,
    TriD4,
    G2,
    Ree,
    F4,
    TwistedF4,
    E6,
    TwistedE6,
    E7,
    E8,
}

impl LieFamily {
    pub const EXCEPTIONAL: [LieFamily; 10] = [
        LieFamily::Suzuki,
        LieFamily::TriD4,
        LieFamily::G2,
        LieFamily::Ree,
        LieFamily::F4,
        LieFamily::TwistedF4,
        LieFamily::E6,
        LieFamily::TwistedE6,
        LieFamily::E7,
        LieFamily::E8,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            LieFamily::Psl(_) => "PSL",
            LieFamily::Psu(_) => "PSU",
            LieFamily::Psp(_) => "PSp",
            LieFamily::OmegaOdd(_) => "Omega",
            LieFamily::POmegaPlus(_) => "POmega+",
            LieFamily::POmegaMinus(_) => "POmega-",
            LieFamily::Suzuki => "2B2",
            LieFamily::TriD4 => "3D4",
            LieFamily::G2 => "G2",
            LieFamily::Ree => "2G2",
            LieFamily::F4 => "F4",
            LieFamily::TwistedF4 => "2F4",
            LieFamily::E6 => "E6",
            LieFamily::TwistedE6 => "2E6",
            LieFamily::E7 => "E7",
            LieFamily::E8 => "E8",
        }
    }

    /// The rank parameter `n`, for the classical families.
    pub fn rank(&self) -> Option<u32> {
        match *self {
            LieFamily::Psl(n)
            | LieFamily::Psu(n)
            | LieFamily::Psp(n)
            | LieFamily::OmegaOdd(n)
            | LieFamily::POmegaPlus(n)
            | LieFamily::POmegaMinus(n) => Some(n),
            _ => None,
        }
    }

    /// The number written in the first slot of the group grammar
    /// (`n`, `2n` or `2n+1` depending on the family).
    pub fn degree(&self) -> Option<u32> {
        match *self {
            LieFamily::Psl(n) | LieFamily::Psu(n) => Some(n),
            LieFamily::Psp(n) | LieFamily::POmegaPlus(n) | LieFamily::POmegaMinus(n) => Some(2 * n),
            LieFamily::OmegaOdd(n) => Some(2 * n + 1),
            _ => None,
        }
    }

    /// Smallest rank at which the family is defined and generically simple.
    pub fn min_rank(&self) -> u32 {
        match self {
            LieFamily::Psl(_) => 2,
            LieFamily::Psu(_) => 3,
            LieFamily::Psp(_) | LieFamily::OmegaOdd(_) => 2,
            LieFamily::POmegaPlus(_) | LieFamily::POmegaMinus(_) => 4,
            _ => 0,
        }
    }

    /// Base prime for the twisted families whose `q` must be an odd power.
    pub fn twisted_base(&self) -> Option<u64> {
        match self {
            LieFamily::Suzuki | LieFamily::TwistedF4 => Some(2),
            LieFamily::Ree => Some(3),
            _ => None,
        }
    }

    pub fn with_rank(&self, n: u32) -> LieFamily {
        match self {
            LieFamily::Psl(_) => LieFamily::Psl(n),
            LieFamily::Psu(_) => LieFamily::Psu(n),
            LieFamily::Psp(_) => LieFamily::Psp(n),
            LieFamily::OmegaOdd(_) => LieFamily::OmegaOdd(n),
            LieFamily::POmegaPlus(_) => LieFamily::POmegaPlus(n),
            LieFamily::POmegaMinus(_) => LieFamily::POmegaMinus(n),
            other => *other,
        }
    }

    /// All families with rank parameter at most `rank_bound`, in tag order.
    pub fn all_up_to(rank_bound: u32) -> Vec<LieFamily> {
        let classical = [
            LieFamily::Psl(0),
            LieFamily::Psu(0),
            LieFamily::Psp(0),
            LieFamily::OmegaOdd(0),
            LieFamily::POmegaPlus(0),
            LieFamily::POmegaMinus(0),
        ];
        let mut out = Vec::new();
        for fam in classical {
            out.extend((fam.min_rank()..=rank_bound).map(|n| fam.with_rank(n)));
        }
        out.extend(LieFamily::EXCEPTIONAL);
        out
    }
}

impl fmt::Display for LieFamily {
    /// Renders the family as a pattern in `q`, e.g. `PSL(4,q)` or `E8(q)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            Some(d) => write!(f, "{}({},q)", self.tag(), d),
            None => write!(f, "{}(q)", self.tag()),
        }
    }
}

/// A simple group of Lie type over GF(q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieGroup {
    family: LieFamily,
    q: PrimePower,
}

impl LieGroup {
    /// Validates the shape of `q` and the simplicity of the group.
    pub fn new(family: LieFamily, q: u64) -> Result<Self, GroupError> {
        let q = PrimePower::new(q)?;
        let group = LieGroup { family, q };
        if let Some(base) = family.twisted_base() {
            if q.p != base || q.f % 2 == 0 {
                return Err(GroupError::TwistedShape {
                    family: family.tag(),
                    base,
                    q: q.q,
                });
            }
        }
        if let Some(reason) = group.non_simple_reason() {
            return Err(GroupError::NotSimple {
                group: group.to_string(),
                reason,
            });
        }
        Ok(group)
    }

    fn non_simple_reason(&self) -> Option<&'static str> {
        let q = self.q.q;
        if let Some(n) = self.family.rank() {
            if n < self.family.min_rank() {
                return Some("rank below the simplicity bound");
            }
        }
        match (self.family, q) {
            (LieFamily::Psl(2), 2) | (LieFamily::Psl(2), 3) => Some("solvable"),
            (LieFamily::Psu(3), 2) => Some("solvable"),
            (LieFamily::Psp(2), 2) | (LieFamily::OmegaOdd(2), 2) => Some("isomorphic to S6"),
            (LieFamily::G2, 2) => Some("has PSU(3,3) as a subgroup of index 2"),
            (LieFamily::Suzuki, 2) => Some("solvable"),
            (LieFamily::Ree, 3) => Some("isomorphic to PΓL(2,8)"),
            (LieFamily::TwistedF4, 2) => Some("the Tits group is its derived subgroup"),
            _ => None,
        }
    }

    pub fn family(&self) -> LieFamily {
        self.family
    }

    pub fn q(&self) -> PrimePower {
        self.q
    }
}

impl fmt::Display for LieGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family.degree() {
            Some(d) => write!(f, "{}({},{})", self.family.tag(), d, self.q),
            None => write!(f, "{}({})", self.family.tag(), self.q),
        }
    }
}

/// A finite non-abelian simple group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    Alternating(u32),
    Lie(LieGroup),
    Sporadic(Sporadic),
}

impl GroupId {
    pub fn alternating(n: u32) -> Result<Self, GroupError> {
        if n < 5 {
            return Err(GroupError::NotSimple {
                group: format!("A({n})"),
                reason: "alternating groups of degree below 5",
            });
        }
        Ok(GroupId::Alternating(n))
    }

    pub fn lie(family: LieFamily, q: u64) -> Result<Self, GroupError> {
        LieGroup::new(family, q).map(GroupId::Lie)
    }

    pub fn as_lie(&self) -> Option<&LieGroup> {
        match self {
            GroupId::Lie(g) => Some(g),
            _ => None,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Alternating(n) => write!(f, "A({n})"),
            GroupId::Lie(g) => g.fmt(f),
            GroupId::Sporadic(s) => f.write_str(s.name()),
        }
    }
}

impl std::str::FromStr for GroupId {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group(s)
    }
}

/// Exceptional isomorphisms used to phrase groups in PSL_2 terms when
/// checking the abelian Sylow 2-subgroup list.
pub fn psl2_alias(g: &GroupId) -> Option<GroupId> {
    let (family, q) = match g {
        GroupId::Alternating(5) => (LieFamily::Psl(2), 4),
        GroupId::Alternating(6) => (LieFamily::Psl(2), 9),
        GroupId::Lie(l) if l.family == LieFamily::Psl(3) && l.q.q == 2 => (LieFamily::Psl(2), 7),
        _ => return None,
    };
    Some(GroupId::lie(family, q).expect("alias targets are simple"))
}

/// Other low-rank coincidences, kept for reference output.
pub fn isomorphic_alias(g: &GroupId) -> Option<GroupId> {
    if let Some(alias) = psl2_alias(g) {
        return Some(alias);
    }
    match g {
        GroupId::Alternating(8) => GroupId::lie(LieFamily::Psl(4), 2).ok(),
        GroupId::Lie(l) => match l.family {
            LieFamily::Psp(2) => GroupId::lie(LieFamily::OmegaOdd(2), l.q.q).ok(),
            LieFamily::OmegaOdd(2) => GroupId::lie(LieFamily::Psp(2), l.q.q).ok(),
            LieFamily::Psl(2) if l.q.q == 5 => GroupId::lie(LieFamily::Psl(2), 4).ok(),
            _ => None,
        },
        _ => None,
    }
}
