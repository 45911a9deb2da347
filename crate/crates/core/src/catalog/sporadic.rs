//! Reference data for the 26 sporadic simple groups.
//!
//! Orders are the standard Atlas factorisations; each row also carries the
//! decimal order as a checksum. The abelian column lists the odd primes
//! `r <= 13` marked as having an abelian Sylow r-subgroup in the published
//! table, copied cell for cell (including cells that disagree with the
//! orders, see [`SporadicRecord::table_anomalies`]).

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::Serialize;

use super::GroupError;
use crate::numtheory::FactoredInteger;

/// The odd primes that index the columns of the sporadic table.
pub const GRID_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sporadic {
    M11,
    M12,
    J1,
    M22,
    J2,
    M23,
    HS,
    J3,
    M24,
    McL,
    He,
    Ru,
    Suz,
    ON,
    Co3,
    Co2,
    Fi22,
    HN,
    Ly,
    Th,
    Fi23,
    Co1,
    J4,
    Fi24,
    B,
    M,
}

struct Row {
    group: Sporadic,
    name: &'static str,
    factors: &'static [(u64, u32)],
    decimal: &'static str,
    abelian: &'static [u64],
}

#[rustfmt::skip]
const ROWS: [Row; 26] = [
    Row { group: Sporadic::M11, name: "M11", factors: &[(2, 4), (3, 2), (5, 1), (11, 1)], decimal: "7920", abelian: &[3, 5, 7] },
    Row { group: Sporadic::M12, name: "M12", factors: &[(2, 6), (3, 3), (5, 1), (11, 1)], decimal: "95040", abelian: &[5, 7] },
    Row { group: Sporadic::J1, name: "J1", factors: &[(2, 3), (3, 1), (5, 1), (7, 1), (11, 1), (19, 1)], decimal: "175560", abelian: &[3, 5, 7, 11] },
    Row { group: Sporadic::M22, name: "M22", factors: &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)], decimal: "443520", abelian: &[3, 5, 7, 11] },
    Row { group: Sporadic::J2, name: "J2", factors: &[(2, 7), (3, 3), (5, 2), (7, 1)], decimal: "604800", abelian: &[5, 7] },
    Row { group: Sporadic::M23, name: "M23", factors: &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)], decimal: "10200960", abelian: &[3, 5, 7, 11] },
    Row { group: Sporadic::HS, name: "HS", factors: &[(2, 9), (3, 2), (5, 3), (7, 1), (11, 1)], decimal: "44352000", abelian: &[3, 7, 11] },
    Row { group: Sporadic::J3, name: "J3", factors: &[(2, 7), (3, 5), (5, 1), (17, 1), (19, 1)], decimal: "50232960", abelian: &[5] },
    Row { group: Sporadic::M24, name: "M24", factors: &[(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)], decimal: "244823040", abelian: &[5, 7, 11] },
    Row { group: Sporadic::McL, name: "McL", factors: &[(2, 7), (3, 6), (5, 3), (7, 1), (11, 1)], decimal: "898128000", abelian: &[7, 11] },
    Row { group: Sporadic::He, name: "He", factors: &[(2, 10), (3, 3), (5, 2), (7, 3), (17, 1)], decimal: "4030387200", abelian: &[5] },
    Row { group: Sporadic::Ru, name: "Ru", factors: &[(2, 14), (3, 3), (5, 3), (7, 1), (13, 1), (29, 1)], decimal: "145926144000", abelian: &[11, 13] },
    Row { group: Sporadic::Suz, name: "Suz", factors: &[(2, 13), (3, 7), (5, 2), (7, 1), (11, 1), (13, 1)], decimal: "448345497600", abelian: &[7, 11, 13] },
    Row { group: Sporadic::ON, name: "ON", factors: &[(2, 9), (3, 4), (5, 1), (7, 3), (11, 1), (19, 1), (31, 1)], decimal: "460815505920", abelian: &[5, 11] },
    Row { group: Sporadic::Co3, name: "Co3", factors: &[(2, 10), (3, 7), (5, 3), (7, 1), (11, 1), (23, 1)], decimal: "495766656000", abelian: &[7, 11] },
    Row { group: Sporadic::Co2, name: "Co2", factors: &[(2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1)], decimal: "42305421312000", abelian: &[7, 11] },
    Row { group: Sporadic::Fi22, name: "Fi22", factors: &[(2, 17), (3, 9), (5, 2), (7, 1), (11, 1), (13, 1)], decimal: "64561751654400", abelian: &[5, 7, 11] },
    Row { group: Sporadic::HN, name: "HN", factors: &[(2, 14), (3, 6), (5, 6), (7, 1), (11, 1), (19, 1)], decimal: "273030912000000", abelian: &[7, 11] },
    Row { group: Sporadic::Ly, name: "Ly", factors: &[(2, 8), (3, 7), (5, 6), (7, 1), (11, 1), (31, 1), (37, 1), (67, 1)], decimal: "51765179004000000", abelian: &[7, 11] },
    Row { group: Sporadic::Th, name: "Th", factors: &[(2, 15), (3, 10), (5, 3), (7, 2), (13, 1), (19, 1), (31, 1)], decimal: "90745943887872000", abelian: &[7, 13] },
    Row { group: Sporadic::Fi23, name: "Fi23", factors: &[(2, 18), (3, 13), (5, 2), (7, 1), (11, 1), (13, 1), (17, 1), (23, 1)], decimal: "4089470473293004800", abelian: &[5, 7, 11] },
    Row { group: Sporadic::Co1, name: "Co1", factors: &[(2, 21), (3, 9), (5, 4), (7, 2), (11, 1), (13, 1), (23, 1)], decimal: "4157776806543360000", abelian: &[7, 11, 13] },
    Row { group: Sporadic::J4, name: "J4", factors: &[(2, 21), (3, 3), (5, 1), (7, 1), (11, 3), (23, 1), (29, 1), (31, 1), (37, 1), (43, 1)], decimal: "86775571046077562880", abelian: &[5, 7] },
    Row { group: Sporadic::Fi24, name: "Fi24'", factors: &[(2, 21), (3, 16), (5, 2), (7, 3), (11, 1), (13, 1), (17, 1), (23, 1), (29, 1)], decimal: "1255205709190661721292800", abelian: &[5, 11, 13] },
    Row { group: Sporadic::B, name: "B", factors: &[(2, 41), (3, 13), (5, 6), (7, 2), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (31, 1), (47, 1)], decimal: "4154781481226426191177580544000000", abelian: &[7, 11, 13] },
    Row { group: Sporadic::M, name: "M", factors: &[(2, 46), (3, 20), (5, 9), (7, 6), (11, 2), (13, 3), (17, 1), (19, 1), (23, 1), (29, 1), (31, 1), (41, 1), (47, 1), (59, 1), (71, 1)], decimal: "808017424794512875886459904961710757005754368000000000", abelian: &[11] },
];

impl Sporadic {
    pub const ALL: [Sporadic; 26] = {
        let mut all = [Sporadic::M11; 26];
        let mut i = 0;
        while i < 26 {
            all[i] = ROWS[i].group;
            i += 1;
        }
        all
    };

    fn row(&self) -> &'static Row {
        &ROWS[*self as usize]
    }

    pub fn name(&self) -> &'static str {
        self.row().name
    }

    pub fn from_name(name: &str) -> Option<Sporadic> {
        ROWS.iter()
            .find(|row| row.name == name)
            .map(|row| row.group)
    }

    pub fn record(&self) -> SporadicRecord {
        let row = self.row();
        SporadicRecord {
            group: row.group,
            name: row.name,
            order: FactoredInteger::from_pairs(row.factors.iter().copied()),
            abelian_odd_primes: row.abelian.iter().copied().collect(),
        }
    }

    /// The decimal order stored alongside the factorisation.
    pub fn order_checksum(&self) -> BigUint {
        self.row()
            .decimal
            .parse()
            .expect("checksum is a decimal integer")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SporadicRecord {
    pub group: Sporadic,
    pub name: &'static str,
    pub order: FactoredInteger,
    /// Odd primes `r <= 13` marked abelian in the published table.
    pub abelian_odd_primes: BTreeSet<u64>,
}

/// A cell of the published table that the group order contradicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TableAnomaly {
    /// Marked abelian, but `r` does not divide the order.
    MarkedButCoprime { prime: u64 },
    /// Left blank although `|S|_r <= r^2`, which forces an abelian Sylow subgroup.
    BlankButSmall { prime: u64, valuation: u32 },
}

impl SporadicRecord {
    pub fn valuation(&self, r: u64) -> u32 {
        self.order.exponent_of(r)
    }

    pub fn marked_abelian(&self, r: u64) -> bool {
        self.abelian_odd_primes.contains(&r)
    }

    pub fn table_anomalies(&self) -> Vec<TableAnomaly> {
        GRID_PRIMES
            .iter()
            .filter_map(|&r| {
                let v = self.valuation(r);
                match (self.marked_abelian(r), v) {
                    (true, 0) => Some(TableAnomaly::MarkedButCoprime { prime: r }),
                    (false, 1 | 2) => Some(TableAnomaly::BlankButSmall {
                        prime: r,
                        valuation: v,
                    }),
                    _ => None,
                }
            })
            .collect()
    }
}

/// Looks a sporadic group up by its exact name.
pub fn sporadic_record(name: &str) -> Result<SporadicRecord, GroupError> {
    Sporadic::from_name(name)
        .map(|s| s.record())
        .ok_or_else(|| GroupError::syntax(name, format!("unknown sporadic group {name:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorisations_match_checksums() {
        for s in Sporadic::ALL {
            assert_eq!(s.record().order.value(), s.order_checksum(), "{}", s.name());
        }
    }

    #[test]
    fn table_order_matches_enum() {
        for (i, s) in Sporadic::ALL.iter().enumerate() {
            assert_eq!(*s as usize, i);
        }
    }

    #[test]
    fn printed_cells() {
        let set = |n: &str| sporadic_record(n).unwrap().abelian_odd_primes;
        assert_eq!(set("M11"), BTreeSet::from([3, 5, 7]));
        assert_eq!(set("M12"), BTreeSet::from([5, 7]));
        assert_eq!(set("Ru"), BTreeSet::from([11, 13]));
        assert!(sporadic_record("Tits").is_err());
    }

    #[test]
    fn large_primes_divide_once() {
        for s in Sporadic::ALL {
            for (p, e) in s.record().order.iter() {
                if *p >= BigUint::from(17u32) {
                    assert_eq!(*e, 1, "{} at {p}", s.name());
                }
            }
        }
    }

    #[test]
    fn anomalies() {
        let rec = Sporadic::M11.record();
        assert_eq!(
            rec.table_anomalies(),
            vec![
                TableAnomaly::MarkedButCoprime { prime: 7 },
                TableAnomaly::BlankButSmall {
                    prime: 11,
                    valuation: 1
                }
            ]
        );
        let total: usize = Sporadic::ALL
            .iter()
            .map(|s| s.record().table_anomalies().len())
            .sum();
        // M11 (2), M12 (2), Ru (2), Suz, Fi22, Fi23
        assert_eq!(total, 9);
    }
}
