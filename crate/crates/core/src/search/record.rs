use std::cmp::Ordering as CmpOrdering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::algebra::Vector;
use crate::error::{Error, Result};
use crate::groups::GroupSpec;

/// Serde helpers writing big integers as plain JSON numbers.
pub(crate) mod big {
    use std::str::FromStr;

    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        serde_json::Number::from_str(&v.to_string()).map_err(serde::ser::Error::custom)?.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        n.to_string().parse().map_err(serde::de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => super::serialize(v, s),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
            let n = Option::<serde_json::Number>::deserialize(d)?;
            n.map(|n| n.to_string().parse().map_err(serde::de::Error::custom)).transpose()
        }
    }
}

/// Size a code must exceed to be recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Baseline {
    Finite(BigUint),
    Infinite,
}

impl Baseline {
    pub fn is_beaten_by(&self, size: &BigUint) -> bool {
        match self {
            Baseline::Finite(b) => size > b,
            Baseline::Infinite => false,
        }
    }
}

impl FromStr for Baseline {
    type Err = Error;

    fn from_str(s: &str) -> Result<Baseline> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Baseline::Infinite),
            t => t
                .parse::<BigUint>()
                .map(Baseline::Finite)
                .map_err(|_| Error::BadRange(format!("baseline `{t}` is neither a count nor `inf`"))),
        }
    }
}

impl fmt::Display for Baseline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Baseline::Finite(b) => write!(f, "{b}"),
            Baseline::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Baseline {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Baseline {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Baseline, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A code found by the search, with enough data to rebuild it from `x`
/// and re-verify it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    /// Coefficients of the group-ring element, aligned to `ordering`.
    pub x: Vector,
    pub group: GroupSpec,
    pub group_name: String,
    pub involution: usize,
    pub ordering: Vec<usize>,
    pub n: usize,
    pub k: usize,
    pub d: u32,
    #[serde(with = "big")]
    pub size: BigUint,
    pub reversible: bool,
    pub all_ones: bool,
    pub rc_ok: bool,
    #[serde(with = "big::option", default, skip_serializing_if = "Option::is_none")]
    pub n_half: Option<BigUint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ffs: Option<u64>,
    /// RREF generator rows of the code.
    pub canonical: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

impl SearchRecord {
    /// Output order: larger codes first, then larger distance, then the
    /// canonical form.
    pub fn output_cmp(&self, other: &SearchRecord) -> CmpOrdering {
        other.size.cmp(&self.size).then(other.d.cmp(&self.d)).then_with(|| self.canonical.cmp(&other.canonical))
    }

    /// Preference among records for the same code: smallest
    /// (group, involution, x).
    fn provenance_cmp(&self, other: &SearchRecord) -> CmpOrdering {
        self.group
            .to_string()
            .cmp(&other.group.to_string())
            .then(self.involution.cmp(&other.involution))
            .then_with(|| self.x.cmp(&other.x))
    }
}

/// Deduplicates by canonical form and sorts for output. The result does not
/// depend on how the records were split into streams.
pub fn merge_results<I>(streams: I) -> Vec<SearchRecord>
where
    I: IntoIterator,
    I::Item: IntoIterator<Item = SearchRecord>,
{
    let mut best: BTreeMap<(usize, Vec<String>), SearchRecord> = BTreeMap::new();
    for r in streams.into_iter().flatten() {
        let key = (r.n, r.canonical.clone());
        match best.get_mut(&key) {
            Some(cur) => {
                if r.provenance_cmp(cur) == CmpOrdering::Less {
                    let ffs = cur.ffs.or(r.ffs);
                    *cur = r;
                    cur.ffs = cur.ffs.or(ffs);
                } else if cur.ffs.is_none() {
                    cur.ffs = r.ffs;
                }
            }
            None => {
                best.insert(key, r);
            }
        }
    }
    let mut out: Vec<SearchRecord> = best.into_values().collect();
    out.sort_by(SearchRecord::output_cmp);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn record(x: &str, canonical: &[&str], k: usize) -> SearchRecord {
        SearchRecord {
            x: Vector::parse(x).unwrap(),
            group: GroupSpec::Cyclic(x.len()),
            group_name: "C".into(),
            involution: 1,
            ordering: (0..x.len()).collect(),
            n: x.len(),
            k,
            d: 2,
            size: BigUint::from(4u32).pow(k as u32),
            reversible: true,
            all_ones: false,
            rc_ok: false,
            n_half: Some(BigUint::from(3u32)),
            ffs: None,
            canonical: canonical.iter().map(|s| s.to_string()).collect(),
            timestamp: None,
        }
    }

    #[test]
    fn duplicates_collapse_to_smallest_x() {
        let a = record("0w1", &["1w0"], 1);
        let b = record("01w", &["1w0"], 1);
        let merged = merge_results(vec![vec![a.clone()], vec![b.clone()]]);
        assert_eq!(merged, vec![b.clone()]);
        assert_eq!(merge_results(vec![vec![b.clone(), a]]), vec![b]);
    }

    #[test]
    fn disjoint_records_sorted() {
        let small = record("011", &["101", "011"], 2);
        let big = record("111", &["100", "010", "001"], 3);
        let tie = record("110", &["011", "101"], 2);
        let merged = merge_results(vec![vec![small.clone()], vec![tie.clone(), big.clone()]]);
        assert_eq!(merged, vec![big, tie, small]);
    }

    #[test]
    fn json_round_trip() {
        let r = record("0w1", &["1w0"], 1);
        let line = serde_json::to_string(&r).unwrap();
        assert!(line.contains("\"size\":4"));
        assert!(line.contains("\"n_half\":3"));
        assert!(!line.contains("timestamp"));
        assert_eq!(serde_json::from_str::<SearchRecord>(&line).unwrap(), r);
        assert_eq!("inf".parse::<Baseline>().unwrap(), Baseline::Infinite);
        assert!(!Baseline::Infinite.is_beaten_by(&(BigUint::from(1u32) << 1000)));
        assert!("12".parse::<Baseline>().unwrap().is_beaten_by(&BigUint::from(16u32)));
    }
}
