//! Finite groups and the element orderings used to build codes.
//!
//! Groups are described by a [`GroupSpec`], written as text:
//!
//! | text              | group                                   |
//! |-------------------|-----------------------------------------|
//! | `cyclic:N`        | C_N                                     |
//! | `dihedral:N`      | dihedral group of order N (N even)      |
//! | `dicyclic:N`      | dicyclic group of order N (4 divides N) |
//! | `catalog:N:I`     | catalog entry I of order N              |
//! | `A*B`             | direct product                          |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

mod catalog;
mod group;
mod io;
mod ordering;

pub use catalog::{catalog_group, entries as catalog_entries, entries_of_order, CatalogEntry, MAX_CATALOG_ORDER};
pub use group::{alternating, cyclic, dicyclic, dihedral, is_isomorphic, metacyclic, sl2_3, symmetric, FiniteGroup};
pub use io::{parse_group, write_group};
pub use ordering::{coset_reps, default_reversible_ordering, qc_ordering, reversible_ordering, Ordering, OrderingKind};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Catalog(usize, usize),
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    /// Order of the described group, without building it.
    pub fn order(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) | GroupSpec::Dicyclic(n) | GroupSpec::Catalog(n, _) => *n,
            GroupSpec::Product(parts) => parts.iter().map(GroupSpec::order).product(),
        }
    }
}

fn parse_atom(s: &str) -> Result<GroupSpec> {
    let bad = || Error::UnknownGroup(s.to_string());
    let parts: Vec<&str> = s.trim().split(':').collect();
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match parts.as_slice() {
        ["cyclic", n] => Ok(GroupSpec::Cyclic(num(n)?)),
        ["dihedral", n] => Ok(GroupSpec::Dihedral(num(n)?)),
        ["dicyclic", n] => Ok(GroupSpec::Dicyclic(num(n)?)),
        ["catalog", n, i] => Ok(GroupSpec::Catalog(num(n)?, num(i)?)),
        _ => Err(bad()),
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        let atoms = s.split('*').map(parse_atom).collect::<Result<Vec<_>>>()?;
        Ok(if atoms.len() == 1 { atoms.into_iter().next().expect("one atom") } else { GroupSpec::Product(atoms) })
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "dicyclic:{n}"),
            GroupSpec::Catalog(n, i) => write!(f, "catalog:{n}:{i}"),
            GroupSpec::Product(parts) => {
                let texts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                f.write_str(&texts.join("*"))
            }
        }
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<GroupSpec, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    let g = match spec {
        GroupSpec::Cyclic(0) => return Err(Error::InvalidGroup("cyclic:0".into())),
        GroupSpec::Cyclic(n) => cyclic(*n),
        GroupSpec::Dihedral(n) => dihedral(*n)?,
        GroupSpec::Dicyclic(n) => dicyclic(*n)?,
        GroupSpec::Catalog(n, i) => catalog_group(*n, *i)?,
        GroupSpec::Product(parts) => {
            let mut acc: Option<FiniteGroup> = None;
            for p in parts {
                let g = build_group(p)?;
                acc = Some(match acc {
                    None => g,
                    Some(a) => FiniteGroup::direct_product(&a, &g),
                });
            }
            acc.ok_or_else(|| Error::InvalidGroup("empty product".into()))?
        }
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trip() {
        for text in ["cyclic:4", "dihedral:12", "dicyclic:8", "catalog:16:3", "cyclic:2*dihedral:6*cyclic:2"] {
            let spec: GroupSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            assert_eq!(build_group(&spec).unwrap().order(), spec.order());
        }
        assert!(matches!("ring:4".parse::<GroupSpec>(), Err(Error::UnknownGroup(_))));
        assert!(matches!("cyclic:x".parse::<GroupSpec>(), Err(Error::UnknownGroup(_))));
    }

    #[test]
    fn spec_examples() {
        let c4 = build_group(&"cyclic:4".parse().unwrap()).unwrap();
        assert_eq!(c4.involutions().len(), 1);
        assert_eq!(entries_of_order(10).unwrap().len(), 2);
        let d12 = build_group(&GroupSpec::Dihedral(12)).unwrap();
        assert!(!d12.is_abelian());
        assert_eq!(build_group(&GroupSpec::Dihedral(8)).unwrap().involutions().len(), 5);
        assert_eq!(build_group(&GroupSpec::Catalog(9, 1)), Err(Error::OddOrderUnsupported(9)));
        assert!(matches!(build_group(&GroupSpec::Catalog(26, 1)), Err(Error::UnknownGroup(_))));
        assert!(build_group(&GroupSpec::Cyclic(7)).is_ok());
    }

    #[test]
    fn serde_as_string() {
        let spec = GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Catalog(8, 3)]);
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, "\"cyclic:2*catalog:8:3\"");
        assert_eq!(serde_json::from_str::<GroupSpec>(&json).unwrap(), spec);
    }
}
