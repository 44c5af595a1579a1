//! Element orderings that shape group codes.
//!
//! For an involution g and right coset representatives g₁…g_l of ⟨g⟩, the
//! listing `g·g₁, …, g·g_l, g_l, …, g₁` pairs position i with position
//! n + 1 − i through left multiplication by g, so every left ideal of RG
//! maps to a reversible code. For g of order m the listing
//! `g·g₁, …, gᵐ·g₁, g·g₂, …` makes left multiplication by g a simultaneous
//! cyclic shift of l blocks, i.e. a quasi-cyclic code.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::group::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderingKind {
    /// Trivial listing `0, 1, …, n − 1`.
    Natural,
    Reversible {
        involution: usize,
    },
    QuasiCyclic {
        m: usize,
        generator: usize,
    },
}

/// A listing of the group elements: position `i` holds element `perm[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ordering {
    perm: Vec<usize>,
    kind: OrderingKind,
}

impl Ordering {
    pub fn natural(n: usize) -> Ordering {
        Ordering { perm: (0..n).collect(), kind: OrderingKind::Natural }
    }

    /// An arbitrary listing; checked to be a permutation.
    pub fn custom(perm: Vec<usize>) -> Result<Ordering> {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadRange("ordering is not a permutation".into()));
            }
        }
        Ok(Ordering { perm, kind: OrderingKind::Natural })
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn kind(&self) -> OrderingKind {
        self.kind
    }

    pub fn is_reversible(&self) -> bool {
        matches!(self.kind, OrderingKind::Reversible { .. })
    }

    /// Element listed at each position.
    pub fn elements(&self) -> &[usize] {
        &self.perm
    }

    /// Position of each element.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.perm.len()];
        for (i, &e) in self.perm.iter().enumerate() {
            pos[e] = i;
        }
        pos
    }
}

fn check_involution(grp: &FiniteGroup, g: usize) -> Result<()> {
    if g >= grp.order() || g == grp.identity() || grp.mul(g, g) != grp.identity() {
        return Err(Error::NotInvolution(g));
    }
    Ok(())
}

/// Representatives of the right cosets ⟨g⟩x, one per coset, each the
/// smallest index in its coset, listed in increasing order.
fn cyclic_coset_reps(grp: &FiniteGroup, g: usize) -> Vec<usize> {
    let n = grp.order();
    let mut used = vec![false; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if used[x] {
            continue;
        }
        reps.push(x);
        let mut y = x;
        loop {
            used[y] = true;
            y = grp.mul(g, y);
            if y == x {
                break;
            }
        }
    }
    reps
}

/// Right coset representatives of ⟨g⟩ for an involution g: one element of
/// each pair {x, g·x}.
pub fn coset_reps(grp: &FiniteGroup, g: usize) -> Result<Vec<usize>> {
    check_involution(grp, g)?;
    Ok(cyclic_coset_reps(grp, g))
}

/// `g·g₁, …, g·g_l, g_l, …, g₁`.
pub fn reversible_ordering(grp: &FiniteGroup, g: usize, reps: &[usize]) -> Result<Ordering> {
    check_involution(grp, g)?;
    let n = grp.order();
    if reps.len() * 2 != n {
        return Err(Error::BadReps(format!("expected {} representatives, got {}", n / 2, reps.len())));
    }
    let mut covered = vec![false; n];
    for &r in reps {
        if r >= n {
            return Err(Error::BadReps(format!("element {r} out of range")));
        }
        for x in [r, grp.mul(g, r)] {
            if std::mem::replace(&mut covered[x], true) {
                return Err(Error::BadReps(format!("coset of {r} overlaps another representative")));
            }
        }
    }
    let mut perm: Vec<usize> = reps.iter().map(|&r| grp.mul(g, r)).collect();
    perm.extend(reps.iter().rev());
    Ok(Ordering { perm, kind: OrderingKind::Reversible { involution: g } })
}

/// Reversible ordering for `g` with the default representatives.
pub fn default_reversible_ordering(grp: &FiniteGroup, g: usize) -> Result<Ordering> {
    let reps = coset_reps(grp, g)?;
    reversible_ordering(grp, g, &reps)
}

/// `g·g₁, g²·g₁, …, gᵐ·g₁, g·g₂, …, gᵐ·g_l` for `g` of order m.
pub fn qc_ordering(grp: &FiniteGroup, g: usize) -> Result<Ordering> {
    if g == grp.identity() {
        return Err(Error::IdentityElement);
    }
    if g >= grp.order() {
        return Err(Error::BadRange(format!("element {g} out of range")));
    }
    let m = grp.element_order(g);
    let mut perm = Vec::with_capacity(grp.order());
    for x in cyclic_coset_reps(grp, g) {
        let mut y = x;
        for _ in 0..m {
            y = grp.mul(g, y);
            perm.push(y);
        }
    }
    Ok(Ordering { perm, kind: OrderingKind::QuasiCyclic { m, generator: g } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::catalog::entries;
    use crate::groups::group::{cyclic, dihedral};

    #[test]
    fn cyclic_two() {
        let g = cyclic(2);
        assert_eq!(coset_reps(&g, 1).unwrap(), vec![0]);
        assert_eq!(default_reversible_ordering(&g, 1).unwrap().elements(), &[1, 0]);
    }

    #[test]
    fn cyclic_four() {
        let g = cyclic(4);
        assert_eq!(coset_reps(&g, 2).unwrap(), vec![0, 1]);
        // a², a³, a, e
        assert_eq!(reversible_ordering(&g, 2, &[0, 1]).unwrap().elements(), &[2, 3, 1, 0]);
        assert_eq!(coset_reps(&g, 1), Err(Error::NotInvolution(1)));
    }

    #[test]
    fn bad_reps_rejected() {
        let g = cyclic(4);
        assert!(matches!(reversible_ordering(&g, 2, &[0, 2]), Err(Error::BadReps(_))));
        assert!(matches!(reversible_ordering(&g, 2, &[0]), Err(Error::BadReps(_))));
    }

    #[test]
    fn mirror_invariant_for_catalog() {
        for e in entries().iter().filter(|e| e.order <= 16) {
            let grp = e.build();
            let n = grp.order();
            for g in grp.involutions() {
                let o = default_reversible_ordering(&grp, g).unwrap();
                let p = o.elements();
                assert!(Ordering::custom(p.to_vec()).is_ok());
                for i in 0..n {
                    assert_eq!(p[i], grp.mul(g, p[n - 1 - i]));
                }
            }
        }
    }

    #[test]
    fn qc_ordering_block_shift() {
        for e in entries().iter().filter(|e| e.order <= 16) {
            let grp = e.build();
            for g in (0..grp.order()).filter(|&g| g != grp.identity()) {
                let o = qc_ordering(&grp, g).unwrap();
                let m = grp.element_order(g);
                assert_eq!(o.kind(), OrderingKind::QuasiCyclic { m, generator: g });
                let p = o.elements();
                assert!(Ordering::custom(p.to_vec()).is_ok());
                for block in p.chunks(m) {
                    for j in 0..m {
                        assert_eq!(grp.mul(g, block[j]), block[(j + 1) % m]);
                    }
                }
            }
        }
    }

    #[test]
    fn qc_of_cyclic_generator_is_natural_rotation() {
        let g = cyclic(5);
        assert_eq!(qc_ordering(&g, 1).unwrap().elements(), &[1, 2, 3, 4, 0]);
        assert_eq!(qc_ordering(&g, 0), Err(Error::IdentityElement));
        let d = dihedral(8).unwrap();
        let s = d.involutions()[0];
        assert_eq!(qc_ordering(&d, s).unwrap().kind(), OrderingKind::QuasiCyclic { m: 2, generator: s });
    }
}
