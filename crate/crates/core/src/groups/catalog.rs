//! Every group of even order up to 24, up to isomorphism.
//!
//! Indices follow the SmallGroups library numbering used by GAP and Magma
//! (`SmallGroup(n, i)`); each entry records the structure description that
//! numbering assigns to it. The groups themselves are built from
//! presentations or concrete models and checked pairwise non-isomorphic in
//! the tests.

use crate::error::{Error, Result};
use crate::groups::group::{alternating, cyclic, dicyclic, dihedral, metacyclic, sl2_3, symmetric, FiniteGroup};

/// Largest order covered by the catalog.
pub const MAX_CATALOG_ORDER: usize = 24;

/// One catalog slot.
#[derive(Clone, Copy)]
pub struct CatalogEntry {
    pub order: usize,
    /// Our index, 1-based; intended to equal the SmallGroups index.
    pub index: usize,
    /// Structure description under the SmallGroups numbering.
    pub description: &'static str,
    build: fn() -> FiniteGroup,
}

impl CatalogEntry {
    pub fn build(&self) -> FiniteGroup {
        (self.build)()
    }

    /// The SmallGroups identifier this entry claims.
    pub fn small_group_id(&self) -> (usize, usize) {
        (self.order, self.index)
    }
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "catalog:{}:{} ({})", self.order, self.index, self.description)
    }
}

fn prod(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup {
    FiniteGroup::direct_product(&a, &b)
}

fn meta(m: usize, k: usize, r: usize) -> FiniteGroup {
    metacyclic(m, k, r).expect("valid metacyclic presentation")
}

fn dih(n: usize) -> FiniteGroup {
    dihedral(n).expect("even order")
}

fn dic(n: usize) -> FiniteGroup {
    dicyclic(n).expect("order divisible by 4")
}

/// (C4 x C2) ⋊ C2 with the C2 acting by `image(i, j)` on a^i b^j, where the
/// normal subgroup is indexed `2i + j`.
fn c4c2_by_c2(name: &str, image: fn(usize, usize) -> (usize, usize)) -> FiniteGroup {
    let n = prod(cyclic(4), cyclic(2));
    let id: Vec<usize> = (0..8).collect();
    let phi: Vec<usize> = (0..8)
        .map(|x| {
            let (i, j) = image(x / 2, x % 2);
            (i % 4) * 2 + j % 2
        })
        .collect();
    FiniteGroup::semidirect(name, &n, &cyclic(2), &[id, phi]).expect("valid action")
}

fn g16_3() -> FiniteGroup {
    // c a c⁻¹ = ab, c b c⁻¹ = b
    c4c2_by_c2("(C4 x C2) : C2", |i, j| (i, i + j))
}

fn g16_13() -> FiniteGroup {
    // c a c⁻¹ = a, c b c⁻¹ = a²b; the Pauli group C4 ∘ D8
    c4c2_by_c2("(C4 x C2) : C2 [Pauli]", |i, j| (i + 2 * j, j))
}

fn g18_4() -> FiniteGroup {
    let n = prod(cyclic(3), cyclic(3));
    let id: Vec<usize> = (0..9).collect();
    let inv: Vec<usize> = (0..9).map(|x| ((3 - x / 3) % 3) * 3 + (3 - x % 3) % 3).collect();
    FiniteGroup::semidirect("(C3 x C3) : C2", &n, &cyclic(2), &[id, inv]).expect("valid action")
}

fn g24_8() -> FiniteGroup {
    // C3 ⋊ D8 where the rotations r^odd invert C3 and ⟨r², s⟩ centralises it
    let d8 = dih(8);
    let action: Vec<Vec<usize>> =
        (0..8).map(|h| if (h % 4) % 2 == 0 { vec![0, 1, 2] } else { vec![0, 2, 1] }).collect();
    FiniteGroup::semidirect("(C6 x C2) : C2", &cyclic(3), &d8, &action).expect("valid action")
}

macro_rules! entry {
    ($order:expr, $index:expr, $desc:expr, $build:expr) => {
        CatalogEntry { order: $order, index: $index, description: $desc, build: || $build.renamed($desc) }
    };
}

/// All catalog entries, ordered by (order, index).
pub fn entries() -> Vec<CatalogEntry> {
    vec![
        entry!(2, 1, "C2", cyclic(2)),
        entry!(4, 1, "C4", cyclic(4)),
        entry!(4, 2, "C2 x C2", prod(cyclic(2), cyclic(2))),
        entry!(6, 1, "S3", dih(6)),
        entry!(6, 2, "C6", cyclic(6)),
        entry!(8, 1, "C8", cyclic(8)),
        entry!(8, 2, "C4 x C2", prod(cyclic(4), cyclic(2))),
        entry!(8, 3, "D8", dih(8)),
        entry!(8, 4, "Q8", dic(8)),
        entry!(8, 5, "C2 x C2 x C2", prod(prod(cyclic(2), cyclic(2)), cyclic(2))),
        entry!(10, 1, "D10", dih(10)),
        entry!(10, 2, "C10", cyclic(10)),
        entry!(12, 1, "C3 : C4", meta(3, 4, 2)),
        entry!(12, 2, "C12", cyclic(12)),
        entry!(12, 3, "A4", alternating(4).expect("A4")),
        entry!(12, 4, "D12", dih(12)),
        entry!(12, 5, "C6 x C2", prod(cyclic(6), cyclic(2))),
        entry!(14, 1, "D14", dih(14)),
        entry!(14, 2, "C14", cyclic(14)),
        entry!(16, 1, "C16", cyclic(16)),
        entry!(16, 2, "C4 x C4", prod(cyclic(4), cyclic(4))),
        entry!(16, 3, "(C4 x C2) : C2", g16_3()),
        entry!(16, 4, "C4 : C4", meta(4, 4, 3)),
        entry!(16, 5, "C8 x C2", prod(cyclic(8), cyclic(2))),
        entry!(16, 6, "C8 : C2", meta(8, 2, 5)),
        entry!(16, 7, "D16", dih(16)),
        entry!(16, 8, "QD16", meta(8, 2, 3)),
        entry!(16, 9, "Q16", dic(16)),
        entry!(16, 10, "C4 x C2 x C2", prod(prod(cyclic(4), cyclic(2)), cyclic(2))),
        entry!(16, 11, "C2 x D8", prod(cyclic(2), dih(8))),
        entry!(16, 12, "C2 x Q8", prod(cyclic(2), dic(8))),
        entry!(16, 13, "(C4 x C2) : C2 [Pauli]", g16_13()),
        entry!(16, 14, "C2 x C2 x C2 x C2", prod(prod(cyclic(2), cyclic(2)), prod(cyclic(2), cyclic(2)))),
        entry!(18, 1, "D18", dih(18)),
        entry!(18, 2, "C18", cyclic(18)),
        entry!(18, 3, "C3 x S3", prod(cyclic(3), dih(6))),
        entry!(18, 4, "(C3 x C3) : C2", g18_4()),
        entry!(18, 5, "C6 x C3", prod(cyclic(6), cyclic(3))),
        entry!(20, 1, "C5 : C4", meta(5, 4, 4)),
        entry!(20, 2, "C20", cyclic(20)),
        entry!(20, 3, "C5 : C4 [Frobenius]", meta(5, 4, 2)),
        entry!(20, 4, "D20", dih(20)),
        entry!(20, 5, "C10 x C2", prod(cyclic(10), cyclic(2))),
        entry!(22, 1, "D22", dih(22)),
        entry!(22, 2, "C22", cyclic(22)),
        entry!(24, 1, "C3 : C8", meta(3, 8, 2)),
        entry!(24, 2, "C24", cyclic(24)),
        entry!(24, 3, "SL(2,3)", sl2_3()),
        entry!(24, 4, "C3 : Q8", dic(24)),
        entry!(24, 5, "C4 x S3", prod(cyclic(4), dih(6))),
        entry!(24, 6, "D24", dih(24)),
        entry!(24, 7, "C2 x (C3 : C4)", prod(cyclic(2), meta(3, 4, 2))),
        entry!(24, 8, "(C6 x C2) : C2", g24_8()),
        entry!(24, 9, "C12 x C2", prod(cyclic(12), cyclic(2))),
        entry!(24, 10, "C3 x D8", prod(cyclic(3), dih(8))),
        entry!(24, 11, "C3 x Q8", prod(cyclic(3), dic(8))),
        entry!(24, 12, "S4", symmetric(4).expect("S4")),
        entry!(24, 13, "C2 x A4", prod(cyclic(2), alternating(4).expect("A4"))),
        entry!(24, 14, "C2 x C2 x S3", prod(prod(cyclic(2), cyclic(2)), dih(6))),
        entry!(24, 15, "C6 x C2 x C2", prod(prod(cyclic(6), cyclic(2)), cyclic(2))),
    ]
}

fn check_order(order: usize) -> Result<()> {
    if !order.is_multiple_of(2) {
        return Err(Error::OddOrderUnsupported(order));
    }
    if order == 0 || order > MAX_CATALOG_ORDER {
        return Err(Error::UnknownGroup(format!("catalog:{order} (catalog covers even orders 2..=24)")));
    }
    Ok(())
}

/// Catalog entries of the given order.
pub fn entries_of_order(order: usize) -> Result<Vec<CatalogEntry>> {
    check_order(order)?;
    Ok(entries().into_iter().filter(|e| e.order == order).collect())
}

/// `catalog(n, i)`.
pub fn catalog_group(order: usize, index: usize) -> Result<FiniteGroup> {
    entries_of_order(order)?
        .into_iter()
        .find(|e| e.index == index)
        .map(|e| e.build())
        .ok_or_else(|| Error::UnknownGroup(format!("catalog:{order}:{index}")))
}
