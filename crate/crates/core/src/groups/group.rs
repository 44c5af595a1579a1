use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// A finite group given by its Cayley table on element indices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u16>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Builds and validates a group from a row-major Cayley table
    /// (`table[a * n + b]` is the index of `a·b`).
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<usize>) -> Result<FiniteGroup> {
        FiniteGroup::build(name.into(), order, table, true)
    }

    pub(crate) fn build(name: String, order: usize, table: Vec<usize>, check_assoc: bool) -> Result<FiniteGroup> {
        if order == 0 {
            return Err(Error::InvalidGroup("a group has at least one element".into()));
        }
        if order > u16::MAX as usize {
            return Err(Error::InvalidGroup(format!("order {order} too large")));
        }
        if table.len() != order * order {
            return Err(Error::InvalidGroup(format!("table has {} entries, expected {}", table.len(), order * order)));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::InvalidGroup(format!("entry {bad} out of range")));
        }
        // Latin square
        let mut seen = vec![false; order];
        for r in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..order {
                let x = table[r * order + c];
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidGroup(format!("row {r} repeats element {x}")));
                }
            }
        }
        for c in 0..order {
            seen.iter_mut().for_each(|s| *s = false);
            for r in 0..order {
                let x = table[r * order + c];
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidGroup(format!("column {c} repeats element {x}")));
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] == x && table[x * order + e] == x))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        if check_assoc {
            for a in 0..order {
                for b in 0..order {
                    let ab = table[a * order + b];
                    for c in 0..order {
                        if table[ab * order + c] != table[a * order + table[b * order + c]] {
                            return Err(Error::InvalidGroup(format!("not associative at ({a}, {b}, {c})")));
                        }
                    }
                }
            }
        }
        let inverses = (0..order)
            .map(|a| (0..order).find(|&b| table[a * order + b] == identity).expect("Latin square has inverses"))
            .collect();
        Ok(FiniteGroup {
            name,
            order,
            table: table.into_iter().map(|x| x as u16).collect(),
            identity,
            inverses,
            labels: None,
        })
    }

    /// Closure of `generators` under `mul`, indexed in breadth-first order
    /// from the identity.
    pub fn from_generators<T, F>(name: impl Into<String>, identity: T, generators: &[T], mul: F) -> Result<FiniteGroup>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elems = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
        let mut i = 0;
        while i < elems.len() {
            for g in generators {
                let p = mul(&elems[i], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
            if elems.len() > u16::MAX as usize {
                return Err(Error::InvalidGroup("generated group too large".into()));
            }
        }
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                let p = mul(a, b);
                table.push(*index.get(&p).ok_or_else(|| Error::InvalidGroup("not closed".into()))?);
            }
        }
        FiniteGroup::build(name.into(), n, table, n <= 64)
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> FiniteGroup {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub(crate) fn renamed(mut self, name: impl Into<String>) -> FiniteGroup {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => format!("g{a}"),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Row-major Cayley table.
    pub fn table(&self) -> Vec<usize> {
        self.table.iter().map(|&x| x as usize).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements of order exactly 2.
    pub fn involutions(&self) -> Vec<usize> {
        (0..self.order).filter(|&x| x != self.identity && self.mul(x, x) == self.identity).collect()
    }

    /// Sorted multiset of element orders.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order).map(|a| self.element_order(a)).collect();
        v.sort_unstable();
        v
    }

    pub fn center_size(&self) -> usize {
        (0..self.order).filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a))).count()
    }

    /// Elements of the subgroup generated by `gens`, ascending.
    pub fn subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut stack = vec![self.identity];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order).filter(|&x| inside[x]).collect()
    }

    /// Size of the commutator subgroup.
    pub fn derived_size(&self) -> usize {
        let mut comms: Vec<usize> = Vec::new();
        for a in 0..self.order {
            for b in 0..self.order {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                if !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.subgroup(&comms).len()
    }

    /// Number of distinct squares x².
    pub fn square_count(&self) -> usize {
        let mut sq: Vec<usize> = (0..self.order).map(|x| self.mul(x, x)).collect();
        sq.sort_unstable();
        sq.dedup();
        sq.len()
    }

    /// Direct product; element `(a, b)` has index `a * |h| + b`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (g.order, h.order);
        let mut table = Vec::with_capacity(n * m * n * m);
        for a in 0..n * m {
            for b in 0..n * m {
                table.push(g.mul(a / m, b / m) * m + h.mul(a % m, b % m));
            }
        }
        let labels = (0..n * m).map(|x| format!("({},{})", g.label(x / m), h.label(x % m))).collect();
        FiniteGroup::build(format!("{} x {}", g.name, h.name), n * m, table, false)
            .expect("direct product is a group")
            .with_labels(labels)
    }

    /// Semidirect product N ⋊ H. `action[h][x]` is the image of `x ∈ N` under
    /// the automorphism attached to `h`; element `(x, h)` has index
    /// `x + |N| * h` and `(x₁, h₁)(x₂, h₂) = (x₁ · h₁(x₂), h₁h₂)`.
    pub fn semidirect(name: &str, n: &FiniteGroup, h: &FiniteGroup, action: &[Vec<usize>]) -> Result<FiniteGroup> {
        let (a, b) = (n.order, h.order);
        if action.len() != b || action.iter().any(|p| p.len() != a) {
            return Err(Error::InvalidGroup("action has the wrong shape".into()));
        }
        let mut table = Vec::with_capacity(a * b * a * b);
        for p in 0..a * b {
            for q in 0..a * b {
                let (x1, h1) = (p % a, p / a);
                let (x2, h2) = (q % a, q / a);
                table.push(n.mul(x1, action[h1][x2]) + a * h.mul(h1, h2));
            }
        }
        FiniteGroup::build(name.to_string(), a * b, table, true)
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

/// Cyclic group Z_n, element `i` is a^i.
pub fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n * n).map(|x| (x / n + x % n) % n).collect();
    let labels = (0..n).map(|i| format!("a^{i}")).collect();
    FiniteGroup::build(format!("C{n}"), n, table, false).expect("cyclic group").with_labels(labels)
}

/// C_m ⋊ C_k with b a b⁻¹ = a^r; element `a^i b^j` has index `i + m j`.
pub fn metacyclic(m: usize, k: usize, r: usize) -> Result<FiniteGroup> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidGroup("empty factor".into()));
    }
    let mut rp = vec![1 % m; k + 1];
    for j in 1..=k {
        rp[j] = rp[j - 1] * r % m;
    }
    if rp[k] != 1 % m {
        return Err(Error::InvalidGroup(format!("{r}^{k} is not 1 mod {m}")));
    }
    let n = m * k;
    let mut table = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let (i1, j1) = (p % m, p / m);
            let (i2, j2) = (q % m, q / m);
            table.push((i1 + rp[j1] * i2) % m + m * ((j1 + j2) % k));
        }
    }
    let labels = (0..n).map(|x| format!("a^{} b^{}", x % m, x / m)).collect();
    Ok(FiniteGroup::build(format!("C{m} : C{k}"), n, table, n <= 64)?.with_labels(labels))
}

/// Dihedral group of order `order` (= 2m), symmetries of the m-gon.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 2 || !order.is_multiple_of(2) {
        return Err(Error::UnknownGroup(format!("dihedral group of order {order}")));
    }
    let m = order / 2;
    Ok(metacyclic(m, 2, m - 1)?.renamed(format!("D{order}")))
}

/// Dicyclic group of order `order` (= 4m): ⟨a, x | a^{2m}, x² = a^m, x a x⁻¹ = a⁻¹⟩.
/// Element `a^i x^j` has index `i + 2m j`.
pub fn dicyclic(order: usize) -> Result<FiniteGroup> {
    if order < 4 || !order.is_multiple_of(4) {
        return Err(Error::UnknownGroup(format!("dicyclic group of order {order}")));
    }
    let m = order / 4;
    let a = 2 * m;
    let mut table = Vec::with_capacity(order * order);
    for p in 0..order {
        for q in 0..order {
            let (i1, j1) = (p % a, p / a);
            let (i2, j2) = (q % a, q / a);
            let (i, j) = match (j1, j2) {
                (0, _) => ((i1 + i2) % a, j2),
                (_, 0) => ((i1 + a - i2) % a, 1),
                _ => ((i1 + a - i2 + m) % a, 0),
            };
            table.push(i + a * j);
        }
    }
    let labels = (0..order).map(|x| format!("a^{} x^{}", x % a, x / a)).collect();
    Ok(FiniteGroup::build(format!("Dic{order}"), order, table, order <= 64)?.with_labels(labels))
}

/// Permutation composition used for permutation groups: `(p * q)(i) = q(p(i))`
/// so that products read left to right. Takes `&Vec` to fit the generic
/// multiplication signature.
#[allow(clippy::ptr_arg)]
pub(crate) fn perm_mul(p: &Vec<u8>, q: &Vec<u8>) -> Vec<u8> {
    p.iter().map(|&i| q[i as usize]).collect()
}

/// Symmetric group on `k` points.
pub fn symmetric(k: usize) -> Result<FiniteGroup> {
    let id: Vec<u8> = (0..k as u8).collect();
    let mut gens = Vec::new();
    if k >= 2 {
        let mut t = id.clone();
        t.swap(0, 1);
        gens.push(t);
        let cyc: Vec<u8> = (0..k as u8).map(|i| (i + 1) % k as u8).collect();
        gens.push(cyc);
    }
    FiniteGroup::from_generators(format!("S{k}"), id, &gens, perm_mul)
}

/// Alternating group on `k ≥ 3` points.
pub fn alternating(k: usize) -> Result<FiniteGroup> {
    if k < 3 {
        return Err(Error::UnknownGroup(format!("alternating group on {k} points")));
    }
    let id: Vec<u8> = (0..k as u8).collect();
    // 3-cycles (0 1 i) generate A_k
    let gens: Vec<Vec<u8>> = (2..k)
        .map(|i| {
            let mut p = id.clone();
            p[0] = 1;
            p[1] = i as u8;
            p[i] = 0;
            p
        })
        .collect();
    FiniteGroup::from_generators(format!("A{k}"), id, &gens, perm_mul)
}

/// SL(2, 3) as 2×2 matrices over GF(3).
pub fn sl2_3() -> FiniteGroup {
    type M = [u8; 4];
    let mul = |a: &M, b: &M| -> M {
        [
            (a[0] * b[0] + a[1] * b[2]) % 3,
            (a[0] * b[1] + a[1] * b[3]) % 3,
            (a[2] * b[0] + a[3] * b[2]) % 3,
            (a[2] * b[1] + a[3] * b[3]) % 3,
        ]
    };
    FiniteGroup::from_generators("SL(2,3)", [1, 0, 0, 1], &[[1, 1, 0, 1], [1, 0, 1, 1]], mul).expect("SL(2,3)")
}

/// Decides whether two groups are isomorphic by searching for an image of a
/// generating set that extends to a bijective homomorphism.
pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    if a.order != b.order || a.order_profile() != b.order_profile() || a.is_abelian() != b.is_abelian() {
        return false;
    }
    let gens = generating_set(a);
    // express every element of `a` as parent · generator
    let n = a.order;
    let mut parent = vec![usize::MAX; n];
    let mut via = vec![usize::MAX; n];
    let mut bfs = vec![a.identity];
    parent[a.identity] = a.identity;
    let mut i = 0;
    while i < bfs.len() {
        let x = bfs[i];
        for (gi, &g) in gens.iter().enumerate() {
            let y = a.mul(x, g);
            if parent[y] == usize::MAX {
                parent[y] = x;
                via[y] = gi;
                bfs.push(y);
            }
        }
        i += 1;
    }
    let candidates: Vec<Vec<usize>> =
        gens.iter().map(|&g| (0..n).filter(|&y| b.element_order(y) == a.element_order(g)).collect()).collect();
    let mut images = vec![0; gens.len()];
    search_images(a, b, &gens, &bfs, &parent, &via, &candidates, &mut images, 0)
}

#[allow(clippy::too_many_arguments)]
fn search_images(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[usize],
    bfs: &[usize],
    parent: &[usize],
    via: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    depth: usize,
) -> bool {
    if depth == gens.len() {
        let n = a.order;
        let mut phi = vec![usize::MAX; n];
        phi[a.identity] = b.identity;
        for &x in &bfs[1..] {
            phi[x] = b.mul(phi[parent[x]], images[via[x]]);
        }
        let mut hit = vec![false; n];
        for &y in &phi {
            if std::mem::replace(&mut hit[y], true) {
                return false;
            }
        }
        return (0..n).all(|x| gens.iter().zip(images.iter()).all(|(&g, &img)| phi[a.mul(x, g)] == b.mul(phi[x], img)));
    }
    for &c in &candidates[depth] {
        images[depth] = c;
        if search_images(a, b, gens, bfs, parent, via, candidates, images, depth + 1) {
            return true;
        }
    }
    false
}

/// Greedy generating set, preferring elements of large order.
fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut by_order: Vec<usize> = (0..g.order).collect();
    by_order.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut span = g.subgroup(&gens);
    for x in by_order {
        if span.len() == g.order {
            break;
        }
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = g.subgroup(&gens);
        }
    }
    gens
}
