//! Group codes: row spaces of σ(v) for v in the group ring, and of the
//! block matrices σ*ₖ(v) for composite elements.

mod checks;
mod composite;
mod element;
mod sidecar;

pub use checks::{is_reversible, is_reversible_exhaustive, qc_check, QCProfile};
pub use composite::{composite_group_code, composite_sigma_matrix, CompositeElement, InnerBlock};
pub use element::{group_code, sigma_matrix, GroupRingElement, SigmaLayout};
pub use sidecar::OrderingSidecar;

#[cfg(test)]
mod tests {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    use super::*;
    use crate::algebra::{Field, LinearCode, Vector, DEFAULT_CAP, F4};
    use crate::groups::{catalog_entries, cyclic, default_reversible_ordering, qc_ordering, Ordering};

    fn random_vector(rng: &mut StdRng, n: usize, field: Field) -> Vector {
        let mask = if field == Field::F4 { 3 } else { 1 };
        let symbols: Vec<F4> = (0..n).map(|_| F4::from_bits(rng.random::<u8>() & mask)).collect();
        Vector::from_symbols(&symbols)
    }

    #[test]
    fn rows_and_columns_permute_coefficients() {
        let mut rng = StdRng::seed_from_u64(1);
        for e in catalog_entries().iter().filter(|e| e.order <= 16) {
            let g = e.build();
            let n = g.order();
            for _ in 0..5 {
                let perm: Vec<usize> = {
                    let mut p: Vec<usize> = (0..n).collect();
                    for i in (1..n).rev() {
                        p.swap(i, rng.random_range(0..=i));
                    }
                    p
                };
                let o = Ordering::custom(perm).unwrap();
                let coeffs = random_vector(&mut rng, n, Field::F4);
                let v = GroupRingElement::new(g.clone(), o, Field::F4, coeffs).unwrap();
                let m = sigma_matrix(&v);
                let mut want = coeffs.symbols();
                want.sort_by_key(|x| x.bits());
                for i in 0..n {
                    let mut row: Vec<F4> = (0..n).map(|j| m.get(i, j)).collect();
                    let mut col: Vec<F4> = (0..n).map(|j| m.get(j, i)).collect();
                    row.sort_by_key(|x| x.bits());
                    col.sort_by_key(|x| x.bits());
                    assert_eq!(row, want);
                    assert_eq!(col, want);
                }
            }
        }
    }

    #[test]
    fn code_is_left_ideal_image() {
        let mut rng = StdRng::seed_from_u64(2);
        for e in catalog_entries().iter().filter(|e| e.order <= 8) {
            let g = e.build();
            let n = g.order();
            let o = default_reversible_ordering(&g, g.involutions()[0]).unwrap();
            let pos = o.positions();
            let coeffs = random_vector(&mut rng, n, Field::F4);
            let v = GroupRingElement::new(g.clone(), o.clone(), Field::F4, coeffs).unwrap();
            // h·v has coefficient α_x on h·x
            let images: Vec<Vector> = (0..n)
                .map(|h| {
                    let mut w = Vector::zeros(n);
                    for x in 0..n {
                        w.set(pos[g.mul(h, x)], v.coeff_of(x));
                    }
                    w
                })
                .collect();
            assert_eq!(group_code(&v), LinearCode::new(Field::F4, n, images).unwrap());
        }
    }

    #[test]
    fn reversible_orderings_give_reversible_codes() {
        let mut rng = StdRng::seed_from_u64(3);
        for e in catalog_entries().iter().filter(|e| e.order <= 12) {
            let g = e.build();
            for inv in g.involutions() {
                let o = default_reversible_ordering(&g, inv).unwrap();
                for _ in 0..3 {
                    let coeffs = random_vector(&mut rng, g.order(), Field::F4);
                    let c = group_code(&GroupRingElement::new(g.clone(), o.clone(), Field::F4, coeffs).unwrap());
                    assert!(is_reversible(&c));
                    if c.f2_dim() <= 16 {
                        assert!(is_reversible_exhaustive(&c, DEFAULT_CAP).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn qc_orderings_give_quasi_cyclic_codes() {
        let mut rng = StdRng::seed_from_u64(4);
        for e in catalog_entries().iter().filter(|e| e.order <= 12) {
            let g = e.build();
            let n = g.order();
            for x in (0..n).filter(|&x| x != g.identity()) {
                let o = qc_ordering(&g, x).unwrap();
                let m = g.element_order(x);
                let coeffs = random_vector(&mut rng, n, Field::F2);
                let c = group_code(&GroupRingElement::new(g.clone(), o, Field::F2, coeffs).unwrap());
                assert!(qc_check(&c, &QCProfile::contiguous(m, n / m)).unwrap());
            }
        }
    }

    #[test]
    fn six_four_two_example() {
        // binary cyclic code of length 6 generated by 1 + x + x²
        let rows = (0..4).map(|s| Vector::from_bits(6, 0b111 << s)).collect();
        let c = LinearCode::new(Field::F2, 6, rows).unwrap();
        assert_eq!((c.dim(), c.min_distance(DEFAULT_CAP).unwrap()), (4, 2));
        let profile = QCProfile { m: 2, l: 3, perm: vec![0, 2, 4, 1, 3, 5] };
        assert!(qc_check(&c, &profile).unwrap());
        // the same code is also the group code of 1 + x + x² over C6
        let v = GroupRingElement::new(cyclic(6), Ordering::natural(6), Field::F2, Vector::from_bits(6, 0b111)).unwrap();
        assert_eq!(group_code(&v), c);
    }

    #[test]
    fn composite_codes_are_reversible() {
        let mut rng = StdRng::seed_from_u64(5);
        let inner_groups: Vec<_> = catalog_entries().into_iter().filter(|e| e.order <= 4).map(|e| e.build()).collect();
        for outer in catalog_entries().iter().filter(|e| e.order <= 8) {
            let g = outer.build();
            let o = default_reversible_ordering(&g, g.involutions()[0]).unwrap();
            for _ in 0..4 {
                let k = [2, 4][rng.random_range(0..2)];
                let choices: Vec<_> = inner_groups.iter().filter(|t| t.order() == k).collect();
                let blocks = (0..g.order())
                    .map(|_| {
                        let t = choices[rng.random_range(0..choices.len())].clone();
                        let inv = t.involutions()[rng.random_range(0..t.involutions().len())];
                        let ordering = default_reversible_ordering(&t, inv).unwrap();
                        InnerBlock { group: t, ordering, coeffs: random_vector(&mut rng, k, Field::F4) }
                    })
                    .collect();
                let cv = CompositeElement::new(g.clone(), o.clone(), Field::F4, blocks).unwrap();
                assert!(cv.has_reversible_orderings());
                assert!(is_reversible(&composite_group_code(&cv).unwrap()));
            }
        }
    }
}
