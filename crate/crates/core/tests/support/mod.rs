//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use dnagc::{Field, LinearCode, Vector, F4};
use rand::rngs::StdRng;
use rand::Rng;

pub fn random_vector(rng: &mut StdRng, n: usize, field: Field) -> Vector {
    let mask = if field == Field::F4 { 3 } else { 1 };
    let symbols: Vec<F4> = (0..n).map(|_| F4::from_bits(rng.random::<u8>() & mask)).collect();
    Vector::from_symbols(&symbols)
}

/// Row space of `k` random rows; the dimension may come out below `k`.
pub fn random_code(rng: &mut StdRng, field: Field, n: usize, k: usize) -> LinearCode {
    let rows = (0..k).map(|_| random_vector(rng, n, field)).collect();
    LinearCode::new(field, n, rows).expect("rows have length n")
}

/// Random GF(4) code of exactly dimension `k`.
pub fn random_full_rank_code(rng: &mut StdRng, n: usize, k: usize) -> LinearCode {
    loop {
        let c = random_code(rng, Field::F4, n, k);
        if c.dim() == k {
            return c;
        }
    }
}

/// Random GF(4) code with 1 ≤ n ≤ `max_n` and 1 ≤ k ≤ min(n, `max_k`).
pub fn random_small_code(rng: &mut StdRng, max_n: usize, max_k: usize) -> LinearCode {
    let n = rng.random_range(1..=max_n);
    let k = rng.random_range(1..=n.min(max_k));
    random_code(rng, Field::F4, n, k)
}

/// Every codeword, listed naively from all F4 combinations of the generators.
pub fn naive_codewords(c: &LinearCode) -> Vec<Vector> {
    let mut words = vec![Vector::zeros(c.len())];
    for g in c.generators() {
        let mut next = Vec::with_capacity(words.len() * 4);
        for w in &words {
            for a in F4::ALL {
                next.push(w.add(&g.scale(a)));
            }
        }
        words = next;
    }
    words
}
