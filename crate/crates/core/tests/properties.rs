//! Cross-module properties checked on random codes.

mod support;

use dnagc::algebra::io::{parse_code, write_code};
use dnagc::algebra::DEFAULT_CAP;
use dnagc::dna::{decode_dna, encode_dna, DnaString};
use dnagc::enumerators::{
    complete_weight_enumerator, gc_weight_enumerator, hamming_spectrum, hamming_spectrum_enumerated, macwilliams,
};
use dnagc::{Field, LinearCode, Vector};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use support::{naive_codewords, random_code, random_small_code};

fn small_code() -> impl Strategy<Value = LinearCode> {
    any::<u64>().prop_map(|seed| random_small_code(&mut StdRng::seed_from_u64(seed), 12, 6))
}

fn small_binary_code() -> impl Strategy<Value = LinearCode> {
    (any::<u64>(), 1usize..=14).prop_map(|(seed, n)| {
        let mut rng = StdRng::seed_from_u64(seed);
        let k = 1 + (seed as usize % n);
        random_code(&mut rng, Field::F2, n, k)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_is_an_involution(c in small_code()) {
        let d = c.dual();
        prop_assert_eq!(d.dim() + c.dim(), c.len());
        prop_assert_eq!(d.dual(), c.clone());
        for g in c.generators() {
            for h in d.generators() {
                prop_assert!(g.dot(h).is_zero());
            }
        }
    }

    #[test]
    fn min_distance_matches_enumeration(c in small_code()) {
        let naive = naive_codewords(&c).iter().filter(|w| !w.is_zero()).map(Vector::weight).min();
        match naive {
            Some(d) => prop_assert_eq!(c.min_distance(DEFAULT_CAP).unwrap(), d),
            None => prop_assert_eq!(c.dim(), 0),
        }
    }

    #[test]
    fn macwilliams_over_f4(c in small_code()) {
        let direct = hamming_spectrum_enumerated(&c, DEFAULT_CAP).unwrap();
        let through_dual = macwilliams(&hamming_spectrum_enumerated(&c.dual(), DEFAULT_CAP).unwrap(), 4).unwrap();
        prop_assert_eq!(&direct, &through_dual);
        prop_assert_eq!(hamming_spectrum(&c, DEFAULT_CAP).unwrap(), direct);
    }

    #[test]
    fn macwilliams_over_f2(c in small_binary_code()) {
        let direct = hamming_spectrum_enumerated(&c, DEFAULT_CAP).unwrap();
        let through_dual = macwilliams(&hamming_spectrum_enumerated(&c.dual(), DEFAULT_CAP).unwrap(), 2).unwrap();
        prop_assert_eq!(direct, through_dual);
    }

    #[test]
    fn complete_enumerator_collapses_to_gc_spectrum(c in small_code()) {
        let cwe = complete_weight_enumerator(&c, DEFAULT_CAP).unwrap();
        prop_assert_eq!(cwe.total(), 1u64 << c.f2_dim());
        prop_assert_eq!(cwe.gc_spectrum(), gc_weight_enumerator(&c, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn code_files_round_trip(c in small_code()) {
        prop_assert_eq!(parse_code(&write_code(&c)).unwrap(), c);
    }

    #[test]
    fn dna_map_round_trips(seed in any::<u64>(), n in 1usize..=40) {
        let v = support::random_vector(&mut StdRng::seed_from_u64(seed), n, Field::F4);
        let s = encode_dna(&v);
        prop_assert_eq!(s.len(), n);
        prop_assert_eq!(s.gc_count(), v.gc_weight() as usize);
        prop_assert_eq!(decode_dna(&s).unwrap(), v);
        prop_assert_eq!(encode_dna(&v.reverse_complement()), s.reverse_complement());
        let reparsed: DnaString = s.to_string().parse().unwrap();
        prop_assert_eq!(reparsed, s);
    }
}
