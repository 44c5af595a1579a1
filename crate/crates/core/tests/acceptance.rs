//! Acceptance checks. Each criterion prints one `PASS` or `FAIL` line; the
//! process exits non-zero when a criterion fails that is not listed in
//! `KNOWN_RED`.

mod support;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use dnagc::algebra::io::parse_code;
use dnagc::algebra::DEFAULT_CAP;
use dnagc::dna::{extract_gc_half, is_conflict_free, DnaString};
use dnagc::enumerators::krawtchouk::krawtchouk_sum;
use dnagc::enumerators::{
    complete_weight_enumerator, count_gc_half_fast, gc_spectrum_brute_force, gc_weight_enumerator, hamming_spectrum,
    krawtchouk, subfield_subcode, trace_code, WeightSpectrum,
};
use dnagc::groupcodes::{
    composite_group_code, group_code, is_reversible, is_reversible_exhaustive, qc_check, CompositeElement,
    GroupRingElement, InnerBlock, QCProfile,
};
use dnagc::groups::{build_group, catalog_entries, default_reversible_ordering};
use dnagc::search::{reproduce_row, TableOptions, TableReport, TableRow};
use dnagc::{Field, LinearCode, Vector, F4};
use num_bigint::BigUint;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use support::{naive_codewords, random_full_rank_code, random_small_code, random_vector};

/// Criteria expected to fail; see the project notes for the analysis.
const KNOWN_RED: &[u32] = &[10];

type Check = Box<dyn FnOnce(&mut StdRng) -> Outcome>;

struct Outcome {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn naive_gc_weight(w: &Vector) -> usize {
    w.symbols().iter().filter(|s| matches!(s, F4::W | F4::W2)).count()
}

fn naive_trace(w: &Vector) -> Vec<bool> {
    w.symbols().iter().map(|s| matches!(s, F4::W | F4::W2)).collect()
}

fn spectrum_of(counts: &[u64]) -> WeightSpectrum {
    WeightSpectrum::from_u64(counts)
}

fn gc_theorem(rng: &mut StdRng) -> Outcome {
    let mut bad = 0;
    for _ in 0..200 {
        let c = random_small_code(rng, 14, 7);
        let n = c.len();
        let words = naive_codewords(&c);
        let mut brute = vec![0u64; n + 1];
        let mut traces = HashSet::new();
        for w in &words {
            brute[naive_gc_weight(w)] += 1;
            traces.insert(naive_trace(w));
        }
        let mut tr = vec![0u64; n + 1];
        for t in &traces {
            tr[t.iter().filter(|&&b| b).count()] += 1;
        }
        let factor = words.len() as u64 / traces.len() as u64;
        let scaled: Vec<u64> = tr.iter().map(|a| a * factor).collect();
        let lib = gc_weight_enumerator(&c, DEFAULT_CAP).unwrap();
        let lib_brute = gc_spectrum_brute_force(&c, DEFAULT_CAP).unwrap();
        if spectrum_of(&brute) != spectrum_of(&scaled) || lib != spectrum_of(&brute) || lib_brute != lib {
            bad += 1;
        }
    }
    Outcome {
        id: 3,
        name: "GC spectrum equals scaled trace-code spectrum",
        pass: bad == 0,
        detail: format!("{bad}/200 mismatches"),
    }
}

fn krawtchouk_count(rng: &mut StdRng) -> Outcome {
    let mut bad = 0;
    for _ in 0..100 {
        let n = 2 * rng.random_range(1..=7usize);
        let k = rng.random_range(1..=n.min(7));
        let c = support::random_code(rng, Field::F4, n, k);
        let brute = naive_codewords(&c).iter().filter(|w| naive_gc_weight(w) == n / 2).count();
        let fast = count_gc_half_fast(&c, DEFAULT_CAP).unwrap();
        let extracted = extract_gc_half(&c, DEFAULT_CAP).unwrap();
        let all_balanced = extracted.iter().all(|w| naive_gc_weight(w) == n / 2 && c.contains(w));
        let distinct = extracted.iter().collect::<HashSet<_>>().len() == extracted.len();
        if fast != BigUint::from(brute) || extracted.len() != brute || !all_balanced || !distinct {
            bad += 1;
        }
    }
    Outcome {
        id: 4,
        name: "Krawtchouk count = extracted words = brute force",
        pass: bad == 0,
        detail: format!("{bad}/100 mismatches"),
    }
}

fn delsarte(rng: &mut StdRng) -> Outcome {
    let mut bad = 0;
    for _ in 0..200 {
        let c = random_small_code(rng, 14, 7);
        let n = c.len();
        let binary: Vec<Vector> = naive_codewords(&c).into_iter().filter(|w| w.is_binary()).collect();
        let oracle = LinearCode::new(Field::F2, n, binary).unwrap();
        let sub = subfield_subcode(&c).unwrap();
        let lhs = sub.dual();
        let rhs = trace_code(&c.dual()).unwrap();
        if sub != oracle || lhs != rhs {
            bad += 1;
        }
    }
    Outcome {
        id: 5,
        name: "Delsarte: dual of subfield subcode = trace of dual",
        pass: bad == 0,
        detail: format!("{bad}/200 mismatches"),
    }
}

fn reversibility(rng: &mut StdRng) -> Outcome {
    let (mut checked, mut bad) = (0, 0);
    for e in catalog_entries().iter().filter(|e| e.order <= 16) {
        let g = e.build();
        for inv in g.involutions() {
            let o = default_reversible_ordering(&g, inv).unwrap();
            for _ in 0..50 {
                let v =
                    GroupRingElement::new(g.clone(), o.clone(), Field::F4, random_vector(rng, g.order(), Field::F4));
                let c = group_code(&v.unwrap());
                let exhaustive = c.f2_dim() > 14 || is_reversible_exhaustive(&c, DEFAULT_CAP).unwrap();
                checked += 1;
                if !is_reversible(&c) || !exhaustive {
                    bad += 1;
                }
            }
        }
    }
    let inner: Vec<_> = catalog_entries().into_iter().filter(|e| e.order <= 4).map(|e| e.build()).collect();
    let mut composite = 0;
    for outer in catalog_entries().iter().filter(|e| e.order <= 8) {
        let g = outer.build();
        for inv in g.involutions() {
            let o = default_reversible_ordering(&g, inv).unwrap();
            for _ in 0..50 {
                let k = [2, 4][rng.random_range(0..2)];
                let choices: Vec<_> = inner.iter().filter(|t| t.order() == k).collect();
                let blocks = (0..g.order())
                    .map(|_| {
                        let t = choices[rng.random_range(0..choices.len())].clone();
                        let invs = t.involutions();
                        let ordering = default_reversible_ordering(&t, invs[rng.random_range(0..invs.len())]).unwrap();
                        InnerBlock { coeffs: random_vector(rng, k, Field::F4), group: t, ordering }
                    })
                    .collect();
                let cv = CompositeElement::new(g.clone(), o.clone(), Field::F4, blocks).unwrap();
                composite += 1;
                if !is_reversible(&composite_group_code(&cv).unwrap()) {
                    bad += 1;
                }
            }
        }
    }
    Outcome {
        id: 6,
        name: "reversible orderings give reversible codes",
        pass: bad == 0,
        detail: format!("{bad} failures over {checked} group codes and {composite} composite codes"),
    }
}

fn quasi_cyclic() -> Outcome {
    let rows = (0..4).map(|s| Vector::from_bits(6, 0b111 << s)).collect();
    let c = LinearCode::new(Field::F2, 6, rows).unwrap();
    let d = c.min_distance(DEFAULT_CAP).unwrap();
    let profile = QCProfile { m: 2, l: 3, perm: vec![0, 2, 4, 1, 3, 5] };
    let qc = qc_check(&c, &profile).unwrap();
    Outcome {
        id: 7,
        name: "[6,4,2] cyclic code is quasi-cyclic with m=2, l=3",
        pass: qc && c.dim() == 4 && d == 2,
        detail: format!("k={} d={d} qc={qc}", c.dim()),
    }
}

fn example_pair() -> Outcome {
    let load = |name: &str| {
        let path = format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"));
        parse_code(&std::fs::read_to_string(&path).unwrap()).unwrap()
    };
    let (c1, c2) = (load("example_p1.code"), load("example_p2.code"));
    let gc1 = gc_weight_enumerator(&c1, DEFAULT_CAP).unwrap();
    let gc2 = gc_weight_enumerator(&c2, DEFAULT_CAP).unwrap();
    let brute_equal = gc_spectrum_brute_force(&c1, DEFAULT_CAP).unwrap() == gc1
        && gc_spectrum_brute_force(&c2, DEFAULT_CAP).unwrap() == gc2;
    let t1 = hamming_spectrum(&trace_code(&c1.dual()).unwrap(), DEFAULT_CAP).unwrap();
    let t2 = hamming_spectrum(&trace_code(&c2.dual()).unwrap(), DEFAULT_CAP).unwrap();
    let d1 = c1.min_distance(DEFAULT_CAP).unwrap();
    let d2 = c2.min_distance(DEFAULT_CAP).unwrap();
    Outcome {
        id: 8,
        name: "[I8|P1] and [I8|P2]: equal GC spectra, different dual trace spectra",
        pass: gc1 == gc2 && brute_equal && t1 != t2,
        detail: format!("d = {d1}, {d2}; GC spectra equal: {}; dual trace spectra differ: {}", gc1 == gc2, t1 != t2),
    }
}

fn krawtchouk_lemma() -> Outcome {
    let mut bad = 0;
    let mut checked = 0;
    for s in 1..=64u32 {
        for x in (1..=2 * s).step_by(2) {
            checked += 1;
            if !krawtchouk(s, x, 2 * s).is_zero() || !krawtchouk_sum(s, x, 2 * s, 2).is_zero() {
                bad += 1;
            }
        }
    }
    Outcome {
        id: 9,
        name: "P_s(x; 2s) = 0 for odd x, s <= 64",
        pass: bad == 0,
        detail: format!("{bad}/{checked} nonzero"),
    }
}

fn conflict_free() -> Outcome {
    let s: DnaString = "ACTGACTGTGAC".parse().unwrap();
    let l3 = is_conflict_free(&s, 3).unwrap();
    let l4 = is_conflict_free(&s, 4).unwrap();
    Outcome {
        id: 10,
        name: "ACTGACTGTGAC is 3-conflict-free and not 4-conflict-free",
        pass: l3 && !l4,
        detail: format!("l=3: {l3}, l=4: {l4} (TG TG at offset 6 is a repeat of length 2)"),
    }
}

fn speed(rng: &mut StdRng) -> Outcome {
    let c = random_full_rank_code(rng, 40, 16);
    let t = Instant::now();
    let fast = gc_weight_enumerator(&c, DEFAULT_CAP).unwrap();
    let fast_time = t.elapsed();
    let t = Instant::now();
    let cwe = complete_weight_enumerator(&c, 1 << 32).unwrap();
    let brute_time = t.elapsed();
    let ratio = brute_time.as_secs_f64() / fast_time.as_secs_f64().max(1e-9);
    let agree = cwe.gc_spectrum() == fast;
    Outcome {
        id: 11,
        name: "trace method >= 100x faster than brute CWE at n=40, k=16",
        pass: agree && ratio >= 100.0,
        detail: format!(
            "brute {:.2} s, trace {:.2} ms, ratio {ratio:.0}x, spectra agree: {agree}",
            brute_time.as_secs_f64(),
            fast_time.as_secs_f64() * 1e3
        ),
    }
}

/// Rebuilds a reported row's code from its group and generator vector.
fn row_code(row: &TableRow) -> LinearCode {
    let g = build_group(&row.group).unwrap();
    let o = default_reversible_ordering(&g, row.involution).unwrap();
    group_code(&GroupRingElement::new(g, o, Field::F4, row.x).unwrap())
}

/// Re-derives the counts of the reported rows by enumerating their codes.
fn confirm_rows(report: &TableReport, d: u32) -> bool {
    [&report.best, &report.best_ffs].into_iter().flatten().all(|row| {
        let c = row_code(row);
        let words = naive_codewords(&c);
        let half = words.iter().filter(|w| naive_gc_weight(w) == row.n / 2).count();
        let min = words.iter().filter(|w| !w.is_zero()).map(|w| w.weight()).min();
        c.dim() == row.k
            && is_reversible(&c)
            && c.contains_all_ones()
            && min == Some(d)
            && BigUint::from(half) == row.n_half
    })
}

fn table_row(
    id: u32,
    name: &'static str,
    n: usize,
    d: u32,
    workers: usize,
    want: (u64, u64),
    limit: Duration,
) -> Outcome {
    let opts = TableOptions { workers, ..TableOptions::default() };
    let report = reproduce_row(n, d, &opts).unwrap();
    // one code must meet both bounds; the largest ffs count over all codes is shown too
    let n_half = report.best.as_ref().map(|r| r.n_half.clone()).unwrap_or_default();
    let ffs = report.best.as_ref().map_or(0, |r| r.ffs);
    let max_ffs = report.best_ffs.as_ref().map_or(0, |r| r.ffs);
    let confirmed = confirm_rows(&report, d);
    let within = report.seconds <= limit.as_secs_f64();
    let pass = n_half >= BigUint::from(want.0) && ffs >= want.1 && confirmed && within;
    let groups: Vec<String> = report.runs.iter().map(|r| format!("{}", r.group)).collect();
    let best = report.best.as_ref().map_or("none".to_string(), |r| format!("{} x={}", r.group, r.x));
    Outcome {
        id,
        name,
        pass,
        detail: format!(
            "N={n_half} (need {}), ffs={ffs} (need {}, max over codes {max_ffs}), best {best}, groups [{}], {:.1} s (limit {} s), re-derived: {confirmed}",
            want.0,
            want.1,
            groups.join(", "),
            report.seconds,
            limit.as_secs()
        ),
    }
}

fn main() -> ExitCode {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let checks: Vec<Check> = vec![
        Box::new(|_| {
            table_row(1, "n=10, d=4 row: N >= 1008, ffs >= 676", 10, 4, 1, (1008, 676), Duration::from_secs(600))
        }),
        Box::new(|_| {
            table_row(2, "n=12, d=6 row: N >= 1848, ffs >= 796", 12, 6, 8, (1848, 796), Duration::from_secs(3600))
        }),
        Box::new(gc_theorem),
        Box::new(krawtchouk_count),
        Box::new(delsarte),
        Box::new(reversibility),
        Box::new(|_| quasi_cyclic()),
        Box::new(|_| example_pair()),
        Box::new(|_| krawtchouk_lemma()),
        Box::new(|_| conflict_free()),
        Box::new(speed),
    ];
    let mut unexpected = 0;
    for check in checks {
        let o = check(&mut rng);
        let known = KNOWN_RED.contains(&o.id);
        println!(
            "{} criterion {:>2}: {} [{}]{}",
            if o.pass { "PASS" } else { "FAIL" },
            o.id,
            o.name,
            o.detail,
            if !o.pass && known { " (known, documented)" } else { "" }
        );
        if !o.pass && !known {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criteria failed unexpectedly");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
