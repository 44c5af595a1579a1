//! `dnagc bench`: the three ways of getting GC statistics, timed on random
//! codes.

use std::path::PathBuf;
use std::time::Instant;

use dnagc::enumerators::{complete_weight_enumerator, count_gc_half_fast, gc_weight_enumerator};
use dnagc::{Field, LinearCode, Vector, F4};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::config::{document, emit_json, RunConfig};
use crate::error::{CliError, CliResult};

#[derive(Serialize)]
struct Timing {
    /// Brute-force complete weight enumerator, seconds.
    t_brute: Option<f64>,
    /// Trace-code spectrum, seconds.
    t_trace: f64,
    /// Krawtchouk count of N_{n/2}, seconds.
    t_krawtchouk: Option<f64>,
    /// Whether every method that ran gave the same N_{n/2}.
    consistent: bool,
}

fn random_code(rng: &mut StdRng, n: usize, k: usize) -> LinearCode {
    loop {
        let rows = (0..k)
            .map(|_| {
                let symbols: Vec<F4> = (0..n).map(|_| F4::from_bits(rng.random::<u8>() & 3)).collect();
                Vector::from_symbols(&symbols)
            })
            .collect();
        let c = LinearCode::new(Field::F4, n, rows).expect("rows have length n");
        if c.dim() == k {
            return c;
        }
    }
}

pub fn run(
    mut config: RunConfig,
    n: usize,
    k: usize,
    codes: usize,
    skip_brute: bool,
    out: Option<PathBuf>,
) -> CliResult<()> {
    config.n = Some(n);
    config.output = out.clone();
    let config = config.option("k", k).option("codes", codes).option("skip_brute", skip_brute);
    config.validate()?;
    if k == 0 || k > n || n > dnagc::algebra::MAX_LEN {
        return Err(CliError::Usage(format!("need 1 <= k <= n <= {}, got n={n} k={k}", dnagc::algebra::MAX_LEN)));
    }
    if n.is_multiple_of(2) {
        crate::cache::prime(n);
    }
    let mut rng = StdRng::seed_from_u64(config.seed);
    let mut rows = Vec::with_capacity(codes);
    for i in 0..codes {
        let c = random_code(&mut rng, n, k);
        let t = Instant::now();
        let spectrum = gc_weight_enumerator(&c, config.cap)?;
        let t_trace = t.elapsed().as_secs_f64();
        let mut halves = Vec::new();
        if n.is_multiple_of(2) {
            halves.push(spectrum.get(n / 2).clone());
        }
        let t_krawtchouk = if n.is_multiple_of(2) {
            let t = Instant::now();
            halves.push(count_gc_half_fast(&c, config.cap)?);
            Some(t.elapsed().as_secs_f64())
        } else {
            None
        };
        let mut consistent = true;
        let t_brute = if skip_brute {
            None
        } else {
            let t = Instant::now();
            let cwe = complete_weight_enumerator(&c, config.cap)?;
            let elapsed = t.elapsed().as_secs_f64();
            consistent &= cwe.gc_spectrum() == spectrum;
            Some(elapsed)
        };
        consistent &= halves.windows(2).all(|w| w[0] == w[1]);
        eprintln!(
            "code {}: brute {} s, trace {:.6} s, krawtchouk {} s",
            i + 1,
            t_brute.map_or("-".into(), |t| format!("{t:.3}")),
            t_trace,
            t_krawtchouk.map_or("-".into(), |t| format!("{t:.6}")),
        );
        rows.push(Timing { t_brute, t_trace, t_krawtchouk, consistent });
    }
    if rows.iter().any(|r| !r.consistent) {
        emit_json(out.as_deref(), &document(&config, &rows))?;
        return Err(CliError::Data("methods disagree on at least one code".into()));
    }
    emit_json(out.as_deref(), &document(&config, rows))
}
