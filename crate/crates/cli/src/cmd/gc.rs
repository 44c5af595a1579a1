//! `dnagc gc-count` and `dnagc gc-extract`.

use std::path::PathBuf;

use dnagc::dna::{encode_dna, extract_gc_half, is_ss_free, write_fasta, write_words, DnaString};
use dnagc::enumerators::{count_gc_half_fast, gc_spectrum_brute_force};
use serde_json::{json, Value};

use crate::config::{document, emit, emit_json, RunConfig};
use crate::error::{CliError, CliResult};
use crate::WordFormat;

pub fn count(mut config: RunConfig, file: PathBuf, brute: bool, out: Option<PathBuf>) -> CliResult<()> {
    config.input = Some(file.clone());
    config.output = out.clone();
    let config = config.option("brute", brute);
    config.validate()?;
    let c = super::load_code(&file)?;
    let n = c.len();
    if n % 2 == 0 {
        crate::cache::prime(n);
    }
    let fast = count_gc_half_fast(&c, config.cap)?;
    let mut report =
        json!({ "n": n, "k": c.dim(), "gc_half": Value::Number(fast.to_string().parse().expect("integer")) });
    if brute {
        let spec = gc_spectrum_brute_force(&c, config.cap)?;
        let agrees = *spec.get(n / 2) == fast;
        report["brute_gc_half"] = Value::Number(spec.get(n / 2).to_string().parse().expect("integer"));
        report["agrees"] = json!(agrees);
        if !agrees {
            emit_json(out.as_deref(), &document(&config, &report))?;
            return Err(CliError::Data(format!("fast count {fast} disagrees with enumeration {}", spec.get(n / 2))));
        }
    }
    eprintln!("N_{{n/2}} = {fast}");
    emit_json(out.as_deref(), &document(&config, report))
}

pub fn extract(
    mut config: RunConfig,
    file: PathBuf,
    format: WordFormat,
    ssf_only: bool,
    out: Option<PathBuf>,
) -> CliResult<()> {
    config.input = Some(file.clone());
    config.output = out.clone();
    let config = config.option("format", format).option("ssf_only", ssf_only);
    config.validate()?;
    let c = super::load_code(&file)?;
    let words = extract_gc_half(&c, config.cap)?;
    let total = words.len();
    let kept: Vec<_> = words.into_iter().filter(|w| !ssf_only || is_ss_free(&encode_dna(w))).collect();
    let mut text = format!("# {}\n", serde_json::to_string(&config.provenance()).expect("provenance serializes"));
    match format {
        WordFormat::F4 => {
            for w in &kept {
                text.push_str(&w.to_string());
                text.push('\n');
            }
        }
        WordFormat::Plain | WordFormat::Fasta => {
            let dna: Vec<DnaString> = kept.iter().map(encode_dna).collect();
            text.push_str(&if format == WordFormat::Fasta { write_fasta(&dna, "w") } else { write_words(&dna) });
        }
    }
    eprintln!("{total} GC-balanced codewords, {} written", kept.len());
    emit(out.as_deref(), &text)
}
