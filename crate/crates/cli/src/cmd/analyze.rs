//! `dnagc analyze`: everything cheap to know about a code.

use std::path::PathBuf;

use dnagc::enumerators::{count_gc_half_fast, gc_weight_enumerator, hamming_spectrum, subfield_subcode, trace_code};
use dnagc::groupcodes::is_reversible;
use dnagc::{Error, Field, LinearCode};
use serde::Serialize;
use serde_json::Value;

use crate::config::{document, emit_json, RunConfig};
use crate::error::CliResult;

#[derive(Serialize)]
struct TraceData {
    trace_dim: usize,
    subfield_dim: usize,
    /// dual(C|F2) equals Tr(dual(C)).
    delsarte_consistent: bool,
    /// GC-weight spectrum N_0..N_n, when it fits under the cap.
    gc_spectrum: Option<Value>,
    /// N_{n/2} through Krawtchouk polynomials (even n).
    gc_half: Option<Value>,
}

#[derive(Serialize)]
struct Analysis {
    n: usize,
    k: usize,
    field: String,
    size: Value,
    d: Option<u32>,
    dual_dim: usize,
    reversible: bool,
    all_ones: bool,
    hamming_spectrum: Option<Value>,
    trace: Option<TraceData>,
    canonical: Vec<String>,
    notes: Vec<String>,
}

/// Runs `f`, turning a cap overflow into `None` plus a note.
fn capped<T>(what: &str, notes: &mut Vec<String>, f: impl FnOnce() -> dnagc::Result<T>) -> CliResult<Option<T>> {
    match f() {
        Ok(v) => Ok(Some(v)),
        Err(e @ Error::CapExceeded { .. }) => {
            notes.push(format!("{what}: {e}"));
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

fn number(v: impl ToString) -> Value {
    Value::Number(v.to_string().parse().expect("integer"))
}

pub fn analyze(c: &LinearCode, cap: u64) -> CliResult<Value> {
    let mut notes = Vec::new();
    let n = c.len();
    let d = if c.dim() == 0 {
        notes.push("zero-dimensional code: distance undefined".into());
        None
    } else {
        capped("minimum distance", &mut notes, || c.min_distance(cap))?
    };
    let hamming = capped("Hamming spectrum", &mut notes, || hamming_spectrum(c, cap))?;
    let trace = if c.field() == Field::F4 {
        let t = trace_code(c)?;
        let sub = subfield_subcode(c)?;
        let delsarte = sub.dual() == trace_code(&c.dual())?;
        let gc = capped("GC spectrum", &mut notes, || gc_weight_enumerator(c, cap))?;
        let gc_half = if n.is_multiple_of(2) && n > 0 {
            crate::cache::prime(n);
            capped("GC-balanced count", &mut notes, || count_gc_half_fast(c, cap))?.map(number)
        } else {
            None
        };
        Some(TraceData {
            trace_dim: t.dim(),
            subfield_dim: sub.dim(),
            delsarte_consistent: delsarte,
            gc_spectrum: gc.map(|s| serde_json::to_value(s).expect("spectrum serializes")),
            gc_half,
        })
    } else {
        None
    };
    let report = Analysis {
        n,
        k: c.dim(),
        field: c.field().to_string(),
        size: number(c.size()),
        d,
        dual_dim: c.dual().dim(),
        reversible: is_reversible(c),
        all_ones: c.contains_all_ones(),
        hamming_spectrum: hamming.map(|s| serde_json::to_value(s).expect("spectrum serializes")),
        trace,
        canonical: c.canonical_form(),
        notes,
    };
    Ok(serde_json::to_value(report).expect("report serializes"))
}

pub fn run(mut config: RunConfig, file: PathBuf, out: Option<PathBuf>) -> CliResult<()> {
    config.input = Some(file.clone());
    config.output = out.clone();
    config.validate()?;
    let c = super::load_code(&file)?;
    let report = analyze(&c, config.cap)?;
    eprintln!(
        "[{}, {}, {}] over {}; reversible: {}; all-ones: {}",
        c.len(),
        c.dim(),
        report["d"],
        c.field(),
        report["reversible"],
        report["all_ones"]
    );
    emit_json(out.as_deref(), &document(&config, report))
}
