//! `dnagc tables`: search every group, count GC-balanced words, filter for
//! secondary structure.

use std::path::PathBuf;

use dnagc::groups::GroupSpec;
use dnagc::search::{reproduce_row, TableOptions};

use crate::config::{document, emit_json, RunConfig};
use crate::error::{CliError, CliResult};

pub fn run(
    mut config: RunConfig,
    n: usize,
    d: u32,
    groups: Vec<GroupSpec>,
    all_involutions: bool,
    out: Option<PathBuf>,
) -> CliResult<()> {
    config.n = Some(n);
    config.d = Some(d);
    config.output = out.clone();
    config.groups = groups.iter().map(|g| g.to_string()).collect();
    config.involution = Some(if all_involutions { "all" } else { "first" }.into());
    config.validate()?;
    if !n.is_multiple_of(2) {
        return Err(CliError::Usage(format!("table rows need even n, got {n}")));
    }
    if let Some(g) = groups.iter().find(|g| g.order() != n) {
        return Err(CliError::Usage(format!("{g} has order {}, not {n}", g.order())));
    }
    crate::cache::prime(n);
    let opts = TableOptions { groups, all_involutions, workers: config.workers, cap: config.cap };
    let report = reproduce_row(n, d, &opts)?;
    match (&report.best, &report.best_ffs) {
        (Some(b), Some(f)) => eprintln!(
            "n={n} d={d}: N_{{n/2}}={} ffs={} ({} x={}); highest ffs {} ({} x={}); {:.1} s",
            b.n_half, b.ffs, b.group, b.x, f.ffs, f.group, f.x, report.seconds
        ),
        _ => eprintln!("n={n} d={d}: no reverse-complement closed code found; {:.1} s", report.seconds),
    }
    emit_json(out.as_deref(), &document(&config, report))
}
