//! `dnagc search`.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use dnagc::groups::{build_group, entries_of_order, GroupSpec};
use dnagc::search::{
    annotate_ffs, merge_results, results_to_jsonl, CandidateRange, ChunkLedger, ChunkResult, ResultsHeader, RunOptions,
    SearchRecord, SearchTask,
};

use crate::config::{emit, RunConfig};
use crate::error::{CliError, CliResult};
use crate::SearchArgs;

fn groups_for(args: &SearchArgs) -> CliResult<Vec<GroupSpec>> {
    if !args.groups.is_empty() {
        return Ok(args.groups.clone());
    }
    let entries =
        entries_of_order(args.n).map_err(|e| CliError::Usage(format!("no default groups for n = {}: {e}", args.n)))?;
    Ok(entries.iter().map(|e| GroupSpec::Catalog(e.order, e.index)).collect())
}

fn tasks_for(args: &SearchArgs, cap: u64) -> CliResult<Vec<SearchTask>> {
    let mut tasks = Vec::new();
    for spec in groups_for(args)? {
        let group = build_group(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
        let involutions: Vec<Option<usize>> = if args.all_involutions {
            group.involutions().into_iter().map(Some).collect()
        } else {
            vec![args.involution]
        };
        for inv in involutions {
            let mut t = SearchTask::new(spec.clone(), args.n, args.d, args.baseline.clone());
            t.involution = inv;
            t.weights = (args.d as usize..=(args.d as usize + args.widen).min(args.n)).collect();
            t.cap = cap;
            tasks.push(t);
        }
    }
    Ok(tasks)
}

fn ledger_path(base: &Path, index: usize, count: usize) -> PathBuf {
    if count == 1 {
        base.to_path_buf()
    } else {
        let mut s = base.as_os_str().to_owned();
        s.push(format!(".{index}"));
        PathBuf::from(s)
    }
}

fn summary(records: &[SearchRecord]) -> String {
    let best = records
        .iter()
        .filter(|r| r.rc_ok)
        .max_by(|a, b| a.n_half.cmp(&b.n_half).then(a.ffs.cmp(&b.ffs)).then(b.output_cmp(a)));
    let mut s = format!("{} codes recorded", records.len());
    if let Some(r) = records.first() {
        s.push_str(&format!("; largest [{}, {}, {}] from {} x={}", r.n, r.k, r.d, r.group, r.x));
    }
    if let Some(r) = best {
        let n_half = r.n_half.as_ref().map_or("-".to_string(), |v| v.to_string());
        let ffs = r.ffs.map_or("-".to_string(), |v| v.to_string());
        s.push_str(&format!("; best RC-closed: {} x={} k={} N_{{n/2}}={n_half} ffs={ffs}", r.group, r.x, r.k));
    }
    s
}

pub fn run(mut config: RunConfig, args: SearchArgs) -> CliResult<()> {
    config.n = Some(args.n);
    config.d = Some(args.d);
    config.output = args.out.clone();
    config.groups = args.groups.iter().map(|g| g.to_string()).collect();
    config.involution = Some(match (args.all_involutions, args.involution) {
        (true, _) => "all".into(),
        (false, Some(i)) => i.to_string(),
        (false, None) => "first".into(),
    });
    let config = config
        .option("baseline", args.baseline.to_string())
        .option("widen", args.widen)
        .option("ffs", args.ffs)
        .option("chunk_size", args.chunk_size);
    config.validate()?;
    if args.chunk_size == 0 {
        return Err(CliError::Usage("--chunk-size must be positive".into()));
    }

    let tasks = tasks_for(&args, config.cap)?;
    let prepared = tasks
        .iter()
        .map(|t| t.prepare().map_err(|e| CliError::Usage(format!("{}: {e}", t.group))))
        .collect::<CliResult<Vec<_>>>()?;
    if args.n.is_multiple_of(2) {
        crate::cache::prime(args.n);
    }

    // An explicit --resume ledger is kept; the automatic one next to --out
    // only guards against interruption and is removed on success.
    let ledger_base = args.resume.clone().or_else(|| {
        args.out.as_ref().map(|o| {
            let mut s = o.as_os_str().to_owned();
            s.push(".partial");
            PathBuf::from(s)
        })
    });

    let mut streams = Vec::new();
    let mut failed = Vec::new();
    let mut skipped = 0;
    let mut ledgers = Vec::new();
    for (i, p) in prepared.iter().enumerate() {
        let ledger = match &ledger_base {
            Some(base) => {
                let path = ledger_path(base, i, prepared.len());
                Some((ChunkLedger::open(&path, &p.task, args.chunk_size)?, path))
            }
            None => None,
        };
        let completed: Option<BTreeSet<CandidateRange>> = ledger.as_ref().map(|(l, _)| l.completed().clone());
        let append_failed = std::sync::Mutex::new(None);
        let on_finish = |range: CandidateRange, result: &ChunkResult| {
            if let Some((l, _)) = &ledger {
                if let Err(e) = l.append(range, result) {
                    append_failed.lock().expect("flag").get_or_insert(e);
                }
            }
        };
        let opts = RunOptions {
            chunk_size: args.chunk_size,
            completed: completed.as_ref(),
            on_finish: Some(&on_finish),
            ..RunOptions::default()
        };
        let outcome = dnagc::search::run_search_with(p, config.workers, opts);
        if let Some(e) = append_failed.into_inner().expect("flag") {
            return Err(e.into());
        }
        if let Some((l, _)) = &ledger {
            streams.push(l.previous_records());
        }
        eprintln!(
            "{} (involution {}): {} candidates evaluated, {} codes",
            p.task.group,
            p.involution,
            outcome.evaluated,
            outcome.records.len()
        );
        skipped += outcome.skipped.len();
        failed.extend(outcome.failed.iter().map(|r| format!("{} {r:?}", p.task.group)));
        streams.push(outcome.records);
        if let Some((_, path)) = ledger {
            ledgers.push(path);
        }
    }

    let mut records = merge_results(streams);
    if args.ffs {
        annotate_ffs(&mut records, config.cap)?;
    }
    let header = ResultsHeader::new(config.provenance());
    emit(args.out.as_deref(), &results_to_jsonl(&header, &records))?;
    eprintln!("{}", summary(&records));
    if skipped > 0 {
        eprintln!("warning: {skipped} candidates skipped because their distance exceeded the cap");
    }
    if !failed.is_empty() {
        return Err(CliError::Data(format!("{} chunks failed: {}", failed.len(), failed.join(", "))));
    }
    if args.resume.is_none() {
        for path in ledgers {
            let _ = std::fs::remove_file(path);
        }
    }
    Ok(())
}
