//! End-to-end search: determinism across worker counts, persistence and
//! resuming from a chunk ledger.

use std::collections::BTreeSet;
use std::sync::Mutex;

use dnagc::groups::GroupSpec;
use dnagc::search::{
    read_results, run_search, run_search_with, verify_record, write_results, Baseline, CandidateRange, ChunkLedger,
    ResultsHeader, RunOptions, SearchTask,
};
use num_bigint::BigUint;

fn task() -> SearchTask {
    SearchTask::new("catalog:10:1".parse().unwrap(), 10, 4, Baseline::Finite(BigUint::ZERO))
}

fn temp_path(name: &str) -> std::path::PathBuf {
    let p = std::env::temp_dir().join(format!("dnagc-pipeline-{}-{name}", std::process::id()));
    let _ = std::fs::remove_file(&p);
    p
}

#[test]
fn worker_count_does_not_change_results() {
    let one = run_search(&task(), 1).unwrap();
    let three = run_search(&task(), 3).unwrap();
    assert!(!one.is_empty());
    assert_eq!(one, three);
    for r in one.iter().take(20) {
        assert!(verify_record(r).unwrap());
        assert_eq!(r.d, 4);
        assert!(r.reversible);
    }
}

#[test]
fn results_file_round_trips() {
    let records = run_search(&task(), 2).unwrap();
    let path = temp_path("results.jsonl");
    let header = ResultsHeader::new(serde_json::to_value(task()).unwrap());
    write_results(&path, &header, &records).unwrap();
    let (back_header, back) = read_results(&path).unwrap();
    assert_eq!(back_header, header);
    assert_eq!(back, records);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn resumed_search_matches_a_single_run() {
    let full = run_search(&task(), 1).unwrap();
    let prepared = task().prepare().unwrap();
    let chunk_size = 1024;
    let path = temp_path("ledger.jsonl");

    // first pass stops after a handful of chunks
    {
        let ledger = ChunkLedger::open(&path, &task(), chunk_size).unwrap();
        let done = Mutex::new(0);
        let record = |range: CandidateRange, result: &dnagc::search::ChunkResult| {
            let mut n = done.lock().unwrap();
            if *n < 5 {
                ledger.append(range, result).unwrap();
                *n += 1;
            }
        };
        let opts = RunOptions { chunk_size, on_finish: Some(&record), ..RunOptions::default() };
        run_search_with(&prepared, 1, opts);
    }

    let ledger = ChunkLedger::open(&path, &task(), chunk_size).unwrap();
    let completed: BTreeSet<CandidateRange> = ledger.completed().clone();
    assert_eq!(completed.len(), 5);
    let opts = RunOptions { chunk_size, completed: Some(&completed), ..RunOptions::default() };
    let rest = run_search_with(&prepared, 2, opts);
    let merged = dnagc::search::merge_results([ledger.previous_records(), rest.records]);
    assert_eq!(merged, full);

    // a ledger for a different task is refused
    let mut other = task();
    other.group = GroupSpec::Catalog(10, 2);
    assert!(ChunkLedger::open(&path, &other, chunk_size).is_err());
    std::fs::remove_file(path).unwrap();
}
