//! Parallel search for group codes with good parameters: every candidate
//! generator x of the requested weight is turned into a group code under the
//! reversible ordering, and codes with the exact target distance that beat
//! the baseline size are recorded.

mod candidates;
mod persist;
mod record;
mod run;
mod tables;
mod task;

pub use candidates::{binomial_u64, enumerate_candidates, CandidateRange, CandidateSpace};
pub use persist::{
    read_results, results_from_jsonl, results_to_jsonl, write_results, ChunkLedger, ResultsHeader, BOUND_METRIC,
    LEDGER_SCHEMA, RESULTS_SCHEMA,
};
pub use record::{merge_results, Baseline, SearchRecord};
pub use run::{
    run_search, run_search_with, ChunkResult, RunOptions, SearchOutcome, SkippedCandidate, DEFAULT_CHUNK_SIZE,
};
pub use tables::{
    annotate_ffs, best_ffs_row, best_row, count_ss_free_gc_half, record_code, reproduce_row, GroupRun, TableOptions,
    TableReport, TableRow,
};
pub use task::{evaluate_candidate, verify_record, Evaluation, PreparedTask, SearchTask};
