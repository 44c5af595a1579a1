use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::algebra::{Field, LinearCode, Vector};
use crate::error::Result;
use crate::search::candidates::CandidateRange;
use crate::search::record::{merge_results, SearchRecord};
use crate::search::task::{CodeVerdict, PreparedTask, SearchTask};

pub const DEFAULT_CHUNK_SIZE: u64 = 1 << 12;
const CACHE_LIMIT: usize = 1 << 17;

type ChunkHook<'a> = &'a (dyn Fn(CandidateRange, u32) + Sync);
type ResultHook<'a> = &'a (dyn Fn(CandidateRange, &ChunkResult) + Sync);

/// Knobs for [`run_search_with`].
#[derive(Clone, Copy)]
pub struct RunOptions<'a> {
    /// Ranks per work unit. Chunk boundaries depend only on this value, so a
    /// resumed run sees the same chunks.
    pub chunk_size: u64,
    /// Chunks finished by an earlier run.
    pub completed: Option<&'a BTreeSet<CandidateRange>>,
    /// Attempts per chunk before it is reported as failed.
    pub max_attempts: u32,
    /// Called when a worker starts a chunk, with the attempt number.
    pub on_start: Option<ChunkHook<'a>>,
    /// Called once per finished chunk, before its results are merged.
    pub on_finish: Option<ResultHook<'a>>,
}

impl Default for RunOptions<'_> {
    fn default() -> Self {
        RunOptions { chunk_size: DEFAULT_CHUNK_SIZE, completed: None, max_attempts: 3, on_start: None, on_finish: None }
    }
}

/// A candidate whose distance could not be settled within the cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedCandidate {
    pub x: Vector,
    pub reason: String,
}

/// Results of one chunk.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChunkResult {
    pub records: Vec<SearchRecord>,
    pub skipped: Vec<SkippedCandidate>,
    pub evaluated: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Merged and sorted; identical for every worker count.
    pub records: Vec<SearchRecord>,
    pub skipped: Vec<SkippedCandidate>,
    pub failed: Vec<CandidateRange>,
    /// Candidates evaluated (scalar multiples are folded into one).
    pub evaluated: u64,
}

type Cache = HashMap<LinearCode, Option<CodeVerdict>>;

fn process_chunk(task: &PreparedTask, range: CandidateRange, cache: &mut Cache) -> ChunkResult {
    let mut out = ChunkResult::default();
    let mut best: HashMap<Vec<String>, SearchRecord> = HashMap::new();
    for rank in range.start..range.end {
        // x and αx generate the same code and the normalized one is smaller
        if !task.space.is_normalized(rank) {
            continue;
        }
        out.evaluated += 1;
        let x = task.space.unrank(rank);
        let Some(rows) = task.rows_if_spread(&x) else { continue };
        let code = LinearCode::new(Field::F4, task.task.n, rows).expect("rows have the group order");
        let verdict = match cache.get(&code) {
            Some(v) => v.clone(),
            None => match task.judge(code.clone(), x.weight()) {
                Ok(v) => {
                    if cache.len() >= CACHE_LIMIT {
                        cache.clear();
                    }
                    cache.insert(code, v.clone());
                    v
                }
                Err(e) => {
                    out.skipped.push(SkippedCandidate { x, reason: e.to_string() });
                    continue;
                }
            },
        };
        if let Some(v) = verdict {
            let rec = task.record(&x, &v);
            match best.get(&rec.canonical) {
                Some(cur) if cur.x <= rec.x => {}
                _ => {
                    best.insert(rec.canonical.clone(), rec);
                }
            }
        }
    }
    out.records = merge_results([best.into_values()]);
    out
}

/// Runs the search with `workers` threads and default options.
pub fn run_search(task: &SearchTask, workers: usize) -> Result<Vec<SearchRecord>> {
    Ok(run_search_with(&task.prepare()?, workers, RunOptions::default()).records)
}

/// Runs the search over the task's candidate range. Workers pull chunks
/// from a shared queue; a chunk whose worker panics goes back on the queue
/// until it has used up its attempts.
pub fn run_search_with(task: &PreparedTask, workers: usize, options: RunOptions<'_>) -> SearchOutcome {
    let range = task.range;
    let size = options.chunk_size.max(1);
    let mut chunks = Vec::new();
    let mut s = range.start;
    while s < range.end {
        let c = CandidateRange::new(s, (s + size).min(range.end));
        if !options.completed.is_some_and(|done| done.contains(&c)) {
            chunks.push(c);
        }
        s = c.end;
    }
    let next = AtomicUsize::new(0);
    let retry: Mutex<Vec<(CandidateRange, u32)>> = Mutex::new(Vec::new());
    let results: Mutex<Vec<ChunkResult>> = Mutex::new(Vec::new());
    let failed: Mutex<Vec<CandidateRange>> = Mutex::new(Vec::new());

    std::thread::scope(|scope| {
        for _ in 0..workers.max(1) {
            scope.spawn(|| {
                let mut cache = Cache::new();
                loop {
                    let job = retry.lock().expect("retry queue").pop().or_else(|| {
                        let i = next.fetch_add(1, AtomicOrdering::Relaxed);
                        chunks.get(i).map(|&c| (c, 0))
                    });
                    let Some((chunk, attempt)) = job else { break };
                    let run = catch_unwind(AssertUnwindSafe(|| {
                        if let Some(hook) = options.on_start {
                            hook(chunk, attempt);
                        }
                        process_chunk(task, chunk, &mut cache)
                    }));
                    match run {
                        Ok(res) => {
                            if let Some(hook) = options.on_finish {
                                hook(chunk, &res);
                            }
                            results.lock().expect("results").push(res);
                        }
                        Err(_) => {
                            cache.clear();
                            if attempt + 1 < options.max_attempts {
                                retry.lock().expect("retry queue").push((chunk, attempt + 1));
                            } else {
                                failed.lock().expect("failures").push(chunk);
                            }
                        }
                    }
                }
            });
        }
    });

    let results = results.into_inner().expect("results");
    let evaluated = results.iter().map(|r| r.evaluated).sum();
    let mut skipped: Vec<SkippedCandidate> = results.iter().flat_map(|r| r.skipped.iter().cloned()).collect();
    skipped.sort_by_key(|a| a.x);
    let records = merge_results(results.into_iter().map(|r| r.records));
    let mut failed = failed.into_inner().expect("failures");
    failed.sort();
    SearchOutcome { records, skipped, failed, evaluated }
}
