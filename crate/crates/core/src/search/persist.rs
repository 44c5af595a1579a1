//! JSONL persistence for search results and a chunk ledger for resuming
//! interrupted runs.
//!
//! A results file starts with one header object, `{"schema": ..., ...}`,
//! followed by one [`SearchRecord`] per line. A ledger file starts with a
//! header naming the task and chunk size; each further line is one finished
//! chunk together with the records it produced, written and flushed as soon
//! as the chunk completes.

use std::collections::BTreeSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::search::candidates::CandidateRange;
use crate::search::record::{merge_results, SearchRecord};
use crate::search::run::ChunkResult;
use crate::search::task::SearchTask;

pub const RESULTS_SCHEMA: &str = "dnagc-search-results/1";
pub const LEDGER_SCHEMA: &str = "dnagc-search-ledger/1";

/// How records are judged against the baseline; written into every results
/// header.
pub const BOUND_METRIC: &str = "a code is recorded when d(C) equals the target distance and |C| = 4^k exceeds the \
    baseline; rc_ok marks codes that are reversible and contain the all-one vector, which makes them closed under \
    reverse-complement";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultsHeader {
    pub schema: String,
    pub generator: String,
    pub metric: String,
    /// Full configuration of the run that produced the file.
    pub config: serde_json::Value,
}

impl ResultsHeader {
    pub fn new(config: serde_json::Value) -> ResultsHeader {
        ResultsHeader {
            schema: RESULTS_SCHEMA.into(),
            generator: format!("{} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION")),
            metric: BOUND_METRIC.into(),
            config,
        }
    }
}

fn parse_err(line: usize, e: serde_json::Error) -> Error {
    Error::Parse { line, msg: e.to_string() }
}

pub fn results_to_jsonl(header: &ResultsHeader, records: &[SearchRecord]) -> String {
    let mut out = serde_json::to_string(header).expect("header serializes");
    out.push('\n');
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("record serializes"));
        out.push('\n');
    }
    out
}

pub fn results_from_jsonl(text: &str) -> Result<(ResultsHeader, Vec<SearchRecord>)> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty results file".into() })?;
    let header: ResultsHeader = serde_json::from_str(first).map_err(|e| parse_err(1, e))?;
    if header.schema != RESULTS_SCHEMA {
        return Err(Error::Parse { line: 1, msg: format!("unsupported schema `{}`", header.schema) });
    }
    let records = lines
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| parse_err(i + 1, e)))
        .collect::<Result<Vec<SearchRecord>>>()?;
    Ok((header, records))
}

pub fn write_results(path: &Path, header: &ResultsHeader, records: &[SearchRecord]) -> Result<()> {
    std::fs::write(path, results_to_jsonl(header, records)).map_err(|e| Error::io(path, e))
}

pub fn read_results(path: &Path) -> Result<(ResultsHeader, Vec<SearchRecord>)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    results_from_jsonl(&text)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
struct LedgerHeader {
    schema: String,
    task: SearchTask,
    chunk_size: u64,
}

#[derive(Serialize, Deserialize)]
struct LedgerLine {
    range: CandidateRange,
    result: ChunkResult,
}

/// Append-only record of finished chunks.
pub struct ChunkLedger {
    path: PathBuf,
    file: Mutex<File>,
    completed: BTreeSet<CandidateRange>,
    records: Vec<SearchRecord>,
}

impl ChunkLedger {
    /// Opens `path`, creating it for `task` if missing. An existing ledger
    /// must belong to the same task and chunk size. A truncated last line,
    /// left by an interrupted write, is ignored.
    pub fn open(path: &Path, task: &SearchTask, chunk_size: u64) -> Result<ChunkLedger> {
        let header = LedgerHeader { schema: LEDGER_SCHEMA.into(), task: task.clone(), chunk_size };
        let mut completed = BTreeSet::new();
        let mut records = Vec::new();
        if path.exists() {
            let f = File::open(path).map_err(|e| Error::io(path, e))?;
            let mut lines = BufReader::new(f).lines();
            let first = lines.next().transpose().map_err(|e| Error::io(path, e))?.unwrap_or_default();
            let found: LedgerHeader = serde_json::from_str(&first).map_err(|e| parse_err(1, e))?;
            if found != header {
                return Err(Error::Parse { line: 1, msg: "ledger belongs to a different task or chunk size".into() });
            }
            for line in lines {
                let line = line.map_err(|e| Error::io(path, e))?;
                let Ok(entry) = serde_json::from_str::<LedgerLine>(&line) else { continue };
                completed.insert(entry.range);
                records.extend(entry.result.records);
            }
        } else {
            let mut text = serde_json::to_string(&header).expect("header serializes");
            text.push('\n');
            std::fs::write(path, text).map_err(|e| Error::io(path, e))?;
        }
        let file = OpenOptions::new().append(true).open(path).map_err(|e| Error::io(path, e))?;
        Ok(ChunkLedger { path: path.to_path_buf(), file: Mutex::new(file), completed, records })
    }

    pub fn completed(&self) -> &BTreeSet<CandidateRange> {
        &self.completed
    }

    /// Records of the chunks finished before this run, merged.
    pub fn previous_records(&self) -> Vec<SearchRecord> {
        merge_results([self.records.clone()])
    }

    pub fn append(&self, range: CandidateRange, result: &ChunkResult) -> Result<()> {
        let mut line = serde_json::to_string(&LedgerLine { range, result: result.clone() }).expect("serializes");
        line.push('\n');
        let mut f = self.file.lock().expect("ledger file");
        f.write_all(line.as_bytes()).and_then(|_| f.flush()).map_err(|e| Error::io(&self.path, e))
    }
}
