use serde::{Deserialize, Serialize};

use crate::algebra::{Field, LinearCode, Vector, DEFAULT_CAP};
use crate::enumerators::count_gc_half_fast;
use crate::error::{Error, Result};
use crate::groupcodes::{is_reversible, SigmaLayout};
use crate::groups::{build_group, default_reversible_ordering, FiniteGroup, GroupSpec, Ordering};
use crate::search::candidates::{CandidateRange, CandidateSpace};
use crate::search::record::{Baseline, SearchRecord};

/// One search over the candidates of a single group and involution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchTask {
    pub group: GroupSpec,
    /// Involution fixing the reversible ordering; `None` picks the
    /// smallest-index involution.
    pub involution: Option<usize>,
    pub n: usize,
    pub d: u32,
    /// Candidate weights; the plain search uses `[d]`.
    pub weights: Vec<usize>,
    pub baseline: Baseline,
    pub cap: u64,
    /// Whether to count GC-balanced codewords of each recorded code.
    pub gc_half: bool,
    /// Restricts the search to a sub-range of candidate ranks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<CandidateRange>,
}

impl SearchTask {
    pub fn new(group: GroupSpec, n: usize, d: u32, baseline: Baseline) -> SearchTask {
        SearchTask {
            group,
            involution: None,
            n,
            d,
            weights: vec![d as usize],
            baseline,
            cap: DEFAULT_CAP,
            gc_half: true,
            range: None,
        }
    }

    pub fn prepare(&self) -> Result<PreparedTask> {
        if self.d == 0 || self.d as usize > self.n {
            return Err(Error::BadRange(format!("distance {} outside 1..={}", self.d, self.n)));
        }
        let group = build_group(&self.group)?;
        if group.order() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: group.order() });
        }
        let involution = match self.involution {
            Some(g) => g,
            None => *group.involutions().first().ok_or(Error::OddOrderUnsupported(group.order()))?,
        };
        let ordering = default_reversible_ordering(&group, involution)?;
        let layout = SigmaLayout::new(&group, &ordering)?;
        let space = CandidateSpace::new(self.n, &self.weights)?;
        let range = self.range.unwrap_or(CandidateRange::new(0, space.total()));
        Ok(PreparedTask { task: self.clone(), group, involution, ordering, layout, space, range })
    }
}

/// A task with everything derived from its group built once.
#[derive(Clone, Debug)]
pub struct PreparedTask {
    pub task: SearchTask,
    pub group: FiniteGroup,
    pub involution: usize,
    pub ordering: Ordering,
    pub layout: SigmaLayout,
    pub space: CandidateSpace,
    pub range: CandidateRange,
}

/// Properties of one code, independent of which `x` produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct CodeVerdict {
    pub code: LinearCode,
    pub n_half: Option<num_bigint::BigUint>,
}

/// Outcome of evaluating one candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evaluation {
    Rejected,
    Accepted(Box<SearchRecord>),
    /// The distance could not be settled within the enumeration cap.
    Skipped(Error),
}

impl PreparedTask {
    /// σ rows of `x`, or `None` when two rows already lie at a distance in
    /// `(0, d)`.
    pub(crate) fn rows_if_spread(&self, x: &Vector) -> Option<Vec<Vector>> {
        let rows = self.layout.rows(x);
        let d = self.task.d;
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                let w = rows[i].distance(&rows[j]);
                if w > 0 && w < d {
                    return None;
                }
            }
        }
        Some(rows)
    }

    /// Code properties, or `None` when the code fails the size or distance
    /// requirement.
    pub(crate) fn judge(&self, code: LinearCode, x_weight: u32) -> Result<Option<CodeVerdict>> {
        let t = &self.task;
        if code.dim() == 0 || !t.baseline.is_beaten_by(&code.size()) {
            return Ok(None);
        }
        let distance_ok = if x_weight == t.d {
            // x itself is a row, so d(C) ≤ d already
            !code.has_weight_below(t.d, t.cap)?
        } else {
            code.min_distance(t.cap)? == t.d
        };
        if !distance_ok {
            return Ok(None);
        }
        let n_half = if t.gc_half && t.n.is_multiple_of(2) { Some(count_gc_half_fast(&code, t.cap)?) } else { None };
        Ok(Some(CodeVerdict { code, n_half }))
    }

    pub(crate) fn record(&self, x: &Vector, v: &CodeVerdict) -> SearchRecord {
        let reversible = is_reversible(&v.code);
        assert!(reversible, "codes from a reversible ordering are reversible");
        let all_ones = v.code.contains_all_ones();
        SearchRecord {
            x: *x,
            group: self.task.group.clone(),
            group_name: self.group.name().to_string(),
            involution: self.involution,
            ordering: self.ordering.elements().to_vec(),
            n: self.task.n,
            k: v.code.dim(),
            d: self.task.d,
            size: v.code.size(),
            reversible,
            all_ones,
            rc_ok: reversible && all_ones,
            n_half: v.n_half.clone(),
            ffs: None,
            canonical: v.code.canonical_form(),
            timestamp: None,
        }
    }

    /// The group code of `x` under this task's ordering.
    pub fn code_of(&self, x: &Vector) -> LinearCode {
        LinearCode::new(Field::F4, self.task.n, self.layout.rows(x)).expect("rows have the group order")
    }
}

/// Builds the code of `x` and records it when it has distance exactly `d`
/// and beats the baseline.
pub fn evaluate_candidate(x: &Vector, task: &PreparedTask) -> Evaluation {
    let Some(rows) = task.rows_if_spread(x) else {
        return Evaluation::Rejected;
    };
    let code = LinearCode::new(Field::F4, task.task.n, rows).expect("rows have the group order");
    match task.judge(code, x.weight()) {
        Ok(Some(v)) => Evaluation::Accepted(Box::new(task.record(x, &v))),
        Ok(None) => Evaluation::Rejected,
        Err(e) => Evaluation::Skipped(e),
    }
}

/// Rebuilds the code of a record from `x` and checks every stored field.
pub fn verify_record(r: &SearchRecord) -> Result<bool> {
    let mut task = SearchTask::new(r.group.clone(), r.n, r.d, Baseline::Finite(0u32.into()));
    task.involution = Some(r.involution);
    task.weights = vec![r.x.weight() as usize];
    task.gc_half = r.n_half.is_some();
    let prepared = task.prepare()?;
    if prepared.ordering.elements() != r.ordering.as_slice() {
        return Ok(false);
    }
    let code = prepared.code_of(&r.x);
    if code.min_distance(task.cap)? != r.d {
        return Ok(false);
    }
    let Some(v) = prepared.judge(code, r.x.weight())? else {
        return Ok(false);
    };
    let mut again = prepared.record(&r.x, &v);
    again.ffs = r.ffs;
    again.timestamp = r.timestamp.clone();
    Ok(again == *r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinite_baseline_rejects_everything() {
        let t = SearchTask::new(GroupSpec::Cyclic(4), 4, 2, Baseline::Infinite).prepare().unwrap();
        for r in 0..t.space.total() {
            assert_eq!(evaluate_candidate(&t.space.unrank(r), &t), Evaluation::Rejected);
        }
    }

    #[test]
    fn accepted_records_verify() {
        let t = SearchTask::new(GroupSpec::Dihedral(6), 6, 3, Baseline::Finite(0u32.into())).prepare().unwrap();
        let mut found = 0;
        for r in 0..t.space.total() {
            if let Evaluation::Accepted(rec) = evaluate_candidate(&t.space.unrank(r), &t) {
                assert_eq!(rec.d, 3);
                assert!(rec.reversible);
                assert!(verify_record(&rec).unwrap());
                found += 1;
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn bad_tasks() {
        assert!(SearchTask::new(GroupSpec::Cyclic(6), 6, 7, Baseline::Infinite).prepare().is_err());
        assert!(SearchTask::new(GroupSpec::Cyclic(6), 8, 2, Baseline::Infinite).prepare().is_err());
        assert!(SearchTask::new(GroupSpec::Cyclic(5), 5, 2, Baseline::Infinite).prepare().is_err());
    }
}
