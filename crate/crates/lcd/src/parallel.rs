//! Splits the multiplicity search at a fixed depth and runs the subtrees on
//! the rayon pool. Results are merged in prefix order, so the outcome does
//! not depend on scheduling.

use lcd_core::search::{MultisetSearch, SearchOutcome, SearchSpec, SearchStatus};
use lcd_core::MultiplicityVector;
use rayon::prelude::*;

use crate::certificate::{PendingPrefix, SplitPlan};

/// Runs every depth-`depth` subtree with its own node budget.
pub fn parallel_multiset(
    spec: &SearchSpec,
    depth: usize,
    budget_per_prefix: u64,
) -> (SearchOutcome<MultiplicityVector>, SplitPlan) {
    let prefixes = MultisetSearch::new(spec).prefixes(depth);
    let parts: Vec<_> = prefixes
        .par_iter()
        .map(|p| MultisetSearch::new(spec).run_prefix(p, budget_per_prefix))
        .collect();
    merge(spec, depth, budget_per_prefix, &prefixes, parts)
}

/// Continues the pending subtrees of an earlier split run.
pub fn resume_parallel(
    spec: &SearchSpec,
    plan: &SplitPlan,
    budget_per_prefix: u64,
) -> (SearchOutcome<MultiplicityVector>, SplitPlan) {
    let prefixes: Vec<Vec<u32>> = plan.pending.iter().map(|p| p.prefix.clone()).collect();
    let parts: Vec<_> = plan
        .pending
        .par_iter()
        .map(|p| MultisetSearch::new(spec).resume_prefix(&p.prefix, &p.cursor, budget_per_prefix))
        .collect();
    merge(spec, plan.depth, budget_per_prefix, &prefixes, parts)
}

fn merge(
    spec: &SearchSpec,
    depth: usize,
    budget_per_prefix: u64,
    prefixes: &[Vec<u32>],
    parts: Vec<SearchOutcome<MultiplicityVector>>,
) -> (SearchOutcome<MultiplicityVector>, SplitPlan) {
    let mut merged = SearchOutcome {
        status: SearchStatus::Exhausted,
        witnesses: Vec::new(),
        nodes: 0,
        cursor: None,
    };
    let mut pending = Vec::new();
    for (prefix, part) in prefixes.iter().zip(parts) {
        merged.nodes += part.nodes;
        merged.witnesses.extend(part.witnesses);
        if part.status == SearchStatus::Inconclusive {
            let cursor = part.cursor.expect("inconclusive runs carry a cursor");
            pending.push(PendingPrefix {
                prefix: prefix.clone(),
                cursor,
            });
        }
    }
    if spec.goal != lcd_core::search::Goal::EnumerateAll && !merged.witnesses.is_empty() {
        merged.witnesses.truncate(1);
        merged.status = SearchStatus::Stopped;
    } else if !pending.is_empty() {
        merged.status = SearchStatus::Inconclusive;
        merged.cursor = Some(pending[0].cursor.clone());
    }
    let plan = SplitPlan {
        depth,
        prefixes: prefixes.len(),
        budget_per_prefix,
        pending,
    };
    (merged, plan)
}
