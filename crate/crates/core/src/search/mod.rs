//! Exhaustive searches: multiplicity vectors over simplex columns,
//! systematic generators row by row, and parity-check column subsets for
//! high-rate codes. All searches count visited nodes against a budget so
//! results do not depend on machine speed.

use alloc::vec::Vec;

pub mod highrate;
pub mod method1;
pub mod multiset;
pub mod reduction;

pub use highrate::{highrate_column_search, HighRateOutcome, HighRateWitness};
pub use method1::method1_search;
pub use multiset::{enumerate_lcd_multiset, MultisetSearch, SearchSpec, SupportSum};
pub use reduction::{
    apply_main_reduction, reduction_r, reduction_s_prime, ReductionConclusion, ReductionOutcome,
    ReductionPlan,
};

/// Default node budget for searches.
pub const DEFAULT_NODE_BUDGET: u64 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Goal {
    /// Stop at the first witness.
    FindOne,
    /// Collect every witness.
    EnumerateAll,
    /// Expect no witness; stop at the first counterexample.
    ProveEmpty,
}

impl Goal {
    pub(crate) fn stops_at_first(self) -> bool {
        !matches!(self, Goal::EnumerateAll)
    }
}

/// Whether the without-loss-of-generality constraints (pinned unit columns
/// and the first-row weight condition) are applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum SearchMode {
    PaperReplication,
    Unconstrained,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum SearchStatus {
    /// The whole space was explored.
    Exhausted,
    /// Stopped early on a witness (find-one, or a prove-empty refutation).
    Stopped,
    /// Node budget ran out; nothing can be concluded about the unexplored part.
    Inconclusive,
}

/// Result of one search run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome<W> {
    pub status: SearchStatus,
    pub witnesses: Vec<W>,
    pub nodes: u64,
    /// Path at which the budget ran out; feeding it back resumes the run.
    pub cursor: Option<Vec<u32>>,
}

impl<W> SearchOutcome<W> {
    pub(crate) fn new() -> Self {
        Self {
            status: SearchStatus::Exhausted,
            witnesses: Vec::new(),
            nodes: 0,
            cursor: None,
        }
    }

    /// Exhaustive run with no witness.
    pub fn is_proven_empty(&self) -> bool {
        self.status == SearchStatus::Exhausted && self.witnesses.is_empty()
    }

    pub fn found(&self) -> bool {
        !self.witnesses.is_empty()
    }

    pub fn is_inconclusive(&self) -> bool {
        self.status == SearchStatus::Inconclusive && self.witnesses.is_empty()
    }
}

/// Rank of a `dim x dim` matrix stored row-major in `a`.
pub(crate) fn small_rank(q: u8, a: &mut [u8], dim: usize) -> usize {
    let mut rank = 0;
    for c in 0..dim {
        let Some(p) = (rank..dim).find(|&i| a[i * dim + c] != 0) else {
            continue;
        };
        for j in 0..dim {
            a.swap(rank * dim + j, p * dim + j);
        }
        let inv = a[rank * dim + c]; // self-inverse in GF(2), GF(3)
        for i in rank + 1..dim {
            let f = (a[i * dim + c] * inv) % q;
            if f != 0 {
                for j in c..dim {
                    a[i * dim + j] = (a[i * dim + j] + (q - f) * a[rank * dim + j]) % q;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rank_basics() {
        let mut id = [1, 0, 0, 1];
        assert_eq!(small_rank(3, &mut id, 2), 2);
        let mut sing = [1, 2, 2, 1];
        assert_eq!(small_rank(3, &mut sing, 2), 1);
        let mut z = [0u8; 9];
        assert_eq!(small_rank(2, &mut z, 3), 0);
    }
}
