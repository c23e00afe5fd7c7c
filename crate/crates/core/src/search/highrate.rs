//! LCD `[n, n - i, 3]` codes as column subsets of the `PG(i-1, q)` points.
//!
//! Distance 3 means the parity-check columns are nonzero and pairwise
//! independent, i.e. `n` distinct projective points. Scaling a column does
//! not change the code's equivalence class or `H H^T` over GF(2) and GF(3),
//! so one representative per point suffices. The code is LCD iff its dual
//! is, i.e. iff `H H^T` is nonsingular (which also forces rank `i`).

use alloc::vec::Vec;

use super::{small_rank, Goal, SearchOutcome, SearchStatus};
use crate::bounds::k_bracket;
use crate::code::LinearCode;
use crate::field::FieldOrder;
use crate::matrix::FqMatrix;
use crate::simplex::simplex_matrix;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighRateWitness {
    pub parity_check: FqMatrix,
    pub code: LinearCode,
}

#[derive(Debug, Clone)]
pub struct HighRateOutcome {
    pub search: SearchOutcome<HighRateWitness>,
    /// `n` exceeds the number of points, so no code exists at all.
    pub excluded_by_bound: bool,
}

/// Enumerates `n`-subsets of the projective points (or their complements,
/// whichever is smaller) and keeps those with a nonsingular Gram matrix.
pub fn highrate_column_search(
    field: FieldOrder,
    n: usize,
    i: usize,
    d: usize,
    goal: Goal,
    budget: u64,
) -> Result<HighRateOutcome> {
    if d != 3 {
        return Err(Error::Precondition("column search covers d = 3 only"));
    }
    if i < 2 || n <= i {
        return Err(Error::Precondition("need 2 <= i < n"));
    }
    let points = k_bracket(field, i as u32) as usize;
    if n > points {
        return Ok(HighRateOutcome {
            search: SearchOutcome::new(),
            excluded_by_bound: true,
        });
    }
    let s = simplex_matrix(field, i);
    let q = field.q();
    let outer: Vec<Vec<u8>> = (0..points)
        .map(|p| {
            let col = s.column(p);
            let mut m = alloc::vec![0u8; i * i];
            for a in 0..i {
                for b in 0..i {
                    m[a * i + b] = (col[a] * col[b]) % q;
                }
            }
            m
        })
        .collect();
    let complement = points - n < n;
    let size = if complement { points - n } else { n };
    let mut gram = alloc::vec![0u8; i * i];
    if complement {
        for m in &outer {
            add_into(&mut gram, m, q, false);
        }
    }
    let mut walk = Walk {
        q,
        dim: i,
        size,
        complement,
        goal,
        outer: &outer,
        chosen: Vec::with_capacity(size),
        nodes: 0,
        budget,
        hits: Vec::new(),
        status: SearchStatus::Exhausted,
        cursor: None,
    };
    walk.dfs(0, &mut gram);

    let mut search = SearchOutcome::new();
    search.status = walk.status;
    search.nodes = walk.nodes;
    search.cursor = walk.cursor;
    for chosen in walk.hits {
        let cols: Vec<usize> = if complement {
            (0..points).filter(|p| !chosen.contains(p)).collect()
        } else {
            chosen
        };
        let h = s.select_columns(&cols);
        let code = LinearCode::from_parity_check(&h)?;
        search.witnesses.push(HighRateWitness {
            parity_check: h,
            code,
        });
    }
    Ok(HighRateOutcome {
        search,
        excluded_by_bound: false,
    })
}

fn add_into(acc: &mut [u8], m: &[u8], q: u8, negate: bool) {
    for (a, &b) in acc.iter_mut().zip(m) {
        let b = if negate { (q - b) % q } else { b };
        *a = (*a + b) % q;
    }
}

struct Walk<'a> {
    q: u8,
    dim: usize,
    size: usize,
    complement: bool,
    goal: Goal,
    outer: &'a [Vec<u8>],
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
    hits: Vec<Vec<usize>>,
    status: SearchStatus,
    cursor: Option<Vec<u32>>,
}

impl Walk<'_> {
    /// Returns false to abort the walk.
    fn dfs(&mut self, start: usize, gram: &mut Vec<u8>) -> bool {
        if self.chosen.len() == self.size {
            let mut g = gram.clone();
            if small_rank(self.q, &mut g, self.dim) == self.dim {
                self.hits.push(self.chosen.clone());
                if self.goal.stops_at_first() {
                    self.status = SearchStatus::Stopped;
                    return false;
                }
            }
            return true;
        }
        let remaining = self.size - self.chosen.len();
        for p in start..=self.outer.len() - remaining {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.status = SearchStatus::Inconclusive;
                let mut path: Vec<u32> = self.chosen.iter().map(|&c| c as u32).collect();
                path.push(p as u32);
                self.cursor = Some(path);
                return false;
            }
            add_into(gram, &self.outer[p], self.q, self.complement);
            self.chosen.push(p);
            let go = self.dfs(p + 1, gram);
            self.chosen.pop();
            add_into(gram, &self.outer[p], self.q, !self.complement);
            if !go {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_ENUMERATION_BUDGET;

    const F2: FieldOrder = FieldOrder::Binary;
    const F3: FieldOrder = FieldOrder::Ternary;

    #[test]
    fn ternary_redundancy_three_is_empty_from_11() {
        for n in 11..=13 {
            let out = highrate_column_search(F3, n, 3, 3, Goal::ProveEmpty, u64::MAX).unwrap();
            assert!(out.search.is_proven_empty(), "n={n}");
        }
        let out = highrate_column_search(F3, 10, 3, 3, Goal::FindOne, u64::MAX).unwrap();
        let w = &out.search.witnesses[0];
        assert!(w.code.is_lcd());
        assert_eq!(w.code.k(), 7);
        assert_eq!(w.code.min_weight(DEFAULT_ENUMERATION_BUDGET).unwrap(), 3);
    }

    #[test]
    fn binary_redundancy_five() {
        for n in 27..=31 {
            let out = highrate_column_search(F2, n, 5, 3, Goal::ProveEmpty, u64::MAX).unwrap();
            assert!(out.search.is_proven_empty(), "n={n}");
        }
        let out = highrate_column_search(F2, 32, 5, 3, Goal::ProveEmpty, u64::MAX).unwrap();
        assert!(out.excluded_by_bound);
    }

    #[test]
    fn enumerate_counts_match_complement_walk() {
        // n = 7 of 13 points walks subsets directly, n = 8 walks complements;
        // Gram(H) + Gram(complement) = Gram(all) ties the two together
        let a = highrate_column_search(F3, 6, 3, 3, Goal::EnumerateAll, u64::MAX).unwrap();
        let b = highrate_column_search(F3, 7, 3, 3, Goal::EnumerateAll, u64::MAX).unwrap();
        for w in a.search.witnesses.iter().chain(&b.search.witnesses) {
            assert!(w.parity_check.gram().is_nonsingular().unwrap());
        }
        assert!(!a.search.witnesses.is_empty());
    }

    #[test]
    fn budget_cut_is_inconclusive() {
        let out = highrate_column_search(F3, 12, 4, 3, Goal::ProveEmpty, 5).unwrap();
        assert_eq!(out.search.status, SearchStatus::Inconclusive);
        assert!(out.search.cursor.is_some());
    }
}
