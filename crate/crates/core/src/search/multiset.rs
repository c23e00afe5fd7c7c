//! Depth-first enumeration of multiplicity vectors `m` whose codes
//! `C_{q,k}(m)` are LCD with minimum weight at least `d`.
//!
//! Every projective class `x` has weight `n - H_x`, where `H_x` is the total
//! multiplicity of columns orthogonal to `x`. The search assigns indices in
//! order, keeps `H_x <= n - d` for every class, and prunes when the mass
//! still to be placed cannot avoid some hyperplane.

use alloc::vec;
use alloc::vec::Vec;

use super::{Goal, SearchMode, SearchOutcome, SearchStatus};
use crate::field::FieldOrder;
use crate::simplex::{
    first_row_support, min_self_orthogonal_dim, multiplicity_bounds, unit_column_indices,
    MultiplicityBounds, MultiplicityVector, SimplexGeometry,
};
use crate::{Error, Result};

/// Forces `sum_{i in indices} m_i = target`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SupportSum {
    /// 1-based indices.
    pub indices: Vec<usize>,
    pub target: u32,
}

/// Constraint bundle for a multiplicity-vector search.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchSpec {
    pub field: FieldOrder,
    pub k: usize,
    pub n: u32,
    pub d: u32,
    /// Per-index bounds on `m_i` from the LCD multiplicity lemma.
    pub bounds: MultiplicityBounds,
    /// 1-based indices forced to `m_i >= 1`.
    pub pinned: Vec<usize>,
    pub support_sum: Option<SupportSum>,
    pub mode: SearchMode,
    pub goal: Goal,
}

impl SearchSpec {
    /// Builds the spec for `[n, k, >= d]`. Paper-replication mode pins the
    /// unit columns and makes the first message row have weight exactly `d`.
    pub fn new(
        field: FieldOrder,
        k: usize,
        n: u32,
        d: u32,
        mode: SearchMode,
        goal: Goal,
    ) -> Result<Self> {
        if k < min_self_orthogonal_dim(field) {
            return Err(Error::Precondition(
                "multiplicity search needs k at or above the self-orthogonality threshold",
            ));
        }
        if d == 0 || (n as usize) < k {
            return Err(Error::Precondition("need d >= 1 and n >= k"));
        }
        let bounds = multiplicity_bounds(field, k, n as u64, d as u64)?;
        let (pinned, support_sum) = match mode {
            SearchMode::PaperReplication => (
                unit_column_indices(field, k),
                Some(SupportSum {
                    indices: first_row_support(field, k),
                    target: d,
                }),
            ),
            SearchMode::Unconstrained => (Vec::new(), None),
        };
        Ok(Self {
            field,
            k,
            n,
            d,
            bounds,
            pinned,
            support_sum,
            mode,
            goal,
        })
    }

    pub fn with_goal(mut self, goal: Goal) -> Self {
        self.goal = goal;
        self
    }

    /// Number of indices, `[k]_q`.
    pub fn len(&self) -> usize {
        crate::bounds::k_bracket(self.field, self.k as u32) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Runs the search sequentially from the root.
pub fn enumerate_lcd_multiset(spec: &SearchSpec, budget: u64) -> SearchOutcome<MultiplicityVector> {
    MultisetSearch::new(spec).run(budget)
}

enum Flow {
    Continue,
    Stop,
    Abort,
}

/// Precomputed search tables plus the mutable DFS state.
pub struct MultisetSearch<'a> {
    spec: &'a SearchSpec,
    geo: SimplexGeometry,
    size: usize,
    lo: Vec<u32>,
    hi: Vec<u32>,
    /// Maximum hyperplane mass, `n - d`.
    limit: u32,
    /// `cap_out[j * size + x]`: sum of `hi_i` over `i >= j` not orthogonal to `x`.
    cap_out: Vec<u32>,
    /// Suffix sums of `hi` and `lo`.
    cap_total: Vec<u32>,
    lo_total: Vec<u32>,
    in_support: Vec<bool>,
    cap_support: Vec<u32>,
    feasible_root: bool,
    // DFS state
    m: Vec<u32>,
    hyper: Vec<u32>,
    assigned: u32,
    support: u32,
    nodes: u64,
    budget: u64,
    outcome: SearchOutcome<MultiplicityVector>,
}

impl<'a> MultisetSearch<'a> {
    pub fn new(spec: &'a SearchSpec) -> Self {
        let geo = SimplexGeometry::new(spec.field, spec.k);
        let size = geo.len();
        let b = spec.bounds;
        let feasible_bounds = !b.is_empty() && b.hi >= 0;
        let base_lo = b.lo.max(0) as u32;
        let base_hi = if feasible_bounds {
            b.hi.min(spec.n as i64) as u32
        } else {
            0
        };
        let mut lo = vec![base_lo; size];
        let hi = vec![base_hi; size];
        for &p in &spec.pinned {
            lo[p - 1] = lo[p - 1].max(1);
        }
        let feasible_root =
            feasible_bounds && lo.iter().zip(&hi).all(|(l, h)| l <= h) && spec.d <= spec.n;
        let limit = spec.n.saturating_sub(spec.d);

        let mut cap_out = vec![0u32; (size + 1) * size];
        let mut cap_total = vec![0u32; size + 1];
        let mut lo_total = vec![0u32; size + 1];
        let mut in_support = vec![false; size];
        if let Some(ss) = &spec.support_sum {
            for &i in &ss.indices {
                in_support[i - 1] = true;
            }
        }
        let mut cap_support = vec![0u32; size + 1];
        let mut orth = vec![false; size * size];
        for (i, list) in geo.orthogonal.iter().enumerate() {
            for &x in list {
                orth[i * size + x] = true;
            }
        }
        for j in (0..size).rev() {
            cap_total[j] = cap_total[j + 1] + hi[j];
            lo_total[j] = lo_total[j + 1] + lo[j];
            cap_support[j] = cap_support[j + 1] + if in_support[j] { hi[j] } else { 0 };
            for x in 0..size {
                let add = if orth[j * size + x] { 0 } else { hi[j] };
                cap_out[j * size + x] = cap_out[(j + 1) * size + x] + add;
            }
        }
        Self {
            spec,
            geo,
            size,
            lo,
            hi,
            limit,
            cap_out,
            cap_total,
            lo_total,
            in_support,
            cap_support,
            feasible_root,
            m: vec![0; size],
            hyper: vec![0; size],
            assigned: 0,
            support: 0,
            nodes: 0,
            budget: u64::MAX,
            outcome: SearchOutcome::new(),
        }
    }

    fn reset(&mut self, budget: u64) {
        self.m.iter_mut().for_each(|v| *v = 0);
        self.hyper.iter_mut().for_each(|v| *v = 0);
        self.assigned = 0;
        self.support = 0;
        self.nodes = 0;
        self.budget = budget;
        self.outcome = SearchOutcome::new();
    }

    /// Explores the whole tree.
    pub fn run(mut self, budget: u64) -> SearchOutcome<MultiplicityVector> {
        self.reset(budget);
        if self.feasible_root && self.feasible(0) {
            self.drive(0, None);
        }
        self.finish()
    }

    /// Continues a run that stopped at `cursor` (as reported in
    /// [`SearchOutcome::cursor`]). Nodes before the cursor in branch order
    /// are skipped.
    pub fn resume(mut self, cursor: &[u32], budget: u64) -> SearchOutcome<MultiplicityVector> {
        self.reset(budget);
        if self.feasible_root && self.feasible(0) {
            self.drive(0, Some(cursor));
        }
        self.finish()
    }

    /// Explores only the subtree below the given assignment of the first
    /// `prefix.len()` indices.
    pub fn run_prefix(self, prefix: &[u32], budget: u64) -> SearchOutcome<MultiplicityVector> {
        self.run_below(prefix, None, budget)
    }

    /// Continues a [`run_prefix`](Self::run_prefix) call that stopped at
    /// `cursor`, staying inside the prefix's subtree.
    pub fn resume_prefix(
        self,
        prefix: &[u32],
        cursor: &[u32],
        budget: u64,
    ) -> SearchOutcome<MultiplicityVector> {
        self.run_below(prefix, Some(cursor), budget)
    }

    fn run_below(
        mut self,
        prefix: &[u32],
        cursor: Option<&[u32]>,
        budget: u64,
    ) -> SearchOutcome<MultiplicityVector> {
        self.reset(budget);
        if !self.feasible_root || !self.feasible(0) {
            return self.finish();
        }
        for (j, &v) in prefix.iter().enumerate() {
            if v < self.lo[j] || v > self.hi[j] || !self.apply(j, v) || !self.feasible(j + 1) {
                return self.finish();
            }
        }
        self.drive(prefix.len(), cursor);
        self.finish()
    }

    /// All feasible assignments of the first `depth` indices, in branch
    /// order. Running every prefix covers the full tree exactly once.
    pub fn prefixes(mut self, depth: usize) -> Vec<Vec<u32>> {
        self.reset(u64::MAX);
        let mut out = Vec::new();
        if self.feasible_root && self.feasible(0) {
            self.collect_prefixes(0, depth.min(self.size), &mut out);
        }
        out
    }

    fn collect_prefixes(&mut self, j: usize, depth: usize, out: &mut Vec<Vec<u32>>) {
        if j == depth {
            out.push(self.m[..depth].to_vec());
            return;
        }
        let top = self.hi[j].min(self.spec.n - self.assigned);
        for v in (self.lo[j]..=top).rev() {
            if self.apply(j, v) && self.feasible(j + 1) {
                self.collect_prefixes(j + 1, depth, out);
            }
            self.undo(j, v);
        }
    }

    fn finish(self) -> SearchOutcome<MultiplicityVector> {
        let mut out = self.outcome;
        out.nodes = self.nodes;
        out
    }

    fn drive(&mut self, j: usize, cursor: Option<&[u32]>) {
        if let Flow::Stop = self.dfs(j, cursor) {
            self.outcome.status = SearchStatus::Stopped;
        }
    }

    /// Adds `v` copies of column `j`. Returns false if some class weight
    /// drops below `d`; the caller must still call `undo`.
    #[inline]
    fn apply(&mut self, j: usize, v: u32) -> bool {
        self.m[j] = v;
        if v == 0 {
            return true;
        }
        self.assigned += v;
        if self.in_support[j] {
            self.support += v;
        }
        let mut ok = true;
        for &x in &self.geo.orthogonal[j] {
            self.hyper[x] += v;
            ok &= self.hyper[x] <= self.limit;
        }
        ok
    }

    #[inline]
    fn undo(&mut self, j: usize, v: u32) {
        self.m[j] = 0;
        if v == 0 {
            return;
        }
        self.assigned -= v;
        if self.in_support[j] {
            self.support -= v;
        }
        for &x in &self.geo.orthogonal[j] {
            self.hyper[x] -= v;
        }
    }

    /// Can the remaining indices `j..` still complete a valid vector?
    #[inline]
    fn feasible(&self, j: usize) -> bool {
        let rem = self.spec.n - self.assigned;
        if rem > self.cap_total[j] || rem < self.lo_total[j] {
            return false;
        }
        if let Some(ss) = &self.spec.support_sum {
            if self.support > ss.target || self.support + self.cap_support[j] < ss.target {
                return false;
            }
        }
        let caps = &self.cap_out[j * self.size..(j + 1) * self.size];
        self.hyper
            .iter()
            .zip(caps)
            .all(|(&h, &cap)| cap + (self.limit - h) >= rem)
    }

    fn dfs(&mut self, j: usize, cursor: Option<&[u32]>) -> Flow {
        if j == self.size
            || (self.assigned == self.spec.n && self.lo_total[j] == 0 && cursor.is_none())
        {
            return self.leaf();
        }
        let rem = self.spec.n - self.assigned;
        let mut top = self.hi[j].min(rem);
        let mut on_path = false;
        if let Some(c) = cursor {
            if let Some(&cv) = c.get(j) {
                top = top.min(cv);
                on_path = j + 1 < c.len();
            }
        }
        for v in (self.lo[j]..=top).rev() {
            self.nodes += 1;
            if self.nodes > self.budget {
                let mut path = self.m[..j].to_vec();
                path.push(v);
                self.outcome.cursor = Some(path);
                self.outcome.status = SearchStatus::Inconclusive;
                return Flow::Abort;
            }
            let child_cursor = if on_path && Some(&v) == cursor.and_then(|c| c.get(j)) {
                cursor
            } else {
                None
            };
            let flow = if self.apply(j, v) && self.feasible(j + 1) {
                self.dfs(j + 1, child_cursor)
            } else {
                Flow::Continue
            };
            self.undo(j, v);
            match flow {
                Flow::Continue => {}
                other => return other,
            }
        }
        Flow::Continue
    }

    fn leaf(&mut self) -> Flow {
        if let Some(ss) = &self.spec.support_sum {
            if self.support != ss.target {
                return Flow::Continue;
            }
        }
        if self.assigned != self.spec.n || !self.gram_nonsingular() {
            return Flow::Continue;
        }
        let mv = MultiplicityVector::new(self.spec.field, self.spec.k, self.m.clone())
            .expect("length matches");
        self.outcome.witnesses.push(mv);
        if self.spec.goal.stops_at_first() {
            Flow::Stop
        } else {
            Flow::Continue
        }
    }

    fn gram_nonsingular(&self) -> bool {
        let k = self.spec.k;
        let q = self.spec.field.q() as u32;
        let mut acc = vec![0u32; k * k];
        for (i, &mult) in self.m.iter().enumerate() {
            let c = mult % q;
            if c == 0 {
                continue;
            }
            let h = &self.geo.columns[i];
            for a in 0..k {
                if h[a] == 0 {
                    continue;
                }
                for b in 0..k {
                    acc[a * k + b] += c * h[a] as u32 * h[b] as u32;
                }
            }
        }
        let mut gram: Vec<u8> = acc.iter().map(|&v| (v % q) as u8).collect();
        super::small_rank(q as u8, &mut gram, k) == k
    }
}
