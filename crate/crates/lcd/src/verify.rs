//! Table verification harness.
//!
//! Every cell is recomputed from local evidence where that is feasible at
//! desk scale: closed formulas, bounds, explicit codes, or exhaustive
//! searches under a node budget. Cells resting on results this crate does
//! not reproduce are reported as `cited-external` and never as `pass`.

use std::fmt::Write as _;

use lcd_core::bounds::{
    griesmer_g, griesmer_sum, k_bracket, lcd_upper_bound, sphere_packing_max_n, BoundRule,
};
use lcd_core::search::{
    apply_main_reduction, enumerate_lcd_multiset, highrate_column_search, method1_search, Goal,
    ReductionConclusion, ReductionPlan, SearchMode, SearchSpec, SearchStatus,
};
use lcd_core::simplex::{build_multiset_code, extend_lcd, min_self_orthogonal_dim};
use lcd_core::{FieldOrder, FqMatrix, LinearCode, DEFAULT_ENUMERATION_BUDGET};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{build_parity_family, pad_with_column_pairs};
use crate::heuristic::{local_search_multiset, local_search_systematic, LocalSearch};
use crate::paper::tables::{self, SmallCell};
use crate::paper::{all_codes, build_paper_code, claim, h25_lcd_matrix, h26_matrix, PaperCodeId};

pub const TABLES: [&str; 11] = [
    "g2-5",
    "g3-4",
    "r2-5",
    "r3-4",
    "t-codes",
    "fig-matrices",
    "d3-small",
    "d2-n5-highrate",
    "d3-highrate",
    "theorem-2-5-desk",
    "theorem-3-4-desk",
];

// scalar work allowed to one systematic local search
const SYSTEMATIC_WORK: u64 = 4_000_000_000;

pub const DEFAULT_VERIFY_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Node budget for each individual search.
    pub budget: u64,
    /// Mode used for multiplicity-vector nonexistence searches.
    pub multiset_mode: SearchMode,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_VERIFY_BUDGET,
            multiset_mode: SearchMode::PaperReplication,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellStatus {
    Pass,
    Fail,
    CitedExternal,
    Inconclusive,
    Open,
}

impl CellStatus {
    pub fn tag(self) -> &'static str {
        match self {
            CellStatus::Pass => "pass",
            CellStatus::Fail => "fail",
            CellStatus::CitedExternal => "cited-external",
            CellStatus::Inconclusive => "inconclusive",
            CellStatus::Open => "open",
        }
    }
}

/// One piece of evidence for or against a claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Verified(String),
    Refuted(String),
    Cited(String),
    Unknown(String),
}

impl Check {
    fn text(&self) -> String {
        match self {
            Check::Verified(s) => format!("verified: {s}"),
            Check::Refuted(s) => format!("refuted: {s}"),
            Check::Cited(s) => format!("cited: {s}"),
            Check::Unknown(s) => format!("inconclusive: {s}"),
        }
    }

    pub fn is_verified(&self) -> bool {
        matches!(self, Check::Verified(_))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Cell {
    pub label: String,
    pub claimed: String,
    pub computed: String,
    pub evidence: Vec<String>,
    pub status: CellStatus,
}

impl Cell {
    fn new(
        label: impl Into<String>,
        claimed: impl ToString,
        computed: impl ToString,
        checks: &[Check],
    ) -> Self {
        let status = if checks.iter().any(|c| matches!(c, Check::Refuted(_))) {
            CellStatus::Fail
        } else if checks.iter().any(|c| matches!(c, Check::Unknown(_))) {
            CellStatus::Inconclusive
        } else if checks.iter().any(|c| matches!(c, Check::Cited(_))) {
            CellStatus::CitedExternal
        } else {
            CellStatus::Pass
        };
        Self {
            label: label.into(),
            claimed: claimed.to_string(),
            computed: computed.to_string(),
            evidence: checks.iter().map(Check::text).collect(),
            status,
        }
    }

    fn exact(label: impl Into<String>, claimed: u64, computed: u64, how: &str) -> Self {
        let check = if claimed == computed {
            Check::Verified(how.to_owned())
        } else {
            Check::Refuted(format!("{how} gives {computed}"))
        };
        Self::new(label, claimed, computed, &[check])
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReport {
    pub table: String,
    pub cells: Vec<Cell>,
}

impl TableReport {
    pub fn count(&self, status: CellStatus) -> usize {
        self.cells.iter().filter(|c| c.status == status).count()
    }

    pub fn has_failures(&self) -> bool {
        self.count(CellStatus::Fail) > 0
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} cells, {} pass, {} fail, {} cited-external, {} inconclusive, {} open",
            self.table,
            self.cells.len(),
            self.count(CellStatus::Pass),
            self.count(CellStatus::Fail),
            self.count(CellStatus::CitedExternal),
            self.count(CellStatus::Inconclusive),
            self.count(CellStatus::Open),
        )
    }

    /// Fixed-width text rendering, one line per cell plus a summary.
    pub fn render(&self) -> String {
        let w = self.cells.iter().map(|c| c.label.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.cells {
            writeln!(
                out,
                "{:<w$}  claimed={:<6} computed={:<6} {:<14} {}",
                c.label,
                c.claimed,
                c.computed,
                c.status.tag(),
                c.evidence.join("; ")
            )
            .expect("writing to a String");
        }
        out.push_str(&self.summary());
        out.push('\n');
        out
    }
}

pub fn verify_table(name: &str, opts: &VerifyOptions) -> Result<TableReport> {
    let cells = match name {
        "g2-5" => griesmer_table(FieldOrder::Binary),
        "g3-4" => griesmer_table(FieldOrder::Ternary),
        "r2-5" => reduction_table(FieldOrder::Binary),
        "r3-4" => reduction_table(FieldOrder::Ternary),
        "t-codes" => code_table(|id| matches!(id, PaperCodeId::T(_))),
        "fig-matrices" => code_table(|id| matches!(id, PaperCodeId::M { .. })),
        "d3-small" => small_ternary(opts),
        "d2-n5-highrate" => binary_redundancy_five(opts),
        "d3-highrate" => ternary_high_rate(opts),
        "theorem-2-5-desk" => theorem_desk(FieldOrder::Binary, opts),
        "theorem-3-4-desk" => theorem_desk(FieldOrder::Ternary, opts),
        other => return Err(Error::UnknownTable(other.to_owned(), TABLES.join(", "))),
    };
    Ok(TableReport {
        table: name.to_owned(),
        cells,
    })
}

fn griesmer_table(field: FieldOrder) -> Vec<Cell> {
    let k = tables::family(field);
    let kb = k_bracket(field, k);
    let top = field.pow(k - 1);
    let offsets = tables::g_offsets(field);
    let mut cells = Vec::new();
    for s in 0..4u64 {
        for (t, off) in offsets.iter().enumerate() {
            let n = kb * s + t as u64;
            let label = format!("n={kb}*{s}+{t}");
            cells.push(Cell::exact(
                label,
                top * s + off,
                griesmer_g(field, n, k),
                "griesmer_g",
            ));
        }
    }
    cells
}

fn reduction_table(field: FieldOrder) -> Vec<Cell> {
    let k = tables::family(field);
    tables::r_table(field)
        .iter()
        .map(|&(t, r)| {
            let label = format!("t={t}");
            match ReductionPlan::new(field, k, t, tables::alpha(field, t)) {
                Ok(plan) => Cell::exact(
                    label,
                    r as u64,
                    plan.r as u64,
                    "reduction_r with integral s'",
                ),
                Err(e) => Cell::new(label, r, "-", &[Check::Refuted(e.to_string())]),
            }
        })
        .collect()
}

/// Checks length, dimension, LCD and the exact minimum distance.
pub fn check_code(c: &LinearCode, field: FieldOrder, n: usize, k: usize, d: usize) -> Check {
    if c.field() != field || c.n() != n || c.k() != k {
        return Check::Refuted(format!(
            "built a [{}, {}] code over {}",
            c.n(),
            c.k(),
            c.field()
        ));
    }
    if !c.is_lcd() {
        return Check::Refuted("not LCD".to_owned());
    }
    match c.min_distance(DEFAULT_ENUMERATION_BUDGET) {
        Ok(w) if w == d => Check::Verified(format!("LCD [{n},{k},{d}]")),
        Ok(w) => Check::Refuted(format!("minimum distance {w}")),
        Err(e) => Check::Unknown(e.to_string()),
    }
}

fn code_table(select: impl Fn(&PaperCodeId) -> bool + Sync) -> Vec<Cell> {
    let ids: Vec<PaperCodeId> = all_codes().into_iter().filter(|id| select(id)).collect();
    ids.par_iter()
        .map(|&id| {
            let cl = claim(id).expect("listed ids have claims");
            let claimed = format!("[{},{},{}]", cl.n, cl.k, cl.d);
            match build_paper_code(id) {
                Ok(c) => {
                    let check = check_code(&c, cl.field, cl.n, cl.k, cl.d);
                    let computed = if check.is_verified() {
                        claimed.clone()
                    } else {
                        "-".to_owned()
                    };
                    Cell::new(id.to_string(), &claimed, computed, &[check])
                }
                Err(e) => Cell::new(
                    id.to_string(),
                    &claimed,
                    "-",
                    &[Check::Refuted(e.to_string())],
                ),
            }
        })
        .collect()
}

/// Does the multiplicity search apply (dimension between the
/// self-orthogonality threshold and the sizes the search is tuned for)?
fn multiset_dimension(field: FieldOrder, k: usize) -> bool {
    k >= min_self_orthogonal_dim(field) && k_bracket(field, k as u32) <= 40
}

fn pad_zero_columns(c: &LinearCode, n: usize) -> Result<LinearCode> {
    let extra = FqMatrix::zeros(c.field(), c.k(), n - c.n());
    Ok(LinearCode::from_generator(c.generator().hconcat(&extra)?)?)
}

/// Searches for an LCD `[n, k, >= d]` code. Shorter codes found by the
/// multiplicity search are padded with zero coordinates.
pub fn find_lcd(
    field: FieldOrder,
    n: usize,
    k: usize,
    d: usize,
    budget: u64,
) -> (Check, Option<LinearCode>) {
    let mut inconclusive = false;
    if multiset_dimension(field, k) {
        if let Some(mv) = local_search_multiset(field, k, n, d, LocalSearch::default()) {
            return match build_multiset_code(&mv) {
                Ok(c) => (
                    Check::Verified(format!("local-search witness m={mv}")),
                    Some(c),
                ),
                Err(e) => (Check::Refuted(e.to_string()), None),
            };
        }
        // paper mode fixes the minimum weight, so every admissible value is tried
        let shortest = griesmer_sum(field, k as u32, d as u64) as usize;
        for len in (shortest.max(k)..=n).rev() {
            let upper = lcd_upper_bound(field, len as u64, k as u32).lcd_upper as usize;
            for dd in d..=upper {
                let Ok(spec) = SearchSpec::new(
                    field,
                    k,
                    len as u32,
                    dd as u32,
                    SearchMode::PaperReplication,
                    Goal::FindOne,
                ) else {
                    continue;
                };
                let out = enumerate_lcd_multiset(&spec, budget);
                if let Some(mv) = out.witnesses.first() {
                    let code = build_multiset_code(mv).map_err(Error::from);
                    return match code.and_then(|c| pad_zero_columns(&c, n)) {
                        Ok(c) => (
                            Check::Verified(format!("multiset witness m={mv} (length {len})")),
                            Some(c),
                        ),
                        Err(e) => (Check::Refuted(e.to_string()), None),
                    };
                }
                inconclusive |= out.status == SearchStatus::Inconclusive;
            }
        }
    } else {
        if let Some((c, how)) = systematic_witness(field, n, k, d) {
            return (Check::Verified(how), Some(c));
        }
        let top = griesmer_g(field, n as u64, k as u32) as usize;
        for dd in d..=top.min(n - k + 1) {
            if n <= k {
                break;
            }
            let Ok(out) = method1_search(field, n, k, dd, true, Goal::FindOne, budget) else {
                inconclusive = true;
                continue;
            };
            if let Some(c) = out.witnesses.into_iter().next() {
                return (
                    Check::Verified(format!("systematic search witness with d={dd}")),
                    Some(c),
                );
            }
            inconclusive |= out.status == SearchStatus::Inconclusive;
        }
    }
    if inconclusive {
        (
            Check::Unknown(format!("no LCD [{n},{k},{d}] witness within budget")),
            None,
        )
    } else {
        (
            Check::Refuted(format!(
                "exhaustive search found no LCD [{n},{k},>={d}] code"
            )),
            None,
        )
    }
}

/// Local search for `[n, k, >= d]`, then for `[n+1, k+1, >= d]` followed by
/// shortening at each coordinate. Shortening keeps the distance but not
/// always the LCD property, so each candidate is tested.
fn systematic_witness(
    field: FieldOrder,
    n: usize,
    k: usize,
    d: usize,
) -> Option<(LinearCode, String)> {
    let attempt = |n: usize, k: usize| {
        let messages = field.pow(k as u32) / (field.q() as u64 - 1);
        let steps = (SYSTEMATIC_WORK / (16 * messages.max(1))).min(50_000) as u32;
        if steps < 1_000 {
            return None;
        }
        let params = LocalSearch {
            restarts: 16,
            steps,
            ..LocalSearch::default()
        };
        local_search_systematic(field, n, k, d, params)
    };
    if let Some(c) = attempt(n, k) {
        return Some((
            c,
            format!("local-search systematic witness [{n},{k},>={d}]"),
        ));
    }
    let longer = attempt(n + 1, k + 1)?;
    (0..=n).find_map(|t| {
        let c = longer
            .shorten(t)
            .ok()
            .filter(|c| c.k() == k && c.is_lcd())?;
        Some((
            c,
            format!(
                "local-search [{},{},>={d}] witness shortened at coordinate {t}",
                n + 1,
                k + 1
            ),
        ))
    })
}

/// Establishes that no LCD `[n, k, d']` code exists for any `d' >= d_from`.
pub fn prove_no_lcd(
    field: FieldOrder,
    n: usize,
    k: usize,
    d_from: usize,
    opts: &VerifyOptions,
) -> Check {
    let v = lcd_upper_bound(field, n as u64, k as u32);
    if d_from as u64 > v.lcd_upper {
        let why = if v.rule == BoundRule::None || d_from as u64 > v.griesmer {
            "Griesmer bound"
        } else {
            v.rule.tag()
        };
        return Check::Verified(format!("d >= {d_from} excluded by {why}"));
    }
    let mut runs = 0usize;
    let mut nodes = 0u64;
    if multiset_dimension(field, k) {
        // dropping zero coordinates keeps LCD and d, so shorter lengths
        // without zero coordinates cover the rest
        let shortest = griesmer_sum(field, k as u32, d_from as u64) as usize;
        for len in shortest.max(k)..=n {
            let upper = lcd_upper_bound(field, len as u64, k as u32).lcd_upper as usize;
            let distances: Vec<usize> = match opts.multiset_mode {
                SearchMode::Unconstrained if d_from <= upper => vec![d_from],
                SearchMode::Unconstrained => Vec::new(),
                SearchMode::PaperReplication => (d_from..=upper).collect(),
            };
            for dd in distances {
                let spec = match SearchSpec::new(
                    field,
                    k,
                    len as u32,
                    dd as u32,
                    opts.multiset_mode,
                    Goal::ProveEmpty,
                ) {
                    Ok(s) => s,
                    Err(e) => return Check::Unknown(e.to_string()),
                };
                let out = enumerate_lcd_multiset(&spec, opts.budget);
                runs += 1;
                nodes += out.nodes;
                if let Some(mv) = out.witnesses.first() {
                    return Check::Refuted(format!("LCD [{len},{k},>={dd}] code exists: m={mv}"));
                }
                if out.status == SearchStatus::Inconclusive {
                    return Check::Unknown(format!(
                        "[{len},{k},{dd}] search exceeded {} nodes",
                        opts.budget
                    ));
                }
            }
        }
        return Check::Verified(format!("{runs} multiset searches empty ({nodes} nodes)"));
    }
    for dd in d_from..=(v.lcd_upper as usize) {
        if dd > n - k + 1 {
            break;
        }
        match method1_search(field, n, k, dd, true, Goal::ProveEmpty, opts.budget) {
            Ok(out) if out.found() => {
                return Check::Refuted(format!("LCD [{n},{k},{dd}] code exists"))
            }
            Ok(out) if out.status == SearchStatus::Inconclusive => {
                return Check::Unknown(format!(
                    "[{n},{k},{dd}] search exceeded {} nodes",
                    opts.budget
                ))
            }
            Ok(out) => {
                runs += 1;
                nodes += out.nodes;
            }
            Err(e) => return Check::Unknown(e.to_string()),
        }
    }
    Check::Verified(format!("{runs} systematic searches empty ({nodes} nodes)"))
}

fn small_ternary(opts: &VerifyOptions) -> Vec<Cell> {
    let cells = tables::small_ternary_table();
    cells
        .par_iter()
        .map(|cell| small_ternary_cell(cell, opts))
        .collect()
}

/// Existence at `d` plus nonexistence above `d` for one cell of the small
/// ternary table.
pub fn small_ternary_cell(cell: &SmallCell, opts: &VerifyOptions) -> Cell {
    let f = FieldOrder::Ternary;
    let (n, k) = (cell.n as usize, cell.k as usize);
    let label = format!("d3({n},{k})");
    let claimed = cell
        .values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join("|");
    if cell.is_open() {
        let mut c = Cell::new(label, &claimed, "-", &[]);
        c.status = CellStatus::Open;
        c.evidence
            .push("unresolved pair; not decided here".to_owned());
        return c;
    }
    let d = cell.values[0] as usize;
    let paper = all_codes().into_iter().find(|&id| {
        claim(id).is_ok_and(|c| c.field == f && (c.n, c.k, c.d) == (n, k, d))
            && !matches!(id, PaperCodeId::M36Chain(_))
    });
    let exists = match paper {
        Some(id) => match build_paper_code(id) {
            Ok(c) => match check_code(&c, f, n, k, d) {
                Check::Verified(s) => Check::Verified(format!("{id}: {s}")),
                other => other,
            },
            Err(e) => Check::Refuted(e.to_string()),
        },
        None => find_lcd(f, n, k, d, opts.budget).0,
    };
    let none_above = prove_no_lcd(f, n, k, d + 1, opts);
    let computed = match (&exists, &none_above) {
        (Check::Verified(_), Check::Verified(_)) => d.to_string(),
        _ => "-".to_owned(),
    };
    let mut c = Cell::new(label, claimed, computed, &[exists, none_above]);
    if cell.external_witness {
        c.evidence
            .push("externally tabulated witness re-derived locally".to_owned());
    }
    c
}

/// Claimed `d_2(n, n - 5)`.
pub fn binary_redundancy_five_claim(n: usize) -> usize {
    match n {
        6 => 5,
        7 | 9 | 11 => 4,
        8 | 10 | 12..=26 => 3,
        _ => 2,
    }
}

/// Claimed `d_3(n, n - i)` for `i` in 2..=4.
pub fn ternary_high_rate_claim(n: usize, i: usize) -> usize {
    match (i, n) {
        (2, _) => 2,
        (3, 4) => 4,
        (3, 5..=10) => 3,
        (3, _) => 2,
        (4, 5) => 5,
        (4, 6..=8) => 4,
        (4, 9..=36) => 3,
        _ => 2,
    }
}

/// No LCD `[n, n - i, >= d_from]` code, using sphere packing for `d >= 3`,
/// the puncturing argument for `d >= 4` (an `[n, n-i, >= 4]` code punctures
/// to an `[n-1, n-i, >= 3]` code of redundancy `i - 1`), the column search
/// at `d = 3`, and general searches otherwise.
fn high_rate_upper(
    field: FieldOrder,
    n: usize,
    i: usize,
    d_from: usize,
    opts: &VerifyOptions,
) -> Check {
    let k = n - i;
    if d_from >= 3 && n as u64 > sphere_packing_max_n(field, i as u32, 3).expect("d = 3") {
        return Check::Verified(format!("sphere packing: n > [{i}]_q"));
    }
    if d_from >= 4 && (n - 1) as u64 > k_bracket(field, i as u32 - 1) {
        return Check::Verified(format!("puncturing: n - 1 > [{}]_q", i - 1));
    }
    if d_from == 3 && i >= 2 {
        return match highrate_column_search(field, n, i, 3, Goal::ProveEmpty, opts.budget) {
            Ok(out) if out.search.found() => Check::Refuted(format!("LCD [{n},{k},3] exists")),
            Ok(out) if out.search.status == SearchStatus::Inconclusive => {
                Check::Unknown(format!("column search exceeded {} nodes", opts.budget))
            }
            Ok(out) => Check::Verified(format!("column search empty ({} nodes)", out.search.nodes)),
            Err(e) => Check::Unknown(e.to_string()),
        };
    }
    prove_no_lcd(field, n, k, d_from, opts)
}

fn high_rate_witness(
    field: FieldOrder,
    n: usize,
    i: usize,
    d: usize,
    opts: &VerifyOptions,
) -> Check {
    let k = n - i;
    let built = |id: PaperCodeId| match build_paper_code(id) {
        Ok(c) => match check_code(&c, field, n, k, d) {
            Check::Verified(s) => Check::Verified(format!("{id}: {s}")),
            other => other,
        },
        Err(e) => Check::Refuted(e.to_string()),
    };
    match (field, d) {
        (FieldOrder::Binary, 3) if n == 26 => built(PaperCodeId::H26),
        (FieldOrder::Binary, 2 | 3) if n >= 25 => {
            // the listed H25 is not LCD; odd lengths start from H26 minus its first column
            let (base, h) = if n.is_multiple_of(2) {
                ("H26", h26_matrix())
            } else {
                ("H26 minus column 1", h25_lcd_matrix())
            };
            let padded = pad_with_column_pairs(&h, n)
                .map_err(|e| e.to_string())
                .and_then(|h| LinearCode::from_parity_check(&h).map_err(|e| e.to_string()));
            match padded {
                Ok(c) => match check_code(&c, field, n, k, d) {
                    Check::Verified(s) if n <= 26 => Check::Verified(format!("{base}: {s}")),
                    Check::Verified(s) => {
                        Check::Verified(format!("{base} plus equal column pairs: {s}"))
                    }
                    other => other,
                },
                Err(e) => Check::Refuted(e),
            }
        }
        (FieldOrder::Ternary, 2) => match build_parity_family(n, i) {
            Ok(_) => Check::Verified(format!("parity family: LCD [{n},{k},2]")),
            Err(e) => Check::Refuted(e.to_string()),
        },
        (FieldOrder::Ternary, 3) if i == 4 && (11..=36).contains(&n) => {
            built(PaperCodeId::M36Chain(k as u32))
        }
        (_, 3) => match highrate_column_search(field, n, i, 3, Goal::FindOne, opts.budget) {
            Ok(out) => match out.search.witnesses.first() {
                Some(w) => match check_code(&w.code, field, n, k, 3) {
                    Check::Verified(s) => Check::Verified(format!("column search witness: {s}")),
                    other => other,
                },
                None if out.search.status == SearchStatus::Inconclusive => {
                    Check::Unknown("column search out of budget".to_owned())
                }
                None => Check::Refuted(format!("no LCD [{n},{k},3] code")),
            },
            Err(e) => Check::Unknown(e.to_string()),
        },
        _ => find_lcd(field, n, k, d, opts.budget).0,
    }
}

fn high_rate_cell(field: FieldOrder, n: usize, i: usize, d: usize, opts: &VerifyOptions) -> Cell {
    let label = format!("d{}({n},{n}-{i})", field.q());
    let lower = high_rate_witness(field, n, i, d, opts);
    let upper = high_rate_upper(field, n, i, d + 1, opts);
    let computed = if lower.is_verified() && upper.is_verified() {
        d.to_string()
    } else {
        "-".to_owned()
    };
    Cell::new(label, d, computed, &[lower, upper])
}

fn binary_redundancy_five(opts: &VerifyOptions) -> Vec<Cell> {
    let ns: Vec<usize> = (6..=40).collect();
    ns.par_iter()
        .map(|&n| {
            high_rate_cell(
                FieldOrder::Binary,
                n,
                5,
                binary_redundancy_five_claim(n),
                opts,
            )
        })
        .collect()
}

fn ternary_high_rate(opts: &VerifyOptions) -> Vec<Cell> {
    let mut jobs = Vec::new();
    for (i, last) in [(2usize, 30usize), (3, 30), (4, 50)] {
        for n in i + 1..=last {
            jobs.push((n, i));
        }
    }
    jobs.par_iter()
        .map(|&(n, i)| {
            high_rate_cell(
                FieldOrder::Ternary,
                n,
                i,
                ternary_high_rate_claim(n, i),
                opts,
            )
        })
        .collect()
}

/// The smallest reduction target of each family: the only one within desk
/// reach.
fn desk_reduction(field: FieldOrder) -> i64 {
    tables::resolved_r(field)[0]
}

struct ResidueEvidence {
    /// Base code and the `s` it corresponds to.
    base: Option<(LinearCode, u64)>,
    base_check: Check,
    reduction: Option<Check>,
}

fn residue_evidence(field: FieldOrder, t: u64, opts: &VerifyOptions) -> ResidueEvidence {
    let k = tables::family(field);
    let kb = k_bracket(field, k);
    let s0 = if t >= k as u64 { 0 } else { 1 };
    let n0 = kb * s0 + t;
    let d0 = tables::formula_value(field, n0).expect("formula residue") as usize;
    let has_t_code =
        field == FieldOrder::Ternary && s0 == 0 && crate::paper::t_vector(t as u32).is_some();
    let (base_check, base) = match has_t_code {
        true => {
            let id = PaperCodeId::T(t as u32);
            match build_paper_code(id) {
                Ok(c) => {
                    let cl = claim(id).expect("T codes have claims");
                    let chk = if cl.d >= d0 {
                        check_code(&c, field, n0 as usize, k as usize, cl.d)
                    } else {
                        Check::Refuted(format!("{id} has d={} < {d0}", cl.d))
                    };
                    let ok = chk.is_verified();
                    (chk, ok.then_some((c, s0)))
                }
                Err(e) => (Check::Refuted(e.to_string()), None),
            }
        }
        false => {
            let (chk, code) = find_lcd(field, n0 as usize, k as usize, d0, opts.budget);
            (chk, code.map(|c| (c, s0)))
        }
    };
    let reduction = tables::r_table(field)
        .iter()
        .find(|&&(tt, _)| tt == t)
        .map(|&(_, r)| {
            if r != desk_reduction(field) {
                let status = if tables::resolved_r(field).contains(&r) {
                    "reported exhaustive search"
                } else {
                    "no completed search"
                };
                return Check::Cited(format!("target r={r}: {status} beyond desk scale"));
            }
            let plan = match ReductionPlan::new(field, k, t, tables::alpha(field, t)) {
                Ok(p) => p,
                Err(e) => return Check::Refuted(e.to_string()),
            };
            match apply_main_reduction(&plan, SearchMode::PaperReplication, opts.budget) {
                Ok(out) => match out.conclusion {
                    ReductionConclusion::Nonexistence => Check::Verified(format!(
                        "reduction r={r}: target empty ({} nodes)",
                        out.nodes
                    )),
                    ReductionConclusion::WitnessFound => {
                        Check::Refuted(format!("reduction target r={r} exists"))
                    }
                    ReductionConclusion::Inconclusive => {
                        Check::Unknown(format!("reduction r={r} out of budget"))
                    }
                },
                Err(e) => Check::Unknown(e.to_string()),
            }
        });
    ResidueEvidence {
        base,
        base_check,
        reduction,
    }
}

fn theorem_desk(field: FieldOrder, opts: &VerifyOptions) -> Vec<Cell> {
    let k = tables::family(field);
    let kb = k_bracket(field, k);
    let top = field.pow(k - 1);
    let residues: Vec<u64> = (0..kb)
        .filter(|&t| tables::formula_value(field, kb + t).is_some())
        .collect();
    let evidence: Vec<ResidueEvidence> = residues
        .par_iter()
        .map(|&t| residue_evidence(field, t, opts))
        .collect();
    let mut cells = Vec::new();
    for (&t, ev) in residues.iter().zip(&evidence) {
        for s in 0..3u64 {
            let n = kb * s + t;
            if n < k as u64 {
                continue;
            }
            let claimed = tables::formula_value(field, n).expect("formula residue");
            let v = lcd_upper_bound(field, n, k);
            let upper = if claimed >= v.griesmer {
                Check::Verified("Griesmer bound".to_owned())
            } else if claimed >= v.lcd_upper {
                Check::Verified(format!("divisibility rule {}", v.rule.tag()))
            } else if claimed + 1 == v.lcd_upper
                && tables::alpha(field, t) + (top * s) as i64 == claimed as i64 + 1
            {
                ev.reduction
                    .clone()
                    .unwrap_or_else(|| Check::Refuted("no reduction for this residue".to_owned()))
            } else {
                Check::Refuted(format!(
                    "no argument lowers the bound {} to {claimed}",
                    v.lcd_upper
                ))
            };
            let lower = match &ev.base {
                Some((base, s0)) if s >= *s0 => {
                    let check = if s == *s0 {
                        ev.base_check.clone()
                    } else {
                        match extend_lcd(base, (s - s0) as usize, DEFAULT_ENUMERATION_BUDGET) {
                            Ok(ext) if ext.min_weight as u64 >= claimed && ext.code.is_lcd() => {
                                Check::Verified(format!(
                                    "extension by {} simplex copies: LCD [{n},{k},{}]{}",
                                    s - s0,
                                    ext.min_weight,
                                    if ext.verified {
                                        ""
                                    } else {
                                        " (construction trusted)"
                                    }
                                ))
                            }
                            Ok(ext) => {
                                Check::Refuted(format!("extension has d={}", ext.min_weight))
                            }
                            Err(e) => Check::Unknown(e.to_string()),
                        }
                    };
                    check
                }
                Some(_) => Check::Unknown("below base length".to_owned()),
                None => ev.base_check.clone(),
            };
            let computed = if upper.is_verified() && lower.is_verified() {
                claimed.to_string()
            } else {
                "-".to_owned()
            };
            cells.push(Cell::new(
                format!("n={kb}*{s}+{t}"),
                claimed,
                computed,
                &[lower, upper],
            ));
        }
    }
    cells
}
