//! Row-by-row search over systematic generators `(I_k | A)`.
//!
//! Row 1 of `A` is fixed to `(0, ..., 0, 1, ..., 1)` with `d - 1` ones.
//! Later rows have weight at least `d - 1`, leading nonzero entry 1, and
//! increase in the base-q order (strictly when `d >= 3`). After each row the
//! partial code `(I_m | r_1..r_m)` must keep minimum weight at least `d`.
//!
//! Rows are compared as base-q integers with the leftmost coordinate most
//! significant.

use alloc::vec::Vec;

use super::{Goal, SearchOutcome, SearchStatus};
use crate::code::LinearCode;
use crate::field::FieldOrder;
use crate::matrix::FqMatrix;
use crate::packed::add3;
use crate::{Error, Result};

/// Largest candidate pool (`q^(n-k)`) the search will materialize.
const MAX_POOL: u64 = 1 << 26;

#[derive(Clone, Copy, PartialEq, Eq)]
struct Row {
    ones: u64,
    twos: u64,
}

impl Row {
    #[inline]
    fn weight(self) -> u32 {
        (self.ones | self.twos).count_ones()
    }

    #[inline]
    fn add(self, other: Row, field: FieldOrder) -> Row {
        match field {
            FieldOrder::Binary => Row {
                ones: self.ones ^ other.ones,
                twos: 0,
            },
            FieldOrder::Ternary => {
                let (ones, twos) = add3(self.ones, self.twos, other.ones, other.twos);
                Row { ones, twos }
            }
        }
    }

    #[inline]
    fn double(self) -> Row {
        Row {
            ones: self.twos,
            twos: self.ones,
        }
    }

    #[inline]
    fn dot(self, other: Row, field: FieldOrder) -> u32 {
        let p1 = ((self.ones & other.ones) | (self.twos & other.twos)).count_ones();
        let p2 = ((self.ones & other.twos) | (self.twos & other.ones)).count_ones();
        (p1 + 2 * p2) % field.q() as u32
    }
}

struct Method1<'a> {
    field: FieldOrder,
    k: usize,
    width: usize,
    d: u32,
    lcd_only: bool,
    goal: Goal,
    strict: bool,
    pool: &'a [Row],
    chosen: Vec<usize>,
    /// `spans[m]` holds every combination of the first `m` rows with the
    /// number of nonzero coefficients used.
    spans: Vec<Vec<(Row, u32)>>,
    nodes: u64,
    budget: u64,
    outcome: SearchOutcome<LinearCode>,
}

enum Flow {
    Continue,
    Stop,
    Abort,
}

/// Searches `[n, k, >= d]` codes in the systematic normal form above,
/// optionally keeping only LCD codes. `witnesses` holds every accepted code
/// (or the first, for find-one / prove-empty).
pub fn method1_search(
    field: FieldOrder,
    n: usize,
    k: usize,
    d: usize,
    lcd_only: bool,
    goal: Goal,
    budget: u64,
) -> Result<SearchOutcome<LinearCode>> {
    if k == 0 || n <= k {
        return Err(Error::Precondition("method I needs 1 <= k < n"));
    }
    if d == 0 || n - k < d - 1 {
        return Err(Error::Precondition(
            "first row shape needs 1 <= d and d - 1 <= n - k",
        ));
    }
    let width = n - k;
    if width > 64 || field.pow(width as u32) > MAX_POOL {
        return Err(Error::Precondition(
            "n - k too large for the candidate pool",
        ));
    }
    let d = d as u32;
    let pool = candidate_rows(field, width, d);
    let first = first_row(width, d);
    let first_idx = pool
        .iter()
        .position(|&r| r == first)
        .expect("first row is a candidate");

    let mut search = Method1 {
        field,
        k,
        width,
        d,
        lcd_only,
        goal,
        strict: d >= 3,
        pool: &pool,
        chosen: alloc::vec![first_idx],
        spans: Vec::with_capacity(k + 1),
        nodes: 1,
        budget,
        outcome: SearchOutcome::new(),
    };
    search
        .spans
        .push(alloc::vec![(Row { ones: 0, twos: 0 }, 0)]);
    let span1 = search.extend_span(0, first);
    search.spans.push(span1);
    let flow = if first.weight() + 1 < d {
        Flow::Continue
    } else {
        search.dfs()
    };
    let mut out = search.outcome;
    if let Flow::Stop = flow {
        out.status = SearchStatus::Stopped;
    }
    out.nodes = search.nodes;
    Ok(out)
}

fn first_row(width: usize, d: u32) -> Row {
    let ones = (0..d as usize - 1).fold(0u64, |acc, t| acc | 1u64 << (width - 1 - t));
    Row { ones, twos: 0 }
}

/// Bit `j` of a row holds coordinate `j`; coordinate 0 is the most
/// significant base-q digit, so the pool is generated in increasing order.
fn candidate_rows(field: FieldOrder, width: usize, d: u32) -> Vec<Row> {
    let q = field.q() as u64;
    let total = field.pow(width as u32);
    let mut out = Vec::new();
    let mut digits = alloc::vec![0u8; width];
    for value in 0..total {
        let mut v = value;
        for j in (0..width).rev() {
            digits[j] = (v % q) as u8;
            v /= q;
        }
        let lead = digits.iter().copied().find(|&e| e != 0);
        if lead.is_some_and(|e| e != 1) {
            continue;
        }
        let mut row = Row { ones: 0, twos: 0 };
        for (j, &e) in digits.iter().enumerate() {
            match e {
                1 => row.ones |= 1 << j,
                2 => row.twos |= 1 << j,
                _ => {}
            }
        }
        if row.weight() + 1 >= d {
            out.push(row);
        }
    }
    out
}

impl Method1<'_> {
    fn extend_span(&self, m: usize, row: Row) -> Vec<(Row, u32)> {
        let prev = &self.spans[m];
        let mut next = prev.clone();
        let mut scaled = row;
        for _ in 1..self.field.q() {
            next.extend(
                prev.iter()
                    .map(|&(v, w)| (v.add(scaled, self.field), w + 1)),
            );
            scaled = scaled.double();
        }
        next
    }

    /// Does appending `row` as row `m + 1` keep minimum weight >= d?
    #[inline]
    fn admissible(&self, m: usize, row: Row) -> bool {
        self.spans[m]
            .iter()
            .all(|&(v, w)| row.add(v, self.field).weight() + w + 1 >= self.d)
    }

    fn dfs(&mut self) -> Flow {
        let m = self.chosen.len();
        if m == self.k {
            return self.leaf();
        }
        let last = *self.chosen.last().expect("row 1 is fixed");
        let start = if self.strict { last + 1 } else { last };
        for idx in start..self.pool.len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                self.outcome.status = SearchStatus::Inconclusive;
                let mut path: Vec<u32> = self.chosen.iter().map(|&i| i as u32).collect();
                path.push(idx as u32);
                self.outcome.cursor = Some(path);
                return Flow::Abort;
            }
            let row = self.pool[idx];
            if !self.admissible(m, row) {
                continue;
            }
            let span = self.extend_span(m, row);
            self.spans.push(span);
            self.chosen.push(idx);
            let flow = self.dfs();
            self.chosen.pop();
            self.spans.pop();
            match flow {
                Flow::Continue => {}
                other => return other,
            }
        }
        Flow::Continue
    }

    fn leaf(&mut self) -> Flow {
        let rows: Vec<Row> = self.chosen.iter().map(|&i| self.pool[i]).collect();
        if self.lcd_only {
            // Gram of (I | A) is I + A A^T
            let q = self.field.q();
            let mut gram = alloc::vec![0u8; self.k * self.k];
            for i in 0..self.k {
                for j in 0..self.k {
                    let v = rows[i].dot(rows[j], self.field) + u32::from(i == j);
                    gram[i * self.k + j] = (v % q as u32) as u8;
                }
            }
            if super::small_rank(q, &mut gram, self.k) != self.k {
                return Flow::Continue;
            }
        }
        self.outcome.witnesses.push(self.to_code(&rows));
        if self.goal.stops_at_first() {
            Flow::Stop
        } else {
            Flow::Continue
        }
    }

    fn to_code(&self, rows: &[Row]) -> LinearCode {
        let n = self.k + self.width;
        let mut g = FqMatrix::zeros(self.field, self.k, n);
        for (i, r) in rows.iter().enumerate() {
            g.set(i, i, 1);
            for j in 0..self.width {
                let e = if r.ones >> j & 1 == 1 {
                    1
                } else if r.twos >> j & 1 == 1 {
                    2
                } else {
                    0
                };
                g.set(i, self.k + j, e);
            }
        }
        LinearCode::from_generator(g).expect("systematic generator has full rank")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_ENUMERATION_BUDGET;

    const F2: FieldOrder = FieldOrder::Binary;
    const F3: FieldOrder = FieldOrder::Ternary;

    #[test]
    fn no_binary_lcd_11_3_6() {
        let out = method1_search(F2, 11, 3, 6, true, Goal::ProveEmpty, u64::MAX).unwrap();
        assert!(out.is_proven_empty());
    }

    #[test]
    fn finds_binary_lcd_11_3_5() {
        let out = method1_search(F2, 11, 3, 5, true, Goal::FindOne, u64::MAX).unwrap();
        assert_eq!(out.status, SearchStatus::Stopped);
        let c = &out.witnesses[0];
        assert!(c.is_lcd());
        assert!(c.min_weight(DEFAULT_ENUMERATION_BUDGET).unwrap() >= 5);
    }

    #[test]
    fn no_ternary_lcd_n_minus_3() {
        for n in 11..=13 {
            let out = method1_search(F3, n, n - 3, 3, true, Goal::ProveEmpty, u64::MAX).unwrap();
            assert!(out.is_proven_empty(), "n={n}");
            // without the LCD filter the Hamming-type codes are found
            let any = method1_search(F3, n, n - 3, 3, false, Goal::FindOne, u64::MAX).unwrap();
            assert!(any.found(), "n={n}");
        }
    }

    #[test]
    fn first_row_shape() {
        let r = first_row(8, 6);
        assert_eq!(r.weight(), 5);
        assert_eq!(r.ones & 0b111, 0);
        assert!(method1_search(F2, 6, 3, 5, true, Goal::FindOne, 10).is_err());
    }
}
