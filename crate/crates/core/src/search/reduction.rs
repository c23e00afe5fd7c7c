//! Reduction of the residue class `n = [k]_q s + t`, `d = q^(k-1) s + alpha`
//! to a single search for LCD `[q r, k, (q-1) r]` codes with no zero
//! coordinate.
//!
//! With `r = q^(k-1) t - [k]_q alpha` (the `s` terms cancel) and
//! `s' = (q r - t) / [k]_q + 1`: if no such target code exists, then no LCD
//! `[[k]_q s + t, k, q^(k-1) s + alpha]` code exists for any `s >= 0` with
//! `n >= k`.

use alloc::vec::Vec;

use super::{enumerate_lcd_multiset, Goal, SearchMode, SearchSpec, SearchStatus};
use crate::bounds::{griesmer_g, k_bracket};
use crate::field::FieldOrder;
use crate::simplex::MultiplicityVector;
use crate::{Error, Result};

/// `r = q^(k-1) t - [k]_q alpha`. Requires `0 <= t < [k]_q`; a negative
/// result means `(t, alpha)` is inconsistent.
pub fn reduction_r(field: FieldOrder, k: u32, t: u64, alpha: i64) -> Result<i64> {
    let kb = k_bracket(field, k);
    if t >= kb {
        return Err(Error::InvalidPlan("residue t must satisfy 0 <= t < [k]_q"));
    }
    let r = field.pow(k - 1) as i128 * t as i128 - kb as i128 * alpha as i128;
    if r < 0 {
        return Err(Error::InvalidPlan("negative r: inconsistent (t, alpha)"));
    }
    i64::try_from(r).map_err(|_| Error::InvalidPlan("r overflows"))
}

/// `s' = (q r - t) / [k]_q + 1`.
pub fn reduction_s_prime(field: FieldOrder, k: u32, t: u64, r: i64) -> Result<i64> {
    let kb = k_bracket(field, k) as i128;
    let num = field.q() as i128 * r as i128 - t as i128;
    if num % kb != 0 {
        return Err(Error::InvalidPlan("q r - t is not divisible by [k]_q"));
    }
    i64::try_from(num / kb + 1).map_err(|_| Error::InvalidPlan("s' overflows"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ReductionPlan {
    pub field: FieldOrder,
    pub k: u32,
    pub t: u64,
    pub alpha: i64,
    pub r: i64,
    pub s_prime: i64,
}

impl ReductionPlan {
    pub fn new(field: FieldOrder, k: u32, t: u64, alpha: i64) -> Result<Self> {
        let r = reduction_r(field, k, t, alpha)?;
        let s_prime = reduction_s_prime(field, k, t, r)?;
        Ok(Self {
            field,
            k,
            t,
            alpha,
            r,
            s_prime,
        })
    }

    /// Target parameters `(q r, (q-1) r)`.
    pub fn target(&self) -> (u64, u64) {
        let q = self.field.q() as u64;
        (q * self.r as u64, (q - 1) * self.r as u64)
    }

    /// Source parameters `([k]_q s + t, q^(k-1) s + alpha)` for a given `s`.
    pub fn source(&self, s: u64) -> (u64, i64) {
        let n = k_bracket(self.field, self.k) * s + self.t;
        let d = self.field.pow(self.k - 1) as i64 * s as i64 + self.alpha;
        (n, d)
    }

    /// Recomputation of `r` from an explicit `s`, for checking
    /// independence from `s`.
    pub fn r_at(&self, s: u64) -> i64 {
        let (n, d) = self.source(s);
        self.field.pow(self.k - 1) as i64 * n as i64 - k_bracket(self.field, self.k) as i64 * d
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum ReductionConclusion {
    /// The target is empty: no source code exists for any `s >= 0`.
    Nonexistence,
    /// A target code exists, so the reduction proves nothing.
    WitnessFound,
    /// The budget ran out.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutcome {
    pub plan: ReductionPlan,
    pub conclusion: ReductionConclusion,
    pub witness: Option<MultiplicityVector>,
    pub nodes: u64,
    /// Target distances searched, `(q-1) r` up to the Griesmer maximum.
    pub distances: Vec<u32>,
    pub cursor: Option<Vec<u32>>,
}

/// Runs the target search. In paper-replication mode the first-row
/// constraint fixes the minimum weight exactly, so every distance from
/// `(q-1) r` up to `g_q(q r, k)` is searched.
pub fn apply_main_reduction(
    plan: &ReductionPlan,
    mode: SearchMode,
    budget: u64,
) -> Result<ReductionOutcome> {
    let (n, d) = plan.target();
    if n < plan.k as u64 {
        return Err(Error::Precondition("reduction needs q r >= k"));
    }
    let n32 = u32::try_from(n).map_err(|_| Error::InvalidPlan("target length overflows"))?;
    let top = match mode {
        SearchMode::PaperReplication => griesmer_g(plan.field, n, plan.k).max(d),
        SearchMode::Unconstrained => d,
    };
    let mut out = ReductionOutcome {
        plan: *plan,
        conclusion: ReductionConclusion::Nonexistence,
        witness: None,
        nodes: 0,
        distances: Vec::new(),
        cursor: None,
    };
    for dd in d..=top {
        let spec = SearchSpec::new(
            plan.field,
            plan.k as usize,
            n32,
            dd as u32,
            mode,
            Goal::ProveEmpty,
        )?;
        let res = enumerate_lcd_multiset(&spec, budget.saturating_sub(out.nodes));
        out.nodes += res.nodes;
        out.distances.push(dd as u32);
        if let Some(w) = res.witnesses.into_iter().next() {
            out.conclusion = ReductionConclusion::WitnessFound;
            out.witness = Some(w);
            return Ok(out);
        }
        if res.status == SearchStatus::Inconclusive {
            out.conclusion = ReductionConclusion::Inconclusive;
            out.cursor = res.cursor;
            return Ok(out);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: FieldOrder = FieldOrder::Binary;
    const F3: FieldOrder = FieldOrder::Ternary;

    #[test]
    fn r_examples() {
        assert_eq!(reduction_r(F2, 5, 30, 15).unwrap(), 15);
        assert_eq!(reduction_r(F3, 4, 39, 26).unwrap(), 13);
        assert_eq!(reduction_r(F2, 5, 0, -1).unwrap(), 31);
        assert!(reduction_r(F2, 5, 31, 0).is_err());
        assert!(reduction_r(F2, 5, 1, 5).is_err());
    }

    #[test]
    fn s_prime_examples() {
        assert_eq!(reduction_s_prime(F2, 5, 30, 15).unwrap(), 1);
        assert_eq!(reduction_s_prime(F3, 4, 39, 13).unwrap(), 1);
        assert_eq!(reduction_s_prime(F2, 5, 0, 31).unwrap(), 3);
        assert!(reduction_s_prime(F2, 5, 1, 15).is_err());
    }

    #[test]
    fn r_is_independent_of_s() {
        let p = ReductionPlan::new(F2, 5, 18, 8).unwrap();
        assert_eq!(p.r, 40);
        for s in 0..6 {
            assert_eq!(p.r_at(s), p.r);
        }
    }

    #[test]
    fn residue_30_and_39_are_excluded() {
        let p = ReductionPlan::new(F2, 5, 30, 15).unwrap();
        let out = apply_main_reduction(&p, SearchMode::PaperReplication, u64::MAX).unwrap();
        assert_eq!(out.conclusion, ReductionConclusion::Nonexistence);
        let p = ReductionPlan::new(F3, 4, 39, 26).unwrap();
        let out = apply_main_reduction(&p, SearchMode::PaperReplication, u64::MAX).unwrap();
        assert_eq!(out.conclusion, ReductionConclusion::Nonexistence);
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let p = ReductionPlan::new(F2, 5, 18, 8).unwrap();
        let out = apply_main_reduction(&p, SearchMode::PaperReplication, 1000).unwrap();
        assert_eq!(out.conclusion, ReductionConclusion::Inconclusive);
        assert!(out.cursor.is_some());
    }
}
