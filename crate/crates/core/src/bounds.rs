//! Griesmer and sphere-packing bounds, and the LCD-specific refinements for
//! codes meeting the Griesmer bound.

use crate::field::FieldOrder;
use crate::{Error, Result};

/// `[k]_q = (q^k - 1) / (q - 1)`, the number of points of PG(k-1, q).
pub fn k_bracket(field: FieldOrder, k: u32) -> u64 {
    let q = field.q() as u64;
    (0..k).fold(0u64, |acc, _| acc * q + 1)
}

/// `sum_{i=0}^{k-1} ceil(d / q^i)`.
pub fn griesmer_sum(field: FieldOrder, k: u32, d: u64) -> u64 {
    let q = field.q() as u64;
    let mut power = 1u64;
    let mut sum = 0u64;
    for _ in 0..k {
        sum += d.div_ceil(power);
        power = power.saturating_mul(q);
    }
    sum
}

/// `g_q(n, k)`: the largest `d >= 0` with `griesmer_sum(q, k, d) <= n`.
///
/// Defined for every `n >= 0`; it is 0 when `n < k`.
pub fn griesmer_g(field: FieldOrder, n: u64, k: u32) -> u64 {
    let q = field.q() as u128;
    let qk = q.pow(k);
    // start near n q^{k-1}(q-1)/(q^k-1) and walk to the exact value
    let mut d = ((n as u128 * qk / q * (q - 1)) / (qk - 1)) as u64;
    while d > 0 && griesmer_sum(field, k, d) > n {
        d -= 1;
    }
    while griesmer_sum(field, k, d + 1) <= n {
        d += 1;
    }
    d
}

/// Whether `n` equals the Griesmer sum for `(q, k, d)`.
pub fn meets_griesmer(field: FieldOrder, n: u64, k: u32, d: u64) -> bool {
    griesmer_sum(field, k, d) == n
}

/// Which LCD rule lowered the Griesmer value, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum BoundRule {
    None,
    /// Binary, `k` odd, `d` even, meeting the Griesmer bound.
    BinaryOddKEvenD,
    /// Ternary, `3 | d`, meeting the Griesmer bound.
    TernaryDDivisibleBy3,
    /// Binary, `4 | d`, meeting the Griesmer bound. Off by default.
    BinaryDDivisibleBy4,
}

impl BoundRule {
    pub fn tag(self) -> &'static str {
        match self {
            Self::None => "none",
            Self::BinaryOddKEvenD => "binary-odd-k-even-d",
            Self::TernaryDDivisibleBy3 => "ternary-d-div-3",
            Self::BinaryDDivisibleBy4 => "binary-d-div-4",
        }
    }
}

/// Griesmer value and LCD-adjusted upper bound on `d_q(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundVerdict {
    pub griesmer: u64,
    pub lcd_upper: u64,
    pub rule: BoundRule,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BoundOptions {
    /// Also apply the binary `d = 0 mod 4` rule.
    pub binary_div4: bool,
}

pub fn lcd_upper_bound(field: FieldOrder, n: u64, k: u32) -> BoundVerdict {
    lcd_upper_bound_with(field, n, k, BoundOptions::default())
}

/// An LCD code cannot meet the Griesmer bound when (binary) `k` is odd and
/// `d` even, or (ternary) `3 | d`. Since the Griesmer sum is strictly
/// increasing in `d`, at most one decrement happens.
pub fn lcd_upper_bound_with(field: FieldOrder, n: u64, k: u32, opts: BoundOptions) -> BoundVerdict {
    let g = griesmer_g(field, n, k);
    let rule = if g == 0 || !meets_griesmer(field, n, k, g) {
        BoundRule::None
    } else {
        match field {
            FieldOrder::Binary if k % 2 == 1 && g.is_multiple_of(2) => BoundRule::BinaryOddKEvenD,
            FieldOrder::Binary if opts.binary_div4 && g.is_multiple_of(4) => {
                BoundRule::BinaryDDivisibleBy4
            }
            FieldOrder::Ternary if g.is_multiple_of(3) => BoundRule::TernaryDDivisibleBy3,
            _ => BoundRule::None,
        }
    };
    let lcd_upper = if rule == BoundRule::None { g } else { g - 1 };
    BoundVerdict {
        griesmer: g,
        lcd_upper,
        rule,
    }
}

/// Largest `n` admitting an `[n, n - i, 3]` code by the sphere-packing
/// bound: `[i]_q`.
pub fn sphere_packing_max_n(field: FieldOrder, redundancy: u32, d: u64) -> Result<u64> {
    if d != 3 {
        return Err(Error::Precondition(
            "sphere-packing ceiling is implemented for d = 3 only",
        ));
    }
    Ok(k_bracket(field, redundancy))
}

/// For `2 <= i < n`: `n >= 2^i` forces `d_2(n, n - i) = 2`.
pub fn binary_highrate_two(n: u64, i: u32) -> bool {
    1u64.checked_shl(i).is_some_and(|p| n >= p)
}
