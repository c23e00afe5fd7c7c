//! Explicit parity-check constructions for high-rate codes.

use lcd_core::{FieldOrder, FqMatrix, LinearCode, DEFAULT_ENUMERATION_BUDGET};

use crate::error::{Error, Result};

/// The ternary `i x n` parity-check matrix `(I_i | B)`: the first row of `B`
/// is all ones, the second row starts `1 1` and is zero after that, the
/// remaining rows are zero. With a single extra column (`n = i + 1`) the
/// second row of `B` is zero instead, since `(1, 1)` alone would make the
/// Gram matrix singular.
pub fn parity_family_matrix(n: usize, i: usize) -> Result<FqMatrix> {
    if n < 3 || i < 2 || i >= n {
        return Err(Error::Invalid(format!(
            "parity family needs n >= 3 and 2 <= i <= n - 1, got n={n}, i={i}"
        )));
    }
    let mut h = FqMatrix::zeros(FieldOrder::Ternary, i, n);
    for r in 0..i {
        h.set(r, r, 1);
    }
    for j in i..n {
        h.set(0, j, 1);
    }
    if n - i >= 2 {
        h.set(1, i, 1);
        h.set(1, i + 1, 1);
    }
    Ok(h)
}

/// Expected `H H^T`: `((n - i + 1, 2), (2, 0)) (+) I_(i-2)` for `n - i >= 2`,
/// and `diag(2, 1, ..., 1)` for `n = i + 1`.
pub fn parity_family_gram(n: usize, i: usize) -> FqMatrix {
    let mut g = FqMatrix::identity(FieldOrder::Ternary, i);
    if n - i >= 2 {
        g.set(0, 0, ((n - i + 1) % 3) as u8);
        g.set(0, 1, 2);
        g.set(1, 0, 2);
        g.set(1, 1, 0);
    } else {
        g.set(0, 0, 2);
    }
    g
}

/// Builds the ternary LCD `[n, n - i, 2]` code and checks minimum weight 2,
/// the LCD property and the Gram block form.
pub fn build_parity_family(n: usize, i: usize) -> Result<LinearCode> {
    let h = parity_family_matrix(n, i)?;
    if h.gram() != parity_family_gram(n, i) {
        return Err(Error::Invalid(format!(
            "parity family Gram mismatch at n={n}, i={i}"
        )));
    }
    let c = LinearCode::from_parity_check(&h)?;
    if !c.is_lcd() || c.min_distance(DEFAULT_ENUMERATION_BUDGET)? != 2 {
        return Err(Error::Invalid(format!(
            "parity family check failed at n={n}, i={i}"
        )));
    }
    Ok(c)
}

/// Appends `(n - h.cols()) / 2` pairs of equal columns to a binary
/// parity-check matrix. Each pair adds `2 c c^T = 0` to the Gram matrix, so
/// LCD is preserved while the distance drops to 2.
pub fn pad_with_column_pairs(h: &FqMatrix, n: usize) -> Result<FqMatrix> {
    if h.field() != FieldOrder::Binary || n < h.cols() || !(n - h.cols()).is_multiple_of(2) {
        return Err(Error::Invalid(
            "padding needs a binary matrix and an even number of extra columns".to_owned(),
        ));
    }
    let mut pair = FqMatrix::zeros(FieldOrder::Binary, h.rows(), n - h.cols());
    for j in 0..pair.cols() {
        pair.set(0, j, 1);
    }
    Ok(h.hconcat(&pair)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_examples() {
        let c = build_parity_family(10, 2).unwrap();
        assert_eq!((c.n(), c.k()), (10, 8));
        let h = parity_family_matrix(10, 2).unwrap();
        assert_eq!(
            h.gram(),
            FqMatrix::from_rows(FieldOrder::Ternary, &[[0u8, 2], [2, 0]]).unwrap()
        );
        let c = build_parity_family(12, 4).unwrap();
        assert_eq!((c.n(), c.k()), (12, 8));
        let c = build_parity_family(3, 2).unwrap();
        assert_eq!((c.n(), c.k()), (3, 1));
        assert!(build_parity_family(5, 5).is_err());
        assert!(build_parity_family(2, 1).is_err());
    }

    #[test]
    fn family_over_a_range() {
        for n in 3..=24 {
            for i in 2..n {
                build_parity_family(n, i).unwrap();
            }
        }
    }
}
