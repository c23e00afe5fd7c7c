//! Dense matrices over GF(2) and GF(3).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::FieldOrder;
use crate::{Error, Result};

/// A dense row-major matrix over GF(q), q in {2, 3}.
///
/// Entries are stored one per byte and always reduced into `0..q`.
/// Zero-row and zero-column matrices are valid values.
#[derive(Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FqMatrix {
    field: FieldOrder,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub reduced: FqMatrix,
    pub pivots: Vec<usize>,
}

impl FqMatrix {
    pub fn new(field: FieldOrder, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(
                "entry count differs from rows*cols",
            ));
        }
        if let Some(pos) = data.iter().position(|&e| e >= field.q()) {
            return Err(Error::EntryOutOfRange {
                row: pos / cols.max(1),
                col: pos % cols.max(1),
                value: data[pos],
                q: field.q(),
            });
        }
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: FieldOrder, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldOrder, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows<R: AsRef<[u8]>>(field: FieldOrder, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows"));
            }
            data.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, data)
    }

    #[inline]
    pub fn field(&self) -> FieldOrder {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: u8) {
        self.data[i * self.cols + j] = value % self.field.q();
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.q(),
                right: other.field.q(),
            });
        }
        Ok(())
    }

    /// Matrix product over GF(q).
    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("left cols must equal right rows"));
        }
        let q = self.field.q() as u32;
        let mut out = Self::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let s: u32 = (0..self.cols)
                    .map(|t| self.get(i, t) as u32 * other.get(t, j) as u32)
                    .sum();
                out.data[i * other.cols + j] = (s % q) as u8;
            }
        }
        Ok(out)
    }

    /// The Gram matrix `G G^T`.
    pub fn gram(&self) -> Self {
        let q = self.field.q() as u32;
        let mut out = Self::zeros(self.field, self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                let s: u32 = self
                    .row(i)
                    .iter()
                    .zip(self.row(j))
                    .map(|(&a, &b)| a as u32 * b as u32)
                    .sum();
                let v = (s % q) as u8;
                out.data[i * self.rows + j] = v;
                out.data[j * self.rows + i] = v;
            }
        }
        out
    }

    /// Reduced row-echelon form. Pivots are chosen by scanning columns left
    /// to right and, within a column, rows top to bottom.
    pub fn echelon(&self) -> Echelon {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c));
            for j in 0..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i != r && factor != 0 {
                    for j in c..m.cols {
                        let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn is_nonsingular(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rank() == self.rows)
    }

    /// A basis of `{x : self * x^T = 0}`, one row per free column of the
    /// echelon form, ordered by free column.
    pub fn nullspace_basis(&self) -> Self {
        let f = self.field;
        let Echelon { reduced, pivots } = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            out.set(b, fc, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(b, pc, f.neg(reduced.get(r, fc)));
            }
        }
        out
    }

    /// Horizontal concatenation `(self | other)`.
    pub fn hconcat(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hconcat needs equal row counts"));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Self {
            field: self.field,
            rows: self.rows,
            cols,
            data,
        })
    }

    /// `s` side-by-side copies of `self`.
    pub fn repeat_columns(&self, s: usize) -> Self {
        let mut out = Self::zeros(self.field, self.rows, 0);
        for _ in 0..s {
            out = out.hconcat(self).expect("same shape");
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            data.extend(cols.iter().map(|&j| self.get(i, j)));
        }
        Self {
            field: self.field,
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            data.extend_from_slice(self.row(i));
        }
        Self {
            field: self.field,
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Multiplies column `j` by `c`.
    pub fn scale_column(&mut self, j: usize, c: u8) {
        for i in 0..self.rows {
            let v = self.field.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    /// Row `i` as a word-packed vector.
    pub(crate) fn packed_row(&self, packing: &crate::packed::Packing, i: usize) -> Vec<u64> {
        packing.pack(self.row(i))
    }
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FqMatrix<{}> {}x{}", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            for &e in self.row(i) {
                write!(f, "{e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
