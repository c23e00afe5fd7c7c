//! Linear codes held as full-rank generator matrices.

use alloc::vec::Vec;

use crate::field::FieldOrder;
use crate::matrix::FqMatrix;
use crate::packed::{EchelonBasis, Packing};
use crate::{Error, Result};

/// Default cap on the number of enumerated messages (`q^k`).
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 1 << 24;

/// An `[n, k]` code over GF(q) given by a `k x n` generator of rank `k`.
///
/// The generator is kept exactly as supplied; no canonical form is applied.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LinearCode {
    gen: FqMatrix,
}

/// Minimum weight, dual distance and LCD status of a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WeightSummary {
    pub min_weight: usize,
    /// `None` for the full space, whose dual is the zero code.
    pub dual_distance: Option<usize>,
    pub is_lcd: bool,
}

impl LinearCode {
    /// Wraps `g` after checking it has full row rank. The error names the
    /// first row (1-based) that lies in the span of the rows above it.
    pub fn from_generator(g: FqMatrix) -> Result<Self> {
        if g.rows() == 0 || g.cols() == 0 {
            return Err(Error::EmptyCode);
        }
        let packing = Packing::new(g.field(), g.cols());
        let mut basis = EchelonBasis::new(packing);
        for i in 0..g.rows() {
            if !basis.insert(g.packed_row(&packing, i)) {
                return Err(Error::RankDeficient { row: i + 1 });
            }
        }
        Ok(Self { gen: g })
    }

    /// The code `{x : h x^T = 0}`.
    pub fn from_parity_check(h: &FqMatrix) -> Result<Self> {
        Self::from_generator(h.nullspace_basis())
    }

    #[inline]
    pub fn field(&self) -> FieldOrder {
        self.gen.field()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    #[inline]
    pub fn generator(&self) -> &FqMatrix {
        &self.gen
    }

    pub fn into_generator(self) -> FqMatrix {
        self.gen
    }

    /// A generator of the dual code, `(n-k) x n`. Zero rows for the full space.
    pub fn parity_check(&self) -> FqMatrix {
        self.gen.nullspace_basis()
    }

    pub fn dual(&self) -> Result<Self> {
        if self.k() == self.n() {
            return Err(Error::ZeroDimensionalDual { n: self.n() });
        }
        Self::from_generator(self.parity_check())
    }

    /// Massey's criterion: the code is LCD iff `G G^T` is nonsingular.
    pub fn is_lcd(&self) -> bool {
        self.gen.gram().rank() == self.k()
    }

    /// True iff no coordinate is identically zero, i.e. `d_perp >= 2`.
    pub fn has_full_support(&self) -> bool {
        (0..self.n()).all(|j| (0..self.k()).any(|i| self.gen.get(i, j) != 0))
    }

    fn check_budget(&self, budget: u64) -> Result<()> {
        let needed = self.field().pow(self.k() as u32);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        Ok(())
    }

    /// Visits one codeword per nonzero scalar class (all nonzero codewords
    /// for GF(2)) in Gray-code order. `visit` returns `false` to stop early.
    fn for_each_projective_codeword(
        &self,
        budget: u64,
        mut visit: impl FnMut(&[u64]) -> bool,
    ) -> Result<()> {
        self.check_budget(budget)?;
        let packing = Packing::new(self.field(), self.n());
        let rows: Vec<Vec<u64>> = (0..self.k())
            .map(|i| self.gen.packed_row(&packing, i))
            .collect();
        let k = self.k();
        match self.field() {
            FieldOrder::Binary => {
                let mut acc = packing.zero();
                for step in 1u64..(1u64 << k) {
                    packing.add_assign(&mut acc, &rows[step.trailing_zeros() as usize]);
                    if !visit(&acc) {
                        return Ok(());
                    }
                }
            }
            FieldOrder::Ternary => {
                // Leading coefficient 1 at position p, reflected ternary Gray
                // code over the coordinates after p.
                for p in 0..k {
                    let mut acc = rows[p].clone();
                    if !visit(&acc) {
                        return Ok(());
                    }
                    let tail = k - 1 - p;
                    let mut digit = alloc::vec![0u8; tail];
                    let mut up = alloc::vec![true; tail];
                    for step in 1..3u64.pow(tail as u32) {
                        let (mut c, mut t) = (step, 0);
                        while c % 3 == 0 {
                            c /= 3;
                            t += 1;
                        }
                        let row = &rows[p + 1 + t];
                        if up[t] {
                            digit[t] += 1;
                            packing.add_assign(&mut acc, row);
                        } else {
                            digit[t] -= 1;
                            packing.sub_assign(&mut acc, row);
                        }
                        if digit[t] == 0 || digit[t] == 2 {
                            up[t] = !up[t];
                        }
                        if !visit(&acc) {
                            return Ok(());
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Exact minimum weight by enumerating all `q^k` messages (one per
    /// scalar class over GF(3)). Fails if `q^k` exceeds `budget`.
    pub fn min_weight(&self, budget: u64) -> Result<usize> {
        let packing = Packing::new(self.field(), self.n());
        let mut best = u32::MAX;
        self.for_each_projective_codeword(budget, |c| {
            best = best.min(packing.weight(c));
            best > 1
        })?;
        Ok(best as usize)
    }

    /// Sorted distinct nonzero codeword weights.
    pub fn weight_distribution_support(&self, budget: u64) -> Result<Vec<usize>> {
        let packing = Packing::new(self.field(), self.n());
        let mut seen = alloc::vec![false; self.n() + 1];
        self.for_each_projective_codeword(budget, |c| {
            seen[packing.weight(c) as usize] = true;
            true
        })?;
        Ok((1..=self.n()).filter(|&w| seen[w]).collect())
    }

    /// True iff some nonzero codeword has weight at most `w` (`w <= 4`).
    ///
    /// Decided on a parity-check matrix: the minimum distance exceeds `w`
    /// iff every `w` of its columns are linearly independent.
    pub fn min_weight_at_most(&self, w: usize) -> Result<bool> {
        if w > 4 {
            return Err(Error::ProbeTooLarge(w));
        }
        if w == 0 {
            return Ok(false);
        }
        let h = self.parity_check();
        Ok(smallest_dependent_columns(&h, w, u64::MAX)?.is_some())
    }

    /// Minimum weight of the dual code, i.e. the size of the smallest
    /// linearly dependent set of generator columns. Never exceeds `k + 1`.
    /// `budget` bounds the number of subsets examined.
    pub fn dual_distance(&self, budget: u64) -> Result<usize> {
        if self.k() == self.n() {
            return Err(Error::ZeroDimensionalDual { n: self.n() });
        }
        if !self.has_full_support() {
            return Ok(1);
        }
        if self.field().pow((self.n() - self.k()) as u32) <= budget {
            return self.dual()?.min_weight(budget);
        }
        smallest_dependent_columns(&self.gen, self.k() + 1, budget)?
            .ok_or(Error::Precondition("k+1 columns must be dependent"))
    }

    /// Minimum weight by enumeration when `q^k` fits `budget`, otherwise by
    /// the column-dependency probes (succeeds only when `d <= 4`).
    pub fn min_distance(&self, budget: u64) -> Result<usize> {
        match self.min_weight(budget) {
            Ok(d) => Ok(d),
            Err(Error::BudgetExceeded { needed, budget }) => {
                let h = self.parity_check();
                smallest_dependent_columns(&h, 4, budget)?
                    .ok_or(Error::BudgetExceeded { needed, budget })
            }
            Err(e) => Err(e),
        }
    }

    pub fn summary(&self, budget: u64) -> Result<WeightSummary> {
        let dual_distance = match self.dual_distance(budget) {
            Ok(d) => Some(d),
            Err(Error::ZeroDimensionalDual { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(WeightSummary {
            min_weight: self.min_distance(budget)?,
            dual_distance,
            is_lcd: self.is_lcd(),
        })
    }

    /// Shortens at 1-based coordinate `t`: keeps the codewords that vanish
    /// at `t` and deletes that coordinate.
    pub fn shorten(&self, t: usize) -> Result<Self> {
        let n = self.n();
        if t == 0 || t > n {
            return Err(Error::CoordinateOutOfRange { index: t, len: n });
        }
        let j = t - 1;
        let f = self.field();
        let keep: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let mut g = self.gen.clone();
        let rows: Vec<usize> = match (0..g.rows()).find(|&i| g.get(i, j) != 0) {
            None => (0..g.rows()).collect(),
            Some(p) => {
                let inv = f.inv(g.get(p, j));
                for i in 0..g.rows() {
                    let factor = f.mul(g.get(i, j), inv);
                    if i != p && factor != 0 {
                        for c in 0..n {
                            let v = f.sub(g.get(i, c), f.mul(factor, g.get(p, c)));
                            g.set(i, c, v);
                        }
                    }
                }
                (0..g.rows()).filter(|&i| i != p).collect()
            }
        };
        if rows.is_empty() {
            return Err(Error::ZeroDimensional);
        }
        if keep.is_empty() {
            return Err(Error::EmptyCode);
        }
        Self::from_generator(g.select_rows(&rows).select_columns(&keep))
    }

    /// Applies `x -> x P` for the permutation taking column `j` to
    /// position `perm[j]`.
    pub fn permute_coordinates(&self, perm: &[usize]) -> Result<Self> {
        let mut inverse = alloc::vec![0; perm.len()];
        for (j, &p) in perm.iter().enumerate() {
            inverse[p] = j;
        }
        Self::from_generator(self.gen.select_columns(&inverse))
    }
}

/// Size of the smallest linearly dependent set among the columns of `m`,
/// searched up to `max_w`. `node_budget` caps the subsets explored.
pub(crate) fn smallest_dependent_columns(
    m: &FqMatrix,
    max_w: usize,
    node_budget: u64,
) -> Result<Option<usize>> {
    let packing = Packing::new(m.field(), m.rows());
    let cols: Vec<Vec<u64>> = (0..m.cols()).map(|j| packing.pack(&m.column(j))).collect();
    let mut nodes = 0u64;
    for w in 1..=max_w.min(m.cols()) {
        let mut basis = EchelonBasis::new(packing);
        if dependent_search(&cols, &packing, 0, w, &mut basis, &mut nodes, node_budget)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn dependent_search(
    cols: &[Vec<u64>],
    packing: &Packing,
    start: usize,
    w: usize,
    basis: &mut EchelonBasis,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    let depth = basis.len();
    for j in start..cols.len() {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::BudgetExceeded {
                needed: *nodes,
                budget,
            });
        }
        let mut v = cols[j].clone();
        basis.reduce(&mut v);
        if packing.is_zero(&v) {
            return Ok(true);
        }
        if depth + 1 < w {
            basis.insert(v);
            let found = dependent_search(cols, packing, j + 1, w, basis, nodes, budget)?;
            basis.pop();
            if found {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::simplex_matrix;
    use alloc::vec;

    const F2: FieldOrder = FieldOrder::Binary;
    const F3: FieldOrder = FieldOrder::Ternary;
    const B: u64 = DEFAULT_ENUMERATION_BUDGET;

    fn repetition(f: FieldOrder, n: usize) -> LinearCode {
        LinearCode::from_generator(FqMatrix::from_rows(f, &[vec![1u8; n]]).unwrap()).unwrap()
    }

    fn hamming7() -> LinearCode {
        let g = FqMatrix::from_rows(
            F2,
            &[
                [1, 0, 0, 0, 0, 1, 1],
                [0, 1, 0, 0, 1, 0, 1],
                [0, 0, 1, 0, 1, 1, 0],
                [0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .unwrap();
        LinearCode::from_generator(g).unwrap()
    }

    #[test]
    fn from_generator_checks_rank() {
        let full = LinearCode::from_generator(FqMatrix::identity(F2, 4)).unwrap();
        assert_eq!((full.n(), full.k()), (4, 4));
        let s = LinearCode::from_generator(simplex_matrix(F3, 4)).unwrap();
        assert_eq!((s.n(), s.k()), (40, 4));
        let eq = FqMatrix::from_rows(F2, &[[1, 0, 1], [1, 0, 1]]).unwrap();
        assert_eq!(
            LinearCode::from_generator(eq),
            Err(Error::RankDeficient { row: 2 })
        );
    }

    #[test]
    fn dual_of_repetition_is_even_weight() {
        let d = repetition(F2, 5).dual().unwrap();
        assert_eq!((d.n(), d.k()), (5, 4));
        assert_eq!(d.weight_distribution_support(B).unwrap(), vec![2, 4]);
        assert!(matches!(
            LinearCode::from_generator(FqMatrix::identity(F3, 3))
                .unwrap()
                .dual(),
            Err(Error::ZeroDimensionalDual { .. })
        ));
    }

    #[test]
    fn minimum_weights() {
        let s = LinearCode::from_generator(simplex_matrix(F2, 5)).unwrap();
        assert_eq!(s.min_weight(B).unwrap(), 16);
        assert_eq!(repetition(F3, 7).min_weight(B).unwrap(), 7);
        assert_eq!(hamming7().min_weight(B).unwrap(), 3);
        assert!(matches!(
            s.min_weight(16),
            Err(Error::BudgetExceeded {
                needed: 32,
                budget: 16
            })
        ));
    }

    #[test]
    fn hamming_probes() {
        let h = hamming7();
        assert!(!h.min_weight_at_most(2).unwrap());
        assert!(h.min_weight_at_most(3).unwrap());
        assert_eq!(h.min_weight_at_most(5), Err(Error::ProbeTooLarge(5)));
    }

    #[test]
    fn zero_column_gives_weight_one_dual() {
        let g = FqMatrix::from_rows(F3, &[[1, 0, 1], [0, 1, 0]]).unwrap();
        let c = LinearCode::from_generator(g.hconcat(&FqMatrix::zeros(F3, 2, 1)).unwrap()).unwrap();
        assert_eq!(c.dual_distance(B).unwrap(), 1);
        assert!(c.dual().unwrap().min_weight_at_most(1).unwrap());
    }

    #[test]
    fn dual_distance_of_repetition() {
        assert_eq!(repetition(F2, 4).dual_distance(B).unwrap(), 2);
        let s = LinearCode::from_generator(simplex_matrix(F3, 3)).unwrap();
        assert_eq!(s.dual_distance(B).unwrap(), 3);
    }

    #[test]
    fn lcd_examples() {
        assert!(LinearCode::from_generator(FqMatrix::identity(F2, 3))
            .unwrap()
            .is_lcd());
        assert!(!LinearCode::from_generator(simplex_matrix(F3, 4))
            .unwrap()
            .is_lcd());
    }

    #[test]
    fn shortening() {
        assert_eq!(repetition(F2, 5).shorten(1), Err(Error::ZeroDimensional));
        let g = FqMatrix::from_rows(F3, &[[1, 0, 0, 2], [0, 1, 0, 1]]).unwrap();
        let c = LinearCode::from_generator(g).unwrap();
        let s = c.shorten(3).unwrap();
        assert_eq!((s.n(), s.k()), (3, 2));
        assert_eq!(
            s.weight_distribution_support(B).unwrap(),
            c.weight_distribution_support(B).unwrap()
        );
        let s1 = c.shorten(1).unwrap();
        assert_eq!((s1.n(), s1.k()), (3, 1));
        assert!(matches!(
            c.shorten(0),
            Err(Error::CoordinateOutOfRange { .. })
        ));
        assert!(matches!(
            c.shorten(5),
            Err(Error::CoordinateOutOfRange { .. })
        ));
    }

    #[test]
    fn ternary_gray_enumeration_matches_direct() {
        let g =
            FqMatrix::from_rows(F3, &[[1, 2, 0, 1, 1], [0, 1, 1, 2, 0], [2, 2, 1, 0, 1]]).unwrap();
        let c = LinearCode::from_generator(g.clone()).unwrap();
        let mut direct = [false; 6];
        for x in 1..27u32 {
            let msg = FqMatrix::from_rows(F3, &[[(x % 3) as u8, (x / 3 % 3) as u8, (x / 9) as u8]])
                .unwrap();
            let cw = msg.mat_mul(&g).unwrap();
            direct[cw.row(0).iter().filter(|&&e| e != 0).count()] = true;
        }
        let expected: Vec<usize> = (1..6).filter(|&w| direct[w]).collect();
        assert_eq!(c.weight_distribution_support(B).unwrap(), expected);
    }
}
