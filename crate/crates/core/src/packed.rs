//! Bit-sliced vectors for the hot loops.
//!
//! A GF(2) vector of length `len` is `words` machine words. A GF(3) vector is
//! two planes of `words` words each: bit `j` of the first plane is set iff
//! coordinate `j` equals 1, and of the second iff it equals 2.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::FieldOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Packing {
    pub field: FieldOrder,
    pub len: usize,
    pub words: usize,
}

impl Packing {
    pub fn new(field: FieldOrder, len: usize) -> Self {
        Self {
            field,
            len,
            words: len.div_ceil(64).max(1),
        }
    }

    /// Words used by one vector.
    #[inline]
    pub fn stride(&self) -> usize {
        match self.field {
            FieldOrder::Binary => self.words,
            FieldOrder::Ternary => 2 * self.words,
        }
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.stride()]
    }

    pub fn pack(&self, entries: &[u8]) -> Vec<u64> {
        debug_assert_eq!(entries.len(), self.len);
        let mut v = self.zero();
        for (j, &e) in entries.iter().enumerate() {
            self.set(&mut v, j, e);
        }
        v
    }

    #[cfg(test)]
    pub fn unpack(&self, v: &[u64]) -> Vec<u8> {
        (0..self.len).map(|j| self.get(v, j)).collect()
    }

    #[inline]
    pub fn get(&self, v: &[u64], j: usize) -> u8 {
        let (w, b) = (j / 64, j % 64);
        if (v[w] >> b) & 1 == 1 {
            return 1;
        }
        if self.field == FieldOrder::Ternary && (v[self.words + w] >> b) & 1 == 1 {
            return 2;
        }
        0
    }

    #[inline]
    pub fn set(&self, v: &mut [u64], j: usize, e: u8) {
        let (w, b) = (j / 64, j % 64);
        let mask = 1u64 << b;
        v[w] &= !mask;
        if self.field == FieldOrder::Ternary {
            v[self.words + w] &= !mask;
        }
        match e {
            0 => {}
            1 => v[w] |= mask,
            _ => v[self.words + w] |= mask,
        }
    }

    /// `acc += x`.
    #[inline]
    pub fn add_assign(&self, acc: &mut [u64], x: &[u64]) {
        match self.field {
            FieldOrder::Binary => {
                for (a, b) in acc.iter_mut().zip(x) {
                    *a ^= b;
                }
            }
            FieldOrder::Ternary => {
                let w = self.words;
                for i in 0..w {
                    let (a1, a2) = (acc[i], acc[w + i]);
                    let (b1, b2) = (x[i], x[w + i]);
                    let (s1, s2) = add3(a1, a2, b1, b2);
                    acc[i] = s1;
                    acc[w + i] = s2;
                }
            }
        }
    }

    /// `acc -= x`.
    #[inline]
    pub fn sub_assign(&self, acc: &mut [u64], x: &[u64]) {
        match self.field {
            FieldOrder::Binary => self.add_assign(acc, x),
            FieldOrder::Ternary => {
                let w = self.words;
                for i in 0..w {
                    let (s1, s2) = add3(acc[i], acc[w + i], x[w + i], x[i]);
                    acc[i] = s1;
                    acc[w + i] = s2;
                }
            }
        }
    }

    /// `acc += c * x` for a scalar `c`.
    #[inline]
    pub fn axpy(&self, acc: &mut [u64], c: u8, x: &[u64]) {
        match c % self.field.q() {
            0 => {}
            1 => self.add_assign(acc, x),
            _ => self.sub_assign(acc, x),
        }
    }

    #[inline]
    pub fn weight(&self, v: &[u64]) -> u32 {
        match self.field {
            FieldOrder::Binary => v.iter().map(|x| x.count_ones()).sum(),
            FieldOrder::Ternary => {
                let w = self.words;
                (0..w).map(|i| (v[i] | v[w + i]).count_ones()).sum()
            }
        }
    }

    #[inline]
    pub fn is_zero(&self, v: &[u64]) -> bool {
        v.iter().all(|&x| x == 0)
    }

    /// Standard inner product `sum_j x_j y_j` in the field.
    #[inline]
    #[cfg(test)]
    pub fn dot(&self, x: &[u64], y: &[u64]) -> u8 {
        match self.field {
            FieldOrder::Binary => {
                let ones: u32 = x.iter().zip(y).map(|(a, b)| (a & b).count_ones()).sum();
                (ones % 2) as u8
            }
            FieldOrder::Ternary => {
                let w = self.words;
                let mut ones = 0u32;
                let mut twos = 0u32;
                for i in 0..w {
                    let (x1, x2, y1, y2) = (x[i], x[w + i], y[i], y[w + i]);
                    ones += ((x1 & y1) | (x2 & y2)).count_ones();
                    twos += ((x1 & y2) | (x2 & y1)).count_ones();
                }
                ((ones + 2 * twos) % 3) as u8
            }
        }
    }
}

/// Bit-sliced GF(3) addition on (ones, twos) planes.
#[inline(always)]
pub(crate) fn add3(a1: u64, a2: u64, b1: u64, b2: u64) -> (u64, u64) {
    let t = (a1 | b2) ^ (a2 | b1);
    ((a2 | b2) ^ t, (a1 | b1) ^ t)
}

/// Incrementally maintained row-echelon basis of packed vectors, used to
/// detect the first linearly dependent vector in a sequence.
#[derive(Debug, Clone)]
pub(crate) struct EchelonBasis {
    packing: Packing,
    /// Normalized basis vectors (entry at the pivot equals 1).
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(packing: Packing) -> Self {
        Self {
            packing,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis in place.
    pub fn reduce(&self, v: &mut [u64]) {
        let p = &self.packing;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = p.get(v, piv);
            if c != 0 {
                p.axpy(v, p.field.neg(c), row);
            }
        }
    }

    /// Tries to add `v`. Returns `false` (and leaves the basis untouched) if
    /// `v` is in the span.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let p = self.packing;
        let Some(piv) = (0..p.len).find(|&j| p.get(&v, j) != 0) else {
            return false;
        };
        let c = p.get(&v, piv);
        if c != 1 {
            // scale by the inverse, which is c itself
            let mut scaled = p.zero();
            p.axpy(&mut scaled, c, &v);
            v = scaled;
        }
        self.rows.push(v);
        self.pivots.push(piv);
        true
    }

    pub fn pop(&mut self) {
        self.rows.pop();
        self.pivots.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ternary_addition_table() {
        let p = Packing::new(FieldOrder::Ternary, 1);
        for a in 0..3u8 {
            for b in 0..3u8 {
                let mut x = p.pack(&[a]);
                p.add_assign(&mut x, &p.pack(&[b]));
                assert_eq!(p.get(&x, 0), (a + b) % 3, "{a}+{b}");
                let mut y = p.pack(&[a]);
                p.sub_assign(&mut y, &p.pack(&[b]));
                assert_eq!(p.get(&y, 0), (a + 3 - b) % 3, "{a}-{b}");
            }
        }
    }

    #[test]
    fn multiword_round_trip_and_weight() {
        let p = Packing::new(FieldOrder::Ternary, 130);
        let entries: Vec<u8> = (0..130).map(|j| (j * 7 % 3) as u8).collect();
        let v = p.pack(&entries);
        assert_eq!(p.unpack(&v), entries);
        assert_eq!(
            p.weight(&v) as usize,
            entries.iter().filter(|&&e| e != 0).count()
        );
    }

    #[test]
    fn dot_matches_dense() {
        let p = Packing::new(FieldOrder::Ternary, 5);
        let x = [1, 2, 0, 2, 1];
        let y = [2, 2, 1, 1, 1];
        let dense: u32 = x.iter().zip(&y).map(|(a, b)| (a * b) as u32).sum();
        assert_eq!(p.dot(&p.pack(&x), &p.pack(&y)), (dense % 3) as u8);
    }

    #[test]
    fn echelon_detects_dependency() {
        let p = Packing::new(FieldOrder::Ternary, 3);
        let mut b = EchelonBasis::new(p);
        assert!(b.insert(p.pack(&[1, 2, 0])));
        assert!(b.insert(p.pack(&[0, 1, 1])));
        // (1,2,0) + 2*(0,1,1) = (1,1,2)
        assert!(!b.insert(p.pack(&[1, 1, 2])));
        assert!(b.insert(p.pack(&[0, 0, 1])));
        assert_eq!(b.len(), 3);
    }
}
