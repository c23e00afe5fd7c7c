//! Simplex generator matrices and the codes `C_{q,k}(m)` obtained by
//! repeating simplex columns according to a multiplicity vector.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bounds::k_bracket;
use crate::code::LinearCode;
use crate::field::FieldOrder;
use crate::matrix::FqMatrix;
use crate::{Error, Result};

/// Smallest dimension for which the simplex code over `field` is
/// self-orthogonal (3 for GF(2), 2 for GF(3)).
pub fn min_self_orthogonal_dim(field: FieldOrder) -> usize {
    match field {
        FieldOrder::Binary => 3,
        FieldOrder::Ternary => 2,
    }
}

/// The `k x [k]_q` simplex generator, built by the recursion
///
/// ```text
/// S_{2,k} = ( S  0  S  )      S_{3,k} = ( S  0  S  S  )
///           ( 0  1  1  )                ( 0  1  1  2  )
/// ```
///
/// with `S = S_{q,k-1}` and `S_{q,1} = (1)`. The column order is fixed; the
/// multiplicity vectors and pinned search indices refer to it.
pub fn simplex_matrix(field: FieldOrder, k: usize) -> FqMatrix {
    assert!(k >= 1, "simplex dimension must be positive");
    let mut cols: Vec<Vec<u8>> = vec![vec![1]];
    for _ in 1..k {
        let mut next = Vec::with_capacity(cols.len() * field.q() as usize + 1);
        next.extend(cols.iter().map(|c| with_last(c, 0)));
        let mut unit = vec![0; cols[0].len()];
        unit.push(1);
        next.push(unit);
        for last in 1..field.q() {
            next.extend(cols.iter().map(|c| with_last(c, last)));
        }
        cols = next;
    }
    let rows: Vec<Vec<u8>> = (0..k)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect();
    FqMatrix::from_rows(field, &rows).expect("well-formed simplex")
}

fn with_last(c: &[u8], last: u8) -> Vec<u8> {
    let mut v = c.to_vec();
    v.push(last);
    v
}

/// 1-based indices of the unit columns `e_1, ..., e_k` inside `S_{q,k}`.
pub fn unit_column_indices(field: FieldOrder, k: usize) -> Vec<usize> {
    (0..k)
        .map(|j| k_bracket(field, j as u32) as usize + 1)
        .collect()
}

/// 1-based column indices where the first row of `S_{q,k}` is nonzero.
pub fn first_row_support(field: FieldOrder, k: usize) -> Vec<usize> {
    let s = simplex_matrix(field, k);
    (0..s.cols())
        .filter(|&j| s.get(0, j) != 0)
        .map(|j| j + 1)
        .collect()
}

/// Projective geometry of `S_{q,k}`: its columns and, for each column,
/// the column indices orthogonal to it. Columns double as representatives
/// of the projective message classes.
#[derive(Debug, Clone)]
pub struct SimplexGeometry {
    pub field: FieldOrder,
    pub k: usize,
    pub columns: Vec<Vec<u8>>,
    /// `orthogonal[i]` lists every `j` with `<h_i, h_j> = 0` (0-based).
    pub orthogonal: Vec<Vec<usize>>,
}

impl SimplexGeometry {
    pub fn new(field: FieldOrder, k: usize) -> Self {
        let s = simplex_matrix(field, k);
        let columns: Vec<Vec<u8>> = (0..s.cols()).map(|j| s.column(j)).collect();
        let q = field.q() as u32;
        let dot = |a: &[u8], b: &[u8]| {
            a.iter()
                .zip(b)
                .map(|(&x, &y)| x as u32 * y as u32)
                .sum::<u32>()
                % q
        };
        let orthogonal = columns
            .iter()
            .map(|a| {
                (0..columns.len())
                    .filter(|&j| dot(a, &columns[j]) == 0)
                    .collect()
            })
            .collect();
        Self {
            field,
            k,
            columns,
            orthogonal,
        }
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// 0-based index of the column proportional to `v`, if `v` is nonzero.
    pub fn index_of(&self, v: &[u8]) -> Option<usize> {
        let lead = *v.iter().find(|&&e| e != 0)?;
        // columns are normalized so their first nonzero entry is 1
        let norm: Vec<u8> = v
            .iter()
            .map(|&e| self.field.mul(e, self.field.inv(lead)))
            .collect();
        self.columns.iter().position(|c| *c == norm)
    }
}

/// Column multiplicities `m_1, ..., m_{[k]_q}` over the simplex columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MultiplicityVector {
    field: FieldOrder,
    k: usize,
    m: Vec<u32>,
}

impl MultiplicityVector {
    pub fn new(field: FieldOrder, k: usize, m: Vec<u32>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidMultiplicity("dimension must be positive"));
        }
        if m.len() as u64 != k_bracket(field, k as u32) {
            return Err(Error::InvalidMultiplicity("length must equal [k]_q"));
        }
        Ok(Self { field, k, m })
    }

    /// The all-ones vector; its code is the simplex code.
    pub fn all_ones(field: FieldOrder, k: usize) -> Self {
        Self {
            field,
            k,
            m: vec![1; k_bracket(field, k as u32) as usize],
        }
    }

    /// Parses either a compact digit string (`1100110...`) or
    /// comma-separated integers.
    pub fn parse(field: FieldOrder, k: usize, s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let m: Option<Vec<u32>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10)).collect()
        };
        let m = m.ok_or(Error::InvalidMultiplicity(
            "expected digits or comma-separated integers",
        ))?;
        Self::new(field, k, m)
    }

    pub fn field(&self) -> FieldOrder {
        self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.m
    }

    /// Code length `sum m_i`.
    pub fn n(&self) -> usize {
        self.m.iter().map(|&x| x as usize).sum()
    }

    /// The compact digit form, available when every entry is at most 9.
    pub fn to_digits(&self) -> Option<String> {
        self.m.iter().map(|&x| char::from_digit(x, 10)).collect()
    }

    pub fn to_comma_separated(&self) -> String {
        let mut s = String::new();
        for (i, x) in self.m.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&alloc::format!("{x}"));
        }
        s
    }

    /// The generator `G_{q,k}(m)`: `m_i` adjacent copies of column `i`,
    /// in column order.
    pub fn generator(&self) -> FqMatrix {
        let s = simplex_matrix(self.field, self.k);
        let cols: Vec<usize> = self
            .m
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| core::iter::repeat_n(i, c as usize))
            .collect();
        s.select_columns(&cols)
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_digits() {
            Some(d) => f.write_str(&d),
            None => f.write_str(&self.to_comma_separated()),
        }
    }
}

impl fmt::Debug for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m[{}, k={}]({})", self.field, self.k, self)
    }
}

/// Builds `C_{q,k}(m)`.
pub fn build_multiset_code(mv: &MultiplicityVector) -> Result<LinearCode> {
    if mv.n() < mv.k() {
        return Err(Error::Precondition("code length must be at least k"));
    }
    LinearCode::from_generator(mv.generator())
}

/// Per-index range allowed for `m_i` in an LCD code of minimum weight at
/// least `d`. `hi < lo` means the search space is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MultiplicityBounds {
    pub lo: i64,
    pub hi: i64,
}

impl MultiplicityBounds {
    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }
}

/// `lo = max(0, qd - (q-1)n)` and
/// `hi = floor(n - (q^{k-1} - 1) d / ((q-1) q^{k-2}))`, the latter in exact
/// integer arithmetic.
pub fn multiplicity_bounds(
    field: FieldOrder,
    k: usize,
    n: u64,
    d: u64,
) -> Result<MultiplicityBounds> {
    if k < min_self_orthogonal_dim(field) {
        return Err(Error::Precondition(
            "k must be at least the self-orthogonality threshold",
        ));
    }
    let q = field.q() as i128;
    let (n, d) = (n as i128, d as i128);
    let lo = (q * d - (q - 1) * n).max(0);
    let denom = (q - 1) * q.pow(k as u32 - 2);
    let numer = n * denom - (q.pow(k as u32 - 1) - 1) * d;
    let hi = numer.div_euclid(denom);
    Ok(MultiplicityBounds {
        lo: lo as i64,
        hi: hi as i64,
    })
}

/// Weight of `x G_{q,k}(m)` for one representative `x` of each projective
/// class. Class `j` is represented by the simplex column `h_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    pub weights: Vec<u64>,
}

impl WeightProfile {
    pub fn min(&self) -> u64 {
        self.weights.iter().copied().min().unwrap_or(0)
    }
}

/// Weight of every projective class: `n - sum_{i : <x, h_i> = 0} m_i`.
pub fn weight_profile(mv: &MultiplicityVector) -> WeightProfile {
    let geo = SimplexGeometry::new(mv.field(), mv.k());
    weight_profile_with(&geo, mv)
}

pub(crate) fn weight_profile_with(geo: &SimplexGeometry, mv: &MultiplicityVector) -> WeightProfile {
    let n = mv.n() as u64;
    let m = mv.as_slice();
    let weights = geo
        .orthogonal
        .iter()
        .map(|orth| n - orth.iter().map(|&i| m[i] as u64).sum::<u64>())
        .collect();
    WeightProfile { weights }
}

/// Result of [`extend_lcd`].
#[derive(Debug, Clone)]
pub struct Extension {
    pub code: LinearCode,
    /// Minimum weight of the extended code.
    pub min_weight: usize,
    /// Whether LCD-ness and the minimum weight were re-checked by
    /// enumeration rather than taken from the construction.
    pub verified: bool,
}

/// Prepends `s` copies of `S_{q,k}`: an LCD `[n,k,d]` code becomes an LCD
/// `[n + s[k]_q, k, d + s q^{k-1}]` code.
///
/// `d` of the input is computed within `budget`; the output is re-verified
/// when `q^k` fits the budget.
pub fn extend_lcd(c: &LinearCode, s: usize, budget: u64) -> Result<Extension> {
    let (field, k) = (c.field(), c.k());
    if s == 0 {
        return Err(Error::Precondition("extension count must be positive"));
    }
    if k < min_self_orthogonal_dim(field) {
        return Err(Error::Precondition(
            "k must be at least the self-orthogonality threshold",
        ));
    }
    if !c.is_lcd() {
        return Err(Error::Precondition("input code must be LCD"));
    }
    let d = c.min_distance(budget)?;
    let gen = simplex_matrix(field, k)
        .repeat_columns(s)
        .hconcat(c.generator())?;
    let code = LinearCode::from_generator(gen)?;
    let expected = d + s * field.pow(k as u32 - 1) as usize;
    let verified = field.pow(k as u32) <= budget;
    if verified {
        let got = code.min_weight(budget)?;
        if got != expected || !code.is_lcd() {
            return Err(Error::Precondition("extension failed re-verification"));
        }
    }
    Ok(Extension {
        code,
        min_weight: expected,
        verified,
    })
}
