//! Numeric tables: Griesmer offsets, reduction values, bound residues and
//! the small-length ternary table.

use lcd_core::bounds::k_bracket;
use lcd_core::FieldOrder;

/// `g_2(31s + t, 5) = 16s + BINARY_G_OFFSETS[t]`.
pub const BINARY_G_OFFSETS: [u64; 31] = [
    0, 0, 0, 0, 0, 1, 2, 2, 3, 4, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 9, 10, 10, 11, 12, 12, 12, 13, 14,
    14, 15,
];

/// `g_3(40s + t, 4) = 27s + TERNARY_G_OFFSETS[t]`.
pub const TERNARY_G_OFFSETS: [u64; 40] = [
    0, 0, 0, 0, 1, 2, 3, 3, 4, 5, 6, 6, 7, 8, 9, 9, 9, 10, 11, 12, 12, 13, 14, 15, 15, 16, 17, 18,
    18, 18, 19, 20, 21, 21, 22, 23, 24, 24, 25, 26,
];

/// `(t, r)` pairs for `q = 2, k = 5`.
pub const BINARY_R: [(u64, i64); 16] = [
    (0, 31),
    (1, 16),
    (2, 32),
    (8, 35),
    (10, 36),
    (12, 37),
    (14, 38),
    (15, 23),
    (16, 39),
    (17, 24),
    (18, 40),
    (23, 27),
    (25, 28),
    (27, 29),
    (29, 30),
    (30, 15),
];

/// `(t, r)` pairs for `q = 3, k = 4`.
pub const TERNARY_R: [(u64, i64); 23] = [
    (0, 40),
    (1, 27),
    (2, 54),
    (3, 81),
    (9, 43),
    (12, 44),
    (13, 31),
    (15, 45),
    (18, 46),
    (21, 47),
    (22, 34),
    (23, 61),
    (25, 35),
    (26, 22),
    (27, 49),
    (28, 36),
    (31, 37),
    (32, 64),
    (34, 38),
    (35, 25),
    (37, 39),
    (38, 26),
    (39, 13),
];

/// Residues whose target distance is one below the Griesmer value.
pub const BINARY_SHIFTED: [u64; 2] = [0, 16];
pub const TERNARY_SHIFTED: [u64; 4] = [0, 23, 27, 32];

/// Residues where the divisibility rule lowers the bound to `g - 1`.
pub const BINARY_GB_RESIDUES: [u64; 8] = [0, 6, 9, 13, 16, 21, 24, 28];
pub const TERNARY_GB_RESIDUES: [u64; 9] = [0, 6, 10, 14, 19, 23, 27, 32, 36];

/// `r` values whose target searches were reported exhaustive. Only the
/// smallest of each list is within desk reach.
pub const BINARY_RESOLVED_R: [i64; 9] = [15, 16, 23, 24, 27, 28, 29, 30, 31];
pub const TERNARY_RESOLVED_R: [i64; 4] = [13, 22, 25, 26];

/// Residues of the closed formulas `floor(q^(k-1) n / [k]_q) - c`.
pub const BINARY_FORMULA_MINUS_ONE: [u64; 13] = [1, 9, 13, 15, 17, 21, 23, 24, 25, 27, 28, 29, 30];
pub const BINARY_FORMULA_MINUS_TWO: [u64; 2] = [0, 6];
pub const TERNARY_FORMULA_MINUS_ONE: [u64; 20] = [
    4, 5, 7, 8, 10, 11, 14, 16, 17, 19, 20, 24, 26, 29, 30, 33, 35, 36, 38, 39,
];
pub const TERNARY_FORMULA_MINUS_TWO: [u64; 1] = [6];

/// The `(q, k)` pair each residue table belongs to.
pub fn family(field: FieldOrder) -> u32 {
    match field {
        FieldOrder::Binary => 5,
        FieldOrder::Ternary => 4,
    }
}

pub fn g_offsets(field: FieldOrder) -> &'static [u64] {
    match field {
        FieldOrder::Binary => &BINARY_G_OFFSETS,
        FieldOrder::Ternary => &TERNARY_G_OFFSETS,
    }
}

pub fn r_table(field: FieldOrder) -> &'static [(u64, i64)] {
    match field {
        FieldOrder::Binary => &BINARY_R,
        FieldOrder::Ternary => &TERNARY_R,
    }
}

pub fn gb_residues(field: FieldOrder) -> &'static [u64] {
    match field {
        FieldOrder::Binary => &BINARY_GB_RESIDUES,
        FieldOrder::Ternary => &TERNARY_GB_RESIDUES,
    }
}

pub fn resolved_r(field: FieldOrder) -> &'static [i64] {
    match field {
        FieldOrder::Binary => &BINARY_RESOLVED_R,
        FieldOrder::Ternary => &TERNARY_RESOLVED_R,
    }
}

/// `alpha(t)` such that the reduction's target distance is
/// `q^(k-1) s + alpha(t)`.
pub fn alpha(field: FieldOrder, t: u64) -> i64 {
    let shifted = match field {
        FieldOrder::Binary => BINARY_SHIFTED.as_slice(),
        FieldOrder::Ternary => TERNARY_SHIFTED.as_slice(),
    };
    g_offsets(field)[t as usize] as i64 - i64::from(shifted.contains(&t))
}

/// Closed-form value `floor(q^(k-1) n / [k]_q) - c` for residues covered by
/// the formulas, `None` elsewhere.
pub fn formula_value(field: FieldOrder, n: u64) -> Option<u64> {
    let k = family(field);
    let kb = k_bracket(field, k);
    let t = n % kb;
    let (one, two): (&[u64], &[u64]) = match field {
        FieldOrder::Binary => (&BINARY_FORMULA_MINUS_ONE, &BINARY_FORMULA_MINUS_TWO),
        FieldOrder::Ternary => (&TERNARY_FORMULA_MINUS_ONE, &TERNARY_FORMULA_MINUS_TWO),
    };
    let c = if one.contains(&t) {
        1
    } else if two.contains(&t) {
        2
    } else {
        return None;
    };
    (field.pow(k - 1) * n / kb).checked_sub(c)
}

/// One cell of the small-length ternary table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallCell {
    pub n: u32,
    pub k: u32,
    /// One value, or two when the cell is unresolved.
    pub values: Vec<u32>,
    /// Witness quoted from an external table rather than given here.
    pub external_witness: bool,
}

impl SmallCell {
    pub fn is_open(&self) -> bool {
        self.values.len() > 1
    }
}

pub fn small_ternary_table() -> Vec<SmallCell> {
    let mut out = Vec::new();
    for line in super::D3_SMALL
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
    {
        let mut it = line.split_whitespace();
        let n: u32 = it
            .next()
            .and_then(|t| t.parse().ok())
            .expect("well-formed asset");
        for (idx, tok) in it.enumerate() {
            let external_witness = tok.contains('*');
            let values = tok
                .split('|')
                .map(|v| v.trim_end_matches('*').parse().expect("well-formed asset"))
                .collect();
            out.push(SmallCell {
                n,
                k: 4 + idx as u32,
                values,
                external_witness,
            });
        }
    }
    out
}
