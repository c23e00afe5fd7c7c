//! Codes and tables transcribed from the reference literature, embedded as
//! text assets.

pub mod tables;

use std::fmt;
use std::str::FromStr;

use lcd_core::simplex::build_multiset_code;
use lcd_core::{FieldOrder, FqMatrix, LinearCode, MultiplicityVector};

use crate::error::{Error, Result};
use crate::format::parse_matrix;

pub(crate) const T_CODES: &str = include_str!("../../assets/t_codes.txt");
pub(crate) const FIG_MATRICES: &str = include_str!("../../assets/fig_matrices.txt");
pub(crate) const H26: &str = include_str!("../../assets/h26.txt");
pub(crate) const M36T: &str = include_str!("../../assets/m36t.txt");
pub(crate) const D3_SMALL: &str = include_str!("../../assets/d3_small.txt");

/// Every embedded asset by file name, for digest checks.
pub const ASSETS: [(&str, &str); 5] = [
    ("t_codes.txt", T_CODES),
    ("fig_matrices.txt", FIG_MATRICES),
    ("h26.txt", H26),
    ("m36t.txt", M36T),
    ("d3_small.txt", D3_SMALL),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PaperCodeId {
    /// Ternary `[n, 4]` multiplicity code.
    T(u32),
    /// Ternary systematic code `(I_k | M)`.
    M {
        n: u32,
        k: u32,
        d: u32,
    },
    H25,
    H26,
    /// Ternary `[i + 4, i, 3]` code from the first `i` rows of the 32-row matrix.
    M36Chain(u32),
}

impl fmt::Display for PaperCodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PaperCodeId::T(n) => write!(f, "T{n}"),
            PaperCodeId::M { n, k, d } => write!(f, "M-{n}-{k}-{d}"),
            PaperCodeId::H25 => f.write_str("H25"),
            PaperCodeId::H26 => f.write_str("H26"),
            PaperCodeId::M36Chain(i) => write!(f, "M36-chain-{i}"),
        }
    }
}

impl FromStr for PaperCodeId {
    type Err = Error;

    /// Accepts `T11`, `T_11`, `M-13-6-6`, `M13,6,6`, `H25`, `H26`,
    /// `M36-chain-7`, `chain-7`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownPaperCode(s.to_owned());
        let lower = s.trim().to_ascii_lowercase();
        let nums = |rest: &str| -> Option<Vec<u32>> {
            rest.split(|c: char| !c.is_ascii_digit())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().ok())
                .collect()
        };
        let id = if lower == "h25" {
            PaperCodeId::H25
        } else if lower == "h26" {
            PaperCodeId::H26
        } else if let Some(rest) = lower
            .strip_prefix("m36-chain")
            .or_else(|| lower.strip_prefix("chain"))
        {
            match nums(rest).as_deref() {
                Some(&[i]) => PaperCodeId::M36Chain(i),
                _ => return Err(unknown()),
            }
        } else if let Some(rest) = lower.strip_prefix('t') {
            match nums(rest).as_deref() {
                Some(&[n]) => PaperCodeId::T(n),
                _ => return Err(unknown()),
            }
        } else if let Some(rest) = lower.strip_prefix('m') {
            match nums(rest).as_deref() {
                Some(&[n, k, d]) => PaperCodeId::M { n, k, d },
                _ => return Err(unknown()),
            }
        } else {
            return Err(unknown());
        };
        if all_codes().contains(&id) {
            Ok(id)
        } else {
            Err(unknown())
        }
    }
}

/// Claimed parameters of an embedded code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claim {
    pub field: FieldOrder,
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

fn t_rows() -> impl Iterator<Item = (u32, u32, &'static str)> {
    T_CODES
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace();
            let n = it
                .next()
                .and_then(|t| t.parse().ok())
                .expect("well-formed asset");
            let d = it
                .next()
                .and_then(|t| t.parse().ok())
                .expect("well-formed asset");
            (n, d, it.next().expect("well-formed asset"))
        })
}

fn fig_blocks() -> Vec<((u32, u32, u32), FqMatrix)> {
    let mut out = Vec::new();
    let mut lines = FIG_MATRICES
        .lines()
        .filter(|l| !l.starts_with('#'))
        .peekable();
    while let Some(head) = lines.next() {
        let p: Vec<u32> = head
            .split_whitespace()
            .skip(1)
            .map(|t| t.parse().expect("well-formed asset"))
            .collect();
        let dims = lines.next().expect("well-formed asset");
        let rows: usize = dims
            .split_whitespace()
            .nth(1)
            .and_then(|t| t.parse().ok())
            .expect("well-formed asset");
        let mut text = format!("{dims}\n");
        for _ in 0..rows {
            text.push_str(lines.next().expect("well-formed asset"));
            text.push('\n');
        }
        out.push((
            (p[0], p[1], p[2]),
            parse_matrix(&text).expect("well-formed asset"),
        ));
    }
    out
}

/// Every embedded code id in listing order.
pub fn all_codes() -> Vec<PaperCodeId> {
    let mut ids: Vec<PaperCodeId> = t_rows().map(|(n, _, _)| PaperCodeId::T(n)).collect();
    ids.extend(
        fig_blocks()
            .into_iter()
            .map(|((n, k, d), _)| PaperCodeId::M { n, k, d }),
    );
    ids.push(PaperCodeId::H25);
    ids.push(PaperCodeId::H26);
    ids.extend((7..=32).map(PaperCodeId::M36Chain));
    ids
}

pub fn claim(id: PaperCodeId) -> Result<Claim> {
    let c = |field, n: u32, k: u32, d: u32| Claim {
        field,
        n: n as usize,
        k: k as usize,
        d: d as usize,
    };
    Ok(match id {
        PaperCodeId::T(n) => {
            let (_, d, _) = t_rows()
                .find(|r| r.0 == n)
                .ok_or_else(|| Error::UnknownPaperCode(id.to_string()))?;
            c(FieldOrder::Ternary, n, 4, d)
        }
        PaperCodeId::M { n, k, d } => c(FieldOrder::Ternary, n, k, d),
        PaperCodeId::H25 => c(FieldOrder::Binary, 25, 20, 3),
        PaperCodeId::H26 => c(FieldOrder::Binary, 26, 21, 3),
        PaperCodeId::M36Chain(i) => c(FieldOrder::Ternary, i + 4, i, 3),
    })
}

/// Multiplicity vector of `T_n`.
pub fn t_vector(n: u32) -> Option<MultiplicityVector> {
    t_rows().find(|r| r.0 == n).map(|(_, _, m)| {
        MultiplicityVector::parse(FieldOrder::Ternary, 4, m).expect("well-formed asset")
    })
}

/// The 5 x 26 binary parity-check matrix.
pub fn h26_matrix() -> FqMatrix {
    parse_matrix(H26).expect("well-formed asset")
}

/// `H26` with its first column removed. Unlike `H25` (last column removed,
/// singular Gram matrix) this is the parity check of an LCD `[25, 20, 3]` code.
pub fn h25_lcd_matrix() -> FqMatrix {
    let h = h26_matrix();
    h.select_columns(&(1..h.cols()).collect::<Vec<_>>())
}

/// The 32 x 4 ternary matrix whose row prefixes give the chain codes.
pub fn m36_matrix() -> FqMatrix {
    parse_matrix(M36T).expect("well-formed asset").transpose()
}

fn systematic(m: &FqMatrix) -> Result<LinearCode> {
    let g = FqMatrix::identity(m.field(), m.rows()).hconcat(m)?;
    Ok(LinearCode::from_generator(g)?)
}

/// Matrix behind an id: the multiplicity generator, the systematic part
/// `M`, or the parity-check matrix.
pub fn paper_matrix(id: PaperCodeId) -> Result<FqMatrix> {
    let unknown = || Error::UnknownPaperCode(id.to_string());
    Ok(match id {
        PaperCodeId::T(n) => t_vector(n).ok_or_else(unknown)?.generator(),
        PaperCodeId::M { n, k, d } => fig_blocks()
            .into_iter()
            .find(|(p, _)| *p == (n, k, d))
            .map(|(_, m)| m)
            .ok_or_else(unknown)?,
        PaperCodeId::H26 => h26_matrix(),
        PaperCodeId::H25 => {
            let h = h26_matrix();
            h.select_columns(&(0..h.cols() - 1).collect::<Vec<_>>())
        }
        PaperCodeId::M36Chain(i) if (7..=32).contains(&i) => {
            m36_matrix().select_rows(&(0..i as usize).collect::<Vec<_>>())
        }
        PaperCodeId::M36Chain(_) => return Err(unknown()),
    })
}

pub fn build_paper_code(id: PaperCodeId) -> Result<LinearCode> {
    let unknown = || Error::UnknownPaperCode(id.to_string());
    match id {
        PaperCodeId::T(n) => Ok(build_multiset_code(&t_vector(n).ok_or_else(unknown)?)?),
        PaperCodeId::M { .. } | PaperCodeId::M36Chain(_) => systematic(&paper_matrix(id)?),
        PaperCodeId::H25 | PaperCodeId::H26 => {
            Ok(LinearCode::from_parity_check(&paper_matrix(id)?)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in all_codes() {
            assert_eq!(id.to_string().parse::<PaperCodeId>().unwrap(), id);
        }
        assert_eq!("T_39".parse::<PaperCodeId>().unwrap(), PaperCodeId::T(39));
        assert_eq!(
            "M13,6,6".parse::<PaperCodeId>().unwrap(),
            PaperCodeId::M { n: 13, k: 6, d: 6 }
        );
        assert!("T12".parse::<PaperCodeId>().is_err());
        assert!("M36-chain-33".parse::<PaperCodeId>().is_err());
    }

    #[test]
    fn inventory() {
        let ids = all_codes();
        assert_eq!(
            ids.iter()
                .filter(|i| matches!(i, PaperCodeId::T(_)))
                .count(),
            29
        );
        assert_eq!(
            ids.iter()
                .filter(|i| matches!(i, PaperCodeId::M { .. }))
                .count(),
            9
        );
        assert_eq!(
            ids.iter()
                .filter(|i| matches!(i, PaperCodeId::M36Chain(_)))
                .count(),
            26
        );
        assert_eq!(m36_matrix().rows(), 32);
        assert_eq!(h26_matrix().cols(), 26);
    }
}
