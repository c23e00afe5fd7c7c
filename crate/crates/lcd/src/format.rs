//! Plain-text matrix files.
//!
//! ```text
//! q rows cols
//! <rows lines of exactly cols digits from 0..q>
//! ```
//!
//! Code files store the generator matrix.

use std::fmt::Write as _;
use std::path::Path;

use lcd_core::{FieldOrder, FqMatrix, LinearCode};

use crate::error::{Error, Result};

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

pub fn parse_matrix(text: &str) -> Result<FqMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or_else(|| format_err(1, "empty file"))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| format_err(hline + 1, "header must be `q rows cols`"))?;
    let [q, rows, cols] = nums[..] else {
        return Err(format_err(hline + 1, "header must be `q rows cols`"));
    };
    let field = FieldOrder::new(q as u32)
        .map_err(|_| format_err(hline + 1, format!("unsupported field size {q}")))?;
    let mut data = Vec::with_capacity(rows * cols);
    let mut seen = 0;
    for (idx, line) in lines {
        let line = line.trim();
        if seen == rows {
            return Err(format_err(idx + 1, format!("more than {rows} rows")));
        }
        if line.chars().count() != cols {
            return Err(format_err(
                idx + 1,
                format!("expected {cols} digits, found {}", line.chars().count()),
            ));
        }
        for (j, ch) in line.chars().enumerate() {
            match ch.to_digit(10) {
                Some(v) if (v as usize) < q => data.push(v as u8),
                _ => {
                    return Err(format_err(
                        idx + 1,
                        format!("illegal digit `{ch}` at column {} for q={q}", j + 1),
                    ))
                }
            }
        }
        seen += 1;
    }
    if seen != rows {
        return Err(format_err(
            hline + 1,
            format!("header promises {rows} rows, found {seen}"),
        ));
    }
    Ok(FqMatrix::new(field, rows, cols, data)?)
}

pub fn render_matrix(m: &FqMatrix) -> String {
    let mut out = format!("{} {} {}\n", m.field().q(), m.rows(), m.cols());
    for i in 0..m.rows() {
        for &e in m.row(i) {
            write!(out, "{e}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn load_matrix(path: &Path) -> Result<FqMatrix> {
    parse_matrix(&read(path)?)
}

pub fn save_matrix(m: &FqMatrix, path: &Path) -> Result<()> {
    std::fs::write(path, render_matrix(m)).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

/// Reads a generator matrix; rank deficiency (including `k > n`) is an error.
pub fn load_code(path: &Path) -> Result<LinearCode> {
    Ok(LinearCode::from_generator(load_matrix(path)?)?)
}

pub fn save_code(c: &LinearCode, path: &Path) -> Result<()> {
    save_matrix(c.generator(), path)
}
