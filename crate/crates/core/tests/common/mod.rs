//! Naive reference implementations, written independently of the library.
#![allow(dead_code)]

pub fn add(q: u8, a: u8, b: u8) -> u8 {
    (a + b) % q
}

pub fn mul(q: u8, a: u8, b: u8) -> u8 {
    (a * b) % q
}

/// Rank by plain Gaussian elimination on a copy.
pub fn rank(q: u8, rows: &[Vec<u8>]) -> usize {
    let mut a: Vec<Vec<u8>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let inv = if a[r][c] == 1 { 1 } else { 2 };
        for x in a[r].iter_mut() {
            *x = mul(q, *x, inv);
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                let pivot = a[r].clone();
                for (x, &y) in a[i].iter_mut().zip(&pivot) {
                    *x = (*x + q - mul(q, f, y)) % q;
                }
            }
        }
        r += 1;
    }
    r
}

/// All `q^k` message combinations of the rows.
pub fn codewords(q: u8, rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let n = rows.first().map_or(0, Vec::len);
    let k = rows.len();
    let total = (q as usize).pow(k as u32);
    (0..total)
        .map(|mut idx| {
            let mut w = vec![0u8; n];
            for row in rows {
                let c = (idx % q as usize) as u8;
                idx /= q as usize;
                for j in 0..n {
                    w[j] = add(q, w[j], mul(q, c, row[j]));
                }
            }
            w
        })
        .collect()
}

pub fn weight(v: &[u8]) -> usize {
    v.iter().filter(|&&e| e != 0).count()
}

pub fn min_weight(q: u8, rows: &[Vec<u8>]) -> usize {
    codewords(q, rows)
        .iter()
        .map(|w| weight(w))
        .filter(|&w| w > 0)
        .min()
        .unwrap_or(0)
}

pub fn gram(q: u8, rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
    rows.iter()
        .map(|a| {
            rows.iter()
                .map(|b| {
                    a.iter()
                        .zip(b)
                        .fold(0, |s, (&x, &y)| add(q, s, mul(q, x, y)))
                })
                .collect()
        })
        .collect()
}

pub fn is_lcd(q: u8, rows: &[Vec<u8>]) -> bool {
    rank(q, &gram(q, rows)) == rows.len()
}
