//! Seeded local search over multiplicity vectors.
//!
//! Only ever used to find witnesses: a returned vector has passed the LCD
//! test and every hyperplane count is within the distance bound. Failing to
//! find one proves nothing.

use lcd_core::simplex::{build_multiset_code, min_self_orthogonal_dim, SimplexGeometry};
use lcd_core::{FieldOrder, FqMatrix, LinearCode, MultiplicityVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy)]
pub struct LocalSearch {
    pub seed: u64,
    pub restarts: u32,
    pub steps: u32,
}

impl Default for LocalSearch {
    fn default() -> Self {
        Self {
            seed: 0x1cd,
            restarts: 64,
            steps: 200_000,
        }
    }
}

/// Looks for `m` with `sum m = n` such that `C_{q,k}(m)` is LCD with minimum
/// weight at least `d`. The weight of class `x` is `n - H_x`, where `H_x`
/// sums `m` over the columns orthogonal to `x`, so the target is
/// `H_x <= n - d` for all `x`.
pub fn local_search_multiset(
    field: FieldOrder,
    k: usize,
    n: usize,
    d: usize,
    params: LocalSearch,
) -> Option<MultiplicityVector> {
    if k < min_self_orthogonal_dim(field) || n < k || d > n {
        return None;
    }
    let geo = SimplexGeometry::new(field, k);
    let len = geo.len();
    let cap = (n - d) as i64;
    let mut incident = vec![vec![false; len]; len];
    for (x, row) in geo.orthogonal.iter().enumerate() {
        for &j in row {
            incident[x][j] = true;
        }
    }
    let excess = |h: &[i64]| h.iter().map(|&v| (v - cap).max(0)).sum::<i64>();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for _ in 0..params.restarts {
        let mut m = vec![(n / len) as u32; len];
        for _ in 0..n % len {
            let i = rng.gen_range(0..len);
            m[i] += 1;
        }
        let mut h: Vec<i64> = (0..len)
            .map(|x| geo.orthogonal[x].iter().map(|&j| m[j] as i64).sum())
            .collect();
        let mut cost = excess(&h);
        for _ in 0..params.steps {
            if cost == 0 {
                let mv = MultiplicityVector::new(field, k, m.clone()).ok()?;
                if build_multiset_code(&mv).is_ok_and(|c| c.is_lcd()) {
                    return Some(mv);
                }
            }
            let i = rng.gen_range(0..len);
            let j = rng.gen_range(0..len);
            if i == j || m[i] == 0 {
                continue;
            }
            for x in 0..len {
                h[x] += incident[x][j] as i64 - incident[x][i] as i64;
            }
            let next = excess(&h);
            if next <= cost || rng.gen_bool(0.02) {
                m[i] -= 1;
                m[j] += 1;
                cost = next;
            } else {
                for x in 0..len {
                    h[x] -= incident[x][j] as i64 - incident[x][i] as i64;
                }
            }
        }
    }
    None
}

/// Looks for an LCD `[n, k, >= d]` code with generator `[I_k | A]` by
/// changing one entry of `A` at a time. The cost sums `d - wt(c)` over the
/// projective codewords `c` lighter than `d`. Intended for small `q^k`.
pub fn local_search_systematic(
    field: FieldOrder,
    n: usize,
    k: usize,
    d: usize,
    params: LocalSearch,
) -> Option<LinearCode> {
    if k == 0 || n <= k || d > n - k + 1 {
        return None;
    }
    let q = field.q();
    let r = n - k;
    // projective messages: first nonzero coordinate is 1
    let mut msgs: Vec<Vec<u8>> = Vec::new();
    let total = field.pow(k as u32);
    for idx in 1..total {
        let mut u = vec![0u8; k];
        let mut x = idx;
        for c in u.iter_mut() {
            *c = (x % q as u64) as u8;
            x /= q as u64;
        }
        if u.iter().find(|&&c| c != 0) == Some(&1) {
            msgs.push(u);
        }
    }
    let base: Vec<usize> = msgs
        .iter()
        .map(|u| u.iter().filter(|&&c| c != 0).count())
        .collect();
    let deficit = |w: usize| d.saturating_sub(w) as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    for _ in 0..params.restarts {
        let mut a: Vec<Vec<u8>> = (0..k)
            .map(|_| (0..r).map(|_| rng.gen_range(0..q)).collect())
            .collect();
        // p[m][j] = (u_m A)_j
        let mut p: Vec<Vec<u8>> = msgs
            .iter()
            .map(|u| {
                (0..r)
                    .map(|j| (0..k).fold(0u8, |acc, i| field.add(acc, field.mul(u[i], a[i][j]))))
                    .collect()
            })
            .collect();
        let mut w: Vec<usize> = p
            .iter()
            .zip(&base)
            .map(|(row, b)| b + row.iter().filter(|&&c| c != 0).count())
            .collect();
        let mut cost: i64 = w.iter().map(|&x| deficit(x)).sum();
        for _ in 0..params.steps {
            if cost == 0 {
                let mut data = vec![0u8; k * n];
                for i in 0..k {
                    data[i * n + i] = 1;
                    data[i * n + k..(i + 1) * n].copy_from_slice(&a[i]);
                }
                let code = FqMatrix::new(field, k, n, data)
                    .ok()
                    .and_then(|g| LinearCode::from_generator(g).ok())?;
                if code.is_lcd() {
                    return Some(code);
                }
            }
            let i = rng.gen_range(0..k);
            let j = rng.gen_range(0..r);
            let v = rng.gen_range(0..q);
            if v == a[i][j] {
                continue;
            }
            let delta = field.sub(v, a[i][j]);
            let mut next = cost;
            for (m, u) in msgs.iter().enumerate() {
                if u[i] == 0 {
                    continue;
                }
                let old = p[m][j];
                let new = field.add(old, field.mul(u[i], delta));
                let nw = w[m] + (new != 0) as usize - (old != 0) as usize;
                next += deficit(nw) - deficit(w[m]);
            }
            if next <= cost || rng.gen_bool(0.02) {
                for (m, u) in msgs.iter().enumerate() {
                    if u[i] == 0 {
                        continue;
                    }
                    let old = p[m][j];
                    let new = field.add(old, field.mul(u[i], delta));
                    w[m] = w[m] + (new != 0) as usize - (old != 0) as usize;
                    p[m][j] = new;
                }
                a[i][j] = v;
                cost = next;
            }
        }
    }
    None
}
