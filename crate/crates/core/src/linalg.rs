//! Small exact linear algebra over the integers and rationals: just enough
//! for Cartan matrices (rank <= 8), Smith normal form with transforms, and
//! Hermite row bases of orbit lattices.

use num::rational::BigRational;
use num::{BigInt, One, Signed, Zero};

/// Exact inverse of a square integer matrix. Panics if singular; callers only
/// invert Cartan matrices, which are invertible by construction.
pub fn rational_inverse(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        BigRational::from(BigInt::from(m[i][j]))
                    } else if j - n == i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("matrix is singular");
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..2 * n {
            a[col][j] /= p.clone();
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..2 * n {
                    let sub = f.clone() * a[col][j].clone();
                    a[r][j] -= sub;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Integer determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let swap = ((k + 1)..n).find(|&r| a[r][k] != 0);
            match swap {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    i64::try_from(sign * a[n - 1][n - 1]).expect("determinant overflow")
}

/// Result of `smith_normal_form`: `left * a * right = diag(d)` with
/// `d[0] | d[1] | ...` and unimodular transforms.
pub struct Smith {
    pub d: Vec<i64>,
    pub left: Vec<Vec<i64>>,
    pub right: Vec<Vec<i64>>,
}

/// Smith normal form of a square integer matrix, tracking both transforms.
pub fn smith_normal_form(a: &[Vec<i64>]) -> Smith {
    let n = a.len();
    let mut m: Vec<Vec<i64>> = a.to_vec();
    let mut left = identity(n);
    let mut right = identity(n);

    for t in 0..n {
        loop {
            // Move a minimal nonzero entry of the trailing block to (t, t).
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if m[i][j] != 0
                        && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            if bi != t {
                m.swap(t, bi);
                left.swap(t, bi);
            }
            if bj != t {
                swap_cols(&mut m, t, bj);
                swap_cols(&mut right, t, bj);
            }
            let mut dirty = false;
            for i in (t + 1)..n {
                if m[i][t] != 0 {
                    let q = m[i][t].div_euclid(m[t][t]);
                    row_sub(&mut m, i, t, q);
                    row_sub(&mut left, i, t, q);
                    dirty |= m[i][t] != 0;
                }
            }
            for j in (t + 1)..n {
                if m[t][j] != 0 {
                    let q = m[t][j].div_euclid(m[t][t]);
                    col_sub(&mut m, j, t, q);
                    col_sub(&mut right, j, t, q);
                    dirty |= m[t][j] != 0;
                }
            }
            if dirty {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let pivot = m[t][t];
            let offender = ((t + 1)..n)
                .flat_map(|i| ((t + 1)..n).map(move |j| (i, j)))
                .find(|&(i, j)| m[i][j] % pivot != 0);
            match offender {
                Some((i, _)) => {
                    // Adding the offending row makes the pivot row reducible.
                    row_add(&mut m, t, i);
                    row_add(&mut left, t, i);
                }
                None => break,
            }
        }
        if m[t][t] < 0 {
            for x in m[t].iter_mut() {
                *x = -*x;
            }
            for x in left[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    Smith {
        d: (0..n).map(|i| m[i][i]).collect(),
        left,
        right,
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn swap_cols(m: &mut [Vec<i64>], a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn row_sub(m: &mut [Vec<i64>], i: usize, t: usize, q: i64) {
    for j in 0..m[i].len() {
        m[i][j] -= q * m[t][j];
    }
}

fn row_add(m: &mut [Vec<i64>], i: usize, t: usize) {
    for j in 0..m[i].len() {
        m[i][j] += m[t][j];
    }
}

fn col_sub(m: &mut [Vec<i64>], j: usize, t: usize, q: i64) {
    for row in m.iter_mut() {
        row[j] -= q * row[t];
    }
}

/// Row-style Hermite reduction: returns a basis (nonzero rows) of the lattice
/// generated by the input rows.
pub fn hermite_row_basis(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let mut pivot_row = 0;
    for col in 0..ncols {
        // gcd-combine all rows below pivot_row into one pivot for this column
        loop {
            let mut nonzero: Vec<usize> = (pivot_row..m.len()).filter(|&r| m[r][col] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            nonzero.sort_by_key(|&r| m[r][col].abs());
            let r0 = nonzero[0];
            m.swap(pivot_row, r0);
            let mut reduced = true;
            for r in (pivot_row + 1)..m.len() {
                if m[r][col] != 0 {
                    let q = m[r][col].div_euclid(m[pivot_row][col]);
                    for j in 0..ncols {
                        m[r][j] -= q * m[pivot_row][j];
                    }
                    reduced &= m[r][col] == 0;
                }
            }
            if reduced {
                if m[pivot_row][col] < 0 {
                    for x in m[pivot_row].iter_mut() {
                        *x = -*x;
                    }
                }
                pivot_row += 1;
                break;
            }
        }
        if pivot_row == m.len() {
            break;
        }
    }
    m.truncate(pivot_row);
    m
}
