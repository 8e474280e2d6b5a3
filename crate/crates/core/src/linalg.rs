//! Dense exact linear algebra over Q and rank computations modulo a prime.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Mat = Vec<Vec<BigRational>>;

/// In-place RREF; returns the pivot columns.
pub fn rref(m: &mut Mat) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = BigRational::one() / m[r][c].clone();
        for x in m[r].iter_mut().skip(c) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Mat) -> usize {
    rref(&mut m.clone()).len()
}

/// Basis of {v : m·v = 0}: one vector per free column, with a 1 there.
pub fn nullspace(m: &Mat, cols: usize) -> Vec<Vec<BigRational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

pub fn determinant(m: &Mat) -> BigRational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return BigRational::zero() };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &piv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

/// Unique solution of a square nonsingular system, if any.
pub fn solve(m: &Mat, rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = m.len();
    let mut aug: Mat = m.iter().zip(rhs).map(|(r, b)| r.iter().cloned().chain([b.clone()]).collect()).collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n].clone()).collect())
}

pub const RANK_PRIME: u32 = 251;

/// Rank modulo `RANK_PRIME` of a matrix with small nonnegative entries.
/// A rank found here is a lower bound for the rank over Q.
pub fn rank_mod_p(mut rows: Vec<Vec<u32>>) -> usize {
    const P: u32 = RANK_PRIME;
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x %= P;
        }
    }
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut inv = [0u32; P as usize];
    for a in 1..P {
        inv[a as usize] = (1..P).find(|b| a * b % P == 1).unwrap();
    }
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, p);
        let s = inv[rows[rank][c] as usize];
        for x in rows[rank][c..].iter_mut() {
            *x = *x * s % P;
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank][c..];
        for row in tail.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let g = P - f;
            for (x, y) in row[c..].iter_mut().zip(prow) {
                *x = (*x + g * y) % P;
            }
        }
        rank += 1;
    }
    rank
}
