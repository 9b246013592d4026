//! Exact Gaussian elimination over ℚ.

use crate::rational::Rational;

/// Row-reduce in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&factor * y);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : A x = 0}` in canonical form: the rows of the returned
/// matrix are themselves in reduced row echelon form.
pub fn nullspace(constraints: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = constraints.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut basis: Vec<Vec<Rational>> = (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -&row[free];
            }
            v
        })
        .collect();
    rref(&mut basis, ncols);
    basis
}

/// Whether `v` lies in the row space of `rows`.
pub fn in_row_space(rows: &[Vec<Rational>], v: &[Rational], ncols: usize) -> bool {
    let before = rank(rows, ncols);
    let mut m = rows.to_vec();
    m.push(v.to_vec());
    rank(&m, ncols) == before
}

pub fn mat_vec(rows: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    rows.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}
