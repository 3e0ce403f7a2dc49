//! Exact Gauss–Jordan elimination on rectangular row lists.
//!
//! Pivots are chosen lexicographically: leftmost column first, topmost
//! remaining row within it. The output is the unique reduced row echelon
//! form, so everything built on it is a pure function of its input.

use crate::field::Field;

/// Reduced row echelon form: the nonzero rows and their pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon<F> {
    pub rows: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
}

pub fn rref<F: Field>(mut rows: Vec<Vec<F>>, cols: usize) -> Echelon<F> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].try_inv().expect("pivot is nonzero");
        if !rows[r][c].is_one() {
            for e in rows[r][c..].iter_mut() {
                if !e.is_zero() {
                    *e = e.mul_ref(&inv);
                }
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !rows[r][j].is_zero()).collect();
        let pivot_row = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &support {
                row[j] = row[j].sub_ref(&factor.mul_ref(&pivot_row[j]));
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots }
}

pub fn rank_of_rows<F: Field>(rows: Vec<Vec<F>>, cols: usize) -> usize {
    rref(rows, cols).pivots.len()
}

/// Basis of `{v : Mv = 0}` in free-variable form: one vector per free
/// column, in increasing column order, with a `1` in that column.
pub fn nullspace<F: Field>(rows: Vec<Vec<F>>, cols: usize, ctx: &F::Ctx) -> Vec<Vec<F>> {
    let ech = rref(rows, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![F::zero(ctx); cols];
            v[f] = F::one(ctx);
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                if !row[f].is_zero() {
                    v[p] = -row[f].clone();
                }
            }
            v
        })
        .collect()
}
