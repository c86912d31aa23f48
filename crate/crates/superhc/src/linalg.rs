//! Dense exact linear algebra over Q(i): row reduction, nullspaces, solvers.
//!
//! Matrices here are small (dimensions on the order of dim g ≤ 40, entry
//! counts ≤ 81), so a plain fraction-free-naive Gaussian elimination on
//! `Vec<Vec<Gq>>` is entirely adequate.

use crate::scalar::Gq;

pub type Row = Vec<Gq>;
pub type Matrix = Vec<Row>;

/// Row-reduce `m` in place to reduced row echelon form; returns the pivot
/// column of each nonzero row (in order).
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].inv();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] -= &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &Matrix) -> usize {
    let mut m = m.clone();
    rref(&mut m).len()
}

/// Basis of the right nullspace of `m` (vectors v with m·v = 0),
/// where `m` has `cols` columns.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Row> {
    let mut red = m.clone();
    let pivots = rref(&mut red);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Gq::zero(); cols];
        v[free] = Gq::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&red[row][free];
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix, or None if singular.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Gq::one() } else { Gq::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = if k > 0 { b[0].len() } else { 0 };
    let mut out = vec![vec![Gq::zero(); m]; n];
    for i in 0..n {
        for (l, brow) in b.iter().enumerate().take(k) {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !brow[j].is_zero() {
                    let t = &a[i][l] * &brow[j];
                    out[i][j] += &t;
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &Matrix, v: &[Gq]) -> Row {
    a.iter()
        .map(|row| {
            let mut acc = Gq::zero();
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    acc += &(x * y);
                }
            }
            acc
        })
        .collect()
}

/// Solver for repeated systems B·c = y with a fixed full-column-rank B.
///
/// Stores the row-reduction transform of B so each solve is one
/// matrix-vector product plus a consistency check.
#[derive(Clone)]
pub struct ColumnSolver {
    ncols: usize,
    pivots: Vec<usize>,      // pivot ROW index (in the reduced order) per column
    transform: Matrix,       // T with T·B = rref(B)
    reduced: Matrix,
}

impl ColumnSolver {
    /// `columns`: the columns of B, each of length `nrows`.
    pub fn new(columns: &[Row], nrows: usize) -> ColumnSolver {
        let ncols = columns.len();
        let mut aug: Matrix = (0..nrows)
            .map(|i| {
                let mut r: Row = columns.iter().map(|c| c[i].clone()).collect();
                r.extend((0..nrows).map(|j| if i == j { Gq::one() } else { Gq::zero() }));
                r
            })
            .collect();
        // Row-reduce, restricting pivot search to the B-part of the
        // augmented matrix (the identity block always has full rank).
        let mut piv_cols = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == nrows {
                break;
            }
            let Some(pr) = (r..nrows).find(|&i| !aug[i][c].is_zero()) else {
                continue;
            };
            aug.swap(r, pr);
            let inv = aug[r][c].inv();
            for x in aug[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..nrows {
                if i != r && !aug[i][c].is_zero() {
                    let f = aug[i][c].clone();
                    for j in 0..ncols + nrows {
                        let t = &aug[r][j] * &f;
                        aug[i][j] -= &t;
                    }
                }
            }
            piv_cols.push(c);
            r += 1;
        }
        assert_eq!(piv_cols.len(), ncols, "columns are linearly dependent");
        let reduced: Matrix = aug.iter().map(|r| r[..ncols].to_vec()).collect();
        let transform: Matrix = aug.iter().map(|r| r[ncols..].to_vec()).collect();
        // piv_cols[k] = column with pivot in row k; invert the map.
        let mut pivots = vec![usize::MAX; ncols];
        for (row, &col) in piv_cols.iter().enumerate() {
            pivots[col] = row;
        }
        ColumnSolver { ncols, pivots, transform, reduced }
    }

    /// Coordinates c with B·c = y, or None if y is outside the span.
    pub fn solve(&self, y: &Row) -> Option<Row> {
        let z = mat_vec(&self.transform, y);
        let mut c = vec![Gq::zero(); self.ncols];
        for col in 0..self.ncols {
            c[col] = z[self.pivots[col]].clone();
        }
        // Consistency: rows of rref(B) past the pivots must read zero.
        for (i, zi) in z.iter().enumerate() {
            let row_is_zero = self.reduced[i].iter().all(|x| x.is_zero());
            if row_is_zero && !zi.is_zero() {
                return None;
            }
        }
        Some(c)
    }
}

/// Do the rows of `sub` lie in the row span of `space`?
pub fn rows_in_span(space: &Matrix, sub: &Matrix) -> bool {
    let r0 = rank(space);
    let mut all = space.clone();
    all.extend(sub.iter().cloned());
    rank(&all) == r0
}

/// Row-span equality of two matrices with the same number of columns.
pub fn same_row_span(a: &Matrix, b: &Matrix) -> bool {
    rows_in_span(a, b) && rows_in_span(b, a)
}
