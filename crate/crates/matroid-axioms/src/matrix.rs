//! Exact integer linear algebra for matroids realized by matrix columns.
//!
//! Ranks come from fraction-free Gaussian elimination and sign patterns from
//! Bareiss determinants, both over `i128` with checked arithmetic, so results
//! are exact or an explicit [`MatrixError::Overflow`] — never silently wrong.

use thiserror::Error;

use crate::ground::SubsetMask;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("expected {rows} × {cols} = {expected} entries, got {got}")]
    ShapeMismatch { rows: usize, cols: usize, expected: usize, got: usize },
    #[error("matrix has {count} columns; subset masks support at most 64")]
    TooManyColumns { count: usize },
    #[error("intermediate value exceeded 128-bit integer range")]
    Overflow,
    #[error("column set is not a circuit of the matrix")]
    NotACircuit,
}

/// A dense integer matrix, rows × cols, whose columns are the ground set of
/// a vector matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self, MatrixError> {
        if cols > 64 {
            return Err(MatrixError::TooManyColumns { count: cols });
        }
        let expected = rows * cols;
        if data.len() != expected {
            return Err(MatrixError::ShapeMismatch { rows, cols, expected, got: data.len() });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, Vec::len);
        for r in rows {
            if r.len() != cols {
                return Err(MatrixError::ShapeMismatch {
                    rows: rows.len(),
                    cols,
                    expected: rows.len() * cols,
                    got: rows.iter().map(Vec::len).sum(),
                });
            }
        }
        IntMatrix::new(rows.len(), cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn row_slices(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec()).collect()
    }

    /// Rank of the submatrix formed by the selected columns.
    pub fn column_rank(&self, cols: SubsetMask) -> Result<usize, MatrixError> {
        Ok(self.eliminate(&cols.elements().collect::<Vec<_>>())?.0)
    }

    /// Whether the selected columns are linearly dependent.
    pub fn columns_dependent(&self, cols: SubsetMask) -> Result<bool, MatrixError> {
        Ok(self.column_rank(cols)? < cols.len())
    }

    /// Fraction-free elimination restricted to `cols`, returning the rank and
    /// the original indices of the pivot rows. Rows are gcd-reduced after
    /// each step to keep intermediates small.
    fn eliminate(&self, cols: &[usize]) -> Result<(usize, Vec<usize>), MatrixError> {
        let mut a: Vec<Vec<i128>> = (0..self.rows)
            .map(|r| cols.iter().map(|&c| self.entry(r, c) as i128).collect())
            .collect();
        let mut row_ids: Vec<usize> = (0..self.rows).collect();
        let mut rank = 0;
        let mut pivot_rows = Vec::new();
        for c in 0..cols.len() {
            let Some(pr) = (rank..self.rows).find(|&r| a[r][c] != 0) else { continue };
            a.swap(rank, pr);
            row_ids.swap(rank, pr);
            pivot_rows.push(row_ids[rank]);
            for r in rank + 1..self.rows {
                if a[r][c] == 0 {
                    continue;
                }
                let p = a[rank][c];
                let f = a[r][c];
                for cc in c..cols.len() {
                    let lhs = p.checked_mul(a[r][cc]).ok_or(MatrixError::Overflow)?;
                    let rhs = f.checked_mul(a[rank][cc]).ok_or(MatrixError::Overflow)?;
                    a[r][cc] = lhs.checked_sub(rhs).ok_or(MatrixError::Overflow)?;
                }
                reduce_row(&mut a[r]);
            }
            rank += 1;
        }
        Ok((rank, pivot_rows))
    }

    /// Sign pattern of the one-dimensional kernel of a circuit's columns:
    /// entry i is the sign of the coefficient of `cols[i]` in the (unique up
    /// to scaling) linear dependence. Signs are Laplace cofactors of the
    /// pivot-row submatrix, so they are all nonzero for a genuine circuit.
    pub fn kernel_sign_pattern(&self, cols: &[usize]) -> Result<Vec<i8>, MatrixError> {
        let k = cols.len();
        let (rank, pivot_rows) = self.eliminate(cols)?;
        if rank + 1 != k {
            return Err(MatrixError::NotACircuit);
        }
        let mut signs = Vec::with_capacity(k);
        for skip in 0..k {
            let sub: Vec<Vec<i128>> = pivot_rows
                .iter()
                .map(|&r| {
                    cols.iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &c)| self.entry(r, c) as i128)
                        .collect()
                })
                .collect();
            let d = det_bareiss(sub)?;
            if d == 0 {
                return Err(MatrixError::NotACircuit);
            }
            let parity = if skip % 2 == 0 { 1 } else { -1 };
            signs.push((d.signum() as i8) * parity);
        }
        Ok(signs)
    }
}

fn reduce_row(row: &mut [i128]) {
    let mut g: i128 = 0;
    for &v in row.iter() {
        g = gcd(g, v.unsigned_abs() as i128);
        if g == 1 {
            return;
        }
    }
    if g > 1 {
        for v in row.iter_mut() {
            *v /= g;
        }
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Determinant by the Bareiss fraction-free algorithm; every division is
/// exact. The empty matrix has determinant 1.
fn det_bareiss(mut m: Vec<Vec<i128>>) -> Result<i128, MatrixError> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else { return Ok(0) };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = m[k][k].checked_mul(m[i][j]).ok_or(MatrixError::Overflow)?;
                let rhs = m[i][k].checked_mul(m[k][j]).ok_or(MatrixError::Overflow)?;
                m[i][j] = lhs.checked_sub(rhs).ok_or(MatrixError::Overflow)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}
