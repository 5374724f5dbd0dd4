//! Dense 4x4 real matrices: just enough linear algebra for the left
//! regular representation, its determinant, null vectors of singular
//! representations and the series exponential.

// Pivoting kernels read clearest with explicit indices.
#![allow(clippy::needless_range_loop)]

/// A 4x4 real matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix4 {
    rows: [[f64; 4]; 4],
}

impl Matrix4 {
    pub const ZERO: Matrix4 = Matrix4 {
        rows: [[0.0; 4]; 4],
    };

    pub fn identity() -> Matrix4 {
        let mut rows = [[0.0; 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Matrix4 { rows }
    }

    pub fn from_rows(rows: [[f64; 4]; 4]) -> Matrix4 {
        Matrix4 { rows }
    }

    pub fn rows(&self) -> &[[f64; 4]; 4] {
        &self.rows
    }

    /// Entry at `row`, `col`, 0-based.
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.rows[row][col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.rows[row][col] = value;
    }

    pub fn column(&self, col: usize) -> [f64; 4] {
        [
            self.rows[0][col],
            self.rows[1][col],
            self.rows[2][col],
            self.rows[3][col],
        ]
    }

    pub fn add(&self, other: &Matrix4) -> Matrix4 {
        let mut rows = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                rows[i][j] = self.rows[i][j] + other.rows[i][j];
            }
        }
        Matrix4 { rows }
    }

    pub fn scale(&self, k: f64) -> Matrix4 {
        let mut rows = self.rows;
        for row in rows.iter_mut() {
            for v in row.iter_mut() {
                *v *= k;
            }
        }
        Matrix4 { rows }
    }

    pub fn mul(&self, other: &Matrix4) -> Matrix4 {
        let mut rows = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = 0.0;
                for k in 0..4 {
                    acc += self.rows[i][k] * other.rows[k][j];
                }
                rows[i][j] = acc;
            }
        }
        Matrix4 { rows }
    }

    pub fn mul_vec(&self, v: [f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (i, row) in self.rows.iter().enumerate() {
            out[i] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2] + row[3] * v[3];
        }
        out
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.rows
            .iter()
            .flatten()
            .fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    /// Determinant by LU decomposition with partial pivoting.
    pub fn det(&self) -> f64 {
        let mut a = self.rows;
        let mut det = 1.0;
        for k in 0..4 {
            let mut pivot_row = k;
            let mut pivot_abs = a[k][k].abs();
            for r in k + 1..4 {
                if a[r][k].abs() > pivot_abs {
                    pivot_abs = a[r][k].abs();
                    pivot_row = r;
                }
            }
            if pivot_abs == 0.0 {
                return 0.0;
            }
            if pivot_row != k {
                a.swap(k, pivot_row);
                det = -det;
            }
            det *= a[k][k];
            for r in k + 1..4 {
                let factor = a[r][k] / a[k][k];
                for c in k..4 {
                    a[r][c] -= factor * a[k][c];
                }
            }
        }
        det
    }

    /// A unit-free-variable null vector of a rank-deficient matrix, or
    /// `None` when all pivots exceed `tol * max(1, max_abs)`.
    ///
    /// Gaussian elimination with partial pivoting; pivots at or below the
    /// threshold are treated as zero and their columns become free. The
    /// first free variable is set to 1 and the pivots back-substituted.
    pub fn null_vector(&self, tol: f64) -> Option<[f64; 4]> {
        let threshold = tol * self.max_abs().max(1.0);
        let mut a = self.rows;
        // pivot_in_col[c] = row holding the pivot of column c, if any
        let mut pivot_in_col: [Option<usize>; 4] = [None; 4];
        let mut next_row = 0;
        for col in 0..4 {
            let mut pivot_row = next_row;
            let mut pivot_abs = 0.0;
            for r in next_row..4 {
                if a[r][col].abs() > pivot_abs {
                    pivot_abs = a[r][col].abs();
                    pivot_row = r;
                }
            }
            if pivot_abs <= threshold {
                continue;
            }
            a.swap(next_row, pivot_row);
            for r in next_row + 1..4 {
                let factor = a[r][col] / a[next_row][col];
                for c in col..4 {
                    a[r][c] -= factor * a[next_row][c];
                }
            }
            pivot_in_col[col] = Some(next_row);
            next_row += 1;
        }
        let free_col = (0..4).find(|c| pivot_in_col[*c].is_none())?;

        let mut x = [0.0; 4];
        x[free_col] = 1.0;
        // Solve pivot variables from the last pivot column upwards,
        // summing each pivot row against the current x so that leftover
        // sub-threshold entries in free columns are accounted for.
        for col in (0..4).rev() {
            let Some(row) = pivot_in_col[col] else {
                continue;
            };
            let mut acc = 0.0;
            for c in 0..4 {
                if c != col {
                    acc += a[row][c] * x[c];
                }
            }
            x[col] = -acc / a[row][col];
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_det() {
        assert_eq!(Matrix4::identity().det(), 1.0);
    }

    #[test]
    fn det_known_matrix() {
        // Upper-triangular after one swap; det = -(2*3*4*5).
        let m = Matrix4::from_rows([
            [0.0, 3.0, 1.0, 1.0],
            [2.0, 1.0, 0.0, 2.0],
            [0.0, 0.0, 4.0, 7.0],
            [0.0, 0.0, 0.0, 5.0],
        ]);
        assert!((m.det() + 120.0).abs() < 1e-12);
    }

    #[test]
    fn det_of_product() {
        let a = Matrix4::from_rows([
            [1.0, 2.0, 0.5, -1.0],
            [0.0, 1.0, 3.0, 2.0],
            [4.0, -2.0, 1.0, 0.0],
            [1.0, 1.0, 1.0, 1.0],
        ]);
        let b = Matrix4::from_rows([
            [2.0, 0.0, 1.0, 0.0],
            [1.0, 1.0, 0.0, -3.0],
            [0.0, 2.0, 2.0, 1.0],
            [-1.0, 0.5, 0.0, 1.0],
        ]);
        let lhs = a.mul(&b).det();
        let rhs = a.det() * b.det();
        assert!((lhs - rhs).abs() <= 1e-9 * rhs.abs().max(1.0));
    }

    #[test]
    fn null_vector_of_singular_matrix() {
        // Row 3 = row 1 + row 2.
        let m = Matrix4::from_rows([
            [1.0, 2.0, 3.0, 4.0],
            [0.0, 1.0, 1.0, 0.0],
            [1.0, 3.0, 4.0, 4.0],
            [0.0, 0.0, 0.0, 2.0],
        ]);
        let v = m.null_vector(1e-9).expect("singular");
        let r = m.mul_vec(v);
        let norm_v: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!(norm_v > 0.0);
        for x in r {
            assert!(x.abs() < 1e-9 * norm_v.max(1.0));
        }
    }

    #[test]
    fn null_vector_none_for_regular_matrix() {
        assert!(Matrix4::identity().null_vector(1e-9).is_none());
    }

    #[test]
    fn null_vector_of_zero_matrix() {
        let v = Matrix4::ZERO.null_vector(1e-9).expect("rank 0");
        assert!(v.iter().any(|x| *x != 0.0));
    }
}
