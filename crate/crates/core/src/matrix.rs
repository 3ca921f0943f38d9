//! Matrices of polynomials, exact determinants and determinant polynomials.

use crate::poly::{MultiPoly, PolyError, Var};

/// Row-major matrix of polynomials.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MultiPoly>) -> PolyMatrix {
        assert_eq!(entries.len(), rows * cols);
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> MultiPoly) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn at(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    fn submatrix_cols(&self, cols: &[usize]) -> PolyMatrix {
        PolyMatrix::from_fn(self.rows, cols.len(), |i, j| self.at(i, cols[j]).clone())
    }

    /// Exact determinant of a square matrix. Cofactor expansion for
    /// dimension <= 4, fraction-free Bareiss elimination above that.
    pub fn det(&self) -> Result<MultiPoly, PolyError> {
        if self.rows != self.cols {
            return Err(PolyError::ShapeError(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.rows == 0 {
            return Ok(MultiPoly::one());
        }
        if self.rows <= 4 {
            Ok(self.det_cofactor())
        } else {
            Ok(self.det_bareiss())
        }
    }

    fn det_cofactor(&self) -> MultiPoly {
        let n = self.rows;
        if n == 1 {
            return self.at(0, 0).clone();
        }
        let mut acc = MultiPoly::zero();
        for j in 0..n {
            let a = self.at(0, j);
            if a.is_zero() {
                continue;
            }
            let minor = PolyMatrix::from_fn(n - 1, n - 1, |r, c| {
                self.at(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let cof = a.mul(&minor.det_cofactor());
            acc = if j % 2 == 0 { acc.add(&cof) } else { acc.sub(&cof) };
        }
        acc
    }

    fn det_bareiss(&self) -> MultiPoly {
        let n = self.rows;
        let mut m: Vec<Vec<MultiPoly>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut sign = false;
        let mut prev = MultiPoly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                // find a pivot row
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        sign = !sign;
                    }
                    None => return MultiPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = t
                        .divide_exact(&prev)
                        .expect("Bareiss division is exact over an integral domain");
                }
            }
            for i in k + 1..n {
                m[i][k] = MultiPoly::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if sign {
            d.neg()
        } else {
            d
        }
    }

    /// Determinant polynomial: for an m x n matrix with m <= n,
    /// sum over k of det(first m-1 columns | column m-1+k) * z^(n-m-k).
    pub fn detpol(&self) -> Result<MultiPoly, PolyError> {
        if self.rows > self.cols {
            return Err(PolyError::ShapeError(format!(
                "detpol needs rows <= cols, got {}x{}",
                self.rows, self.cols
            )));
        }
        let m = self.rows;
        let n = self.cols;
        let z = MultiPoly::var(Var::Z);
        let mut acc = MultiPoly::zero();
        for k in 0..=(n - m) {
            let mut cols: Vec<usize> = (0..m - 1).collect();
            cols.push(m - 1 + k);
            let d = self.submatrix_cols(&cols).det()?;
            let power = (n - m - k) as u32;
            acc = acc.add(&d.mul(&z.pow(power)));
        }
        Ok(acc)
    }
}
