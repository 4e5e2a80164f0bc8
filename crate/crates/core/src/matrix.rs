//! Dense exact rational matrices: reduced row echelon form, rank, kernels.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Output of [`QMatrix::rref`].
pub struct RrefResult {
    pub matrix: QMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::OutOfRange("ragged rows".into()));
        }
        Ok(QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form with rank and pivot columns. The original
    /// row span is preserved; an empty matrix has rank 0.
    pub fn rref(&self) -> RrefResult {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for col in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, pr);
            let inv = Rat::one() / m.get(lead, col).clone();
            for c in col..m.cols {
                let v = m.get(lead, c) * &inv;
                m.set(lead, c, v);
            }
            for r in 0..m.rows {
                if r != lead && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in col..m.cols {
                        let v = m.get(r, c) - &(m.get(lead, c) * &factor);
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            lead += 1;
        }
        RrefResult {
            rank: pivots.len(),
            pivots,
            matrix: m,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel, one vector per free column, each normalized
    /// with a 1 in its free position. Deterministic in the column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let rr = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &p) in rr.pivots.iter().enumerate() {
                v[p] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[free] = Rat::one();
            for (prow, &pcol) in rr.pivots.iter().enumerate() {
                vec[pcol] = -rr.matrix.get(prow, free).clone();
            }
            basis.push(vec);
        }
        basis
    }

    /// Determinant by fraction-free-ish Gaussian elimination.
    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Rat::zero());
            };
            if pr != col {
                m.swap_rows(col, pr);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            let inv = Rat::one() / pivot;
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col) * &inv;
                for c in col..n {
                    let v = m.get(r, c) - &(m.get(col, c) * &factor);
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn mat(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_rref() {
        let rr = QMatrix::identity(2).rref();
        assert_eq!(rr.rank, 2);
        assert_eq!(rr.pivots, vec![0, 1]);
        assert_eq!(rr.matrix, QMatrix::identity(2));
    }

    #[test]
    fn dependent_rows() {
        let rr = mat(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(rr.rank, 1);
        assert_eq!(rr.pivots, vec![0]);
    }

    #[test]
    fn empty_matrix() {
        let m = QMatrix::zeros(0, 0);
        assert_eq!(m.rref().rank, 0);
    }

    #[test]
    fn rational_elimination() {
        let m = QMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 4), rat(1, 5)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.det().unwrap(), rat(1, 60));
    }

    #[test]
    fn kernel() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot0: Rat = (0..3).map(|i| m.get(0, i) * &v[i]).sum();
            assert!(dot0.is_zero());
        }
    }

    #[test]
    fn det_examples() {
        assert_eq!(mat(&[&[1, 2], &[3, 4]]).det().unwrap(), rat_int(-2));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).det().unwrap(), rat_int(0));
        assert!(mat(&[&[1, 2, 3], &[4, 5, 6]]).det().is_err());
    }
}
