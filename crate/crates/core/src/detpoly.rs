//! Exact symbolic determinants of polynomial matrices.
//!
//! Chart coefficient matrices are extremely sparse (entries are 0, 1, or a
//! single parameter), so cofactor expansion along the sparsest remaining
//! line, memoized on the surviving (row set, column set), beats elimination
//! over the fraction field. The memo key must carry both masks: the pivot
//! line is chosen by sparsity, so the removed-row order is data dependent.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::rat::Rat;

/// Determinant of a square matrix of polynomials.
pub fn det_poly(m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquare {
            rows: n,
            cols: m.first().map_or(0, |r| r.len()),
        });
    }
    assert!(n <= 64, "mask-based expansion is for small matrices");
    let Some(first_row) = m.first() else {
        // det of the 0x0 matrix is the empty product
        return Err(Error::NonSquare { rows: 0, cols: 0 });
    };
    let ring = first_row
        .first()
        .ok_or(Error::NonSquare { rows: n, cols: 0 })?
        .ring()
        .clone();
    for row in m {
        for e in row {
            ring.check_same(e.ring())?;
        }
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut memo: HashMap<(u64, u64), MultiPoly> = HashMap::new();
    Ok(expand(m, full, full, &mut memo))
}

fn expand(
    m: &[Vec<MultiPoly>],
    rows: u64,
    cols: u64,
    memo: &mut HashMap<(u64, u64), MultiPoly>,
) -> MultiPoly {
    let ring = m[0][0].ring();
    if rows == 0 {
        return MultiPoly::one(ring);
    }
    if let Some(hit) = memo.get(&(rows, cols)) {
        return hit.clone();
    }
    let row_idx: Vec<usize> = (0..m.len()).filter(|i| rows >> i & 1 == 1).collect();
    let col_idx: Vec<usize> = (0..m.len()).filter(|j| cols >> j & 1 == 1).collect();

    // Pick the line (row or column) with the fewest nonzero entries.
    let mut best_row = (usize::MAX, 0usize);
    for (pos, &r) in row_idx.iter().enumerate() {
        let nnz = col_idx.iter().filter(|&&c| !m[r][c].is_zero()).count();
        if nnz < best_row.0 {
            best_row = (nnz, pos);
        }
    }
    let mut best_col = (usize::MAX, 0usize);
    for (pos, &c) in col_idx.iter().enumerate() {
        let nnz = row_idx.iter().filter(|&&r| !m[r][c].is_zero()).count();
        if nnz < best_col.0 {
            best_col = (nnz, pos);
        }
    }

    let mut acc = MultiPoly::zero(ring);
    if best_row.0 <= best_col.0 {
        let pos = best_row.1;
        let r = row_idx[pos];
        for (cpos, &c) in col_idx.iter().enumerate() {
            let e = &m[r][c];
            if e.is_zero() {
                continue;
            }
            let sub = expand(m, rows & !(1 << r), cols & !(1 << c), memo);
            let signed = if (pos + cpos) % 2 == 0 {
                e * &sub
            } else {
                &(-e) * &sub
            };
            acc = &acc + &signed;
        }
    } else {
        let pos = best_col.1;
        let c = col_idx[pos];
        for (rpos, &r) in row_idx.iter().enumerate() {
            let e = &m[r][c];
            if e.is_zero() {
                continue;
            }
            let sub = expand(m, rows & !(1 << r), cols & !(1 << c), memo);
            let signed = if (rpos + pos) % 2 == 0 {
                e * &sub
            } else {
                &(-e) * &sub
            };
            acc = &acc + &signed;
        }
    }
    memo.insert((rows, cols), acc.clone());
    acc
}

/// Numeric determinant of the evaluation of a polynomial matrix, for the
/// evaluation-commutation checks.
pub fn det_evaluated(m: &[Vec<MultiPoly>], values: &[Rat]) -> Result<Rat> {
    let n = m.len();
    let mut num = crate::matrix::QMatrix::zeros(n, n);
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NonSquare { rows: n, cols: row.len() });
        }
        for (j, e) in row.iter().enumerate() {
            num.set(i, j, e.evaluate(values)?);
        }
    }
    num.det()
}

/// `true` when the determinant is identically zero, without keeping the
/// expansion around.
pub fn det_is_zero(m: &[Vec<MultiPoly>]) -> Result<bool> {
    Ok(det_poly(m)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;
    use crate::ring::PolyRing;

    fn p(ring: &PolyRing, s: &str) -> MultiPoly {
        MultiPoly::parse(ring, s).unwrap()
    }

    #[test]
    fn one_by_one() {
        let r = PolyRing::new(&["c"]).unwrap();
        let m = vec![vec![p(&r, "c")]];
        assert_eq!(det_poly(&m).unwrap(), p(&r, "c"));
    }

    #[test]
    fn triangular_with_parameter() {
        let r = PolyRing::new(&["A"]).unwrap();
        let m = vec![
            vec![p(&r, "1"), p(&r, "A")],
            vec![p(&r, "0"), p(&r, "1")],
        ];
        assert_eq!(det_poly(&m).unwrap(), p(&r, "1"));
    }

    #[test]
    fn antisymmetry_sign() {
        let r = PolyRing::new(&["A", "B"]).unwrap();
        let m = vec![
            vec![p(&r, "0"), p(&r, "A")],
            vec![p(&r, "B"), p(&r, "0")],
        ];
        assert_eq!(det_poly(&m).unwrap(), p(&r, "-A*B"));
    }

    #[test]
    fn three_by_three_commutes_with_evaluation() {
        let r = PolyRing::new(&["A", "B", "C"]).unwrap();
        let m = vec![
            vec![p(&r, "A + 1"), p(&r, "B"), p(&r, "0")],
            vec![p(&r, "C"), p(&r, "A - B"), p(&r, "1")],
            vec![p(&r, "2"), p(&r, "B + C"), p(&r, "A")],
        ];
        let d = det_poly(&m).unwrap();
        let vals = [rat_int(2), rat_int(-1), rat_int(3)];
        assert_eq!(d.evaluate(&vals).unwrap(), det_evaluated(&m, &vals).unwrap());
    }

    #[test]
    fn non_square_rejected() {
        let r = PolyRing::new(&["A"]).unwrap();
        let m = vec![vec![p(&r, "A"), p(&r, "1")]];
        assert!(det_poly(&m).is_err());
    }
}
