use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `d = u · m · v` with `u`, `v` unimodular and `d` diagonal, non-negative,
/// each diagonal entry dividing the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `d[i][i]` for `i < min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Smith normal form by repeated minimal-pivot reduction.
///
/// The pivot at each step is the entry of smallest non-zero absolute value in
/// the trailing submatrix, lowest row first, then lowest column.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for k in 0..rows.min(cols) {
        loop {
            let Some((pi, pj)) = min_pivot(&d, k) else {
                return SmithForm { d, u, v };
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, k)] / &d[(k, k)]);
                d.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                clean &= d[(i, k)].is_zero();
            }
            for j in k + 1..cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(k, j)] / &d[(k, k)]);
                d.add_col_multiple(j, k, &q);
                v.add_col_multiple(j, k, &q);
                clean &= d[(k, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Pivot must divide the rest; otherwise fold an offending row in.
            let pivot = d[(k, k)].clone();
            let offending = (k + 1..rows)
                .find(|&i| (k + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(k, i, &one);
                    u.add_row_multiple(k, i, &one);
                }
                None => break,
            }
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    SmithForm { d, u, v }
}

fn min_pivot(d: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            let a = d[(i, j)].abs();
            if a.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(b, ..)| a < *b) {
                best = Some((a, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.d.is_diagonal());
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        }
        s
    }

    #[test]
    fn triangle_235_matrix_has_trivial_cokernel() {
        let m = IntMatrix::from_rows(2, &[vec![2, 0], vec![0, 3], vec![5, 5]]);
        let s = check(&m);
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn empty_rows() {
        let m = IntMatrix::from_rows(3, &[]);
        let s = check(&m);
        assert!(s.diagonal().is_empty());
        assert_eq!(s.v, IntMatrix::identity(3));
    }

    #[test]
    fn one_by_one() {
        let s = check(&IntMatrix::from_rows(1, &[vec![12]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(12)]);
        let s = check(&IntMatrix::from_rows(1, &[vec![-7]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(7)]);
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) is not a divisor chain; SNF is diag(1, 6).
        let s = check(&IntMatrix::from_rows(2, &[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        let s = check(&IntMatrix::from_rows(2, &[vec![4, 0], vec![2, -3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(12)]);
    }
}
