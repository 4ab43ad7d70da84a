use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Smith Normal Form of a non-singular square integer matrix.
///
/// `left · diag(invariants) · right` reconstructs the input, both transforms
/// are unimodular, and `invariants[i]` divides `invariants[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariants: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn last(&self) -> &BigInt {
        self.invariants.last().expect("a Smith form always has at least one invariant factor")
    }

    pub fn diagonal(&self) -> IntMatrix {
        IntMatrix::diagonal(&self.invariants)
    }

    /// Number of invariant factors divisible by `p`; for a prime `p` this is
    /// `n - rank_p`.
    pub fn count_divisible_by(&self, p: &BigInt) -> usize {
        self.invariants.iter().filter(|d| d.is_multiple_of(p)).count()
    }

    pub fn reconstruct(&self) -> IntMatrix {
        self.left
            .mul(&self.diagonal())
            .and_then(|m| m.mul(&self.right))
            .expect("Smith form transforms have matching dimensions")
    }
}

/// Working state: `original = left · work · right` holds after every step.
struct Reduction {
    work: IntMatrix,
    left: IntMatrix,
    right: IntMatrix,
}

impl Reduction {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.work.swap_rows(a, b);
        self.left.swap_cols(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.work.swap_cols(a, b);
        self.right.swap_rows(a, b);
    }

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.work.add_row_multiple(target, source, factor);
        self.left.add_col_multiple(source, target, &-factor);
    }

    /// col[target] += factor * col[source]
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        self.work.add_col_multiple(target, source, factor);
        self.right.add_row_multiple(source, target, &-factor);
    }

    fn negate_row(&mut self, i: usize) {
        self.work.negate_row(i);
        self.left.negate_col(i);
    }

    /// Moves the smallest non-zero entry of the trailing block to `(t, t)`.
    fn place_pivot(&mut self, t: usize) -> Result<()> {
        let n = self.work.rows();
        let mut best: Option<(usize, usize)> = None;
        for i in t..n {
            for j in t..n {
                let x = self.work.get(i, j);
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.work.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let (i, j) = best.ok_or(Error::Singular)?;
        self.swap_rows(t, i);
        self.swap_cols(t, j);
        Ok(())
    }

    /// Clears row and column `t` outside the pivot. Returns false when a
    /// non-zero remainder is left behind and the pivot has to be re-chosen.
    fn clear_cross(&mut self, t: usize) -> bool {
        let n = self.work.rows();
        let mut clean = true;
        for i in t + 1..n {
            if self.work.get(i, t).is_zero() {
                continue;
            }
            let q = self.work.get(i, t) / self.work.get(t, t);
            if !q.is_zero() {
                self.add_row(i, t, &-q);
            }
            clean &= self.work.get(i, t).is_zero();
        }
        for j in t + 1..n {
            if self.work.get(t, j).is_zero() {
                continue;
            }
            let q = self.work.get(t, j) / self.work.get(t, t);
            if !q.is_zero() {
                self.add_col(j, t, &-q);
            }
            clean &= self.work.get(t, j).is_zero();
        }
        clean
    }

    fn row_not_divisible_by_pivot(&self, t: usize) -> Option<usize> {
        let n = self.work.rows();
        let pivot = self.work.get(t, t);
        (t + 1..n).find(|&i| (t + 1..n).any(|j| !self.work.get(i, j).is_multiple_of(pivot)))
    }
}

/// Smith Normal Form by elementary row and column operations, always pivoting
/// on the entry of least absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> Result<SmithForm> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "Smith form needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut r = Reduction { work: m.clone(), left: IntMatrix::identity(n), right: IntMatrix::identity(n) };

    for t in 0..n {
        loop {
            r.place_pivot(t)?;
            if !r.clear_cross(t) {
                continue;
            }
            match r.row_not_divisible_by_pivot(t) {
                Some(i) => r.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if r.work.get(t, t).is_negative() {
            r.negate_row(t);
        }
    }

    let invariants = (0..n).map(|i| r.work.get(i, i).clone()).collect();
    Ok(SmithForm { invariants, left: r.left, right: r.right })
}

/// The last invariant factor `d_n`.
pub fn last_invariant_factor(m: &IntMatrix) -> Result<BigInt> {
    Ok(smith_normal_form(m)?.last().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::det;
    use num_traits::One;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(m: &IntMatrix, expected: &[i64]) {
        let s = smith_normal_form(m).unwrap();
        assert_eq!(s.invariants, ints(expected));
        assert_eq!(s.reconstruct(), *m);
        assert!(det(&s.left).unwrap().abs().is_one());
        assert!(det(&s.right).unwrap().abs().is_one());
    }

    #[test]
    fn identity_invariants() {
        check(&IntMatrix::identity(3), &[1, 1, 1]);
    }

    #[test]
    fn diagonal_inputs() {
        check(&IntMatrix::diagonal(&[2, 6]), &[2, 6]);
        check(&IntMatrix::diagonal(&[2, 3]), &[1, 6]);
        check(&IntMatrix::diagonal(&[6, 4, 10]), &[2, 2, 60]);
    }

    #[test]
    fn dense_input() {
        let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).unwrap();
        check(&m, &[2, 6, 12]);
    }

    #[test]
    fn singular_is_rejected() {
        let m = IntMatrix::from_rows(&[[1, 2], [2, 4]]).unwrap();
        assert_eq!(smith_normal_form(&m), Err(Error::Singular));
        assert_eq!(last_invariant_factor(&m), Err(Error::Singular));
    }

    #[test]
    fn last_invariant() {
        assert_eq!(last_invariant_factor(&IntMatrix::identity(4)).unwrap(), BigInt::one());
        assert_eq!(last_invariant_factor(&IntMatrix::diagonal(&[2, 3])).unwrap(), BigInt::from(6));
    }
}
