use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::{IntMatrix, RatMatrix};
use crate::error::{Error, Result};

fn require_square(m: &IntMatrix) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("expected a square matrix, got {}x{}", m.rows(), m.cols())));
    }
    Ok(m.rows())
}

/// Exact determinant by single-step fraction-free (Bareiss) elimination.
///
/// Every intermediate division is exact, so entries stay integral and bounded
/// by minors of the input.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    let n = require_square(m)?;
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();

    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }

    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Exact inverse over the rationals by Gauss-Jordan elimination.
pub fn inverse_rational(m: &IntMatrix) -> Result<RatMatrix> {
    let n = require_square(m)?;
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect();

    for k in 0..n {
        let pivot_row = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::Singular)?;
        a.swap(k, pivot_row);
        inv.swap(k, pivot_row);

        let pivot = a[k][k].clone();
        for j in 0..n {
            a[k][j] = &a[k][j] / &pivot;
            inv[k][j] = &inv[k][j] / &pivot;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for j in 0..n {
                let da = &factor * &a[k][j];
                a[i][j] -= da;
                let di = &factor * &inv[k][j];
                inv[i][j] -= di;
            }
        }
    }

    RatMatrix::new(n, n, inv.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_unit_determinant() {
        assert_eq!(det(&IntMatrix::identity(5)).unwrap(), BigInt::one());
    }

    #[test]
    fn small_determinants() {
        let m = IntMatrix::from_rows(&[[2, 3], [1, 4]]).unwrap();
        assert_eq!(det(&m).unwrap(), BigInt::from(5));
        // a zero leading entry forces a row swap
        let m = IntMatrix::from_rows(&[[0, 1, 2], [3, 4, 5], [6, 7, 9]]).unwrap();
        assert_eq!(det(&m).unwrap(), BigInt::from(-3));
        let singular = IntMatrix::from_rows(&[[1, 2], [2, 4]]).unwrap();
        assert_eq!(det(&singular).unwrap(), BigInt::zero());
    }

    #[test]
    fn non_square_is_rejected() {
        let m = IntMatrix::from_rows(&[[1, 2, 3], [4, 5, 6]]).unwrap();
        assert!(matches!(det(&m), Err(Error::Dimension(_))));
        assert!(matches!(inverse_rational(&m), Err(Error::Dimension(_))));
    }

    #[test]
    fn inverse_of_diagonal() {
        let inv = inverse_rational(&IntMatrix::diagonal(&[2, 4])).unwrap();
        let expected = RatMatrix::new(
            2,
            2,
            vec![
                BigRational::new(1.into(), 2.into()),
                BigRational::zero(),
                BigRational::zero(),
                BigRational::new(1.into(), 4.into()),
            ],
        )
        .unwrap();
        assert_eq!(inv, expected);
        assert!(inverse_rational(&IntMatrix::identity(4)).unwrap().is_identity());
    }

    #[test]
    fn singular_inverse_fails() {
        let m = IntMatrix::from_rows(&[[1, 2], [2, 4]]).unwrap();
        assert_eq!(inverse_rational(&m), Err(Error::Singular));
    }
}
