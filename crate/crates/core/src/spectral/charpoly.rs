use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::IntMatrix;

/// Characteristic polynomial `det(xI - M)` by Berkowitz's division-free
/// algorithm. Coefficients are returned lowest degree first; the last one is
/// the leading coefficient 1.
pub fn char_poly(m: &IntMatrix) -> Result<Vec<BigInt>> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "characteristic polynomial needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    // highest degree first while building
    let mut poly = vec![BigInt::one()];
    for r in 0..n {
        // Toeplitz column [1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C]
        let mut column = Vec::with_capacity(r + 2);
        column.push(BigInt::one());
        column.push(-m.get(r, r).clone());
        let mut v: Vec<BigInt> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for _ in 0..r {
            let dot: BigInt = (0..r).map(|j| m.get(r, j) * &v[j]).sum();
            column.push(-dot);
            v = (0..r).map(|i| (0..r).map(|j| m.get(i, j) * &v[j]).sum()).collect();
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| (0..=i.min(r)).map(|j| &column[i - j] * &poly[j]).sum())
            .collect();
        poly = next;
    }
    poly.reverse();
    Ok(poly)
}

/// Evaluates a polynomial given lowest degree first.
pub fn eval_poly(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Human-readable polynomial in `x`, highest degree first.
pub fn format_poly(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (deg, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c < &BigInt::zero();
        let mag = if negative { -c } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let show_mag = !mag.is_one() || deg == 0;
        if show_mag {
            out.push_str(&mag.to_string());
        }
        match deg {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&format!("x^{deg}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(char_poly(&IntMatrix::zeros(3, 3)).unwrap(), ints(&[0, 0, 0, 1]));
    }

    #[test]
    fn triangle_and_path() {
        let k3 = IntMatrix::from_rows(&[[0, 1, 1], [1, 0, 1], [1, 1, 0]]).unwrap();
        assert_eq!(char_poly(&k3).unwrap(), ints(&[-2, -3, 0, 1]));
        assert_eq!(format_poly(&char_poly(&k3).unwrap()), "x^3 - 3x - 2");
        let p3 = IntMatrix::from_rows(&[[0, 1, 0], [1, 0, 1], [0, 1, 0]]).unwrap();
        assert_eq!(char_poly(&p3).unwrap(), ints(&[0, -2, 0, 1]));
    }

    #[test]
    fn general_two_by_two() {
        let m = IntMatrix::from_rows(&[[3, -1], [4, 7]]).unwrap();
        // x^2 - 10x + 25
        assert_eq!(char_poly(&m).unwrap(), ints(&[25, -10, 1]));
        assert!(char_poly(&IntMatrix::from_rows(&[[1, 2]]).unwrap()).is_err());
    }

    #[test]
    fn evaluation() {
        let p = ints(&[-2, -3, 0, 1]);
        assert_eq!(eval_poly(&p, &BigInt::from(2)), BigInt::zero());
        assert_eq!(eval_poly(&p, &BigInt::from(-1)), BigInt::zero());
        assert_eq!(eval_poly(&p, &BigInt::from(0)), BigInt::from(-2));
    }
}
