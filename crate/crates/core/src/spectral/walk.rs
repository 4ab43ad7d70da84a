use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::exactalg::{det, factorize_int, smith_normal_form, Factorization, IntMatrix, SmithForm};
use crate::graph::Graph;

/// The walk matrix of a graph together with the arithmetic data derived
/// from its determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkMatrixInfo {
    pub order: usize,
    /// Column `j` is `A^j e`: entry `(i, j)` counts walks of length `j` from vertex `i`.
    pub walk_matrix: IntMatrix,
    pub determinant: BigInt,
    /// `det / 2^⌊n/2⌋` when that division is exact (and `det ≠ 0`).
    pub normalized_det: Option<BigInt>,
    /// 2-adic valuation of `det`; absent for a singular walk matrix.
    pub two_adic_valuation: Option<u64>,
    /// Prime factorization of `|normalized_det|`.
    pub odd_part: Option<Factorization>,
    /// Present iff `det ≠ 0`.
    pub snf: Option<SmithForm>,
    pub controllable: bool,
}

impl WalkMatrixInfo {
    /// `⌊n/2⌋`, the power of two that always divides `det W`.
    pub fn expected_two_power(&self) -> u64 {
        (self.order / 2) as u64
    }

    /// `2^⌊n/2⌋ ∥ det W`.
    pub fn two_adic_exact(&self) -> bool {
        self.two_adic_valuation == Some(self.expected_two_power())
    }

    pub fn last_invariant(&self) -> Option<&BigInt> {
        self.snf.as_ref().map(SmithForm::last)
    }

    /// Full factorization of `|det W|` (None when singular).
    pub fn det_factorization(&self) -> Option<Factorization> {
        let odd = self.odd_part.as_ref()?;
        let mut f = odd.clone();
        let two = BigUint::from(2u32);
        let e = self.expected_two_power() as u32;
        if e > 0 {
            match f.factors.iter_mut().find(|(p, _)| *p == two) {
                Some(entry) => entry.1 += e,
                None => f.factors.insert(0, (two, e)),
            }
        }
        Some(f)
    }
}

/// Builds `W(G) = [e, Ae, …, A^{n-1}e]` and its determinant data.
pub fn walk_matrix(g: &Graph) -> WalkMatrixInfo {
    let n = g.order();
    let a = g.adjacency_matrix();
    let mut w = IntMatrix::zeros(n, n);
    let mut col = vec![BigInt::one(); n];
    for j in 0..n {
        for (i, x) in col.iter().enumerate() {
            w.set(i, j, x.clone());
        }
        if j + 1 < n {
            col = a.mat_vec(&col).expect("square adjacency matrix");
        }
    }

    let determinant = det(&w).expect("walk matrix is square");
    let controllable = !determinant.is_zero();
    let two_adic_valuation = determinant.trailing_zeros();
    let shift = n / 2;
    let normalized_det = match two_adic_valuation {
        Some(v) if v >= shift as u64 => Some(&determinant >> shift),
        _ => None,
    };
    let odd_part = normalized_det.as_ref().map(factorize_int);
    let snf = controllable.then(|| smith_normal_form(&w).expect("non-singular square matrix"));

    WalkMatrixInfo {
        order: n,
        walk_matrix: w,
        determinant,
        normalized_det,
        two_adic_valuation,
        odd_part,
        snf,
        controllable,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    #[test]
    fn regular_graphs_are_not_controllable() {
        for g in [Graph::cycle(5).unwrap(), Graph::complete(4).unwrap(), Graph::empty(3).unwrap()] {
            let info = walk_matrix(&g);
            assert!(!info.controllable);
            assert!(info.snf.is_none());
            assert!(info.normalized_det.is_none());
        }
    }

    #[test]
    fn single_vertex() {
        let info = walk_matrix(&Graph::empty(1).unwrap());
        assert_eq!(info.determinant, BigInt::one());
        assert!(info.controllable);
        assert_eq!(info.normalized_det, Some(BigInt::one()));
    }

    #[test]
    fn level11_determinant() {
        let info = walk_matrix(&samples::level11_g());
        assert_eq!(info.determinant, BigInt::from(-1936));
        assert_eq!(info.normalized_det, Some(BigInt::from(-121)));
        assert_eq!(info.two_adic_valuation, Some(4));
        assert_eq!(info.odd_part.as_ref().unwrap().to_string(), "11^2");
        assert_eq!(info.det_factorization().unwrap().to_string(), "2^4 × 11^2");
    }

    #[test]
    fn level3_determinant() {
        let info = walk_matrix(&samples::level3_n());
        assert_eq!(info.determinant, BigInt::from(10224));
        assert_eq!(info.det_factorization().unwrap().to_string(), "2^4 × 3^2 × 71");
    }

    #[test]
    fn columns_follow_the_adjacency_recursion() {
        let g = samples::level3_n();
        let info = walk_matrix(&g);
        let a = g.adjacency_matrix();
        for j in 0..8 {
            assert_eq!(a.mat_vec(&info.walk_matrix.column(j)).unwrap(), info.walk_matrix.column(j + 1));
        }
    }
}
