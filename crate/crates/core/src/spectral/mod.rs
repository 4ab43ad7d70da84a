//! Walk matrices, exact characteristic polynomials and the arithmetic
//! families that bound generalized cospectral mates.

mod charpoly;
mod family;
mod walk;

pub use charpoly::{char_poly, eval_poly, format_poly};
pub use family::{classify_family, mate_bound, FamilyClassification, PrimeRank, MATE_BOUND_MAX_K};
pub use walk::{walk_matrix, WalkMatrixInfo};

use num_bigint::BigInt;

use crate::graph::Graph;

/// The characteristic polynomials of a graph and of its complement; two
/// graphs are generalized cospectral exactly when their keys are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneralizedSpectrumKey {
    /// Lowest degree first, monic.
    pub char_poly: Vec<BigInt>,
    pub char_poly_complement: Vec<BigInt>,
}

pub fn generalized_spectrum_key(g: &Graph) -> GeneralizedSpectrumKey {
    let square = "adjacency matrices are square";
    GeneralizedSpectrumKey {
        char_poly: char_poly(&g.adjacency_matrix()).expect(square),
        char_poly_complement: char_poly(&g.complement().adjacency_matrix()).expect(square),
    }
}

/// Walk-matrix data and family membership for one graph.
pub fn analyze(g: &Graph) -> (WalkMatrixInfo, FamilyClassification) {
    let info = walk_matrix(g);
    let class = classify_family(&info);
    (info, class)
}
