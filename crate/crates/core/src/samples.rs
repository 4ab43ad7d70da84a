//! Two order-9 graphs with small walk-matrix determinants, each with its
//! single generalized cospectral mate.

use crate::graph::Graph;

/// `det W = -1936 = -2^4 × 11^2`, one generalized cospectral mate.
pub const LEVEL11_G: [[i64; 9]; 9] = [
    [0, 0, 0, 1, 0, 1, 0, 1, 1],
    [0, 0, 0, 0, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 0, 1, 0, 1],
    [1, 0, 0, 0, 0, 0, 1, 1, 1],
    [0, 1, 1, 0, 0, 1, 1, 1, 1],
    [1, 1, 0, 0, 1, 0, 1, 1, 1],
    [0, 1, 1, 1, 1, 1, 0, 0, 0],
    [1, 1, 0, 1, 1, 1, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 0, 0, 0],
];

/// The mate of [`LEVEL11_G`]; the two are joined by a rational orthogonal
/// matrix of level 11.
pub const LEVEL11_H: [[i64; 9]; 9] = [
    [0, 0, 0, 1, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 1, 0, 1, 1, 1],
    [1, 0, 0, 0, 0, 0, 1, 1, 1],
    [0, 1, 1, 0, 0, 1, 0, 0, 1],
    [1, 1, 0, 0, 1, 0, 0, 1, 1],
    [1, 1, 1, 1, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 0, 1, 0, 0, 1],
    [1, 1, 1, 1, 1, 1, 0, 1, 0],
];

/// `det W = 10224 = 2^4 × 3^2 × 71` with `rank_3 W = 8`.
pub const LEVEL3_N: [[i64; 9]; 9] = [
    [0, 0, 0, 0, 0, 1, 1, 0, 1],
    [0, 0, 0, 0, 0, 1, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 1, 0, 0, 0, 1, 1],
    [0, 1, 1, 0, 1, 0, 1, 0, 1],
    [1, 1, 0, 1, 0, 0, 1, 1, 0],
];

/// The generalized cospectral mate of [`LEVEL3_N`], as produced by the
/// level-3 mate search. It shares `|det W| = 10224` but has `rank_3 W = 7`.
pub const LEVEL3_M: [[i64; 9]; 9] = [
    [0, 0, 0, 1, 0, 0, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 1, 1, 0, 0, 0],
    [1, 1, 1, 0, 0, 1, 1, 1, 0],
    [0, 0, 1, 0, 0, 0, 0, 1, 0],
    [0, 0, 1, 1, 0, 0, 1, 0, 1],
    [1, 0, 0, 1, 0, 1, 0, 1, 0],
    [0, 1, 0, 1, 1, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0],
];

pub fn level11_g() -> Graph {
    Graph::from_rows(&LEVEL11_G).expect("valid adjacency matrix")
}

pub fn level11_h() -> Graph {
    Graph::from_rows(&LEVEL11_H).expect("valid adjacency matrix")
}

pub fn level3_n() -> Graph {
    Graph::from_rows(&LEVEL3_N).expect("valid adjacency matrix")
}

pub fn level3_m() -> Graph {
    Graph::from_rows(&LEVEL3_M).expect("valid adjacency matrix")
}
