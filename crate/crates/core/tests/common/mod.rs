//! Independent oracles shared by the integration tests. None of them call
//! into the library's algorithms; they are slow and obviously correct.

#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use walkspec::exactalg::IntMatrix;
use walkspec::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// Cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    if n == 1 {
        return BigInt::from(m[0][0]);
    }
    let mut total = BigInt::from(0);
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
        let term = BigInt::from(m[0][j]) * laplace_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn random_rows(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..n).map(|_| (0..n).map(|_| rng.gen_range(lo..=hi)).collect()).collect()
}

pub fn to_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows).unwrap()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Heap's algorithm over all `n!` permutations.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) { a.swap(i, k - 1) } else { a.swap(0, k - 1) }
        }
    }
    let mut out = Vec::new();
    heap(n, &mut (0..n).collect(), &mut out);
    out
}

/// Isomorphism by trying every bijection on the adjacency relation.
pub fn brute_isomorphic(g: &Graph, h: &Graph, perms: &[Vec<usize>]) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    perms.iter().any(|p| (0..n).all(|u| (u + 1..n).all(|v| g.has_edge(u, v) == h.has_edge(p[u], p[v]))))
}

/// Plain upper-triangle adjacency bits, used to build graphs without the library's enumerator.
pub fn graph_from_bits(n: usize, mut bits: u64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 1..n {
        for u in 0..v {
            if bits & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bits >>= 1;
        }
    }
    g
}

/// Determinant by cofactor expansion memoized over column subsets, fast
/// enough for order 9 without sharing any code with the library.
pub fn subset_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut dp = vec![0i128; 1 << n];
    dp[0] = 1;
    for mask in 1usize..1 << n {
        let row = mask.count_ones() as usize - 1;
        let mut acc = 0i128;
        for c in 0..n {
            if mask >> c & 1 == 1 {
                // sign from the number of chosen columns to the right of c
                let above = (mask >> (c + 1)).count_ones();
                let term = m[row][c] as i128 * dp[mask ^ (1 << c)];
                acc += if above % 2 == 0 { term } else { -term };
            }
        }
        dp[mask] = acc;
    }
    dp[(1 << n) - 1]
}

/// Values of `det(xI - A)` at `x = 0..=n`, which pin down the monic
/// characteristic polynomial.
pub fn char_poly_signature(g: &Graph) -> Vec<i128> {
    let n = g.order();
    (0..=n as i64)
        .map(|x| {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { x } else { -(g.has_edge(i, j) as i64) }).collect())
                .collect();
            subset_det(&rows)
        })
        .collect()
}
