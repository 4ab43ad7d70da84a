use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::IntMatrix;

pub const MAX_ORDER: usize = 64;

/// Simple undirected graph on vertices `0..n`, one adjacency bitmask per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::UnsupportedOrder { order: n, limit: MAX_ORDER });
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Self::empty(n)?.complement())
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Self::from_edges(n, &edges)
    }

    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges)
    }

    /// Builds a graph from a symmetric 0/1 matrix with zero diagonal.
    pub fn from_adjacency(a: &IntMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Dimension("adjacency matrix must be square".into()));
        }
        let n = a.rows();
        let mut g = Self::empty(n)?;
        for i in 0..n {
            if !a.get(i, i).is_zero() {
                return Err(Error::InvalidGraph(format!("loop at vertex {i}")));
            }
            for j in 0..n {
                let x = a.get(i, j);
                if x != a.get(j, i) {
                    return Err(Error::InvalidGraph(format!("asymmetric entry at ({i}, {j})")));
                }
                if x.is_one() {
                    if i < j {
                        g.add_edge(i, j)?;
                    }
                } else if !x.is_zero() {
                    return Err(Error::InvalidGraph(format!("entry ({i}, {j}) is {x}, expected 0 or 1")));
                }
            }
        }
        Ok(g)
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_adjacency(&IntMatrix::from_rows(rows)?)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidGraph(format!("edge ({u}, {v}) outside 0..{}", self.n)));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| (u + 1..self.n).filter(move |&v| self.has_edge(u, v)).map(move |v| (u, v)))
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d)
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, self.n, |i, j| if self.has_edge(i, j) { BigInt::one() } else { BigInt::zero() })
    }

    /// `A(complement) = J - I - A`.
    pub fn complement(&self) -> Self {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let adj = (0..self.n).map(|v| !self.adj[v] & full & !(1 << v)).collect();
        Self { n: self.n, adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if !is_permutation(perm, self.n) {
            return Err(Error::InvalidArgument(format!("not a permutation of 0..{}", self.n)));
        }
        let mut g = Self::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Upper-triangle bits in graph6 order: `(0,1), (0,2), (1,2), (0,3), ...`.
    pub fn upper_triangle_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (1..self.n).flat_map(move |j| (0..j).map(move |i| self.has_edge(i, j)))
    }
}

pub(crate) fn is_permutation(perm: &[usize], n: usize) -> bool {
    if perm.len() != n {
        return false;
    }
    let mut seen = 0u128;
    perm.iter().all(|&x| {
        let fresh = x < n && seen >> x & 1 == 0;
        seen |= 1 << x.min(127);
        fresh
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_limits() {
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(65).is_err());
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn single_vertex_and_single_edge() {
        assert_eq!(Graph::empty(1).unwrap().adjacency_matrix(), IntMatrix::from_rows(&[[0]]).unwrap());
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.adjacency_matrix(), IntMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap());
    }

    #[test]
    fn loops_and_bad_matrices_rejected() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 3)]).is_err());
        assert!(Graph::from_rows(&[[0, 1], [0, 0]]).is_err());
        assert!(Graph::from_rows(&[[0, 2], [2, 0]]).is_err());
        assert!(Graph::from_rows(&[[1, 0], [0, 0]]).is_err());
    }

    #[test]
    fn complement_of_empty_triangle() {
        let k3 = Graph::empty(3).unwrap().complement();
        assert_eq!(k3, Graph::cycle(3).unwrap());
        let big = Graph::empty(64).unwrap().complement();
        assert_eq!(big.edge_count(), 64 * 63 / 2);
    }

    #[test]
    fn permuting_moves_edges() {
        let p = Graph::path(3).unwrap();
        let q = p.permuted(&[1, 0, 2]).unwrap();
        assert!(q.has_edge(1, 0) && q.has_edge(0, 2) && !q.has_edge(1, 2));
        assert!(p.permuted(&[0, 0, 1]).is_err());
    }
}
