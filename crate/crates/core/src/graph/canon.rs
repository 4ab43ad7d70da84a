//! Canonical labeling by equitable-partition refinement and a search tree
//! pruned with the automorphisms discovered along the way.
//!
//! Every leaf of the search tree is a discrete ordered partition, i.e. a
//! vertex ordering. The canonical form is the largest upper-triangle bit
//! string over all leaves. Refinement and target-cell choice depend only on
//! the structure of the partition, so the leaf set (and therefore its
//! maximum) is the same for every relabeling of the input.

use super::simple::Graph;
use crate::error::{Error, Result};

pub const CANON_MAX_ORDER: usize = 12;

/// Adjacency upper triangle under the canonical vertex ordering, packed
/// most-significant bit first so that word order is bit-string order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        let len = self.order * (self.order - 1) / 2;
        (0..len).map(move |k| self.bits[k / 64] >> (63 - k % 64) & 1 == 1)
    }

    /// The canonical representative as a graph.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.order).expect("canonical forms have a valid order");
        let mut bits = self.bits();
        for j in 1..self.order {
            for i in 0..j {
                if bits.next() == Some(true) {
                    g.add_edge(i, j).expect("indices are in range");
                }
            }
        }
        g
    }
}

fn certificate(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = lab.len();
    let len = n * (n - 1) / 2;
    let mut words = vec![0u64; len.div_ceil(64).max(1)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(lab[i], lab[j]) {
                words[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    words
}

fn mask_of(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

/// Refines an ordered partition until it is equitable. Cells are split by
/// the number of neighbours in a splitter cell, fragments ordered by count.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    'restart: loop {
        for w in 0..cells.len() {
            let splitter = mask_of(&cells[w]);
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let count = |v: usize| (g.neighbours(v) & splitter).count_ones();
                let first = count(cells[c][0]);
                if cells[c].iter().all(|&v| count(v) == first) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[c].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut fragments: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (key, v) in keyed {
                    if last != Some(key) {
                        fragments.push(Vec::new());
                        last = Some(key);
                    }
                    fragments.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, fragments);
                continue 'restart;
            }
        }
        return;
    }
}

struct Leaf {
    cert: Vec<u64>,
    lab: Vec<usize>,
}

struct Search<'g> {
    g: &'g Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        let mut gamma = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        if gamma.iter().enumerate().any(|(i, &x)| i != x) {
            self.automorphisms.push(gamma);
        }
    }

    fn leaf(&mut self, lab: Vec<usize>) {
        let cert = certificate(self.g, &lab);
        let Some(first) = &self.first else {
            self.first = Some(Leaf { cert: cert.clone(), lab: lab.clone() });
            self.best = Some(Leaf { cert, lab });
            return;
        };
        if cert == first.cert {
            let from = first.lab.clone();
            self.record_automorphism(&from, &lab);
            return;
        }
        let best = self.best.as_ref().expect("best is set with first");
        if cert == best.cert {
            let from = best.lab.clone();
            self.record_automorphism(&from, &lab);
        } else if cert > best.cert {
            self.best = Some(Leaf { cert, lab });
        }
    }

    /// Orbit representative map of the group generated by the known
    /// automorphisms that fix every vertex of `prefix`.
    fn orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn explore(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            let orbit = self.orbits(prefix);
            if tried.iter().any(|&u| orbit[u] == orbit[v]) {
                continue;
            }
            tried.push(v);
            let rest: Vec<usize> = cells[target].iter().copied().filter(|&u| u != v).collect();
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(rest);
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.explore(child, prefix);
            prefix.pop();
        }
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > CANON_MAX_ORDER {
        return Err(Error::UnsupportedOrder { order: g.order(), limit: CANON_MAX_ORDER });
    }
    Ok(())
}

/// Canonical vertex ordering: `lab[k]` is the vertex placed at position `k`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_order(g)?;
    let mut search = Search { g, first: None, best: None, automorphisms: Vec::new() };
    let mut cells = vec![(0..g.order()).collect::<Vec<_>>()];
    // degree classes first; `refine` would find the same split from the unit partition
    refine(g, &mut cells);
    search.explore(cells, &mut Vec::new());
    Ok(search.best.expect("search visits at least one leaf").lab)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let lab = canonical_labeling(g)?;
    Ok(CanonicalForm { order: g.order(), bits: certificate(g, &lab) })
}

/// Equal canonical forms; graphs of different order are simply not isomorphic.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() {
        check_order(g)?;
        check_order(h)?;
        return Ok(false);
    }
    if g.edge_count() != h.edge_count() {
        check_order(g)?;
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Relabels `g` into its canonical representative.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(canonical_form(g)?.to_graph())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_paths_agree() {
        let p4 = Graph::path(4).unwrap();
        let q = p4.permuted(&[2, 0, 3, 1]).unwrap();
        assert_ne!(p4, q);
        assert_eq!(canonical_form(&p4).unwrap(), canonical_form(&q).unwrap());
        assert!(is_isomorphic(&p4, &q).unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = Graph::path(4).unwrap();
        let star = Graph::star(3).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&star).unwrap());
        assert!(!is_isomorphic(&Graph::cycle(5).unwrap(), &Graph::path(5).unwrap()).unwrap());
    }

    #[test]
    fn canonical_graph_round_trip() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]).unwrap();
        let c = canonical_graph(&g).unwrap();
        assert!(is_isomorphic(&g, &c).unwrap());
        assert_eq!(canonical_form(&c).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for n in [1, 2, 11, 12] {
            let e = Graph::empty(n).unwrap();
            let k = e.complement();
            assert!(canonical_form(&e).is_ok());
            assert_eq!(canonical_form(&k).unwrap().to_graph(), k);
        }
        // disjoint triangles and the 3-cube are regular with large groups
        let tri = Graph::from_edges(12, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (6, 7), (7, 8), (8, 6), (9, 10), (10, 11), (11, 9)]).unwrap();
        assert!(is_isomorphic(&tri, &tri.permuted(&[11, 3, 5, 7, 9, 1, 0, 2, 4, 6, 8, 10]).unwrap()).unwrap());
    }

    #[test]
    fn order_guardrail() {
        let g = Graph::empty(13).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::UnsupportedOrder { order: 13, limit: 12 })));
    }
}
