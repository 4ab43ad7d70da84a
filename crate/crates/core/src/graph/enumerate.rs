use std::collections::HashSet;
use std::ops::Range;

use rayon::prelude::*;

use super::canon::{canonical_form, CanonicalForm};
use super::simple::Graph;
use crate::error::{Error, Result};

pub const LABELED_MAX_ORDER: usize = 7;

/// One slice of a sharded workload: worker `index` of `total`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub index: usize,
    pub total: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, total: 1 };

    pub fn new(index: usize, total: usize) -> Result<Self> {
        if total == 0 || index >= total {
            return Err(Error::InvalidArgument(format!("shard {index}/{total} is out of range")));
        }
        Ok(Self { index, total })
    }

    /// Contiguous sub-range of `0..len` owned by this shard.
    pub fn slice(&self, len: u64) -> Range<u64> {
        let t = self.total as u64;
        let i = self.index as u64;
        (len * i / t)..(len * (i + 1) / t)
    }
}

impl std::str::FromStr for Shard {
    type Err = Error;

    /// Parses `I/T`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("expected shard as INDEX/TOTAL, got {s:?}"));
        let (i, t) = s.split_once('/').ok_or_else(bad)?;
        Shard::new(i.trim().parse().map_err(|_| bad())?, t.trim().parse().map_err(|_| bad())?)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > LABELED_MAX_ORDER {
        return Err(Error::UnsupportedOrder { order: n, limit: LABELED_MAX_ORDER });
    }
    Ok(())
}

/// Number of labeled graphs on `n` vertices.
pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

/// The labeled graph whose upper-triangle bit string (graph6 order, first bit
/// most significant) is the binary expansion of `index`.
pub fn graph_from_index(n: usize, index: u64) -> Graph {
    let m = n * (n - 1) / 2;
    let mut g = Graph::empty(n).expect("order checked by caller");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if index >> (m - 1 - k) & 1 == 1 {
                g.add_edge(i, j).expect("in range");
            }
            k += 1;
        }
    }
    g
}

/// Iterator over labeled graphs in lexicographic order of their bit strings.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    range: Range<u64>,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.range.next().map(|i| graph_from_index(self.n, i))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.range.size_hint()
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// All `2^(n(n-1)/2)` labeled graphs of order `n`, each exactly once.
pub fn labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    labeled_graphs_shard(n, Shard::WHOLE)
}

/// The contiguous block of the lexicographic stream belonging to `shard`;
/// blocks of consecutive shards concatenate to the full stream.
pub fn labeled_graphs_shard(n: usize, shard: Shard) -> Result<LabeledGraphs> {
    check_order(n)?;
    Ok(LabeledGraphs { n, range: shard.slice(labeled_count(n)) })
}

/// Canonical forms of every isomorphism class met in `shard`.
pub fn classes_in_shard(n: usize, shard: Shard) -> Result<HashSet<CanonicalForm>> {
    check_order(n)?;
    let range = shard.slice(labeled_count(n));
    Ok(range
        .into_par_iter()
        .fold(HashSet::new, |mut seen, i| {
            let form = canonical_form(&graph_from_index(n, i)).expect("order within canonical guardrail");
            seen.insert(form);
            seen
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        }))
}

/// One canonical representative per isomorphism class, sorted by canonical form.
pub fn isomorphism_classes(n: usize) -> Result<Vec<Graph>> {
    let mut forms: Vec<CanonicalForm> = classes_in_shard(n, Shard::WHOLE)?.into_iter().collect();
    forms.sort();
    Ok(forms.iter().map(CanonicalForm::to_graph).collect())
}
