use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, CanonicalForm, Graph};
use crate::spectral::{analyze, generalized_spectrum_key, FamilyClassification, GeneralizedSpectrumKey, WalkMatrixInfo};

/// Pairwise non-isomorphic graphs sharing one generalized spectrum.
#[derive(Clone, Debug)]
pub struct MateGroup {
    pub key: GeneralizedSpectrumKey,
    /// Canonical representatives, sorted by canonical form.
    pub members: Vec<Graph>,
    pub walk_info: Vec<WalkMatrixInfo>,
    pub classifications: Vec<FamilyClassification>,
}

impl MateGroup {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Pair certificates need a controllable member; a group of size two or
    /// more without one cannot be certified.
    pub fn uncertified(&self) -> bool {
        self.len() >= 2 && self.walk_info.iter().any(|w| !w.controllable)
    }
}

/// Partitions a corpus into generalized-spectrum classes. Isomorphic inputs
/// collapse to one canonical representative. Groups come out sorted by key.
pub fn group_by_generalized_spectrum<I>(corpus: I) -> Result<Vec<MateGroup>>
where
    I: IntoIterator<Item = Graph>,
{
    let mut forms: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut order: Option<usize> = None;
    for g in corpus {
        match order {
            None => order = Some(g.order()),
            Some(n) if n != g.order() => return Err(Error::MixedOrders { first: n, other: g.order() }),
            _ => {}
        }
        forms.insert(canonical_form(&g)?);
    }

    let keyed: Vec<(GeneralizedSpectrumKey, Graph)> = forms
        .into_iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|form| {
            let g = form.to_graph();
            (generalized_spectrum_key(&g), g)
        })
        .collect();

    let mut buckets: BTreeMap<GeneralizedSpectrumKey, Vec<Graph>> = BTreeMap::new();
    for (key, g) in keyed {
        buckets.entry(key).or_default().push(g);
    }

    Ok(buckets
        .into_par_iter()
        .map(|(key, members)| {
            let (walk_info, classifications) = members.iter().map(analyze).unzip();
            MateGroup { key, members, walk_info, classifications }
        })
        .collect())
}
