//! Simple graphs, graph6 I/O, canonical forms and exhaustive enumeration.

mod canon;
mod enumerate;
mod graph6;
mod simple;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalForm, CANON_MAX_ORDER};
pub use enumerate::{
    classes_in_shard, graph_from_index, isomorphism_classes, labeled_count, labeled_graphs, labeled_graphs_shard,
    LabeledGraphs, Shard, LABELED_MAX_ORDER,
};
pub use graph6::{encode_graph6, parse_graph6, parse_graph6_lines, HEADER as GRAPH6_HEADER};
pub use simple::{Graph, MAX_ORDER};
