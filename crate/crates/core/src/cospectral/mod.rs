//! Pair certificates for generalized cospectral graphs, the structural
//! predicates on the connecting matrix, corpus grouping and exhaustive sweeps.

mod certificate;
mod document;
mod groups;
pub mod lemmas;
mod search;
pub mod sweep;

pub use certificate::{
    is_primitive, is_regular_orthogonal, level_prime_ranks, reconstruct_q, verify_pair, GcmCertificate,
    LevelConstraints, LevelPrimeRank,
};
pub use document::{certificate_from_json, certificate_to_json, CERTIFICATE_KIND, SCHEMA};
pub use groups::{group_by_generalized_spectrum, MateGroup};
pub use lemmas::{
    check_level_mod, check_prime_power_excluded, check_same_level_permutation, check_uv, check_uv_i64,
    same_column_space_mod_p, LemmaOutcome,
};
pub use search::{mates_at_prime_level, LevelMate, LevelSearchReport};
pub use sweep::{sweep_order, verify_theorem_bound, BoundReport, Tally, Violation};
