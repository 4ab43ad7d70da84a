//! Exact walk-matrix arithmetic for small simple graphs.
//!
//! The walk matrix `W(G) = [e, Ae, A²e, …, A^{n-1}e]` of a graph controls
//! which graphs can share its generalized spectrum (the spectra of the graph
//! and of its complement). This crate computes it exactly, classifies graphs
//! by the arithmetic of `det W(G)` and its Smith Normal Form, bounds the
//! number of non-isomorphic generalized cospectral mates by `2^k - 1`, and
//! certifies a cospectral pair by rebuilding the unique rational orthogonal
//! matrix `Q = W(G) W(H)^{-1}` that conjugates one adjacency matrix into the
//! other.
//!
//! Modules, bottom-up:
//!
//! * [`exactalg`]: bignum matrices, Bareiss determinants, Smith form, rank over F_p.
//! * [`graph`]: graphs, graph6, canonical forms, enumeration.
//! * [`spectral`]: walk matrices, characteristic polynomials, family membership.
//! * [`cospectral`]: pair certificates, level predicates, mate grouping and sweeps.
//! * [`cli`]: the `walkspec` command-line front end.

pub mod cli;
pub mod cospectral;
mod error;
pub mod exactalg;
pub mod graph;
pub mod samples;
pub mod spectral;

pub use error::{Error, Result};
