//! Signed-graph spectral toolkit.
//!
//! A signed graph is an undirected graph whose edges carry a sign in
//! `{+1, -1}`. This crate provides:
//!
//! - the core model: storage, switching, balance, canonical signatures, and
//!   the `sg6` text format ([`sgraph`]);
//! - dense symmetric eigensolving, characteristic polynomials, equitable
//!   partitions and quotient matrices ([`spectra`]);
//! - builders for the extremal families `Γ_{s,n}` and `Σ_{k,n}` together
//!   with their closed-form polynomials ([`constructions`]);
//! - detection and counting of forbidden unbalanced substructures
//!   ([`forbidden`]);
//! - an exhaustive/pruned extremal-search harness over switching classes of
//!   small signed graphs, emitting machine-verifiable certificates
//!   ([`search`]);
//! - the `sgx` command-line front end ([`cli`]).

pub mod cli;
pub mod constructions;
pub mod error;
pub mod forbidden;
pub mod matrix;
pub mod search;
pub mod sgraph;
pub mod spectra;

pub use error::{Error, Result};
pub use matrix::SquareMatrix;
pub use sgraph::{Sign, SignedGraph, VertexSet};

/// Maximum supported vertex count; vertex sets are 64-bit masks.
pub const MAX_N: usize = 64;

/// Default tolerance for eigenvalue equality assertions.
pub const EQ_TOL: f64 = 1e-8;
/// Default tolerance for strict-inequality margins (`a < b` is asserted as
/// `b - a > ORD_TOL`).
pub const ORD_TOL: f64 = 1e-9;
