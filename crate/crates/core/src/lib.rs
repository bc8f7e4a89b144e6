//! Exact spectral toolkit for kite graphs `Kite_{p,q}`: a clique `K_p` with a
//! path hanging off one of its vertices.
//!
//! The crate computes adjacency characteristic polynomials exactly (three
//! independent routes plus closed forms), decides cospectrality on those
//! integer polynomials, evaluates spectral-radius and clique bounds, and runs
//! isomorph-free exhaustive searches for cospectral mates.
//!
//! Each capability has a runnable program under `examples/`; `cargo run
//! --example` lists them. The `kitespec` binary exposes the same operations
//! on the command line.

pub mod charpoly;
pub mod cli;
pub mod das;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod poly;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Graph, KiteParams};
pub use poly::{ExactRational, IntPolynomial};
