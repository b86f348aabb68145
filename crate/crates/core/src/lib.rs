//! Completion numbers of graphs.
//!
//! A partial Hermitian matrix has a specified real diagonal and
//! conjugate-symmetric off-diagonal entries on the edges of a graph.
//! Chordal patterns always admit positive completions; for nonchordal
//! patterns the best one can guarantee is a completion with a bounded
//! number of negative eigenvalues. This crate computes and certifies
//! that machinery:
//!
//! - [`graph`]: chordality recognition with PEO/hole witnesses, maximal
//!   clique enumeration, edge-insertion clique bookkeeping, and packing
//!   of disjoint 4-cycle gadget sites.
//! - [`linalg`]: Hermitian inertia via tridiagonalization and Sturm
//!   bisection counts, plus the single-unknown-entry completion step.
//! - [`partial`]: the partial Hermitian matrix model, partial positivity
//!   checks, and per-clique inertia profiles.
//! - [`engine`]: edge-insertion schedules with an interlacing bound
//!   ledger; planning (exhaustive / greedy / beam) gives an upper bound
//!   on the completion number and executing a schedule produces an
//!   actual completion with per-step certificates.
//! - [`witness`]: the 4-cycle gadget and block-diagonal witness family,
//!   giving certified lower bounds.
//! - [`cli`] / [`report`]: the `cnum` command-line front end.

pub(crate) mod bitset;
pub mod cli;
pub mod engine;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod partial;
pub mod report;
pub mod witness;

pub use error::{Error, Result};
