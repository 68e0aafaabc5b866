//! Exact inertia of distance-squared matrices.
//!
//! For a connected graph `G`, the distance-squared matrix `Δ` has entry
//! `(i, j)` equal to `d(i, j)²`. This crate builds the tree and unicyclic
//! families whose inertia is known in closed form, computes the inertia
//! exactly with a pivoted rational LDLᵀ, and cross-checks every closed form
//! (inertia triples, cycle spectra, null-space witnesses) against that
//! oracle.
//!
//! Layout:
//!
//! - [`graph`]: graphs, family constructors, free-tree enumeration and `Δ`.
//! - [`exact`]: rational matrices, exact inertia, congruences and the
//!   explicit inverse / Schur constructions for even cycles.
//! - [`spectra`]: Jacobi eigensolver and closed-form cycle and saturated
//!   cycle spectra.
//! - [`predict`]: closed-form inertia predictions and null-space witnesses.
//! - [`harness`]: verification campaigns, the bound scanner and property
//!   suites used by the CLI.

pub mod exact;
pub mod graph;
pub mod harness;
pub mod predict;
pub mod rng;
pub mod spectra;

mod inertia;

pub use inertia::InertiaTriple;

/// Schema tag written into every report.
pub const REPORT_SCHEMA: &str = "inertia-lab/1";
