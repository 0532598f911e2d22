//! Monte-Carlo simulation and analysis of Chern-number statistics for
//! GUE-valued random matrix fields on the unit two-sphere.
//!
//! The pipeline has five stages, one module each:
//!
//! * [`field`] — statistically homogeneous, isotropic Hermitian random
//!   fields with a prescribed matrix-element correlation function,
//!   evaluable exactly at any point on the sphere.
//! * [`spectral`] — Hermitian eigendecomposition and band bookkeeping
//!   (mean band energies, local density of states).
//! * [`chern`] — integer band and gap Chern numbers via determinant link
//!   variables on an adaptively refined oriented triangulation.
//! * [`stats`] — ensemble estimators (scaled variance, kurtosis, gap
//!   Pearson correlations, weighted Chern variance) with bootstrap
//!   confidence intervals, plus the closed-form theory evaluators they
//!   are compared against.
//! * [`harness`] — a reproducible, parallel, resumable sweep driver that
//!   persists one JSON record per realization.
//!
//! The [`cli`] module wires everything into the `chern-sphere` binary;
//! the `examples/` directory shows one runnable program per capability.

pub mod chern;
pub mod cli;
pub mod field;
pub mod harness;
pub mod spectral;
pub mod stats;

pub use chern::{build_icosphere, fhs_chern, ChernResult, RefinePolicy, TriMesh};
pub use field::{correlation_at, sensitivity, CorrelationFamily, CorrelationSpec, FieldRealization};
pub use spectral::{band_diagnostics, eigh, semicircle_dos, BandDiagnostics, SpectrumSample};
pub use stats::EnsembleRecord;
