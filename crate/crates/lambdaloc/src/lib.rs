//! Off-axis two-dimensional atom localization in a three-level Λ system.
//!
//! A weak Gaussian probe couples |1⟩ ↔ |3⟩ while a hybrid field — one
//! Laguerre-Gaussian beam plus one Gaussian beam — couples |2⟩ ↔ |3⟩. The
//! interference of the two coupling beams produces a single zero-intensity
//! spot at a tunable off-axis position; atoms pumped into the dark state |2⟩
//! pile up there, so the steady population ρ22 maps the spot with
//! subwavelength resolution.
//!
//! Module map:
//!
//! - [`fields`]: complex Rabi amplitudes of the beams and the hybrid
//!   coupling intensity at arbitrary points.
//! - [`bloch`]: master-equation right-hand side, adaptive time evolution,
//!   exact steady states via a Liouvillian linear solve, and settling times.
//! - [`localization`]: ρ22 maps and radial profiles, analytic position /
//!   resolution predictions, FWHM extraction from sampled data.
//! - [`noise`]: Monte Carlo ensembles for laser intensity noise and atomic
//!   thermal motion, with seeded reproducible streams.
//! - [`feasibility`]: the steady-time budget v_p·T_s ≤ a_r/10 and the
//!   localizable-radius scan.
//! - [`cli`]: configuration files, named presets, and the data-file emitting
//!   subcommands.

pub mod bloch;
pub mod cli;
pub mod constants;
pub mod feasibility;
pub mod fields;
pub mod localization;
pub mod noise;
pub mod units;

pub use bloch::{AtomSpecies, DensityMatrix};
pub use fields::{BeamSet, Point2D};
