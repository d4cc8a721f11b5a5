//! Multichannel sEMG time-frequency analysis.
//!
//! The crate covers the whole path from raw trial recordings to significance
//! tables:
//!
//! * [`signal`] holds the sampled-signal type, an FFT front end and IIR
//!   filter design with zero-phase application.
//! * [`tfa`] computes the Morlet CWT, its phase transform and the
//!   single-channel synchrosqueezing transform.
//! * [`msst`] fuses per-channel synchrosqueezed matrices into a single
//!   multivariate matrix through band-wise instantaneous frequency and
//!   amplitude estimates.
//! * [`features`] extracts joint time-frequency moment features and
//!   z-scores feature tables.
//! * [`stats`] implements mid-ranking, the Kruskal-Wallis test, the
//!   chi-square tail and the pairwise / scenario drivers.
//! * [`dataio`] reads trial manifests and CSV trials, segments them into
//!   overlapping windows and synthesizes test signals.
//! * [`report`] orchestrates full pipeline runs and writes CSV, text and SVG
//!   outputs.
//! * [`selftest`] bundles analytic checks that can be run from the CLI.

pub mod dataio;
mod error;
pub mod features;
pub mod msst;
pub mod reference;
pub mod report;
pub mod selftest;
pub mod signal;
pub mod stats;
pub mod tfa;

pub use error::{Error, ErrorKind, Result};

pub use dataio::{Gesture, SegmentationSpec, TrialManifest};
pub use features::{Feature, FeatureMode, FeatureRecord, MomentFeatures};
pub use msst::{BandPartition, MsstConfig};
pub use report::PipelineConfig;
pub use signal::MultichannelSignal;
pub use stats::KwResult;
pub use tfa::{TimeFrequencyMatrix, WaveletSpec};
