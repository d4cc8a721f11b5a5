use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty signal")]
    EmptySignal,
    #[error("fft length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("invalid cutoff: {0}")]
    InvalidCutoff(String),
    #[error("invalid filter: {0}")]
    InvalidFilter(String),
    #[error("signal shorter than filter warm-up ({len} samples, need at least {required})")]
    FilterWarmup { len: usize, required: usize },
    #[error("invalid signal: {0}")]
    InvalidSignal(String),
    #[error("signal too short: {len} samples, need at least {min}")]
    SignalTooShort { len: usize, min: usize },
    #[error("invalid wavelet: {0}")]
    InvalidWavelet(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid band partition: {0}")]
    InvalidPartition(String),
    #[error("degenerate distribution")]
    DegenerateDistribution,
    #[error("empty table")]
    EmptyTable,
    #[error("non-finite value at index {0}")]
    NonFinite(usize),
    #[error("invalid groups: {0}")]
    InvalidGroups(String),
    #[error("chi-square statistic must be non-negative, got {0}")]
    NegativeStatistic(f64),
    #[error("invalid degrees of freedom: {0}")]
    InvalidDegreesOfFreedom(u32),
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),
    #[error("empty trial")]
    EmptyTrial,
    #[error("length mismatch: expected {expected} rows, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },
    #[error("invalid segmentation: {0}")]
    InvalidSegmentation(String),
    #[error("invalid synthesis: {0}")]
    InvalidSynthesis(String),
    #[error("invalid config: {0}")]
    Config(String),
    #[error("unknown feature '{0}' (valid names: mean, variance, skewness, kurtosis)")]
    UnknownFeature(String),
    #[error("unknown gesture '{0}' (valid labels: X, E, F, U, R, G, B, D, S, P)")]
    UnknownGesture(String),
    #[error("{context}: {source}")]
    Context {
        context: String,
        #[source]
        source: Box<Error>,
    },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

/// Coarse classification used by the CLI to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad configuration, flags or parameters.
    Usage,
    /// Unreadable or malformed input data, or a numerical failure on it.
    Data,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Config(_)
            | Error::UnknownFeature(_)
            | Error::InvalidCutoff(_)
            | Error::InvalidFilter(_)
            | Error::InvalidWavelet(_)
            | Error::InvalidPartition(_)
            | Error::InvalidScenario(_)
            | Error::InvalidSegmentation(_)
            | Error::InvalidSynthesis(_) => ErrorKind::Usage,
            Error::Context { source, .. } => source.kind(),
            _ => ErrorKind::Data,
        }
    }

    /// Prefixes the message with `context`.
    pub fn context(self, context: impl Into<String>) -> Self {
        Error::Context {
            context: context.into(),
            source: Box::new(self),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            msg: msg.into(),
        }
    }
}
