//! Trial manifests, CSV trials, windowing and synthetic signals.

mod segment;
mod synth;

pub use segment::{trim_and_segment, window_count, SegmentationSpec};
pub use synth::{synth_multichannel, Component, SyntheticDataset, SyntheticMode};

use std::collections::HashSet;
use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use ndarray::Array2;

use crate::signal::MultichannelSignal;
use crate::{Error, Result};

/// The ten recorded gestures, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gesture {
    X,
    E,
    F,
    U,
    R,
    G,
    B,
    D,
    S,
    P,
}

impl Gesture {
    pub const ALL: [Gesture; 10] = [
        Gesture::X,
        Gesture::E,
        Gesture::F,
        Gesture::U,
        Gesture::R,
        Gesture::G,
        Gesture::B,
        Gesture::D,
        Gesture::S,
        Gesture::P,
    ];

    /// Position in [`Gesture::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn label(self) -> &'static str {
        match self {
            Gesture::X => "X",
            Gesture::E => "E",
            Gesture::F => "F",
            Gesture::U => "U",
            Gesture::R => "R",
            Gesture::G => "G",
            Gesture::B => "B",
            Gesture::D => "D",
            Gesture::S => "S",
            Gesture::P => "P",
        }
    }
}

impl fmt::Display for Gesture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Gesture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Gesture::ALL
            .into_iter()
            .find(|g| g.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownGesture(s.to_string()))
    }
}

/// One manifest row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub subject: u32,
    pub gesture: Gesture,
    pub repetition: u32,
    pub path: PathBuf,
}

/// Trial recordings to process, with their shared acquisition geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialManifest {
    pub entries: Vec<ManifestEntry>,
    pub sample_rate_hz: f64,
    pub channel_count: usize,
}

const MANIFEST_HEADER: [&str; 4] = ["subject", "gesture", "repetition", "path"];

impl TrialManifest {
    pub fn new(
        entries: Vec<ManifestEntry>,
        sample_rate_hz: f64,
        channel_count: usize,
    ) -> Result<Self> {
        if !(sample_rate_hz > 0.0 && sample_rate_hz.is_finite()) {
            return Err(Error::Config(format!(
                "sample rate must be positive, got {sample_rate_hz}"
            )));
        }
        if channel_count == 0 {
            return Err(Error::Config("channel count must be positive".into()));
        }
        let mut paths = HashSet::new();
        let mut keys = HashSet::new();
        for e in &entries {
            if e.subject == 0 || e.repetition == 0 {
                return Err(Error::Config(format!(
                    "subject and repetition are 1-based ({})",
                    e.path.display()
                )));
            }
            if !paths.insert(&e.path) {
                return Err(Error::Config(format!(
                    "duplicate trial path {}",
                    e.path.display()
                )));
            }
            if !keys.insert((e.subject, e.gesture, e.repetition)) {
                return Err(Error::Config(format!(
                    "duplicate trial subject {} gesture {} repetition {}",
                    e.subject, e.gesture, e.repetition
                )));
            }
        }
        Ok(TrialManifest {
            entries,
            sample_rate_hz,
            channel_count,
        })
    }

    /// Reads a `subject,gesture,repetition,path` CSV. Relative trial paths
    /// are resolved against the manifest's directory.
    pub fn load(path: &Path, sample_rate_hz: f64, channel_count: usize) -> Result<Self> {
        let base = path.parent().unwrap_or(Path::new("")).to_path_buf();
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_path(path)
            .map_err(|e| csv_error(path, e))?;
        let header = reader.headers().map_err(|e| csv_error(path, e))?.clone();
        if header.iter().collect::<Vec<_>>() != MANIFEST_HEADER {
            return Err(Error::parse(
                path,
                1,
                "header must be subject,gesture,repetition,path",
            ));
        }
        let mut entries = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| csv_error(path, e))?;
            let line = record.position().map_or(0, |p| p.line() as usize);
            let int = |i: usize, what: &str| -> Result<u32> {
                record[i]
                    .parse::<u32>()
                    .map_err(|_| Error::parse(path, line, format!("bad {what} '{}'", &record[i])))
            };
            let gesture = record[1]
                .parse::<Gesture>()
                .map_err(|e| Error::parse(path, line, e.to_string()))?;
            let trial = PathBuf::from(&record[3]);
            entries.push(ManifestEntry {
                subject: int(0, "subject")?,
                gesture,
                repetition: int(2, "repetition")?,
                path: if trial.is_absolute() {
                    trial
                } else {
                    base.join(trial)
                },
            });
        }
        Self::new(entries, sample_rate_hz, channel_count)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path).map_err(|e| csv_error(path, e))?;
        w.write_record(MANIFEST_HEADER)
            .map_err(|e| csv_error(path, e))?;
        for e in &self.entries {
            w.write_record([
                e.subject.to_string(),
                e.gesture.to_string(),
                e.repetition.to_string(),
                e.path.display().to_string(),
            ])
            .map_err(|err| csv_error(path, err))?;
        }
        w.flush().map_err(|e| Error::io(path, e))
    }
}

fn csv_error(path: &Path, e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line() as usize);
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io(path, io),
        other => Error::parse(path, line, format!("{other:?}")),
    }
}

/// How to read a trial file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialFormat {
    pub sample_rate_hz: f64,
    pub channel_count: usize,
    /// When set, the trial must have exactly this many samples.
    pub expected_len: Option<usize>,
}

/// Reads a trial CSV: one row per sample, one column per channel, with an
/// optional header row.
pub fn load_trial(path: &Path, format: &TrialFormat) -> Result<MultichannelSignal> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| csv_error(path, e))?;
    let c = format.channel_count;
    let mut data: Vec<f64> = Vec::new();
    let mut rows = 0usize;
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| csv_error(path, e))?;
        let line = record.position().map_or(i + 1, |p| p.line() as usize);
        if i == 0 && record.iter().any(|f| f.parse::<f64>().is_err()) {
            continue;
        }
        if record.len() != c {
            return Err(Error::parse(
                path,
                line,
                format!("expected {c} columns, found {}", record.len()),
            ));
        }
        for field in record.iter() {
            let v: f64 = field
                .parse()
                .map_err(|_| Error::parse(path, line, format!("not a number: '{field}'")))?;
            if !v.is_finite() {
                return Err(Error::parse(
                    path,
                    line,
                    format!("non-finite sample '{field}'"),
                ));
            }
            data.push(v);
        }
        rows += 1;
    }
    if rows == 0 {
        return Err(Error::EmptyTrial);
    }
    if let Some(expected) = format.expected_len {
        if rows != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: rows,
            });
        }
    }
    let samples = Array2::from_shape_vec((rows, c), data)
        .expect("row lengths checked")
        .reversed_axes()
        .as_standard_layout()
        .into_owned();
    MultichannelSignal::new(samples, format.sample_rate_hz)
}

/// Writes a trial CSV that [`load_trial`] reads back bit for bit.
pub fn save_trial(path: &Path, signal: &MultichannelSignal) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    let s = signal.samples();
    let write = |w: &mut BufWriter<File>| -> std::io::Result<()> {
        for t in 0..signal.len() {
            for ch in 0..signal.channel_count() {
                if ch > 0 {
                    w.write_all(b",")?;
                }
                write!(w, "{:?}", s[[ch, t]])?;
            }
            w.write_all(b"\n")?;
        }
        w.flush()
    };
    write(&mut w).map_err(|e| Error::io(path, e))
}
