//! Joint time-frequency moment features and feature tables.

use std::fmt;
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use ndarray::Array2;

use crate::dataio::Gesture;
use crate::tfa::{Coefficient, TimeFrequencyMatrix};
use crate::{Error, Result};

/// Which coefficient power forms the distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DistributionKind {
    /// `P = |T| / sum |T|`.
    #[default]
    Magnitude,
    /// `P = |T|^2 / sum |T|^2`.
    Energy,
}

impl FromStr for DistributionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "magnitude" => Ok(Self::Magnitude),
            "energy" => Ok(Self::Energy),
            other => Err(Error::Config(format!(
                "distribution must be magnitude or energy, got '{other}'"
            ))),
        }
    }
}

impl fmt::Display for DistributionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Magnitude => "magnitude",
            Self::Energy => "energy",
        })
    }
}

/// Normalized time-frequency distribution `P[frequency_bin][time]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TfDistribution {
    p: Array2<f64>,
    magnitudes: Array2<f64>,
    freq_axis_hz: Vec<f64>,
    time_axis_s: Vec<f64>,
}

impl TfDistribution {
    pub fn p(&self) -> &Array2<f64> {
        &self.p
    }

    /// `|T|` of the source matrix.
    pub fn magnitudes(&self) -> &Array2<f64> {
        &self.magnitudes
    }

    pub fn freq_axis_hz(&self) -> &[f64] {
        &self.freq_axis_hz
    }

    pub fn time_axis_s(&self) -> &[f64] {
        &self.time_axis_s
    }
}

pub fn normalize_distribution<T: Coefficient>(
    t: &TimeFrequencyMatrix<T>,
    kind: DistributionKind,
) -> Result<TfDistribution> {
    let magnitudes = t.magnitudes();
    let weights = match kind {
        DistributionKind::Magnitude => magnitudes.clone(),
        DistributionKind::Energy => magnitudes.mapv(|m| m * m),
    };
    let total = weights.sum();
    if !(total > 0.0 && total.is_finite()) {
        return Err(Error::DegenerateDistribution);
    }
    Ok(TfDistribution {
        p: weights / total,
        magnitudes,
        freq_axis_hz: t.freq_axis_hz().to_vec(),
        time_axis_s: t.time_axis_s().to_vec(),
    })
}

struct Marginals {
    t_mean: f64,
    w_mean: f64,
    t_std: f64,
    w_std: f64,
}

fn marginals(d: &TfDistribution) -> Marginals {
    let p_t = d.p.sum_axis(ndarray::Axis(0));
    let p_w = d.p.sum_axis(ndarray::Axis(1));
    let mean = |axis: &[f64], p: &ndarray::Array1<f64>| -> f64 {
        axis.iter().zip(p).map(|(x, w)| x * w).sum()
    };
    let t_mean = mean(&d.time_axis_s, &p_t);
    let w_mean = mean(&d.freq_axis_hz, &p_w);
    let var = |axis: &[f64], p: &ndarray::Array1<f64>, m: f64| -> f64 {
        axis.iter().zip(p).map(|(x, w)| (x - m) * (x - m) * w).sum()
    };
    Marginals {
        t_mean,
        w_mean,
        t_std: var(&d.time_axis_s, &p_t, t_mean).sqrt(),
        w_std: var(&d.freq_axis_hz, &p_w, w_mean).sqrt(),
    }
}

fn moment_with(
    d: &TfDistribution,
    n: i32,
    m: i32,
    mg: &Marginals,
    centered: bool,
    standardized: bool,
) -> f64 {
    let (t0, w0) = if centered || standardized {
        (mg.t_mean, mg.w_mean)
    } else {
        (0.0, 0.0)
    };
    let (ts, ws) = if standardized {
        if (n > 0 && mg.t_std == 0.0) || (m > 0 && mg.w_std == 0.0) {
            return 0.0;
        }
        (mg.t_std, mg.w_std)
    } else {
        (1.0, 1.0)
    };
    let tp: Vec<f64> = d
        .time_axis_s
        .iter()
        .map(|t| ((t - t0) / ts).powi(n))
        .collect();
    let wp: Vec<f64> = d
        .freq_axis_hz
        .iter()
        .map(|w| ((w - w0) / ws).powi(m))
        .collect();
    let mut sum = 0.0;
    for (row, wv) in d.p.rows().into_iter().zip(&wp) {
        let inner: f64 = row.iter().zip(&tp).map(|(p, tv)| p * tv).sum();
        sum += inner * wv;
    }
    sum
}

/// `<t^n w^m>` under `P`, with t in seconds and w in Hz. Centering subtracts
/// the marginal means; standardizing also divides by the marginal standard
/// deviations and yields 0 when a needed deviation vanishes.
pub fn joint_moment(d: &TfDistribution, n: u32, m: u32, centered: bool, standardized: bool) -> f64 {
    moment_with(d, n as i32, m as i32, &marginals(d), centered, standardized)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FeatureMode {
    /// Diagonal joint moments of `P`.
    #[default]
    Joint,
    /// Sample statistics of the flattened `|T|` values.
    Elementwise,
}

impl FromStr for FeatureMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "joint" => Ok(Self::Joint),
            "elementwise" => Ok(Self::Elementwise),
            other => Err(Error::Config(format!(
                "feature mode must be joint or elementwise, got '{other}'"
            ))),
        }
    }
}

impl fmt::Display for FeatureMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Joint => "joint",
            Self::Elementwise => "elementwise",
        })
    }
}

/// The four moment features of one matrix.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct MomentFeatures {
    pub mean: f64,
    pub variance: f64,
    pub skewness: f64,
    pub kurtosis: f64,
    /// Set when skewness and kurtosis were forced to 0 by a zero spread.
    pub degenerate: bool,
}

pub fn moment_features(d: &TfDistribution, mode: FeatureMode) -> MomentFeatures {
    match mode {
        FeatureMode::Joint => {
            let mg = marginals(d);
            MomentFeatures {
                mean: moment_with(d, 1, 1, &mg, false, false),
                variance: moment_with(d, 2, 2, &mg, true, false),
                skewness: moment_with(d, 3, 3, &mg, true, true),
                kurtosis: moment_with(d, 4, 4, &mg, true, true),
                degenerate: mg.t_std == 0.0 || mg.w_std == 0.0,
            }
        }
        FeatureMode::Elementwise => elementwise_stats(d.magnitudes.iter().copied()),
    }
}

/// Sample mean, sample variance, and the biased skewness `m3 / m2^1.5` and
/// kurtosis `m4 / m2^2` of a set of values.
pub fn elementwise_stats(values: impl IntoIterator<Item = f64>) -> MomentFeatures {
    let v: Vec<f64> = values.into_iter().collect();
    let n = v.len() as f64;
    if v.is_empty() {
        return MomentFeatures {
            degenerate: true,
            ..Default::default()
        };
    }
    let mean = v.iter().sum::<f64>() / n;
    let (mut m2, mut m3, mut m4) = (0.0, 0.0, 0.0);
    for x in &v {
        let d = x - mean;
        let d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    let variance = if v.len() > 1 { m2 / (n - 1.0) } else { 0.0 };
    let (m2, m3, m4) = (m2 / n, m3 / n, m4 / n);
    if m2 == 0.0 {
        return MomentFeatures {
            mean,
            variance,
            degenerate: true,
            ..Default::default()
        };
    }
    MomentFeatures {
        mean,
        variance,
        skewness: m3 / m2.powf(1.5),
        kurtosis: m4 / (m2 * m2),
        degenerate: false,
    }
}

/// Feature column selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Feature {
    Mean,
    Variance,
    Skewness,
    Kurtosis,
}

impl Feature {
    pub const ALL: [Feature; 4] = [
        Feature::Mean,
        Feature::Variance,
        Feature::Skewness,
        Feature::Kurtosis,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Feature::Mean => "mean",
            Feature::Variance => "variance",
            Feature::Skewness => "skewness",
            Feature::Kurtosis => "kurtosis",
        }
    }
}

impl fmt::Display for Feature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Feature {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Feature::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| Error::UnknownFeature(s.trim().to_string()))
    }
}

/// Features of one window and where it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeatureRecord {
    pub subject: u32,
    pub gesture: Gesture,
    pub repetition: u32,
    pub window: u32,
    pub features: MomentFeatures,
}

impl FeatureRecord {
    pub fn get(&self, feature: Feature) -> f64 {
        let f = &self.features;
        match feature {
            Feature::Mean => f.mean,
            Feature::Variance => f.variance,
            Feature::Skewness => f.skewness,
            Feature::Kurtosis => f.kurtosis,
        }
    }

    fn set(&mut self, feature: Feature, value: f64) {
        let f = &mut self.features;
        match feature {
            Feature::Mean => f.mean = value,
            Feature::Variance => f.variance = value,
            Feature::Skewness => f.skewness = value,
            Feature::Kurtosis => f.kurtosis = value,
        }
    }

    /// Ordering key used for every emitted table.
    pub fn sort_key(&self) -> (u32, usize, u32, u32) {
        (
            self.subject,
            self.gesture.index(),
            self.repetition,
            self.window,
        )
    }
}

/// Standardizes each feature column with its mean and sample standard
/// deviation; constant columns become zeros.
pub fn zscore_columns(table: &[FeatureRecord]) -> Result<Vec<FeatureRecord>> {
    if table.is_empty() {
        return Err(Error::EmptyTable);
    }
    let mut out = table.to_vec();
    let n = table.len() as f64;
    for feature in Feature::ALL {
        let mean = table.iter().map(|r| r.get(feature)).sum::<f64>() / n;
        let ss: f64 = table.iter().map(|r| (r.get(feature) - mean).powi(2)).sum();
        let std = if table.len() > 1 {
            (ss / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        for r in &mut out {
            let z = if std > 0.0 {
                (r.get(feature) - mean) / std
            } else {
                0.0
            };
            r.set(feature, z);
        }
    }
    Ok(out)
}

pub const FEATURE_HEADER: [&str; 8] = [
    "subject",
    "gesture",
    "repetition",
    "window",
    "mean",
    "variance",
    "skewness",
    "kurtosis",
];

/// Writes the feature table with shortest round-trip number formatting.
pub fn write_features_csv<W: Write>(table: &[FeatureRecord], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{}", FEATURE_HEADER.join(","))?;
    for r in table {
        let f = &r.features;
        writeln!(
            out,
            "{},{},{},{},{:?},{:?},{:?},{:?}",
            r.subject,
            r.gesture,
            r.repetition,
            r.window,
            f.mean,
            f.variance,
            f.skewness,
            f.kurtosis
        )?;
    }
    Ok(())
}

/// Reads a table written by [`write_features_csv`]. `path` only labels
/// errors.
pub fn read_features_csv<R: Read>(input: R, path: &Path) -> Result<Vec<FeatureRecord>> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(input);
    let bad = |line: usize, msg: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        msg,
    };
    let header = reader.headers().map_err(|e| bad(1, e.to_string()))?;
    if header.iter().collect::<Vec<_>>() != FEATURE_HEADER {
        return Err(bad(
            1,
            format!("header must be {}", FEATURE_HEADER.join(",")),
        ));
    }
    let mut table = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            bad(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let int = |i: usize| -> Result<u32> {
            record[i]
                .parse()
                .map_err(|_| bad(line, format!("bad {} '{}'", FEATURE_HEADER[i], &record[i])))
        };
        let num = |i: usize| -> Result<f64> {
            let v: f64 = record[i]
                .parse()
                .map_err(|_| bad(line, format!("bad {} '{}'", FEATURE_HEADER[i], &record[i])))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(bad(line, format!("non-finite {}", FEATURE_HEADER[i])))
            }
        };
        table.push(FeatureRecord {
            subject: int(0)?,
            gesture: record[1]
                .parse()
                .map_err(|e: Error| bad(line, e.to_string()))?,
            repetition: int(2)?,
            window: int(3)?,
            features: MomentFeatures {
                mean: num(4)?,
                variance: num(5)?,
                skewness: num(6)?,
                kurtosis: num(7)?,
                degenerate: false,
            },
        });
    }
    Ok(table)
}
