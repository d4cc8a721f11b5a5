use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::dataio::{SegmentationSpec, SyntheticDataset, SyntheticMode, TrialFormat};
use crate::features::{DistributionKind, FeatureMode};
use crate::msst::MsstConfig;
use crate::signal::IirFilterSpec;
use crate::stats::Scenario;
use crate::tfa::{Boundary, WaveletFamily};
use crate::{Error, Result};

/// Whether trials are band-pass and notch filtered before analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prefilter {
    On,
    Off,
    /// Off for recorded trials, on for synthetic ones.
    Auto,
}

/// Where trials come from.
#[derive(Debug, Clone, PartialEq)]
pub enum DataSource {
    Manifest(PathBuf),
    Synthetic(SyntheticMode),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterSettings {
    pub bandpass_order: usize,
    pub bandpass_low_hz: f64,
    pub bandpass_high_hz: f64,
    /// `None` disables the notch.
    pub notch_hz: Option<f64>,
    pub notch_q: f64,
}

impl Default for FilterSettings {
    fn default() -> Self {
        FilterSettings {
            bandpass_order: 6,
            bandpass_low_hz: 5.0,
            bandpass_high_hz: 500.0,
            notch_hz: Some(50.0),
            notch_q: 35.0,
        }
    }
}

impl FilterSettings {
    pub fn bandpass(&self) -> IirFilterSpec {
        IirFilterSpec::butterworth_bandpass(
            self.bandpass_order,
            self.bandpass_low_hz,
            self.bandpass_high_hz,
        )
    }

    pub fn notch(&self) -> Option<IirFilterSpec> {
        self.notch_hz.map(|f| IirFilterSpec::notch(f, self.notch_q))
    }
}

/// Every setting of a pipeline run.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineConfig {
    /// Trial manifest; takes precedence over `synthetic` when both are set.
    pub manifest: Option<PathBuf>,
    pub synthetic: Option<SyntheticMode>,
    pub synthetic_subjects: u32,
    pub synthetic_repetitions: u32,
    pub trial_duration_s: f64,
    pub noise_sigma: f64,
    pub sample_rate_hz: f64,
    pub channel_count: usize,
    /// Required trial length in samples for recorded trials.
    pub trial_length_samples: Option<usize>,
    pub seed: u64,
    pub prefilter: Prefilter,
    pub filters: FilterSettings,
    pub msst: MsstConfig,
    pub feature_mode: FeatureMode,
    pub distribution: DistributionKind,
    pub segmentation: SegmentationSpec,
    pub scenario: Scenario,
    pub significance: f64,
    pub out: Option<PathBuf>,
    /// 0 uses every available core.
    pub workers: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            manifest: None,
            synthetic: None,
            synthetic_subjects: 5,
            synthetic_repetitions: 5,
            trial_duration_s: 6.0,
            noise_sigma: 1.0,
            sample_rate_hz: 2000.0,
            channel_count: 4,
            trial_length_samples: None,
            seed: 0,
            prefilter: Prefilter::Auto,
            filters: FilterSettings::default(),
            msst: MsstConfig::default(),
            feature_mode: FeatureMode::Joint,
            distribution: DistributionKind::Magnitude,
            segmentation: SegmentationSpec::default(),
            scenario: Scenario::InterSubject,
            significance: 0.001,
            out: None,
            workers: 0,
        }
    }
}

/// Keys accepted by [`PipelineConfig::apply`].
pub const CONFIG_KEYS: [&str; 35] = [
    "manifest",
    "synthetic",
    "synthetic_subjects",
    "synthetic_repetitions",
    "trial_duration_s",
    "noise_sigma",
    "sample_rate_hz",
    "channel_count",
    "trial_length_samples",
    "rng",
    "seed",
    "prefilter",
    "bandpass_order",
    "bandpass_low_hz",
    "bandpass_high_hz",
    "notch_hz",
    "notch_q",
    "wavelet",
    "center_frequency_cycles",
    "voices_per_octave",
    "min_freq_hz",
    "max_freq_hz",
    "boundary",
    "sst_bins",
    "band_count",
    "feature_mode",
    "distribution",
    "trim_head_s",
    "trim_tail_s",
    "window_s",
    "step_s",
    "scenario",
    "significance",
    "out",
    "workers",
];

fn num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::Config(format!("{key}: cannot parse '{value}'")))
}

fn opt_off(value: &str) -> bool {
    matches!(value, "off" | "none" | "")
}

fn usage(e: Error) -> Error {
    match e.kind() {
        crate::ErrorKind::Usage => e,
        crate::ErrorKind::Data => Error::Config(e.to_string()),
    }
}

impl PipelineConfig {
    /// Reads a `key = value` file over the defaults. Blank lines and `#`
    /// comments are ignored.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut config = PipelineConfig::default();
        config
            .apply_text(&text)
            .map_err(|(line, e)| e.context(format!("{}:{line}", path.display())))?;
        Ok(config)
    }

    /// Applies `key = value` lines, reporting the 1-based line of the first
    /// failure.
    pub fn apply_text(&mut self, text: &str) -> std::result::Result<(), (usize, Error)> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                (
                    i + 1,
                    Error::Config(format!("expected key = value, got '{line}'")),
                )
            })?;
            self.apply(key.trim(), value.trim())
                .map_err(|e| (i + 1, e))?;
        }
        Ok(())
    }

    /// Sets one key. Used for both config files and command-line overrides.
    pub fn apply(&mut self, key: &str, value: &str) -> Result<()> {
        let w = &mut self.msst.wavelet;
        let seg = &mut self.segmentation;
        let f = &mut self.filters;
        match key {
            "manifest" => self.manifest = (!opt_off(value)).then(|| PathBuf::from(value)),
            "synthetic" => {
                self.synthetic = match value {
                    "null" => Some(SyntheticMode::Null),
                    "gestures" => Some(SyntheticMode::Gestures),
                    v if opt_off(v) => None,
                    v => {
                        return Err(Error::Config(format!(
                            "synthetic: expected null|gestures|off, got '{v}'"
                        )))
                    }
                }
            }
            "synthetic_subjects" => self.synthetic_subjects = num(key, value)?,
            "synthetic_repetitions" => self.synthetic_repetitions = num(key, value)?,
            "trial_duration_s" => self.trial_duration_s = num(key, value)?,
            "noise_sigma" => self.noise_sigma = num(key, value)?,
            "sample_rate_hz" => self.sample_rate_hz = num(key, value)?,
            "channel_count" => self.channel_count = num(key, value)?,
            "trial_length_samples" => {
                self.trial_length_samples = if opt_off(value) {
                    None
                } else {
                    Some(num(key, value)?)
                }
            }
            "rng" => {
                if !value.eq_ignore_ascii_case("chacha8") {
                    return Err(Error::Config(format!(
                        "rng: only chacha8 is supported, got '{value}'"
                    )));
                }
            }
            "seed" => self.seed = num(key, value)?,
            "prefilter" => {
                self.prefilter = match value {
                    "on" => Prefilter::On,
                    "off" => Prefilter::Off,
                    "auto" => Prefilter::Auto,
                    v => {
                        return Err(Error::Config(format!(
                            "prefilter: expected on|off|auto, got '{v}'"
                        )))
                    }
                }
            }
            "bandpass_order" => f.bandpass_order = num(key, value)?,
            "bandpass_low_hz" => f.bandpass_low_hz = num(key, value)?,
            "bandpass_high_hz" => f.bandpass_high_hz = num(key, value)?,
            "notch_hz" => {
                f.notch_hz = if opt_off(value) {
                    None
                } else {
                    Some(num(key, value)?)
                }
            }
            "notch_q" => f.notch_q = num(key, value)?,
            "wavelet" => {
                if !value.eq_ignore_ascii_case("morlet") {
                    return Err(Error::Config(format!(
                        "wavelet: only morlet is supported, got '{value}'"
                    )));
                }
                w.family = WaveletFamily::Morlet;
            }
            "center_frequency_cycles" => w.center_frequency_cycles = num(key, value)?,
            "voices_per_octave" => w.voices_per_octave = num(key, value)?,
            "min_freq_hz" => w.min_freq_hz = num(key, value)?,
            "max_freq_hz" => w.max_freq_hz = num(key, value)?,
            "boundary" => {
                w.boundary = match value {
                    "predictive" => Boundary::Predictive,
                    "reflect" => Boundary::Reflect,
                    v => {
                        return Err(Error::Config(format!(
                            "boundary: expected predictive|reflect, got '{v}'"
                        )))
                    }
                }
            }
            "sst_bins" => self.msst.sst_bins = num(key, value)?,
            "band_count" => self.msst.band_count = num(key, value)?,
            "feature_mode" => self.feature_mode = value.parse().map_err(usage)?,
            "distribution" => self.distribution = value.parse().map_err(usage)?,
            "trim_head_s" => seg.trim_head_s = num(key, value)?,
            "trim_tail_s" => seg.trim_tail_s = num(key, value)?,
            "window_s" => seg.window_s = num(key, value)?,
            "step_s" => seg.step_s = num(key, value)?,
            "scenario" => self.scenario = value.parse()?,
            "significance" => self.significance = num(key, value)?,
            "out" => self.out = (!opt_off(value)).then(|| PathBuf::from(value)),
            "workers" => self.workers = num(key, value)?,
            _ => {
                return Err(Error::Config(format!(
                    "unknown key '{key}' (valid keys: {})",
                    CONFIG_KEYS.join(", ")
                )))
            }
        }
        Ok(())
    }

    pub fn source(&self) -> Result<DataSource> {
        match (&self.manifest, self.synthetic) {
            (Some(m), _) => Ok(DataSource::Manifest(m.clone())),
            (None, Some(mode)) => Ok(DataSource::Synthetic(mode)),
            (None, None) => Err(Error::Config("set either manifest or synthetic".into())),
        }
    }

    /// Whether the filters run for this configuration's data source.
    pub fn prefilter_active(&self) -> bool {
        match self.prefilter {
            Prefilter::On => true,
            Prefilter::Off => false,
            Prefilter::Auto => self.manifest.is_none(),
        }
    }

    pub fn synthetic_dataset(&self, mode: SyntheticMode) -> SyntheticDataset {
        SyntheticDataset {
            subjects: self.synthetic_subjects,
            repetitions: self.synthetic_repetitions,
            trial_duration_s: self.trial_duration_s,
            sample_rate_hz: self.sample_rate_hz,
            channel_count: self.channel_count,
            noise_sigma: self.noise_sigma,
            mode,
            seed: self.seed,
        }
    }

    pub fn trial_format(&self) -> TrialFormat {
        TrialFormat {
            sample_rate_hz: self.sample_rate_hz,
            channel_count: self.channel_count,
            expected_len: self.trial_length_samples,
        }
    }

    /// Checks every setting that can be checked without data.
    pub fn validate(&self) -> Result<()> {
        let cfg = |msg: String| Err(Error::Config(msg));
        self.source()?;
        if !(self.sample_rate_hz > 0.0 && self.sample_rate_hz.is_finite()) {
            return cfg(format!(
                "sample_rate_hz must be positive, got {}",
                self.sample_rate_hz
            ));
        }
        if self.channel_count == 0 {
            return cfg("channel_count must be positive".into());
        }
        if self.manifest.is_none() {
            if self.synthetic_subjects == 0 || self.synthetic_repetitions == 0 {
                return cfg("synthetic_subjects and synthetic_repetitions must be positive".into());
            }
            if !(self.noise_sigma >= 0.0 && self.noise_sigma.is_finite()) {
                return cfg(format!(
                    "noise_sigma must be non-negative, got {}",
                    self.noise_sigma
                ));
            }
            if !(self.trial_duration_s > 0.0 && self.trial_duration_s.is_finite()) {
                return cfg(format!(
                    "trial_duration_s must be positive, got {}",
                    self.trial_duration_s
                ));
            }
        }
        if !(self.significance > 0.0 && self.significance < 1.0) {
            return cfg(format!(
                "significance must lie in (0, 1), got {}",
                self.significance
            ));
        }
        self.msst.wavelet.validate(self.sample_rate_hz)?;
        self.msst.partition()?;
        self.segmentation.validate()?;
        if self.prefilter_active() {
            crate::signal::design_filter(&self.filters.bandpass(), self.sample_rate_hz)?;
            if let Some(notch) = self.filters.notch() {
                crate::signal::design_filter(&notch, self.sample_rate_hz)?;
            }
        }
        Ok(())
    }

    /// Every analysis setting as `key = value` lines, in [`CONFIG_KEYS`]
    /// order. The output directory and worker count are left out because
    /// they do not affect results.
    pub fn describe(&self) -> String {
        let w = &self.msst.wavelet;
        let s = &self.segmentation;
        let f = &self.filters;
        let opt = |v: Option<String>| v.unwrap_or_else(|| "off".into());
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(out, "{k} = {v}");
        };
        kv(
            "manifest",
            opt(self.manifest.as_ref().map(|p| p.display().to_string())),
        );
        kv(
            "synthetic",
            opt(self.synthetic.map(|m| match m {
                SyntheticMode::Null => "null".to_string(),
                SyntheticMode::Gestures => "gestures".to_string(),
            })),
        );
        kv("synthetic_subjects", self.synthetic_subjects.to_string());
        kv(
            "synthetic_repetitions",
            self.synthetic_repetitions.to_string(),
        );
        kv("trial_duration_s", format!("{:?}", self.trial_duration_s));
        kv("noise_sigma", format!("{:?}", self.noise_sigma));
        kv("sample_rate_hz", format!("{:?}", self.sample_rate_hz));
        kv("channel_count", self.channel_count.to_string());
        kv(
            "trial_length_samples",
            opt(self.trial_length_samples.map(|n| n.to_string())),
        );
        kv("rng", "chacha8".into());
        kv("seed", self.seed.to_string());
        kv(
            "prefilter",
            format!(
                "{} ({})",
                self.prefilter,
                if self.prefilter_active() {
                    "active"
                } else {
                    "inactive"
                }
            ),
        );
        kv("bandpass_order", f.bandpass_order.to_string());
        kv("bandpass_low_hz", format!("{:?}", f.bandpass_low_hz));
        kv("bandpass_high_hz", format!("{:?}", f.bandpass_high_hz));
        kv("notch_hz", opt(f.notch_hz.map(|v| format!("{v:?}"))));
        kv("notch_q", format!("{:?}", f.notch_q));
        kv("wavelet", "morlet".into());
        kv(
            "center_frequency_cycles",
            format!("{:?}", w.center_frequency_cycles),
        );
        kv("voices_per_octave", w.voices_per_octave.to_string());
        kv("min_freq_hz", format!("{:?}", w.min_freq_hz));
        kv("max_freq_hz", format!("{:?}", w.max_freq_hz));
        kv(
            "boundary",
            match w.boundary {
                Boundary::Predictive => "predictive".into(),
                Boundary::Reflect => "reflect".into(),
            },
        );
        kv("sst_bins", self.msst.sst_bins.to_string());
        kv("band_count", self.msst.band_count.to_string());
        kv("feature_mode", self.feature_mode.to_string());
        kv("distribution", self.distribution.to_string());
        kv("trim_head_s", format!("{:?}", s.trim_head_s));
        kv("trim_tail_s", format!("{:?}", s.trim_tail_s));
        kv("window_s", format!("{:?}", s.window_s));
        kv("step_s", format!("{:?}", s.step_s));
        kv("scenario", self.scenario.to_string());
        kv("significance", format!("{:?}", self.significance));
        out
    }
}

impl fmt::Display for Prefilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Prefilter::On => "on",
            Prefilter::Off => "off",
            Prefilter::Auto => "auto",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = PipelineConfig::default();
        assert_eq!(c.segmentation, SegmentationSpec::default());
        assert_eq!(c.filters.bandpass_order, 6);
        assert_eq!(c.filters.notch_hz, Some(50.0));
        assert_eq!(c.significance, 0.001);
        assert_eq!(c.msst.sst_bins, 256);
        assert_eq!(c.msst.band_count, 32);
        assert!(matches!(c.source(), Err(Error::Config(_))));
    }

    #[test]
    fn parses_file_text() {
        let mut c = PipelineConfig::default();
        c.apply_text(
            "# comment\n\nsynthetic = gestures\nseed = 7 # trailing\nscenario = intra:2\nfeature_mode = elementwise\nnotch_hz = off\nboundary = reflect\n",
        )
        .unwrap();
        assert_eq!(c.synthetic, Some(SyntheticMode::Gestures));
        assert_eq!(c.seed, 7);
        assert_eq!(c.scenario, Scenario::IntraSubject(2));
        assert_eq!(c.feature_mode, FeatureMode::Elementwise);
        assert_eq!(c.filters.notch_hz, None);
        assert_eq!(c.msst.wavelet.boundary, Boundary::Reflect);
        assert!(c.prefilter_active());
        c.validate().unwrap();
    }

    #[test]
    fn errors_carry_line_numbers() {
        let mut c = PipelineConfig::default();
        let (line, e) = c.apply_text("seed = 1\n\nbogus = 3\n").unwrap_err();
        assert_eq!(line, 3);
        assert!(e.to_string().contains("bogus"));
        let (line, _) = c.apply_text("seed = x").unwrap_err();
        assert_eq!(line, 1);
        assert!(c.apply_text("no equals sign").is_err());
        assert!(c.apply("rng", "mt19937").is_err());
        assert!(c.apply("feature_mode", "diagonal").is_err());
        for key in CONFIG_KEYS {
            let e = c.apply(key, "%%");
            if let Err(e) = e {
                assert_eq!(e.kind(), crate::ErrorKind::Usage, "{key}");
            }
        }
    }

    #[test]
    fn load_reports_path_and_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.conf");
        std::fs::write(&path, "synthetic = null\nwindow_s = 0.5\n").unwrap();
        let c = PipelineConfig::load(&path).unwrap();
        assert_eq!(c.segmentation.window_s, 0.5);
        std::fs::write(&path, "synthetic = null\nwindow = 0.5\n").unwrap();
        let e = PipelineConfig::load(&path).unwrap_err();
        assert_eq!(e.kind(), crate::ErrorKind::Usage);
        assert!(
            e.to_string()
                .contains("run.conf:2: invalid config: unknown key 'window'"),
            "{e}"
        );
        assert!(PipelineConfig::load(&dir.path().join("absent.conf")).is_err());
    }

    #[test]
    fn validation() {
        let base = PipelineConfig {
            synthetic: Some(SyntheticMode::Null),
            ..Default::default()
        };
        base.validate().unwrap();
        let bad = |edit: &dyn Fn(&mut PipelineConfig)| {
            let mut c = base.clone();
            edit(&mut c);
            c.validate().unwrap_err()
        };
        bad(&|c| c.significance = 1.0);
        bad(&|c| c.msst.band_count = 300);
        bad(&|c| c.segmentation.step_s = 0.0);
        bad(&|c| c.msst.wavelet.max_freq_hz = 1500.0);
        bad(&|c| c.filters.bandpass_order = 5);
        bad(&|c| c.synthetic_subjects = 0);
    }

    #[test]
    fn prefilter_auto_follows_source() {
        let mut c = PipelineConfig {
            synthetic: Some(SyntheticMode::Null),
            ..Default::default()
        };
        assert!(c.prefilter_active());
        c.manifest = Some("m.csv".into());
        assert!(!c.prefilter_active());
        c.prefilter = Prefilter::On;
        assert!(c.prefilter_active());
    }

    #[test]
    fn describe_lists_every_analysis_key() {
        let text = PipelineConfig::default().describe();
        let keys: Vec<&str> = text
            .lines()
            .map(|l| l.split(" = ").next().unwrap())
            .collect();
        let expected: Vec<&str> = CONFIG_KEYS
            .iter()
            .copied()
            .filter(|k| !matches!(*k, "out" | "workers"))
            .collect();
        assert_eq!(keys, expected);
    }
}
