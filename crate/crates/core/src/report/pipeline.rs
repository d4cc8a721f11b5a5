use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::boxplot::{render_svg, summarize, PlotAnnotations};
use super::config::{DataSource, PipelineConfig};
use crate::dataio::{
    load_trial, save_trial, trim_and_segment, Gesture, ManifestEntry, TrialManifest,
};
use crate::features::{
    moment_features, normalize_distribution, write_features_csv, zscore_columns, Feature,
    FeatureRecord,
};
use crate::msst::msst;
use crate::signal::{apply_filter_zero_phase, design_filter, MultichannelSignal, SosFilter};
use crate::stats::{pairwise_kw, scenario_runner, PairwiseMatrix, ScenarioReport};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum TrialSource {
    File(PathBuf),
    Synthetic,
}

#[derive(Debug, Clone, PartialEq)]
struct TrialJob {
    subject: u32,
    gesture: Gesture,
    repetition: u32,
    source: TrialSource,
}

impl TrialJob {
    fn label(&self) -> String {
        format!(
            "subject {} gesture {} repetition {}",
            self.subject, self.gesture, self.repetition
        )
    }
}

/// Feature table of a run plus bookkeeping for the log.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureRun {
    /// Sorted by [`FeatureRecord::sort_key`].
    pub table: Vec<FeatureRecord>,
    pub trials: usize,
    pub min_windows_per_trial: usize,
    pub max_windows_per_trial: usize,
    /// Windows whose higher moments were zeroed by a zero spread.
    pub degenerate_windows: usize,
}

fn jobs(config: &PipelineConfig) -> Result<Vec<TrialJob>> {
    match config.source()? {
        DataSource::Manifest(path) => {
            let manifest = TrialManifest::load(&path, config.sample_rate_hz, config.channel_count)?;
            if manifest.entries.is_empty() {
                return Err(Error::EmptyTable);
            }
            Ok(manifest
                .entries
                .into_iter()
                .map(|e| TrialJob {
                    subject: e.subject,
                    gesture: e.gesture,
                    repetition: e.repetition,
                    source: TrialSource::File(e.path),
                })
                .collect())
        }
        DataSource::Synthetic(_) => {
            let mut out = Vec::new();
            for subject in 1..=config.synthetic_subjects {
                for gesture in Gesture::ALL {
                    for repetition in 1..=config.synthetic_repetitions {
                        out.push(TrialJob {
                            subject,
                            gesture,
                            repetition,
                            source: TrialSource::Synthetic,
                        });
                    }
                }
            }
            Ok(out)
        }
    }
}

struct Filters {
    bandpass: SosFilter,
    notch: Option<SosFilter>,
}

fn filters(config: &PipelineConfig) -> Result<Option<Filters>> {
    if !config.prefilter_active() {
        return Ok(None);
    }
    let fs = config.sample_rate_hz;
    Ok(Some(Filters {
        bandpass: design_filter(&config.filters.bandpass(), fs)?,
        notch: config
            .filters
            .notch()
            .map(|spec| design_filter(&spec, fs))
            .transpose()?,
    }))
}

fn load(job: &TrialJob, config: &PipelineConfig) -> Result<MultichannelSignal> {
    match (&job.source, config.source()?) {
        (TrialSource::File(path), _) => load_trial(path, &config.trial_format()),
        (TrialSource::Synthetic, DataSource::Synthetic(mode)) => config
            .synthetic_dataset(mode)
            .trial(job.subject, job.gesture, job.repetition),
        (TrialSource::Synthetic, DataSource::Manifest(_)) => {
            unreachable!("synthetic job from a manifest")
        }
    }
}

fn process(
    job: &TrialJob,
    config: &PipelineConfig,
    filters: Option<&Filters>,
) -> Result<Vec<FeatureRecord>> {
    let mut signal = load(job, config)?;
    if let Some(f) = filters {
        signal = apply_filter_zero_phase(&signal, &f.bandpass)?;
        if let Some(notch) = &f.notch {
            signal = apply_filter_zero_phase(&signal, notch)?;
        }
    }
    let windows = trim_and_segment(&signal, &config.segmentation)?;
    windows
        .iter()
        .enumerate()
        .map(|(k, w)| {
            let m = msst(w, &config.msst).map_err(|e| e.context(format!("window {k}")))?;
            let d = normalize_distribution(&m, config.distribution)
                .map_err(|e| e.context(format!("window {k}")))?;
            Ok(FeatureRecord {
                subject: job.subject,
                gesture: job.gesture,
                repetition: job.repetition,
                window: k as u32,
                features: moment_features(&d, config.feature_mode),
            })
        })
        .collect()
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Config(format!("cannot start {workers} workers: {e}")))
}

/// Loads, filters, segments and transforms every trial, in parallel over
/// `config.workers` threads.
pub fn extract_features(config: &PipelineConfig) -> Result<FeatureRun> {
    config.validate()?;
    let jobs = jobs(config)?;
    let filters = filters(config)?;
    let per_trial: Vec<Vec<FeatureRecord>> = pool(config.workers)?.install(|| {
        jobs.par_iter()
            .map(|job| process(job, config, filters.as_ref()).map_err(|e| e.context(job.label())))
            .collect::<Result<_>>()
    })?;
    let counts = per_trial.iter().map(Vec::len);
    let min_windows_per_trial = counts.clone().min().unwrap_or(0);
    let max_windows_per_trial = counts.max().unwrap_or(0);
    let mut table: Vec<FeatureRecord> = per_trial.into_iter().flatten().collect();
    table.sort_by_key(FeatureRecord::sort_key);
    Ok(FeatureRun {
        degenerate_windows: table.iter().filter(|r| r.features.degenerate).count(),
        trials: jobs.len(),
        min_windows_per_trial,
        max_windows_per_trial,
        table,
    })
}

/// A file to be written into the output directory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputFile {
    pub name: String,
    pub contents: Vec<u8>,
}

impl OutputFile {
    fn new(name: impl Into<String>, contents: impl Into<Vec<u8>>) -> Self {
        OutputFile {
            name: name.into(),
            contents: contents.into(),
        }
    }
}

/// Writes `files` into `dir`, creating it if needed. On failure every file
/// written so far is removed, as is `dir` if this call created it.
pub fn write_outputs(dir: &Path, files: &[OutputFile]) -> Result<()> {
    let created_dir = !dir.exists();
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();
    for f in files {
        let path = dir.join(&f.name);
        if let Err(e) = fs::write(&path, &f.contents) {
            for p in written.iter().chain([&path]) {
                let _ = fs::remove_file(p);
            }
            if created_dir {
                let _ = fs::remove_dir(dir);
            }
            return Err(Error::io(&path, e));
        }
        written.push(path);
    }
    Ok(())
}

fn features_file(name: &str, table: &[FeatureRecord]) -> OutputFile {
    let mut buf = Vec::new();
    write_features_csv(table, &mut buf).expect("writing to memory");
    OutputFile::new(name, buf)
}

/// p-value matrix as CSV with 17 significant digits.
pub fn pairwise_csv(m: &PairwiseMatrix) -> String {
    let mut s = String::from("gesture");
    for g in &m.gestures {
        let _ = write!(s, ",{g}");
    }
    s.push('\n');
    for (i, g) in m.gestures.iter().enumerate() {
        let _ = write!(s, "{g}");
        for j in 0..m.gestures.len() {
            let _ = write!(s, ",{:.16e}", m.p_values[[i, j]]);
        }
        s.push('\n');
    }
    s
}

/// One `test` line per block and feature, then per-feature mean p when the
/// scenario has several blocks.
pub fn kw_summary(report: &ScenarioReport, significance: f64) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "scenario = {}", report.scenario);
    let _ = writeln!(s, "significance = {significance:?}");
    let _ = writeln!(s, "blocks = {}", report.blocks.len());
    let _ = writeln!(s, "dropped_subjects = {}", list(&report.dropped_subjects));
    for (fi, feature) in Feature::ALL.into_iter().enumerate() {
        for (bi, block) in report.blocks.iter().enumerate() {
            let r = &block.results[fi];
            let _ = writeln!(
                s,
                "test feature={feature} block={} subjects={} n={} H={:.16e} df={} tie_correction={:.16e} p={:.16e} significant={}",
                bi + 1,
                list(&block.subjects),
                r.group_sizes.iter().sum::<usize>(),
                r.h,
                r.df,
                r.tie_correction,
                r.p_value,
                r.p_value < significance
            );
        }
        if report.blocks.len() > 1 {
            let _ = writeln!(
                s,
                "mean_p feature={feature} value={:.16e}",
                report.mean_p[fi]
            );
        }
    }
    s
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    if items.is_empty() {
        return "none".into();
    }
    items
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Gesture tests of a feature table.
#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    /// The z-scored table the tests ran on.
    pub zscored: Vec<FeatureRecord>,
    pub scenario: ScenarioReport,
    /// Indexed like [`Feature::ALL`].
    pub pairwise: Vec<PairwiseMatrix>,
}

impl Analysis {
    pub fn overall_tests(&self) -> usize {
        self.scenario.blocks.len() * Feature::ALL.len()
    }

    pub fn pairwise_tests(&self) -> usize {
        self.pairwise.iter().map(|m| m.tests.len()).sum()
    }

    fn annotations(&self, fi: usize) -> PlotAnnotations {
        let extremes = self.pairwise[fi].extremes();
        PlotAnnotations {
            overall_p: self.scenario.mean_p[fi],
            min_pair: extremes.map(|e| e.0),
            max_pair: extremes.map(|e| e.1),
        }
    }
}

/// Z-scores the table, then runs the scenario tests and the pairwise tests
/// over the whole table for every feature.
pub fn analyze(table: &[FeatureRecord], scenario: crate::stats::Scenario) -> Result<Analysis> {
    let zscored = zscore_columns(table)?;
    let scenario = scenario_runner(&zscored, scenario)?;
    let pairwise = Feature::ALL
        .into_iter()
        .map(|f| pairwise_kw(&zscored, f))
        .collect::<Result<_>>()?;
    Ok(Analysis {
        zscored,
        scenario,
        pairwise,
    })
}

/// Summary and pairwise outputs of an analysis.
pub fn test_outputs(analysis: &Analysis, significance: f64) -> Vec<OutputFile> {
    let mut files = vec![OutputFile::new(
        "kw_summary.txt",
        kw_summary(&analysis.scenario, significance),
    )];
    for (f, m) in Feature::ALL.into_iter().zip(&analysis.pairwise) {
        files.push(OutputFile::new(
            format!("pairwise_{f}.csv"),
            pairwise_csv(m),
        ));
    }
    files
}

/// Box plot of one feature with its overall and extreme pairwise p-values.
pub fn boxplot_svg(analysis: &Analysis, feature: Feature) -> Result<String> {
    let fi = feature as usize;
    let boxes = summarize(&analysis.zscored, feature)?;
    Ok(render_svg(feature, &boxes, &analysis.annotations(fi)))
}

/// Outcome of [`run_pipeline`].
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineRun {
    pub features: FeatureRun,
    pub analysis: Analysis,
    pub files: Vec<OutputFile>,
}

fn run_log(
    config: &PipelineConfig,
    run: &FeatureRun,
    analysis: &Analysis,
    files: &[OutputFile],
) -> String {
    let mut s = String::from("[config]\n");
    s.push_str(&config.describe());
    let _ = writeln!(s, "\n[data]");
    let _ = writeln!(s, "trials = {}", run.trials);
    let _ = writeln!(
        s,
        "windows_per_trial = {}..{}",
        run.min_windows_per_trial, run.max_windows_per_trial
    );
    let _ = writeln!(s, "feature_rows = {}", run.table.len());
    let _ = writeln!(s, "degenerate_windows = {}", run.degenerate_windows);
    let mut subjects: Vec<u32> = run.table.iter().map(|r| r.subject).collect();
    subjects.sort_unstable();
    subjects.dedup();
    let _ = writeln!(s, "subjects = {}", subjects.len());
    let pw = &analysis.pairwise[0];
    let _ = writeln!(s, "gestures_present = {}", list(&pw.gestures));
    let _ = writeln!(s, "gestures_missing = {}", list(&pw.missing));
    for g in &pw.missing {
        let _ = writeln!(
            s,
            "warning: gesture {g} has no rows and is excluded from pairwise tests"
        );
    }
    for d in &analysis.scenario.dropped_subjects {
        let _ = writeln!(
            s,
            "warning: subject {d} does not fill a block and is excluded from scenario tests"
        );
    }
    let _ = writeln!(s, "\n[tests]");
    let _ = writeln!(s, "normalization = zscore");
    let _ = writeln!(s, "overall_tests = {}", analysis.overall_tests());
    let _ = writeln!(s, "pairwise_tests = {}", analysis.pairwise_tests());
    for (f, m) in Feature::ALL.into_iter().zip(&analysis.pairwise) {
        let _ = writeln!(s, "pairwise_tests_{f} = {}", m.tests.len());
    }
    let _ = writeln!(s, "\n[outputs]");
    for f in files {
        let _ = writeln!(s, "{} ({} bytes)", f.name, f.contents.len());
    }
    s
}

/// Full run: features, tests, figures and log. Everything is computed before
/// the first file is written.
pub fn run_pipeline(config: &PipelineConfig) -> Result<PipelineRun> {
    let out = config
        .out
        .clone()
        .ok_or_else(|| Error::Config("no output directory set".into()))?;
    let features = extract_features(config)?;
    let analysis = pool(config.workers)?.install(|| analyze(&features.table, config.scenario))?;
    let mut files = vec![
        features_file("features.csv", &features.table),
        features_file("features_zscored.csv", &analysis.zscored),
    ];
    files.extend(test_outputs(&analysis, config.significance));
    for f in Feature::ALL {
        files.push(OutputFile::new(
            format!("boxplot_{f}.svg"),
            boxplot_svg(&analysis, f)?,
        ));
    }
    let log = run_log(config, &features, &analysis, &files);
    files.push(OutputFile::new("run.log", log));
    write_outputs(&out, &files)?;
    Ok(PipelineRun {
        features,
        analysis,
        files,
    })
}

/// Writes a synthetic cohort as trial CSVs plus `manifest.csv` under `dir`.
pub fn export_synthetic(config: &PipelineConfig, dir: &Path) -> Result<TrialManifest> {
    let mode = match config.source()? {
        DataSource::Synthetic(mode) => mode,
        DataSource::Manifest(_) => {
            return Err(Error::Config("export needs a synthetic source".into()))
        }
    };
    config.validate()?;
    let data = config.synthetic_dataset(mode);
    let created_dir = !dir.exists();
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut entries = Vec::new();
    let result = (|| {
        for job in jobs(config)? {
            let name = format!(
                "s{:02}_{}_r{}.csv",
                job.subject, job.gesture, job.repetition
            );
            let signal = data.trial(job.subject, job.gesture, job.repetition)?;
            let path = dir.join(&name);
            entries.push(ManifestEntry {
                subject: job.subject,
                gesture: job.gesture,
                repetition: job.repetition,
                path: path.clone(),
            });
            save_trial(&path, &signal)?;
        }
        let manifest =
            TrialManifest::new(entries.clone(), config.sample_rate_hz, config.channel_count)?;
        let relative = TrialManifest {
            entries: entries
                .iter()
                .map(|e| ManifestEntry {
                    path: PathBuf::from(e.path.file_name().expect("trial file name")),
                    ..e.clone()
                })
                .collect(),
            ..manifest.clone()
        };
        relative.save(&dir.join("manifest.csv"))?;
        Ok(manifest)
    })();
    if result.is_err() {
        for e in &entries {
            let _ = fs::remove_file(&e.path);
        }
        let _ = fs::remove_file(dir.join("manifest.csv"));
        if created_dir {
            let _ = fs::remove_dir(dir);
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataio::SyntheticMode;

    fn small(mode: SyntheticMode) -> PipelineConfig {
        PipelineConfig {
            synthetic: Some(mode),
            synthetic_subjects: 2,
            synthetic_repetitions: 2,
            trial_duration_s: 0.8,
            channel_count: 2,
            segmentation: crate::dataio::SegmentationSpec {
                trim_head_s: 0.1,
                trim_tail_s: 0.1,
                window_s: 0.25,
                step_s: 0.15,
            },
            msst: crate::msst::MsstConfig {
                sst_bins: 64,
                band_count: 8,
                ..Default::default()
            },
            ..Default::default()
        }
    }

    #[test]
    fn features_are_sorted_and_counted() {
        let run = extract_features(&small(SyntheticMode::Null)).unwrap();
        assert_eq!(run.trials, 2 * 10 * 2);
        assert_eq!(
            (run.min_windows_per_trial, run.max_windows_per_trial),
            (3, 3)
        );
        assert_eq!(run.table.len(), 2 * 10 * 2 * 3);
        assert!(run
            .table
            .windows(2)
            .all(|w| w[0].sort_key() < w[1].sort_key()));
        assert_eq!(run.table[0].window, 0);
        assert!(run.table.iter().all(|r| r.features.mean.is_finite()));
    }

    #[test]
    fn worker_count_does_not_change_features() {
        let one = extract_features(&PipelineConfig {
            workers: 1,
            ..small(SyntheticMode::Gestures)
        })
        .unwrap();
        let four = extract_features(&PipelineConfig {
            workers: 4,
            ..small(SyntheticMode::Gestures)
        })
        .unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn pipeline_writes_every_output() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("run");
        let config = PipelineConfig {
            out: Some(out.clone()),
            ..small(SyntheticMode::Gestures)
        };
        let run = run_pipeline(&config).unwrap();
        let mut names: Vec<String> = fs::read_dir(&out)
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .collect();
        names.sort();
        let mut expected = vec![
            "features.csv".to_string(),
            "features_zscored.csv".into(),
            "kw_summary.txt".into(),
            "run.log".into(),
        ];
        for f in Feature::ALL {
            expected.push(format!("pairwise_{f}.csv"));
            expected.push(format!("boxplot_{f}.svg"));
        }
        expected.sort();
        assert_eq!(names, expected);
        assert_eq!(run.analysis.overall_tests(), 4);
        assert_eq!(run.analysis.pairwise_tests(), 180);
        let summary = fs::read_to_string(out.join("kw_summary.txt")).unwrap();
        assert_eq!(
            summary.lines().filter(|l| l.starts_with("test ")).count(),
            4
        );
        assert!(summary.contains("df=9"));
        let csv = fs::read_to_string(out.join("pairwise_mean.csv")).unwrap();
        assert_eq!(csv.lines().count(), 11);
        assert!(csv.starts_with("gesture,X,E,F,U,R,G,B,D,S,P\n"));
        let log = fs::read_to_string(out.join("run.log")).unwrap();
        assert!(log.contains("pairwise_tests = 180"));
        assert!(!log.contains("workers"));
        let svg = fs::read_to_string(out.join("boxplot_variance.svg")).unwrap();
        assert_eq!(svg.matches(r#"<g class="box""#).count(), 10);
    }

    #[test]
    fn pairwise_csv_digits() {
        let table: Vec<FeatureRecord> = (0..6)
            .map(|i| FeatureRecord {
                subject: 1,
                gesture: if i < 3 { Gesture::X } else { Gesture::E },
                repetition: 1,
                window: i,
                features: crate::features::MomentFeatures {
                    mean: i as f64,
                    ..Default::default()
                },
            })
            .collect();
        let m = pairwise_kw(&table, Feature::Mean).unwrap();
        let csv = pairwise_csv(&m);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "gesture,X,E");
        let cell = lines[1].split(',').nth(2).unwrap();
        let mantissa = cell.split('e').next().unwrap().replace(['.', '-'], "");
        assert_eq!(mantissa.len(), 17);
        assert_eq!(cell.parse::<f64>().unwrap(), m.p_values[[0, 1]]);
    }

    #[test]
    fn failed_write_leaves_nothing() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("new");
        let files = vec![
            OutputFile::new("a.txt", "a"),
            OutputFile::new("missing/b.txt", "b"),
        ];
        assert!(write_outputs(&out, &files).is_err());
        assert!(!out.exists());
    }

    #[test]
    fn missing_source_is_a_usage_error() {
        let config = PipelineConfig {
            out: Some("unused".into()),
            ..Default::default()
        };
        assert_eq!(
            run_pipeline(&config).unwrap_err().kind(),
            crate::ErrorKind::Usage
        );
    }

    #[test]
    fn synthetic_export_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = small(SyntheticMode::Gestures);
        config.synthetic_subjects = 1;
        config.synthetic_repetitions = 1;
        let manifest = export_synthetic(&config, dir.path()).unwrap();
        assert_eq!(manifest.entries.len(), 10);
        let direct = extract_features(&PipelineConfig {
            prefilter: super::super::config::Prefilter::On,
            ..config.clone()
        })
        .unwrap();
        let from_files = extract_features(&PipelineConfig {
            manifest: Some(dir.path().join("manifest.csv")),
            prefilter: super::super::config::Prefilter::On,
            ..config
        })
        .unwrap();
        assert_eq!(direct.table, from_files.table);
    }
}
