use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gesturetf::features::read_features_csv;
use gesturetf::report::{
    analyze, boxplot_svg, export_synthetic, extract_features, run_pipeline, test_outputs,
    write_outputs, OutputFile, PipelineConfig,
};
use gesturetf::selftest::run_selftest;
use gesturetf::{Error, ErrorKind, Feature, FeatureRecord};

const EXIT_USAGE: u8 = 1;
const EXIT_DATA: u8 = 2;
const EXIT_SELFTEST: u8 = 3;

#[derive(Parser)]
#[command(
    name = "gesturetf",
    version,
    about = "Multichannel sEMG time-frequency moments and gesture tests"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extract features, run the gesture tests and write every report.
    Pipeline(RunArgs),
    /// Extract features and write features.csv only.
    Features(RunArgs),
    /// Run the gesture tests on an existing features.csv.
    Kwtest(KwtestArgs),
    /// Draw the box plot of one feature from a features.csv.
    Boxplot(BoxplotArgs),
    /// Write a synthetic cohort as trial CSVs and a manifest.
    Synth(RunArgs),
    /// Run the built-in analytic checks.
    Selftest,
}

#[derive(Args)]
struct RunArgs {
    /// key = value configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Trial manifest (subject,gesture,repetition,path).
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Use a synthetic cohort: null or gestures.
    #[arg(long)]
    synthetic: Option<String>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// inter or intra:<k>.
    #[arg(long)]
    scenario: Option<String>,
    /// joint or elementwise.
    #[arg(long)]
    feature_mode: Option<String>,
    /// Any configuration key, as key=value. Repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
}

#[derive(Args)]
struct KwtestArgs {
    /// Feature table written by `features` or `pipeline`.
    features: PathBuf,
    /// inter or intra:<k>.
    #[arg(long, default_value = "inter")]
    scenario: String,
    #[arg(long, default_value_t = 0.001)]
    significance: f64,
    /// Output directory; the summary goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoxplotArgs {
    /// Feature table written by `features` or `pipeline`.
    features: PathBuf,
    /// mean, variance, skewness or kurtosis.
    #[arg(long)]
    feature: String,
    /// Scenario used for the overall p-value annotation.
    #[arg(long, default_value = "inter")]
    scenario: String,
    /// SVG path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl RunArgs {
    fn config(&self) -> gesturetf::Result<PipelineConfig> {
        let mut c = match &self.config {
            Some(path) => PipelineConfig::load(path)?,
            None => PipelineConfig::default(),
        };
        let mut set = |key: &str, value: String| c.apply(key, &value);
        if let Some(m) = &self.manifest {
            set("manifest", m.display().to_string())?;
        }
        if let Some(s) = &self.synthetic {
            set("synthetic", s.clone())?;
        }
        if let Some(o) = &self.out {
            set("out", o.display().to_string())?;
        }
        if let Some(w) = self.workers {
            set("workers", w.to_string())?;
        }
        if let Some(s) = self.seed {
            set("seed", s.to_string())?;
        }
        if let Some(s) = &self.scenario {
            set("scenario", s.clone())?;
        }
        if let Some(m) = &self.feature_mode {
            set("feature_mode", m.clone())?;
        }
        for kv in &self.set {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("--set expects key=value, got '{kv}'")))?;
            set(k.trim(), v.trim().to_string())?;
        }
        Ok(c)
    }
}

fn out_dir(config: &PipelineConfig) -> gesturetf::Result<PathBuf> {
    config
        .out
        .clone()
        .ok_or_else(|| Error::Config("no output directory; pass --out".into()))
}

fn read_table(path: &Path) -> gesturetf::Result<Vec<FeatureRecord>> {
    let file = File::open(path).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        source: e,
    })?;
    let table = read_features_csv(io::BufReader::new(file), path)?;
    if table.is_empty() {
        return Err(Error::EmptyTable);
    }
    Ok(table)
}

fn stdout(bytes: &[u8]) -> gesturetf::Result<()> {
    io::stdout().write_all(bytes).map_err(|e| Error::Io {
        path: "<stdout>".into(),
        source: e,
    })
}

fn pipeline(args: &RunArgs) -> gesturetf::Result<()> {
    let config = args.config()?;
    let dir = out_dir(&config)?;
    let run = run_pipeline(&config)?;
    println!(
        "{} trials, {} feature rows, {} overall and {} pairwise tests",
        run.features.trials,
        run.features.table.len(),
        run.analysis.overall_tests(),
        run.analysis.pairwise_tests()
    );
    for f in &run.files {
        println!("wrote {}", dir.join(&f.name).display());
    }
    Ok(())
}

fn features(args: &RunArgs) -> gesturetf::Result<()> {
    let config = args.config()?;
    let dir = out_dir(&config)?;
    let run = extract_features(&config)?;
    let mut buf = Vec::new();
    gesturetf::features::write_features_csv(&run.table, &mut buf).map_err(|e| Error::Io {
        path: dir.join("features.csv"),
        source: e,
    })?;
    write_outputs(
        &dir,
        &[OutputFile {
            name: "features.csv".into(),
            contents: buf,
        }],
    )?;
    println!("{} trials, {} feature rows", run.trials, run.table.len());
    println!("wrote {}", dir.join("features.csv").display());
    Ok(())
}

fn kwtest(args: &KwtestArgs) -> gesturetf::Result<()> {
    let scenario = args.scenario.parse()?;
    if !(args.significance > 0.0 && args.significance < 1.0) {
        return Err(Error::Config(format!(
            "significance must lie in (0, 1), got {}",
            args.significance
        )));
    }
    let table = read_table(&args.features)?;
    let analysis = analyze(&table, scenario)?;
    let files = test_outputs(&analysis, args.significance);
    match &args.out {
        Some(dir) => {
            write_outputs(dir, &files)?;
            for f in &files {
                println!("wrote {}", dir.join(&f.name).display());
            }
            Ok(())
        }
        None => stdout(&files[0].contents),
    }
}

fn boxplot(args: &BoxplotArgs) -> gesturetf::Result<()> {
    let feature: Feature = args.feature.parse()?;
    let scenario = args.scenario.parse()?;
    let table = read_table(&args.features)?;
    let analysis = analyze(&table, scenario)?;
    let svg = boxplot_svg(&analysis, feature)?;
    match &args.out {
        Some(path) => std::fs::write(path, svg).map_err(|e| Error::Io {
            path: path.clone(),
            source: e,
        }),
        None => stdout(svg.as_bytes()),
    }
}

fn synth(args: &RunArgs) -> gesturetf::Result<()> {
    let config = args.config()?;
    let dir = out_dir(&config)?;
    let manifest = export_synthetic(&config, &dir)?;
    println!(
        "wrote {} trials and {}",
        manifest.entries.len(),
        dir.join("manifest.csv").display()
    );
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e.kind() {
        ErrorKind::Usage => EXIT_USAGE,
        ErrorKind::Data => EXIT_DATA,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Pipeline(a) => pipeline(a),
        Command::Features(a) => features(a),
        Command::Kwtest(a) => kwtest(a),
        Command::Boxplot(a) => boxplot(a),
        Command::Synth(a) => synth(a),
        Command::Selftest => {
            let report = run_selftest();
            println!("{report}");
            return if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_SELFTEST)
            };
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gesturetf: error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
