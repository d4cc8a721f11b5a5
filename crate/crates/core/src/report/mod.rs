//! Pipeline orchestration and report outputs.

pub mod boxplot;
mod config;
mod pipeline;

pub use boxplot::{quantile_inclusive, render_svg, summarize, BoxPlotSummary, PlotAnnotations};
pub use config::{DataSource, FilterSettings, PipelineConfig, Prefilter, CONFIG_KEYS};
pub use pipeline::{
    analyze, boxplot_svg, export_synthetic, extract_features, kw_summary, pairwise_csv,
    run_pipeline, test_outputs, write_outputs, Analysis, FeatureRun, OutputFile, PipelineRun,
};
