use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use topicscore::config::{parse_mode, RunConfig, Source};
use topicscore::heatmap::HeatmapSpec;
use topicscore::pipeline::run;
use topicscore::reference::compare_coverage_json;
use topicscore::report::write_file;
use topicscore::vocabulary::export_default_vocabulary;
use topicscore::Error;
use topicscore_core::textproc::DEFAULT_STOPWORDS_FILE;

/// Score how strongly each document of a corpus engages the topics of a
/// keyword topic model (by default the Sustainable Development Goals).
#[derive(Debug, Parser)]
#[command(name = "topicscore", version)]
struct Cli {
    /// Directory of plain-text documents (all `.txt` files, by file name).
    #[arg(long, value_name = "DIR")]
    input: Option<PathBuf>,
    /// Manifest of `id<TAB>path` lines; takes precedence over --input.
    #[arg(long, value_name = "FILE")]
    manifest: Option<PathBuf>,
    /// Topic vocabulary JSON file (default: built-in SDG vocabulary).
    #[arg(long, value_name = "FILE")]
    vocabulary: Option<PathBuf>,
    /// Where outputs are written (default: topicscore-out).
    #[arg(long, value_name = "DIR")]
    output_dir: Option<PathBuf>,
    /// Shortest n-gram, in tokens (default: 1).
    #[arg(long, value_name = "N")]
    ngram_min: Option<usize>,
    /// Longest n-gram, in tokens (default: 2). Longer keywords are reported as oversized.
    #[arg(long, value_name = "N")]
    ngram_max: Option<usize>,
    /// Tokens shorter than this many characters are dropped (default: 2).
    #[arg(long, value_name = "N")]
    min_token_len: Option<usize>,
    /// Stop-word list file, one word per line (default: built-in list).
    #[arg(long, value_name = "FILE")]
    stopwords: Option<PathBuf>,
    /// none, global-max or per-doc-max.
    #[arg(long, value_name = "MODE")]
    normalize: Option<String>,
    /// sum or mean.
    #[arg(long, value_name = "MODE")]
    aggregate: Option<String>,
    /// A document engages a topic when its raw score exceeds this value.
    #[arg(long, value_name = "X")]
    engagement_threshold: Option<f64>,
    /// Topic left out of per-document goal counts; pass "" for none.
    #[arg(long, value_name = "ID")]
    overarching_topic: Option<String>,
    /// Number of heatmap colour bands.
    #[arg(long, value_name = "N")]
    bands: Option<usize>,
    /// Comma-separated #rrggbb colours, one per band.
    #[arg(long, value_name = "COLOURS", value_delimiter = ',')]
    palette: Option<Vec<String>>,
    /// Also write the TF-IDF matrix as tfidf.csv.
    #[arg(long)]
    dump_matrix: bool,
    /// Write the built-in vocabulary to FILE.
    #[arg(long, value_name = "FILE")]
    export_default_vocabulary: Option<PathBuf>,
    /// Write the built-in stop-word list to FILE.
    #[arg(long, value_name = "FILE")]
    export_default_stopwords: Option<PathBuf>,
    /// Start from a saved config.json; other flags override its values.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Compare a coverage.json against the reference study figures.
    #[arg(long, value_name = "FILE")]
    compare_reference: Option<PathBuf>,
    /// Worker threads (0 = one per core). Outputs do not depend on it.
    #[arg(long, value_name = "N", default_value_t = 0)]
    jobs: usize,
}

impl Cli {
    fn has_run_input(&self) -> bool {
        self.input.is_some() || self.manifest.is_some() || self.config.is_some()
    }

    fn resolve(self) -> Result<RunConfig, Error> {
        let mut config = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        if self.input.is_some() {
            config.input = self.input;
        }
        if self.manifest.is_some() {
            config.manifest = self.manifest;
        }
        if let Some(path) = self.vocabulary {
            config.vocabulary = Source::File(path);
        }
        if let Some(path) = self.stopwords {
            config.stopwords = Source::File(path);
        }
        if let Some(dir) = self.output_dir {
            config.output_dir = dir;
        }
        config.ngram_min = self.ngram_min.unwrap_or(config.ngram_min);
        config.ngram_max = self.ngram_max.unwrap_or(config.ngram_max);
        config.min_token_len = self.min_token_len.unwrap_or(config.min_token_len);
        if let Some(mode) = &self.normalize {
            config.normalize = parse_mode(mode)?;
        }
        if let Some(mode) = &self.aggregate {
            config.aggregate = parse_mode(mode)?;
        }
        config.engagement_threshold = self
            .engagement_threshold
            .unwrap_or(config.engagement_threshold);
        if let Some(topic) = self.overarching_topic {
            config.overarching_topic = (!topic.is_empty()).then_some(topic);
        }
        if let Some(bands) = self.bands {
            let geometry = config.heatmap.clone();
            config.heatmap = HeatmapSpec {
                cell_width: geometry.cell_width,
                cell_height: geometry.cell_height,
                font_size: geometry.font_size,
                ..HeatmapSpec::with_bands(bands)?
            };
        }
        if let Some(palette) = self.palette {
            if self.bands.is_none() {
                config.heatmap.bands = palette.len();
            }
            config.heatmap.palette = palette;
        }
        config.dump_matrix |= self.dump_matrix;
        config.jobs = self.jobs;
        Ok(config)
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            log::error!("{err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn execute(cli: Cli) -> Result<(), Error> {
    let mut did_something = false;
    if let Some(path) = &cli.export_default_vocabulary {
        export_default_vocabulary(path)?;
        log::info!("wrote built-in vocabulary to {}", path.display());
        did_something = true;
    }
    if let Some(path) = &cli.export_default_stopwords {
        write_file(path, DEFAULT_STOPWORDS_FILE)?;
        log::info!("wrote built-in stop-word list to {}", path.display());
        did_something = true;
    }
    if let Some(path) = &cli.compare_reference {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        println!("{}", compare_coverage_json(&text)?);
        did_something = true;
    }
    if did_something && !cli.has_run_input() {
        return Ok(());
    }

    let config = cli.resolve()?;
    let summary = run(&config)?;
    for path in &summary.written {
        log::info!("wrote {}", path.display());
    }
    let warnings = summary.analysis.warnings();
    if !warnings.is_empty() {
        log::warn!("{} warning(s):", warnings.len());
        for w in warnings {
            log::warn!("  {w}");
        }
    }
    Ok(())
}
