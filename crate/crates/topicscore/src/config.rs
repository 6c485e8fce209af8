//! Fully resolved run configuration, echoed into every output directory.
//!
//! The echo (`config.json`) can be passed back with `--config` to repeat a
//! run. Paths are stored as given; relative ones resolve against the working
//! directory of the invocation.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use topicscore_core::scoring::{Aggregation, Normalization};
use topicscore_core::textproc::{
    default_stopwords, parse_stopword_list, TokenizerConfig, DEFAULT_STOPWORDS_VERSION,
};
use topicscore_core::topics::{default_sdg_model, TopicModel};

use crate::error::{Error, Result};
use crate::heatmap::HeatmapSpec;
use crate::vocabulary::load_topic_model;

const BUILTIN_VOCABULARY: &str = "builtin:sdg";

fn builtin_stopwords() -> String {
    format!("builtin:english-v{DEFAULT_STOPWORDS_VERSION}")
}

/// Either an embedded resource or a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Builtin,
    File(PathBuf),
}

impl Source {
    fn parse(value: &str, builtin: &str) -> Result<Self> {
        if value == builtin {
            Ok(Source::Builtin)
        } else if value.starts_with("builtin:") {
            Err(Error::Config(format!(
                "unknown built-in resource `{value}` (expected `{builtin}`)"
            )))
        } else {
            Ok(Source::File(PathBuf::from(value)))
        }
    }

    fn render(&self, builtin: &str) -> String {
        match self {
            Source::Builtin => builtin.to_string(),
            Source::File(path) => path.display().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RunConfigFile {
    input: Option<PathBuf>,
    manifest: Option<PathBuf>,
    vocabulary: String,
    stopwords: String,
    ngram_min: usize,
    ngram_max: usize,
    min_token_len: usize,
    normalize: String,
    aggregate: String,
    engagement_threshold: f64,
    overarching_topic: Option<String>,
    output_dir: PathBuf,
    dump_matrix: bool,
    heatmap: HeatmapSpec,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    /// Directory of `.txt` documents.
    pub input: Option<PathBuf>,
    /// Explicit `id<TAB>path` manifest; wins over `input`.
    pub manifest: Option<PathBuf>,
    pub vocabulary: Source,
    pub stopwords: Source,
    pub ngram_min: usize,
    pub ngram_max: usize,
    pub min_token_len: usize,
    pub normalize: Normalization,
    pub aggregate: Aggregation,
    pub engagement_threshold: f64,
    /// Topic left out of the per-document goal count.
    pub overarching_topic: Option<String>,
    pub output_dir: PathBuf,
    pub dump_matrix: bool,
    pub heatmap: HeatmapSpec,
    /// Worker threads for per-document stages; 0 picks the machine default.
    /// Never affects outputs and is not part of the echo.
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            input: None,
            manifest: None,
            vocabulary: Source::Builtin,
            stopwords: Source::Builtin,
            ngram_min: 1,
            ngram_max: 2,
            min_token_len: 2,
            normalize: Normalization::GlobalMax,
            aggregate: Aggregation::Sum,
            engagement_threshold: 0.0,
            overarching_topic: Some("G0".to_string()),
            output_dir: PathBuf::from("topicscore-out"),
            dump_matrix: false,
            heatmap: HeatmapSpec::default(),
            jobs: 0,
        }
    }
}

impl RunConfig {
    pub fn to_json(&self) -> String {
        let file = RunConfigFile {
            input: self.input.clone(),
            manifest: self.manifest.clone(),
            vocabulary: self.vocabulary.render(BUILTIN_VOCABULARY),
            stopwords: self.stopwords.render(&builtin_stopwords()),
            ngram_min: self.ngram_min,
            ngram_max: self.ngram_max,
            min_token_len: self.min_token_len,
            normalize: self.normalize.to_string(),
            aggregate: self.aggregate.to_string(),
            engagement_threshold: self.engagement_threshold,
            overarching_topic: self.overarching_topic.clone(),
            output_dir: self.output_dir.clone(),
            dump_matrix: self.dump_matrix,
            heatmap: self.heatmap.clone(),
        };
        let mut json = serde_json::to_string_pretty(&file).expect("config serializes");
        json.push('\n');
        json
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: RunConfigFile = serde_json::from_str(text)
            .map_err(|e| Error::Config(format!("run configuration: {e}")))?;
        Ok(RunConfig {
            input: file.input,
            manifest: file.manifest,
            vocabulary: Source::parse(&file.vocabulary, BUILTIN_VOCABULARY)?,
            stopwords: Source::parse(&file.stopwords, &builtin_stopwords())?,
            ngram_min: file.ngram_min,
            ngram_max: file.ngram_max,
            min_token_len: file.min_token_len,
            normalize: parse_mode(&file.normalize)?,
            aggregate: parse_mode(&file.aggregate)?,
            engagement_threshold: file.engagement_threshold,
            overarching_topic: file.overarching_topic,
            output_dir: file.output_dir,
            dump_matrix: file.dump_matrix,
            heatmap: file.heatmap,
            jobs: 0,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::config_file(path, e))?;
        Self::from_json(&text)
    }

    /// Checks everything that can be checked without touching the inputs.
    pub fn validate(&self) -> Result<()> {
        if self.input.is_none() && self.manifest.is_none() {
            return Err(Error::Config(
                "no input: pass --input <dir> or --manifest <file>".into(),
            ));
        }
        if !self.engagement_threshold.is_finite() || self.engagement_threshold < 0.0 {
            return Err(Error::Config(format!(
                "engagement threshold must be a finite non-negative number, got {}",
                self.engagement_threshold
            )));
        }
        self.heatmap.validate()?;
        TokenizerConfig::new(
            self.ngram_min,
            self.ngram_max,
            self.min_token_len,
            Default::default(),
        )?;
        Ok(())
    }

    pub fn tokenizer(&self) -> Result<TokenizerConfig> {
        let stopwords = match &self.stopwords {
            Source::Builtin => default_stopwords(),
            Source::File(path) => {
                let text = fs::read_to_string(path).map_err(|e| Error::config_file(path, e))?;
                parse_stopword_list(&text).map_err(|e| Error::config_file(path, e))?
            }
        };
        Ok(TokenizerConfig::new(
            self.ngram_min,
            self.ngram_max,
            self.min_token_len,
            stopwords,
        )?)
    }

    pub fn topic_model(&self) -> Result<TopicModel> {
        match &self.vocabulary {
            Source::Builtin => Ok(default_sdg_model()),
            Source::File(path) => load_topic_model(path),
        }
    }
}

pub fn parse_mode<T>(value: &str) -> Result<T>
where
    T: FromStr,
    T::Err: fmt::Display,
{
    value
        .parse()
        .map_err(|e: T::Err| Error::Config(e.to_string()))
}
