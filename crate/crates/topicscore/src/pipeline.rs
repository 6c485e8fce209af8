//! End-to-end run: load, process, vectorize, score, report.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use topicscore_core::corpus::Corpus;
use topicscore_core::scoring::{
    engagement, keyword_coverage, normalize_scores, score_topics, CoverageReport, EngagementReport,
    TopicScoreMatrix,
};
use topicscore_core::textproc::{process, Term};
use topicscore_core::topics::CanonicalModel;
use topicscore_core::vectorizer::{build_vocabulary, tfidf_row, TfidfMatrix, Vocabulary};

use crate::config::RunConfig;
use crate::corpus::{directory_manifest, load_corpus, read_manifest};
use crate::error::{Error, Result};
use crate::heatmap::render_heatmap_svg;
use crate::report::{coverage_json, matrix_csv, oversized_summary, scores_csv};

pub const SCORES_FILE: &str = "scores.csv";
pub const COVERAGE_FILE: &str = "coverage.json";
pub const HEATMAP_FILE: &str = "heatmap.svg";
pub const CONFIG_FILE: &str = "config.json";
pub const MATRIX_FILE: &str = "tfidf.csv";

/// Everything computed by a run, before anything is written.
#[derive(Debug)]
pub struct Analysis {
    pub corpus: Corpus,
    pub vocabulary: Vocabulary,
    pub matrix: TfidfMatrix,
    pub model: CanonicalModel,
    pub scores: TopicScoreMatrix,
    pub coverage: CoverageReport,
    pub engagement: EngagementReport,
}

impl Analysis {
    /// Warnings worth repeating at the end of a run.
    pub fn warnings(&self) -> Vec<String> {
        let mut warnings: Vec<String> = self
            .corpus
            .documents()
            .iter()
            .filter(|d| d.repaired_sequences > 0)
            .map(|d| {
                format!(
                    "{}: {} invalid UTF-8 sequence(s) replaced",
                    d.id, d.repaired_sequences
                )
            })
            .collect();
        warnings.extend(
            oversized_summary(&self.model)
                .into_iter()
                .map(|k| format!("keyword can never match at this n-gram range: {k}")),
        );
        let unengaged = self.engagement.zero_engagement_topics();
        if !unengaged.is_empty() {
            warnings.push(format!("no document engages: {}", unengaged.join(", ")));
        }
        warnings
    }
}

fn thread_pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker threads: {e}")))
}

/// Runs every stage up to the reports, without writing anything.
pub fn analyze(config: &RunConfig) -> Result<Analysis> {
    config.validate()?;
    let tokenizer = config.tokenizer()?;
    let model = config.topic_model()?;
    let manifest = match (&config.manifest, &config.input) {
        (Some(manifest), input) => {
            if input.is_some() {
                log::info!("both --manifest and --input given; using the manifest");
            }
            read_manifest(manifest)?
        }
        (None, Some(dir)) => directory_manifest(dir)?,
        (None, None) => unreachable!("validate() requires an input"),
    };

    let pool = thread_pool(config.jobs)?;
    pool.install(|| {
        let corpus = load_corpus(&manifest)?;
        let processed: Vec<Vec<Term>> = corpus
            .documents()
            .par_iter()
            .map(|doc| process(&doc.text, &tokenizer))
            .collect();
        let vocabulary = build_vocabulary(&processed)?;
        let matrix: TfidfMatrix = processed
            .par_iter()
            .map(|terms| tfidf_row(terms, &vocabulary))
            .collect::<Vec<_>>()
            .into_iter()
            .collect();

        let model = CanonicalModel::new(&model, &tokenizer);
        let raw = score_topics(&matrix, &vocabulary, &model, corpus.ids(), config.aggregate);
        let scores = normalize_scores(raw, config.normalize);
        let coverage = keyword_coverage(&model, &vocabulary);
        let engagement = engagement(
            &scores,
            config.engagement_threshold,
            config.overarching_topic.as_deref(),
        );
        log::info!(
            "{} documents, {} terms, {} of {} keywords found",
            corpus.len(),
            vocabulary.len(),
            coverage.found_keywords(),
            coverage.total_keywords()
        );
        Ok(Analysis {
            corpus,
            vocabulary,
            matrix,
            model,
            scores,
            coverage,
            engagement,
        })
    })
}

/// Output files of a run, in the order they are written.
pub fn render_outputs(
    config: &RunConfig,
    analysis: &Analysis,
) -> Result<Vec<(&'static str, String)>> {
    let mut outputs = vec![
        (SCORES_FILE, scores_csv(&analysis.scores)),
        (
            COVERAGE_FILE,
            coverage_json(&analysis.coverage, &analysis.engagement, &analysis.corpus),
        ),
        (
            HEATMAP_FILE,
            render_heatmap_svg(&analysis.scores, &config.heatmap)?,
        ),
        (CONFIG_FILE, config.to_json()),
    ];
    if config.dump_matrix {
        outputs.push((
            MATRIX_FILE,
            matrix_csv(&analysis.corpus, &analysis.vocabulary, &analysis.matrix),
        ));
    }
    Ok(outputs)
}

/// Writes all files or none: on failure, files already written are removed,
/// and so is the output directory if this call created it.
pub fn write_outputs(dir: &Path, outputs: &[(&str, String)]) -> Result<Vec<PathBuf>> {
    let created_dir = !dir.exists();
    fs::create_dir_all(dir).map_err(|e| Error::write(dir, e))?;
    let mut written = Vec::new();
    for (name, contents) in outputs {
        let path = dir.join(name);
        if let Err(e) = fs::write(&path, contents) {
            for done in &written {
                let _ = fs::remove_file(done);
            }
            if created_dir {
                let _ = fs::remove_dir(dir);
            }
            return Err(Error::write(&path, e));
        }
        written.push(path);
    }
    Ok(written)
}

pub struct RunSummary {
    pub analysis: Analysis,
    pub written: Vec<PathBuf>,
}

pub fn run(config: &RunConfig) -> Result<RunSummary> {
    let analysis = analyze(config)?;
    let outputs = render_outputs(config, &analysis)?;
    let written = write_outputs(&config.output_dir, &outputs)?;
    Ok(RunSummary { analysis, written })
}
