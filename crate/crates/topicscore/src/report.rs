//! CSV and JSON serializations of a run's results.
//!
//! All writers build the complete output in memory first; the `write_*`
//! helpers then put it on disk in one call.

use std::fs;
use std::path::Path;

use serde::Serialize;
use topicscore_core::corpus::Corpus;
use topicscore_core::scoring::{CoverageReport, EngagementReport, TopicScoreMatrix};
use topicscore_core::topics::CanonicalModel;
use topicscore_core::vectorizer::{TfidfMatrix, Vocabulary};

use crate::error::{Error, Result};

fn csv_writer() -> csv::Writer<Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new())
}

fn finish(writer: csv::Writer<Vec<u8>>) -> String {
    let bytes = writer.into_inner().expect("in-memory CSV flush");
    String::from_utf8(bytes).expect("CSV of UTF-8 fields is UTF-8")
}

/// `topic_id,topic_name,<doc ids...>` then one row of normalized scores per
/// topic, six decimals.
pub fn scores_csv(scores: &TopicScoreMatrix) -> String {
    let mut w = csv_writer();
    let mut header = vec!["topic_id".to_string(), "topic_name".to_string()];
    header.extend(scores.doc_ids.iter().cloned());
    w.write_record(&header).expect("in-memory write");
    for (t, row) in scores.normalized_rows().iter().enumerate() {
        let mut record = vec![scores.topic_ids[t].clone(), scores.topic_names[t].clone()];
        record.extend(row.iter().map(|v| format!("{v:.6}")));
        w.write_record(&record).expect("in-memory write");
    }
    finish(w)
}

/// `doc_id,term,weight` for every nonzero TF-IDF weight, by document then
/// term index, nine decimals.
pub fn matrix_csv(corpus: &Corpus, vocab: &Vocabulary, matrix: &TfidfMatrix) -> String {
    let mut w = csv_writer();
    w.write_record(["doc_id", "term", "weight"])
        .expect("in-memory write");
    for (doc, row) in corpus.documents().iter().zip(matrix.rows()) {
        for &(i, weight) in row.entries() {
            w.write_record([
                doc.id.as_str(),
                vocab.terms()[i].as_str(),
                &format!("{weight:.9}"),
            ])
            .expect("in-memory write");
        }
    }
    finish(w)
}

#[derive(Serialize)]
struct CoverageJson<'a> {
    total_keywords: usize,
    found_keywords: usize,
    absent_keywords: usize,
    oversized_keywords: usize,
    keywords: Vec<KeywordJson<'a>>,
    engagement: EngagementJson<'a>,
    encoding_repairs: Vec<RepairJson<'a>>,
}

#[derive(Serialize)]
struct KeywordJson<'a> {
    topic_id: &'a str,
    phrase: &'a str,
    canonical: Vec<&'a str>,
    status: &'static str,
}

#[derive(Serialize)]
struct EngagementJson<'a> {
    threshold: f64,
    overarching_topic: Option<&'a str>,
    documents: Vec<DocumentJson<'a>>,
    topics: Vec<TopicJson<'a>>,
    zero_engagement_topics: Vec<&'a str>,
}

#[derive(Serialize)]
struct DocumentJson<'a> {
    doc_id: &'a str,
    engaged_topics: usize,
    engaged_goals: usize,
    engages_overarching: bool,
}

#[derive(Serialize)]
struct TopicJson<'a> {
    topic_id: &'a str,
    engaged_documents: usize,
    zero_score_documents: &'a [String],
}

#[derive(Serialize)]
struct RepairJson<'a> {
    doc_id: &'a str,
    replaced_sequences: usize,
}

/// Coverage totals and records, engagement in both views, zero-engagement
/// topics and per-document encoding repairs. Keys appear in a fixed order.
pub fn coverage_json(
    coverage: &CoverageReport,
    engagement: &EngagementReport,
    corpus: &Corpus,
) -> String {
    let doc = CoverageJson {
        total_keywords: coverage.total_keywords(),
        found_keywords: coverage.found_keywords(),
        absent_keywords: coverage.absent_keywords(),
        oversized_keywords: coverage.oversized_keywords(),
        keywords: coverage
            .records
            .iter()
            .map(|r| KeywordJson {
                topic_id: &r.topic_id,
                phrase: &r.phrase,
                canonical: r.canonical.iter().map(|t| t.as_str()).collect(),
                status: r.status.as_str(),
            })
            .collect(),
        engagement: EngagementJson {
            threshold: engagement.threshold,
            overarching_topic: engagement.overarching_topic.as_deref(),
            documents: engagement
                .documents
                .iter()
                .map(|d| DocumentJson {
                    doc_id: &d.doc_id,
                    engaged_topics: d.engaged_topics,
                    engaged_goals: d.engaged_goals,
                    engages_overarching: d.engages_overarching,
                })
                .collect(),
            topics: engagement
                .topics
                .iter()
                .map(|t| TopicJson {
                    topic_id: &t.topic_id,
                    engaged_documents: t.engaged_documents,
                    zero_score_documents: &t.zero_score_documents,
                })
                .collect(),
            zero_engagement_topics: engagement.zero_engagement_topics(),
        },
        encoding_repairs: corpus
            .documents()
            .iter()
            .filter(|d| d.repaired_sequences > 0)
            .map(|d| RepairJson {
                doc_id: &d.id,
                replaced_sequences: d.repaired_sequences,
            })
            .collect(),
    };
    let mut json = serde_json::to_string_pretty(&doc).expect("coverage serializes");
    json.push('\n');
    json
}

/// One line per oversized keyword, for the end-of-run warning summary.
pub fn oversized_summary(model: &CanonicalModel) -> Vec<String> {
    model
        .oversized()
        .map(|(topic, k)| {
            format!(
                "{topic}: \"{}\" ({} token(s))",
                k.source_phrase,
                k.canonical.len()
            )
        })
        .collect()
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::write(path, e))
}

pub fn write_scores_csv(scores: &TopicScoreMatrix, path: &Path) -> Result<()> {
    write_file(path, &scores_csv(scores))
}

pub fn write_coverage_json(
    coverage: &CoverageReport,
    engagement: &EngagementReport,
    corpus: &Corpus,
    path: &Path,
) -> Result<()> {
    write_file(path, &coverage_json(coverage, engagement, corpus))
}
