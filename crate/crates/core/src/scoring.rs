//! Per-topic TF-IDF mass, normalization, keyword coverage and engagement.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::textproc::Term;
use crate::topics::{CanonicalModel, KeywordStatus};
use crate::vectorizer::{TfidfMatrix, Vocabulary};
use crate::Error;

/// How a topic's keyword weights are combined for one document.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Aggregation {
    /// Sum of the topic's distinct matched-length term weights.
    #[default]
    Sum,
    /// The sum divided by the number of distinct matched-length terms.
    Mean,
}

impl Aggregation {
    pub fn as_str(self) -> &'static str {
        match self {
            Aggregation::Sum => "sum",
            Aggregation::Mean => "mean",
        }
    }
}

impl FromStr for Aggregation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "sum" => Ok(Aggregation::Sum),
            "mean" => Ok(Aggregation::Mean),
            other => Err(Error::UnknownAggregation(other.to_string())),
        }
    }
}

impl fmt::Display for Aggregation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Normalization {
    None,
    /// Divide every cell by the largest raw score in the matrix.
    #[default]
    GlobalMax,
    /// Divide each document column by its own largest raw score.
    PerDocumentMax,
}

impl Normalization {
    pub fn as_str(self) -> &'static str {
        match self {
            Normalization::None => "none",
            Normalization::GlobalMax => "global-max",
            Normalization::PerDocumentMax => "per-doc-max",
        }
    }
}

impl FromStr for Normalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "none" => Ok(Normalization::None),
            "global-max" => Ok(Normalization::GlobalMax),
            "per-doc-max" | "per-document-max" => Ok(Normalization::PerDocumentMax),
            other => Err(Error::UnknownNormalization(other.to_string())),
        }
    }
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Topic-by-document scores. Rows follow the topic model, columns the corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct TopicScoreMatrix {
    pub topic_ids: Vec<String>,
    pub topic_names: Vec<String>,
    pub doc_ids: Vec<String>,
    raw: Vec<Vec<f64>>,
    normalized: Vec<Vec<f64>>,
    normalization: Normalization,
}

impl TopicScoreMatrix {
    /// Builds a matrix from raw scores (`raw[topic][doc]`); the normalized
    /// view starts out equal to the raw one.
    ///
    /// # Panics
    ///
    /// When the shape of `raw` disagrees with the id lists.
    pub fn from_raw(
        topic_ids: Vec<String>,
        topic_names: Vec<String>,
        doc_ids: Vec<String>,
        raw: Vec<Vec<f64>>,
    ) -> Self {
        assert_eq!(raw.len(), topic_ids.len());
        assert_eq!(topic_names.len(), topic_ids.len());
        assert!(raw.iter().all(|row| row.len() == doc_ids.len()));
        TopicScoreMatrix {
            topic_ids,
            topic_names,
            doc_ids,
            normalized: raw.clone(),
            raw,
            normalization: Normalization::None,
        }
    }

    pub fn n_topics(&self) -> usize {
        self.topic_ids.len()
    }

    pub fn n_docs(&self) -> usize {
        self.doc_ids.len()
    }

    pub fn raw(&self, topic: usize, doc: usize) -> f64 {
        self.raw[topic][doc]
    }

    pub fn normalized(&self, topic: usize, doc: usize) -> f64 {
        self.normalized[topic][doc]
    }

    pub fn raw_rows(&self) -> &[Vec<f64>] {
        &self.raw
    }

    pub fn normalized_rows(&self) -> &[Vec<f64>] {
        &self.normalized
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }
}

/// Sums, for every topic and document, the TF-IDF weights of the topic's
/// distinct matched-length terms. Terms missing from the vocabulary and
/// oversized keywords contribute nothing.
pub fn score_topics(
    matrix: &TfidfMatrix,
    vocab: &Vocabulary,
    model: &CanonicalModel,
    doc_ids: Vec<String>,
    aggregation: Aggregation,
) -> TopicScoreMatrix {
    assert_eq!(doc_ids.len(), matrix.n_docs());
    let raw = model
        .topics()
        .iter()
        .map(|topic| {
            let indices: Vec<usize> = topic
                .terms
                .iter()
                .filter_map(|t: &Term| vocab.index_of(t.as_str()))
                .collect();
            matrix
                .rows()
                .iter()
                .map(|row| {
                    let sum = indices.iter().fold(0.0, |acc, &i| acc + row.get(i));
                    match aggregation {
                        Aggregation::Sum => sum,
                        Aggregation::Mean if topic.terms.is_empty() => 0.0,
                        Aggregation::Mean => sum / topic.terms.len() as f64,
                    }
                })
                .collect()
        })
        .collect();
    TopicScoreMatrix::from_raw(model.topic_ids(), model.topic_names(), doc_ids, raw)
}

/// Recomputes the normalized view from the raw scores.
pub fn normalize_scores(mut scores: TopicScoreMatrix, mode: Normalization) -> TopicScoreMatrix {
    let raw = &scores.raw;
    let n_docs = scores.doc_ids.len();
    scores.normalized = match mode {
        Normalization::None => raw.clone(),
        Normalization::GlobalMax => {
            let max = raw.iter().flatten().copied().fold(0.0_f64, f64::max);
            raw.iter()
                .map(|row| row.iter().map(|&v| divide_or_zero(v, max)).collect())
                .collect()
        }
        Normalization::PerDocumentMax => {
            let mut col_max = vec![0.0_f64; n_docs];
            for row in raw {
                for (m, &v) in col_max.iter_mut().zip(row) {
                    *m = m.max(v);
                }
            }
            raw.iter()
                .map(|row| {
                    row.iter()
                        .zip(&col_max)
                        .map(|(&v, &m)| divide_or_zero(v, m))
                        .collect()
                })
                .collect()
        }
    };
    scores.normalization = mode;
    scores
}

fn divide_or_zero(v: f64, max: f64) -> f64 {
    if max > 0.0 {
        v / max
    } else {
        0.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverageStatus {
    FoundInCorpus,
    Absent,
    Oversized,
}

impl CoverageStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CoverageStatus::FoundInCorpus => "found-in-corpus",
            CoverageStatus::Absent => "absent",
            CoverageStatus::Oversized => "oversized",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeywordRecord {
    pub topic_id: String,
    pub phrase: String,
    pub canonical: Vec<Term>,
    pub status: CoverageStatus,
}

/// Which keywords of a model occur anywhere in the corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub records: Vec<KeywordRecord>,
}

impl CoverageReport {
    pub fn total_keywords(&self) -> usize {
        self.records.len()
    }

    pub fn found_keywords(&self) -> usize {
        self.count(CoverageStatus::FoundInCorpus)
    }

    pub fn oversized_keywords(&self) -> usize {
        self.count(CoverageStatus::Oversized)
    }

    pub fn absent_keywords(&self) -> usize {
        self.count(CoverageStatus::Absent)
    }

    fn count(&self, status: CoverageStatus) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }
}

/// One record per keyword phrase, in model order.
pub fn keyword_coverage(model: &CanonicalModel, vocab: &Vocabulary) -> CoverageReport {
    let records = model
        .topics()
        .iter()
        .flat_map(|topic| {
            topic.keywords.iter().map(move |k| {
                let status = match (k.status, k.term()) {
                    (KeywordStatus::MatchedLength, Some(term)) if vocab.contains(term.as_str()) => {
                        CoverageStatus::FoundInCorpus
                    }
                    (KeywordStatus::MatchedLength, _) => CoverageStatus::Absent,
                    (KeywordStatus::Oversized, _) => CoverageStatus::Oversized,
                };
                KeywordRecord {
                    topic_id: topic.id.clone(),
                    phrase: k.source_phrase.clone(),
                    canonical: k.canonical.clone(),
                    status,
                }
            })
        })
        .collect();
    CoverageReport { records }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentEngagement {
    pub doc_id: String,
    /// Engaged topics, overarching topic included.
    pub engaged_topics: usize,
    /// Engaged topics, overarching topic excluded.
    pub engaged_goals: usize,
    pub engages_overarching: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopicEngagement {
    pub topic_id: String,
    pub engaged_documents: usize,
    pub zero_score_documents: Vec<String>,
}

/// Which documents engage which topics: score strictly above a threshold.
#[derive(Debug, Clone, PartialEq)]
pub struct EngagementReport {
    pub threshold: f64,
    pub overarching_topic: Option<String>,
    pub documents: Vec<DocumentEngagement>,
    pub topics: Vec<TopicEngagement>,
}

impl EngagementReport {
    /// Topics that no document engages, in model order.
    pub fn zero_engagement_topics(&self) -> Vec<&str> {
        self.topics
            .iter()
            .filter(|t| t.engaged_documents == 0)
            .map(|t| t.topic_id.as_str())
            .collect()
    }
}

/// Counts engaged topics per document from the raw scores. The topic named
/// by `overarching_topic` (if present in the model) is left out of the
/// goal-count view.
pub fn engagement(
    scores: &TopicScoreMatrix,
    threshold: f64,
    overarching_topic: Option<&str>,
) -> EngagementReport {
    let overarching =
        overarching_topic.and_then(|id| scores.topic_ids.iter().position(|t| t == id));
    let engaged = |t: usize, d: usize| scores.raw(t, d) > threshold;
    let documents = scores
        .doc_ids
        .iter()
        .enumerate()
        .map(|(d, doc_id)| {
            let engaged_topics = (0..scores.n_topics()).filter(|&t| engaged(t, d)).count();
            let engages_overarching = overarching.is_some_and(|t| engaged(t, d));
            DocumentEngagement {
                doc_id: doc_id.clone(),
                engaged_topics,
                engaged_goals: engaged_topics - usize::from(engages_overarching),
                engages_overarching,
            }
        })
        .collect();
    let topics = scores
        .topic_ids
        .iter()
        .enumerate()
        .map(|(t, topic_id)| {
            let zero_score_documents: Vec<String> = scores
                .doc_ids
                .iter()
                .enumerate()
                .filter(|&(d, _)| !engaged(t, d))
                .map(|(_, id)| id.clone())
                .collect();
            TopicEngagement {
                topic_id: topic_id.clone(),
                engaged_documents: scores.n_docs() - zero_score_documents.len(),
                zero_score_documents,
            }
        })
        .collect();
    EngagementReport {
        threshold,
        overarching_topic: overarching.map(|t| scores.topic_ids[t].clone()),
        documents,
        topics,
    }
}
