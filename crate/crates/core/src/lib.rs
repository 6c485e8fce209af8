//! Keyword topic scoring over TF-IDF document vectors.
//!
//! This crate is the allocation-only core of `topicscore`. It turns raw
//! document text into stemmed n-gram terms, builds a smoothed TF-IDF matrix
//! over a corpus, and sums per-topic TF-IDF mass for a keyword topic model.
//! Everything here is pure; file IO, file formats and the command line live
//! in the `topicscore` crate.
//!
//! ```
//! use topicscore_core::{
//!     corpus::{Corpus, Document},
//!     scoring::{score_topics, Aggregation},
//!     textproc::{process, TokenizerConfig},
//!     topics::{CanonicalModel, Topic, TopicModel},
//!     vectorizer::{build_vocabulary, tfidf_matrix},
//! };
//!
//! let corpus = Corpus::new(vec![
//!     Document::new("d1", "d1.txt", "Hunger and famine."),
//!     Document::new("d2", "d2.txt", "Green energy for food."),
//! ])
//! .unwrap();
//! let config = TokenizerConfig::default();
//! let processed: Vec<_> = corpus.documents().iter().map(|d| process(&d.text, &config)).collect();
//! let vocab = build_vocabulary(&processed).unwrap();
//! let matrix = tfidf_matrix(&processed, &vocab);
//!
//! let model = TopicModel::new(vec![Topic::new("G2", "Hunger", ["hunger", "famine"]).unwrap()]).unwrap();
//! let model = CanonicalModel::new(&model, &config);
//! let scores = score_topics(&matrix, &vocab, &model, corpus.ids(), Aggregation::Sum);
//! assert!(scores.raw(0, 0) > 0.0);
//! assert_eq!(scores.raw(0, 1), 0.0);
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod corpus;
mod error;
pub mod scoring;
pub mod stem;
pub mod textproc;
pub mod topics;
pub mod vectorizer;

pub use error::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;
