//! Corpus vocabulary and the smoothed, L2-normalized TF-IDF matrix.
//!
//! Weights are `count(t, d) * (ln((1 + N) / (1 + df(t))) + 1)`, then each
//! document row is divided by its Euclidean norm. Rows that end up with no
//! terms stay empty.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::textproc::Term;
use crate::{Error, Result};

/// Sorted corpus terms with their document frequencies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vocabulary {
    terms: Vec<Term>,
    doc_freq: Vec<usize>,
    n_docs: usize,
}

impl Vocabulary {
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_docs(&self) -> usize {
        self.n_docs
    }

    pub fn index_of(&self, term: &str) -> Option<usize> {
        self.terms.binary_search_by(|t| t.as_str().cmp(term)).ok()
    }

    pub fn contains(&self, term: &str) -> bool {
        self.index_of(term).is_some()
    }

    pub fn doc_freq(&self, index: usize) -> usize {
        self.doc_freq[index]
    }

    pub fn doc_freq_of(&self, term: &str) -> Option<usize> {
        self.index_of(term).map(|i| self.doc_freq[i])
    }
}

/// Builds the sorted vocabulary of a processed corpus.
///
/// Fails with [`Error::EmptyVocabulary`] when no document has any term, and
/// with [`Error::EmptyCorpus`] when there are no documents.
pub fn build_vocabulary(processed: &[Vec<Term>]) -> Result<Vocabulary> {
    if processed.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let mut df: BTreeMap<&Term, usize> = BTreeMap::new();
    for doc in processed {
        let mut distinct: Vec<&Term> = doc.iter().collect();
        distinct.sort_unstable();
        distinct.dedup();
        for term in distinct {
            *df.entry(term).or_insert(0) += 1;
        }
    }
    if df.is_empty() {
        return Err(Error::EmptyVocabulary);
    }
    let (terms, doc_freq) = df.into_iter().map(|(t, n)| (t.clone(), n)).unzip();
    Ok(Vocabulary {
        terms,
        doc_freq,
        n_docs: processed.len(),
    })
}

/// Smoothed inverse document frequency, `ln((1 + n_docs) / (1 + doc_freq)) + 1`.
///
/// # Panics
///
/// When `doc_freq` is zero or larger than `n_docs`.
pub fn idf_weight(n_docs: usize, doc_freq: usize) -> f64 {
    assert!(
        doc_freq >= 1 && doc_freq <= n_docs,
        "doc_freq {doc_freq} outside 1..={n_docs}"
    );
    libm::log((1.0 + n_docs as f64) / (1.0 + doc_freq as f64)) + 1.0
}

/// One sparse, L2-normalized document row, sorted by term index.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SparseRow {
    entries: Vec<(usize, f64)>,
}

impl SparseRow {
    pub fn entries(&self) -> &[(usize, f64)] {
        &self.entries
    }

    pub fn get(&self, index: usize) -> f64 {
        self.entries
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|pos| self.entries[pos].1)
            .unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of the row's weights, in term-index order.
    pub fn total(&self) -> f64 {
        self.entries.iter().fold(0.0, |acc, &(_, w)| acc + w)
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.entries.iter().fold(0.0, |acc, &(_, w)| acc + w * w))
    }
}

/// Per-document TF-IDF rows in corpus order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TfidfMatrix {
    rows: Vec<SparseRow>,
}

impl TfidfMatrix {
    pub fn n_docs(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn row(&self, doc: usize) -> &SparseRow {
        &self.rows[doc]
    }

    pub fn weight(&self, doc: usize, term_index: usize) -> f64 {
        self.rows[doc].get(term_index)
    }
}

/// Computes one document's normalized row. Independent of other rows, so
/// callers may compute rows in parallel and assemble them in order.
pub fn tfidf_row(terms: &[Term], vocab: &Vocabulary) -> SparseRow {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for term in terms {
        let index = vocab
            .index_of(term.as_str())
            .expect("vocabulary was built from this corpus");
        *counts.entry(index).or_insert(0) += 1;
    }
    let mut entries: Vec<(usize, f64)> = counts
        .into_iter()
        .map(|(i, c)| (i, c as f64 * idf_weight(vocab.n_docs, vocab.doc_freq[i])))
        .collect();
    let norm = libm::sqrt(entries.iter().fold(0.0, |acc, &(_, w)| acc + w * w));
    if norm > 0.0 {
        for entry in &mut entries {
            entry.1 /= norm;
        }
    }
    SparseRow { entries }
}

/// The TF-IDF matrix of a processed corpus over its own vocabulary.
pub fn tfidf_matrix(processed: &[Vec<Term>], vocab: &Vocabulary) -> TfidfMatrix {
    TfidfMatrix {
        rows: processed.iter().map(|doc| tfidf_row(doc, vocab)).collect(),
    }
}

impl FromIterator<SparseRow> for TfidfMatrix {
    fn from_iter<I: IntoIterator<Item = SparseRow>>(iter: I) -> Self {
        TfidfMatrix {
            rows: iter.into_iter().collect(),
        }
    }
}
