//! Keyword topic models and their canonical form in term space.
//!
//! A [`TopicModel`] is an ordered list of named keyword sets. Before scoring,
//! every keyword phrase is run through the same pipeline as the documents
//! ([`canonicalize_keyword`]), so that a keyword and a document mentioning it
//! share one [`Term`].

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::textproc::{stemmed_tokens, Term, TokenizerConfig};
use crate::{Error, Result};

mod sdg;

pub use sdg::{default_sdg_model, SDG_MODEL_NOTES};

/// A named, non-empty set of keyword phrases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Topic {
    pub id: String,
    pub name: String,
    pub keywords: Vec<String>,
}

impl Topic {
    /// Validates that id, name and keywords are present and that no phrase
    /// repeats (compared case-insensitively with whitespace collapsed).
    pub fn new<I, S>(id: impl Into<String>, name: impl Into<String>, keywords: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let topic = Topic {
            id: id.into(),
            name: name.into(),
            keywords: keywords.into_iter().map(Into::into).collect(),
        };
        topic.validate()?;
        Ok(topic)
    }

    fn validate(&self) -> Result<()> {
        let missing = |field| Error::MissingTopicField {
            topic: self.id.clone(),
            field,
        };
        if self.id.trim().is_empty() {
            return Err(missing("id"));
        }
        if self.name.trim().is_empty() {
            return Err(missing("name"));
        }
        if self.keywords.is_empty() {
            return Err(Error::EmptyKeywords(self.id.clone()));
        }
        let mut seen = BTreeSet::new();
        for keyword in &self.keywords {
            let key = phrase_key(keyword);
            if key.is_empty() {
                return Err(missing("keywords"));
            }
            if !seen.insert(key) {
                return Err(Error::DuplicateKeyword {
                    topic: self.id.clone(),
                    keyword: keyword.clone(),
                });
            }
        }
        Ok(())
    }
}

fn phrase_key(phrase: &str) -> String {
    let lower: String = phrase.chars().flat_map(char::to_lowercase).collect();
    lower.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Ordered topics with unique ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopicModel {
    topics: Vec<Topic>,
}

impl TopicModel {
    pub fn new(topics: Vec<Topic>) -> Result<Self> {
        if topics.is_empty() {
            return Err(Error::EmptyTopicModel);
        }
        let mut ids = BTreeSet::new();
        for topic in &topics {
            topic.validate()?;
            if !ids.insert(topic.id.as_str()) {
                return Err(Error::DuplicateTopicId(topic.id.clone()));
            }
        }
        Ok(TopicModel { topics })
    }

    pub fn topics(&self) -> &[Topic] {
        &self.topics
    }

    pub fn len(&self) -> usize {
        self.topics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.topics.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Topic> {
        self.topics.iter().find(|t| t.id == id)
    }

    /// Total number of keyword phrases over all topics.
    pub fn keyword_count(&self) -> usize {
        self.topics.iter().map(|t| t.keywords.len()).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KeywordStatus {
    /// The phrase reduces to an n-gram the document pipeline can emit.
    MatchedLength,
    /// The phrase reduces to no tokens, or to a token count outside the
    /// configured n-gram range. It can never occur in a document.
    Oversized,
}

impl KeywordStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            KeywordStatus::MatchedLength => "matched-length",
            KeywordStatus::Oversized => "oversized",
        }
    }
}

/// A keyword phrase expressed in document term space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalKeyword {
    pub source_phrase: String,
    /// For matched-length keywords, the single joined term. For oversized
    /// keywords, the surviving stemmed tokens, one term each (possibly none).
    pub canonical: Vec<Term>,
    pub status: KeywordStatus,
}

impl CanonicalKeyword {
    /// The term to look up in a vocabulary, if the keyword can match at all.
    pub fn term(&self) -> Option<&Term> {
        match self.status {
            KeywordStatus::MatchedLength => self.canonical.first(),
            KeywordStatus::Oversized => None,
        }
    }
}

/// Runs a keyword phrase through tokenization, stop-word removal and
/// stemming, then joins the surviving tokens into one n-gram term when their
/// count lies within the configured n-gram range.
pub fn canonicalize_keyword(phrase: &str, config: &TokenizerConfig) -> CanonicalKeyword {
    let tokens = stemmed_tokens(phrase, config);
    let n = tokens.len();
    if n >= 1 && n >= config.ngram_min() && n <= config.ngram_max() {
        CanonicalKeyword {
            source_phrase: phrase.to_string(),
            canonical: alloc::vec![Term::from_tokens(&tokens)],
            status: KeywordStatus::MatchedLength,
        }
    } else {
        CanonicalKeyword {
            source_phrase: phrase.to_string(),
            canonical: tokens.iter().map(|t| Term::from(t.as_str())).collect(),
            status: KeywordStatus::Oversized,
        }
    }
}

/// A topic with canonicalized keywords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalTopic {
    pub id: String,
    pub name: String,
    pub keywords: Vec<CanonicalKeyword>,
    /// Distinct matched-length terms, in first-seen keyword order.
    pub terms: Vec<Term>,
}

/// A topic model expressed in term space, ready for scoring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalModel {
    topics: Vec<CanonicalTopic>,
}

impl CanonicalModel {
    pub fn new(model: &TopicModel, config: &TokenizerConfig) -> Self {
        let topics = model
            .topics()
            .iter()
            .map(|topic| {
                let keywords: Vec<CanonicalKeyword> = topic
                    .keywords
                    .iter()
                    .map(|k| canonicalize_keyword(k, config))
                    .collect();
                let mut terms: Vec<Term> = Vec::new();
                for term in keywords.iter().filter_map(CanonicalKeyword::term) {
                    if !terms.contains(term) {
                        terms.push(term.clone());
                    }
                }
                CanonicalTopic {
                    id: topic.id.clone(),
                    name: topic.name.clone(),
                    keywords,
                    terms,
                }
            })
            .collect();
        CanonicalModel { topics }
    }

    pub fn topics(&self) -> &[CanonicalTopic] {
        &self.topics
    }

    pub fn topic_ids(&self) -> Vec<String> {
        self.topics.iter().map(|t| t.id.clone()).collect()
    }

    pub fn topic_names(&self) -> Vec<String> {
        self.topics.iter().map(|t| t.name.clone()).collect()
    }

    /// Every oversized keyword as `(topic id, keyword)`.
    pub fn oversized(&self) -> impl Iterator<Item = (&str, &CanonicalKeyword)> {
        self.topics.iter().flat_map(|t| {
            t.keywords
                .iter()
                .filter(|k| k.status == KeywordStatus::Oversized)
                .map(move |k| (t.id.as_str(), k))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn canonicalize_examples() {
        let cfg = TokenizerConfig::default();
        let k = canonicalize_keyword("Hunger", &cfg);
        assert_eq!(k.canonical, vec![Term::from("hunger")]);
        assert_eq!(k.status, KeywordStatus::MatchedLength);

        let k = canonicalize_keyword("green energy", &cfg);
        assert_eq!(k.canonical, vec![Term::from("green energi")]);
        assert_eq!(k.status, KeywordStatus::MatchedLength);

        let k = canonicalize_keyword("Sustainable Development Goal", &cfg);
        assert_eq!(k.status, KeywordStatus::Oversized);
        assert_eq!(k.canonical.len(), 3);
        assert_eq!(k.term(), None);
    }

    #[test]
    fn stop_words_inside_keywords_are_bridged() {
        let cfg = TokenizerConfig::default();
        assert_eq!(
            canonicalize_keyword("cessation of hostilities", &cfg).term(),
            Some(&Term::from("cessat hostil"))
        );
        assert_eq!(
            canonicalize_keyword("women\u{2019}s movement", &cfg).term(),
            Some(&Term::from("women movement"))
        );
    }

    #[test]
    fn keyword_of_only_stop_words_is_oversized_and_empty() {
        let k = canonicalize_keyword("of the", &TokenizerConfig::default());
        assert_eq!(k.status, KeywordStatus::Oversized);
        assert!(k.canonical.is_empty());
    }

    #[test]
    fn wider_ngram_range_admits_three_word_keywords() {
        let cfg = TokenizerConfig::new(1, 3, 2, crate::textproc::default_stopwords()).unwrap();
        let k = canonicalize_keyword("Sustainable Development Goal", &cfg);
        assert_eq!(k.term(), Some(&Term::from("sustain develop goal")));
    }

    #[test]
    fn topic_validation() {
        assert_eq!(
            Topic::new("G1", "Poverty", Vec::<String>::new()),
            Err(Error::EmptyKeywords("G1".into()))
        );
        assert!(matches!(
            Topic::new("", "x", ["a"]),
            Err(Error::MissingTopicField { field: "id", .. })
        ));
        assert!(matches!(
            Topic::new("G1", "", ["a"]),
            Err(Error::MissingTopicField { field: "name", .. })
        ));
        assert!(matches!(
            Topic::new("G2", "Hunger", ["Hunger", "hunger "]),
            Err(Error::DuplicateKeyword { .. })
        ));
    }

    #[test]
    fn model_rejects_duplicate_ids() {
        let t = Topic::new("G1", "Poverty", ["poverty"]).unwrap();
        assert_eq!(
            TopicModel::new(vec![t.clone(), t]),
            Err(Error::DuplicateTopicId("G1".into()))
        );
        assert_eq!(TopicModel::new(vec![]), Err(Error::EmptyTopicModel));
    }

    #[test]
    fn shared_stems_collapse_within_topic() {
        let model = TopicModel::new(vec![Topic::new(
            "G4",
            "Education",
            ["training", "trained", "teaching"],
        )
        .unwrap()])
        .unwrap();
        let canonical = CanonicalModel::new(&model, &TokenizerConfig::default());
        let topic = &canonical.topics()[0];
        assert_eq!(topic.keywords.len(), 3);
        assert_eq!(topic.terms, vec![Term::from("train"), Term::from("teach")]);
    }
}
