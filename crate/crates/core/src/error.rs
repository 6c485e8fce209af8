use alloc::string::String;

/// Errors raised by the core pipeline.
///
/// Every variant is a configuration or data-contract problem; the core does
/// no IO.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("corpus has no documents")]
    EmptyCorpus,
    #[error("document id must not be empty")]
    EmptyDocumentId,
    #[error("duplicate document id `{0}`")]
    DuplicateDocumentId(String),
    #[error("invalid tokenizer configuration: {0}")]
    InvalidTokenizerConfig(String),
    #[error("invalid stop word `{0}`: entries must be single lowercase words")]
    InvalidStopword(String),
    #[error("every document is empty after text processing; vocabulary would be empty")]
    EmptyVocabulary,
    #[error("topic model has no topics")]
    EmptyTopicModel,
    #[error("topic field `{field}` is empty (topic `{topic}`)")]
    MissingTopicField { topic: String, field: &'static str },
    #[error("duplicate topic id `{0}`")]
    DuplicateTopicId(String),
    #[error("topic `{0}` has no keywords")]
    EmptyKeywords(String),
    #[error("topic `{topic}` lists keyword `{keyword}` more than once")]
    DuplicateKeyword { topic: String, keyword: String },
    #[error("unknown normalization mode `{0}` (expected none, global-max or per-doc-max)")]
    UnknownNormalization(String),
    #[error("unknown aggregation mode `{0}` (expected sum or mean)")]
    UnknownAggregation(String),
}
