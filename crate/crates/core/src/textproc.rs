//! Text to terms: tokenization, stop-word removal, stemming and n-grams.
//!
//! [`process`] composes the stages in a fixed order. Stop words are removed
//! before n-grams are formed, so a bigram may bridge a removed word
//! ("cessation of hostilities" yields `cessat hostil`).

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::stem::stem;
use crate::{Error, Result};

/// Embedded English stop-word list; see [`default_stopwords`].
pub const DEFAULT_STOPWORDS_FILE: &str = include_str!("../data/stopwords_en.txt");

/// Version tag of [`DEFAULT_STOPWORDS_FILE`].
pub const DEFAULT_STOPWORDS_VERSION: u32 = 1;

/// One vocabulary unit: a stemmed token, or several joined by single spaces.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term(String);

impl Term {
    /// Joins stemmed tokens with single spaces.
    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Self {
        let mut out = String::new();
        for (i, t) in tokens.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(t.as_ref());
        }
        Term(out)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of space-separated tokens in the term.
    pub fn arity(&self) -> usize {
        self.0.split(' ').count()
    }
}

impl From<&str> for Term {
    fn from(value: &str) -> Self {
        Term(value.to_string())
    }
}

impl core::borrow::Borrow<str> for Term {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Tokenizer and n-gram settings shared by documents and keywords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenizerConfig {
    ngram_min: usize,
    ngram_max: usize,
    min_token_len: usize,
    stopwords: BTreeSet<String>,
}

impl Default for TokenizerConfig {
    /// Unigrams and bigrams, tokens of two or more characters, embedded
    /// stop-word list.
    fn default() -> Self {
        TokenizerConfig {
            ngram_min: 1,
            ngram_max: 2,
            min_token_len: 2,
            stopwords: default_stopwords(),
        }
    }
}

impl TokenizerConfig {
    pub fn new(
        ngram_min: usize,
        ngram_max: usize,
        min_token_len: usize,
        stopwords: BTreeSet<String>,
    ) -> Result<Self> {
        if ngram_min < 1 {
            return Err(Error::InvalidTokenizerConfig(
                "ngram_min must be at least 1".into(),
            ));
        }
        if ngram_max < ngram_min {
            return Err(Error::InvalidTokenizerConfig(alloc::format!(
                "ngram_max ({ngram_max}) is smaller than ngram_min ({ngram_min})"
            )));
        }
        if min_token_len < 1 {
            return Err(Error::InvalidTokenizerConfig(
                "min_token_len must be at least 1".into(),
            ));
        }
        for word in &stopwords {
            validate_stopword(word)?;
        }
        Ok(TokenizerConfig {
            ngram_min,
            ngram_max,
            min_token_len,
            stopwords,
        })
    }

    pub fn ngram_min(&self) -> usize {
        self.ngram_min
    }

    pub fn ngram_max(&self) -> usize {
        self.ngram_max
    }

    pub fn min_token_len(&self) -> usize {
        self.min_token_len
    }

    pub fn stopwords(&self) -> &BTreeSet<String> {
        &self.stopwords
    }
}

fn validate_stopword(word: &str) -> Result<()> {
    let ok = !word.is_empty()
        && !word.chars().any(char::is_whitespace)
        && word.chars().flat_map(char::to_lowercase).eq(word.chars());
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidStopword(word.to_string()))
    }
}

/// Parses a stop-word list: one word per line, `#` starts a comment line,
/// blank lines ignored. Entries are lowercased; an entry containing
/// whitespace is rejected.
pub fn parse_stopword_list(text: &str) -> Result<BTreeSet<String>> {
    let mut words = BTreeSet::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let word: String = line.chars().flat_map(char::to_lowercase).collect();
        validate_stopword(&word)?;
        words.insert(word);
    }
    Ok(words)
}

/// The embedded stop-word list.
pub fn default_stopwords() -> BTreeSet<String> {
    parse_stopword_list(DEFAULT_STOPWORDS_FILE).expect("embedded stop-word list is valid")
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Lowercases `text`, deletes apostrophes and splits it into maximal runs
/// of alphanumeric characters, dropping runs shorter than the configured
/// minimum length (counted in characters).
pub fn tokenize(text: &str, config: &TokenizerConfig) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut len = 0;
    let mut flush = |current: &mut String, len: &mut usize| {
        if *len >= config.min_token_len {
            tokens.push(core::mem::take(current));
        } else {
            current.clear();
        }
        *len = 0;
    };
    for c in text.chars().flat_map(char::to_lowercase) {
        if is_apostrophe(c) {
            continue;
        }
        if c.is_alphanumeric() {
            current.push(c);
            len += 1;
        } else if len > 0 {
            flush(&mut current, &mut len);
        }
    }
    if len > 0 {
        flush(&mut current, &mut len);
    }
    tokens
}

/// Drops every token found in `stopwords`, keeping the order of the rest.
pub fn remove_stopwords(tokens: Vec<String>, stopwords: &BTreeSet<String>) -> Vec<String> {
    tokens
        .into_iter()
        .filter(|t| !stopwords.contains(t))
        .collect()
}

/// All contiguous windows of `ngram_min..=ngram_max` tokens: every unigram
/// in order, then every bigram in order, and so on.
pub fn ngrams<S: AsRef<str>>(tokens: &[S], ngram_min: usize, ngram_max: usize) -> Vec<Term> {
    let mut out = Vec::new();
    for n in ngram_min.max(1)..=ngram_max {
        if n > tokens.len() {
            break;
        }
        out.extend(tokens.windows(n).map(Term::from_tokens));
    }
    out
}

/// Tokenize, drop stop words and stem, without forming n-grams.
pub fn stemmed_tokens(text: &str, config: &TokenizerConfig) -> Vec<String> {
    remove_stopwords(tokenize(text, config), &config.stopwords)
        .iter()
        .map(|t| stem(t))
        .collect()
}

/// The full document pipeline: tokenize, drop stop words, stem, n-grams.
pub fn process(text: &str, config: &TokenizerConfig) -> Vec<Term> {
    ngrams(
        &stemmed_tokens(text, config),
        config.ngram_min,
        config.ngram_max,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn terms(values: &[&str]) -> Vec<Term> {
        values.iter().map(|v| Term::from(*v)).collect()
    }

    fn words(values: &[&str]) -> Vec<String> {
        values.iter().map(|v| v.to_string()).collect()
    }

    #[test]
    fn tokenize_examples() {
        let cfg = TokenizerConfig::default();
        assert_eq!(
            tokenize("Hunger and famine.", &cfg),
            words(&["hunger", "and", "famine"])
        );
        assert_eq!(tokenize("Agenda 2030!", &cfg), words(&["agenda", "2030"]));
        assert_eq!(
            tokenize("women\u{2019}s movement", &cfg),
            words(&["womens", "movement"])
        );
        assert_eq!(
            tokenize("women's movement", &cfg),
            words(&["womens", "movement"])
        );
        assert_eq!(tokenize("", &cfg), Vec::<String>::new());
    }

    #[test]
    fn tokenize_splits_hyphens_and_drops_short_tokens() {
        let cfg = TokenizerConfig::default();
        assert_eq!(
            tokenize("hand-to-mouth existence, a I x", &cfg),
            words(&["hand", "to", "mouth", "existence"])
        );
    }

    #[test]
    fn tokenize_handles_unicode_letters() {
        let cfg = TokenizerConfig::default();
        assert_eq!(
            tokenize("UMEÅ Universitet", &cfg),
            words(&["umeå", "universitet"])
        );
    }

    #[test]
    fn stopword_examples() {
        let stop = default_stopwords();
        assert_eq!(
            remove_stopwords(words(&["hunger", "and", "famine"]), &stop),
            words(&["hunger", "famine"])
        );
        assert_eq!(
            remove_stopwords(words(&["towards", "food"]), &stop),
            words(&["food"])
        );
        assert!(remove_stopwords(vec![], &stop).is_empty());
    }

    #[test]
    fn default_list_has_expected_size_and_entries() {
        let stop = default_stopwords();
        assert!((140..=170).contains(&stop.len()), "{}", stop.len());
        for w in ["the", "and", "towards", "of", "being"] {
            assert!(stop.contains(w), "{w}");
        }
    }

    #[test]
    fn ngram_examples() {
        assert_eq!(
            ngrams(&["hunger", "famin"], 1, 2),
            terms(&["hunger", "famin", "hunger famin"])
        );
        assert_eq!(ngrams(&["food"], 1, 2), terms(&["food"]));
        assert_eq!(
            ngrams(&["green", "energi", "food"], 1, 2),
            terms(&["green", "energi", "food", "green energi", "energi food"])
        );
        assert_eq!(
            ngrams(&["a", "b", "c"], 2, 3),
            terms(&["a b", "b c", "a b c"])
        );
    }

    #[test]
    fn process_examples() {
        let cfg = TokenizerConfig::default();
        assert_eq!(
            process("Hunger and famine.", &cfg),
            terms(&["hunger", "famin", "hunger famin"])
        );
        assert!(process("", &cfg).is_empty());
        assert!(process("and the towards", &cfg).is_empty());
        assert_eq!(
            process("cessation of hostilities", &cfg),
            terms(&["cessat", "hostil", "cessat hostil"])
        );
    }

    #[test]
    fn stems_of_test_vectors_are_fixed_points() {
        for word in [
            "caresses",
            "sdg",
            "energy",
            "hunger",
            "famine",
            "green",
            "food",
            "hostilities",
        ] {
            let once = stem(word);
            assert_eq!(stem(&once), once, "{word}");
        }
    }

    #[test]
    fn config_validation() {
        assert!(TokenizerConfig::new(2, 1, 2, BTreeSet::new()).is_err());
        assert!(TokenizerConfig::new(0, 1, 2, BTreeSet::new()).is_err());
        assert!(TokenizerConfig::new(1, 1, 0, BTreeSet::new()).is_err());
        let upper: BTreeSet<String> = ["The".to_string()].into_iter().collect();
        assert_eq!(
            TokenizerConfig::new(1, 2, 2, upper),
            Err(Error::InvalidStopword("The".into()))
        );
        assert!(TokenizerConfig::new(1, 3, 1, BTreeSet::new()).is_ok());
    }

    #[test]
    fn stopword_file_parsing() {
        let parsed = parse_stopword_list("# header\nThe\n\n  and \n# x\n").unwrap();
        assert_eq!(
            parsed.into_iter().collect::<Vec<_>>(),
            words(&["and", "the"])
        );
        assert_eq!(
            parse_stopword_list("two words\n"),
            Err(Error::InvalidStopword("two words".into()))
        );
    }

    proptest! {
        #[test]
        fn tokens_are_clean(text in "\\PC{0,80}") {
            let cfg = TokenizerConfig::default();
            for tok in tokenize(&text, &cfg) {
                prop_assert!(!tok.is_empty());
                prop_assert!(tok.chars().all(char::is_alphanumeric));
                prop_assert!(tok.chars().count() >= cfg.min_token_len());
            }
        }

        #[test]
        fn ngram_count_identity(tokens in proptest::collection::vec("[a-z]{1,6}", 0..40)) {
            let grams = ngrams(&tokens, 1, 2);
            let n = tokens.len();
            prop_assert_eq!(grams.len(), n + n.saturating_sub(1));
        }

        #[test]
        fn terms_have_single_spaces(text in "[a-zA-Z ,.'-]{0,80}") {
            for term in process(&text, &TokenizerConfig::default()) {
                let s = term.as_str();
                prop_assert!(!s.starts_with(' ') && !s.ends_with(' ') && !s.contains("  "));
                prop_assert!(term.arity() <= 2);
            }
        }

        #[test]
        fn stemming_is_deterministic_and_never_grows(word in "[a-z]{1,12}") {
            let once = stem(&word);
            prop_assert_eq!(stem(&word), once.clone());
            prop_assert!(once.len() <= word.len());
        }
    }
}
