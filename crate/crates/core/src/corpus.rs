//! Identified plain-text documents and the ordered corpus built from them.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Result};

const UTF8_BOM: &[u8] = &[0xEF, 0xBB, 0xBF];

/// One plain-text document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub id: String,
    pub source_path: String,
    pub text: String,
    /// Number of invalid UTF-8 sequences replaced with U+FFFD while decoding.
    pub repaired_sequences: usize,
}

impl Document {
    pub fn new(
        id: impl Into<String>,
        source_path: impl Into<String>,
        text: impl Into<String>,
    ) -> Self {
        Document {
            id: id.into(),
            source_path: source_path.into(),
            text: text.into(),
            repaired_sequences: 0,
        }
    }

    /// Builds a document from raw file bytes, see [`decode_text`].
    pub fn from_bytes(id: impl Into<String>, source_path: impl Into<String>, bytes: &[u8]) -> Self {
        let (text, repaired_sequences) = decode_text(bytes);
        Document {
            id: id.into(),
            source_path: source_path.into(),
            text,
            repaired_sequences,
        }
    }
}

/// Decodes bytes as UTF-8, dropping a leading byte-order mark.
///
/// Invalid sequences become U+FFFD; the second value counts them.
pub fn decode_text(bytes: &[u8]) -> (String, usize) {
    let bytes = bytes.strip_prefix(UTF8_BOM).unwrap_or(bytes);
    let mut text = String::with_capacity(bytes.len());
    let mut repaired = 0;
    for chunk in bytes.utf8_chunks() {
        text.push_str(chunk.valid());
        if !chunk.invalid().is_empty() {
            text.push(char::REPLACEMENT_CHARACTER);
            repaired += 1;
        }
    }
    (text, repaired)
}

/// A non-empty, ordered list of documents with unique ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    documents: Vec<Document>,
}

impl Corpus {
    pub fn new(documents: Vec<Document>) -> Result<Self> {
        if documents.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        let mut seen = BTreeSet::new();
        for doc in &documents {
            if doc.id.is_empty() {
                return Err(Error::EmptyDocumentId);
            }
            if !seen.insert(doc.id.as_str()) {
                return Err(Error::DuplicateDocumentId(doc.id.to_string()));
            }
        }
        Ok(Corpus { documents })
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    pub fn ids(&self) -> Vec<String> {
        self.documents.iter().map(|d| d.id.clone()).collect()
    }
}
