//! The JSON vocabulary file holding a topic model.
//!
//! ```json
//! {
//!   "notes": ["optional free text"],
//!   "topics": [
//!     { "id": "G2", "name": "Hunger", "keywords": ["Hunger", "famine"] }
//!   ]
//! }
//! ```

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use topicscore_core::topics::{default_sdg_model, Topic, TopicModel, SDG_MODEL_NOTES};

use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VocabularyFile {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
    topics: Vec<TopicEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TopicEntry {
    id: String,
    name: String,
    keywords: Vec<String>,
}

pub fn parse_topic_model(text: &str) -> Result<TopicModel> {
    let file: VocabularyFile =
        serde_json::from_str(text).map_err(|e| Error::Config(format!("vocabulary file: {e}")))?;
    let topics = file
        .topics
        .into_iter()
        .map(|t| Topic::new(t.id, t.name, t.keywords))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TopicModel::new(topics)?)
}

pub fn load_topic_model(path: &Path) -> Result<TopicModel> {
    let text = fs::read_to_string(path).map_err(|e| Error::read(path, e))?;
    parse_topic_model(&text).map_err(|e| match e {
        Error::Config(msg) => Error::config_file(path, msg),
        other => other,
    })
}

/// Serializes a model, with optional notes, as pretty JSON ending in a newline.
pub fn topic_model_json(model: &TopicModel, notes: &[&str]) -> String {
    let file = VocabularyFile {
        notes: notes.iter().map(|n| n.to_string()).collect(),
        topics: model
            .topics()
            .iter()
            .map(|t| TopicEntry {
                id: t.id.clone(),
                name: t.name.clone(),
                keywords: t.keywords.clone(),
            })
            .collect(),
    };
    let mut json = serde_json::to_string_pretty(&file).expect("vocabulary serializes");
    json.push('\n');
    json
}

/// The built-in SDG model in vocabulary file format.
pub fn default_vocabulary_json() -> String {
    topic_model_json(&default_sdg_model(), SDG_MODEL_NOTES)
}

pub fn export_default_vocabulary(path: &Path) -> Result<()> {
    fs::write(path, default_vocabulary_json()).map_err(|e| Error::write(path, e))
}
