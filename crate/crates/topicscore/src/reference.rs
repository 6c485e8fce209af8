//! Comparison of a run against the figures reported by the original
//! ten-document study of national AI strategies.
//!
//! The study's documents are not bundled; users convert them to text and
//! name them with the ids in [`REFERENCE_DOCUMENTS`]. Every check is
//! reported with its observed and expected value, and deviations are listed
//! rather than treated as failures.

use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};

/// Document ids and the number of goals each engaged in the study.
pub const REFERENCE_DOCUMENTS: [(&str, usize); 10] = [
    ("denmark", 15),
    ("finland", 11),
    ("norway", 11),
    ("sweden", 9),
    ("germany", 12),
    ("japan", 12),
    ("uk", 9),
    ("usa", 11),
    ("hleg", 12),
    ("ieee", 12),
];

pub const REFERENCE_TOTAL_KEYWORDS: usize = 131;
pub const REFERENCE_FOUND_KEYWORDS: usize = 74;
/// Goals no document engaged.
pub const REFERENCE_UNENGAGED: &[&str] = &["G5"];
/// The only document without any overarching-term mention.
pub const REFERENCE_NO_OVERARCHING: &str = "uk";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub observed: String,
    pub expected: String,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Comparison {
    pub checks: Vec<Check>,
}

impl Comparison {
    pub fn deviations(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.matches)
    }

    pub fn matched(&self) -> usize {
        self.checks.iter().filter(|c| c.matches).count()
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.matches { "MATCH" } else { "DEVIATION" };
            writeln!(
                f,
                "{verdict:<9} {}: observed {}, reference {}",
                c.name, c.observed, c.expected
            )?;
        }
        write!(
            f,
            "{} of {} checks match the reference figures",
            self.matched(),
            self.checks.len()
        )
    }
}

fn field<'a>(value: &'a Value, key: &str) -> Result<&'a Value> {
    value
        .get(key)
        .ok_or_else(|| Error::Input(format!("coverage report has no `{key}`")))
}

fn as_usize(value: &Value, key: &str) -> Result<usize> {
    field(value, key)?
        .as_u64()
        .map(|v| v as usize)
        .ok_or_else(|| Error::Input(format!("`{key}` is not a count")))
}

/// Compares a `coverage.json` document against the reference figures.
pub fn compare_coverage_json(text: &str) -> Result<Comparison> {
    let report: Value =
        serde_json::from_str(text).map_err(|e| Error::Input(format!("coverage report: {e}")))?;
    let mut checks = Vec::new();

    let total = as_usize(&report, "total_keywords")?;
    let found = as_usize(&report, "found_keywords")?;
    checks.push(Check {
        name: "keyword phrases".into(),
        observed: total.to_string(),
        expected: REFERENCE_TOTAL_KEYWORDS.to_string(),
        matches: total == REFERENCE_TOTAL_KEYWORDS,
    });
    checks.push(Check {
        name: "keywords found in corpus".into(),
        observed: found.to_string(),
        expected: REFERENCE_FOUND_KEYWORDS.to_string(),
        matches: found == REFERENCE_FOUND_KEYWORDS,
    });

    let engagement = field(&report, "engagement")?;
    let documents = field(engagement, "documents")?
        .as_array()
        .ok_or_else(|| Error::Input("`documents` is not a list".into()))?;
    let find = |id: &str| {
        documents.iter().find(|d| {
            d.get("doc_id")
                .and_then(Value::as_str)
                .is_some_and(|v| v.eq_ignore_ascii_case(id))
        })
    };

    for (id, expected) in REFERENCE_DOCUMENTS {
        let name = format!("goals engaged by {id}");
        let Some(doc) = find(id) else {
            checks.push(Check {
                name,
                observed: "document missing".into(),
                expected: expected.to_string(),
                matches: false,
            });
            continue;
        };
        // The reference count may or may not include the overarching topic,
        // so either view counts as agreement.
        let goals = as_usize(doc, "engaged_goals")?;
        let topics = as_usize(doc, "engaged_topics")?;
        checks.push(Check {
            name,
            observed: format!("{goals} (with overarching topic: {topics})"),
            expected: expected.to_string(),
            matches: goals == expected || topics == expected,
        });
    }

    let zero: Vec<&str> = field(engagement, "zero_engagement_topics")?
        .as_array()
        .map(|a| a.iter().filter_map(Value::as_str).collect())
        .unwrap_or_default();
    for topic in REFERENCE_UNENGAGED {
        let observed = zero.contains(topic);
        checks.push(Check {
            name: format!("{topic} engaged by no document"),
            observed: observed.to_string(),
            expected: "true".into(),
            matches: observed,
        });
    }

    let without: Vec<String> = documents
        .iter()
        .filter(|d| d.get("engages_overarching").and_then(Value::as_bool) == Some(false))
        .filter_map(|d| {
            d.get("doc_id")
                .and_then(Value::as_str)
                .map(str::to_lowercase)
        })
        .collect();
    checks.push(Check {
        name: "documents without overarching terms".into(),
        observed: format!("[{}]", without.join(", ")),
        expected: format!("[{REFERENCE_NO_OVERARCHING}]"),
        matches: without == [REFERENCE_NO_OVERARCHING],
    });

    Ok(Comparison { checks })
}
