//! Brute-force TF-IDF, written directly from the weighting formula with no
//! shared code: dense loops over raw term strings, linear document-frequency
//! scans and `f64::ln` from std.

use std::collections::HashMap;

/// Returns `weights[doc][term]` for every term the document contains.
pub fn brute_force_tfidf(docs: &[Vec<String>]) -> Vec<HashMap<String, f64>> {
    let n = docs.len() as f64;
    docs.iter()
        .map(|doc| {
            let mut raw: HashMap<String, f64> = HashMap::new();
            for term in doc {
                if raw.contains_key(term) {
                    continue;
                }
                let count = doc.iter().filter(|t| *t == term).count() as f64;
                let df = docs.iter().filter(|d| d.contains(term)).count() as f64;
                let idf = ((1.0 + n) / (1.0 + df)).ln() + 1.0;
                raw.insert(term.clone(), count * idf);
            }
            let norm = raw.values().map(|w| w * w).sum::<f64>().sqrt();
            raw.into_iter()
                .map(|(t, w)| (t, if norm > 0.0 { w / norm } else { 0.0 }))
                .collect()
        })
        .collect()
}
