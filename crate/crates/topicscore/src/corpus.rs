//! Reading documents from disk: single files, manifests and directories.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use topicscore_core::corpus::{Corpus, Document};

use crate::error::{Error, Result};

/// Ordered `(id, path)` pairs naming the documents of a corpus.
pub type Manifest = Vec<(String, PathBuf)>;

/// Reads one document, decoding it as UTF-8 with a leading BOM stripped.
/// Invalid byte sequences are replaced and counted on the document.
pub fn read_document(path: &Path, id: &str) -> Result<Document> {
    let bytes = fs::read(path).map_err(|e| Error::read(path, e))?;
    let doc = Document::from_bytes(id, path.display().to_string(), &bytes);
    if doc.repaired_sequences > 0 {
        log::warn!(
            "{id}: replaced {} invalid UTF-8 sequence(s) in {}",
            doc.repaired_sequences,
            path.display()
        );
    }
    Ok(doc)
}

/// Parses a manifest: one `id<TAB>path` per line, `#` comment lines and
/// blank lines ignored. Relative paths resolve against `base_dir`.
pub fn parse_manifest(text: &str, base_dir: &Path) -> Result<Manifest> {
    let mut manifest = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let (id, path) = line.split_once('\t').ok_or_else(|| {
            Error::Config(format!(
                "manifest line {}: expected `id<TAB>path`",
                lineno + 1
            ))
        })?;
        let (id, path) = (id.trim(), path.trim());
        if id.is_empty() || path.is_empty() {
            return Err(Error::Config(format!(
                "manifest line {}: empty id or path",
                lineno + 1
            )));
        }
        manifest.push((id.to_string(), base_dir.join(path)));
    }
    Ok(manifest)
}

pub fn read_manifest(path: &Path) -> Result<Manifest> {
    let text = fs::read_to_string(path).map_err(|e| Error::read(path, e))?;
    let base = path.parent().unwrap_or(Path::new(""));
    parse_manifest(&text, base)
}

/// Every `.txt` file directly inside `dir`, ordered by file name, with the
/// file stem as id.
pub fn directory_manifest(dir: &Path) -> Result<Manifest> {
    let entries = fs::read_dir(dir).map_err(|e| Error::read(dir, e))?;
    let mut files = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::read(dir, e))?;
        let path = entry.path();
        if path.is_file() && path.extension().is_some_and(|ext| ext == "txt") {
            files.push(path);
        }
    }
    files.sort_by(|a, b| a.file_name().cmp(&b.file_name()));
    Ok(files
        .into_iter()
        .map(|p| {
            let id = p
                .file_stem()
                .unwrap_or_default()
                .to_string_lossy()
                .into_owned();
            (id, p)
        })
        .collect())
}

/// Loads every manifest entry, in manifest order.
pub fn load_corpus(manifest: &Manifest) -> Result<Corpus> {
    if manifest.is_empty() {
        return Err(Error::Input("no documents to analyse".into()));
    }
    let mut seen = std::collections::BTreeSet::new();
    for (id, _) in manifest {
        if !seen.insert(id) {
            return Err(Error::Config(format!("duplicate document id `{id}`")));
        }
    }
    let documents = manifest
        .par_iter()
        .map(|(id, path)| {
            read_document(path, id).map_err(|e| match e {
                Error::Input(msg) => Error::Input(format!("document `{id}`: {msg}")),
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Corpus::new(documents)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn read_examples() {
        let dir = tempfile::tempdir().unwrap();
        let empty = dir.path().join("empty.txt");
        fs::write(&empty, b"").unwrap();
        let doc = read_document(&empty, "d1").unwrap();
        assert_eq!((doc.id.as_str(), doc.text.as_str()), ("d1", ""));

        let plain = dir.path().join("plain.txt");
        fs::write(&plain, "Hunger and famine.").unwrap();
        assert_eq!(
            read_document(&plain, "d2").unwrap().text,
            "Hunger and famine."
        );

        let bom = dir.path().join("bom.txt");
        fs::write(&bom, b"\xEF\xBB\xBFSDG").unwrap();
        assert_eq!(read_document(&bom, "d3").unwrap().text.as_bytes(), b"SDG");
    }

    #[test]
    fn missing_file_names_the_path() {
        let err = read_document(Path::new("/nonexistent/doc.txt"), "x").unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("/nonexistent/doc.txt"));
    }

    #[test]
    fn manifest_parsing() {
        let m = parse_manifest(
            "# corpus\n\na\tdocs/a.txt\nb\t/abs/b.txt\n",
            Path::new("/base"),
        )
        .unwrap();
        assert_eq!(
            m,
            vec![
                ("a".to_string(), PathBuf::from("/base/docs/a.txt")),
                ("b".to_string(), PathBuf::from("/abs/b.txt"))
            ]
        );
        assert_eq!(
            parse_manifest("a docs/a.txt\n", Path::new(""))
                .unwrap_err()
                .exit_code(),
            3
        );
    }

    #[test]
    fn load_in_manifest_order_and_reject_duplicates() {
        let dir = tempfile::tempdir().unwrap();
        let (pa, pb) = (dir.path().join("a.txt"), dir.path().join("b.txt"));
        fs::write(&pa, "alpha").unwrap();
        fs::write(&pb, "beta").unwrap();
        let corpus =
            load_corpus(&vec![("b".into(), pb.clone()), ("a".into(), pa.clone())]).unwrap();
        assert_eq!(corpus.ids(), ["b", "a"]);

        let err = load_corpus(&vec![("a".into(), pa), ("a".into(), pb)]).unwrap_err();
        assert_eq!(err.exit_code(), 3);

        let err = load_corpus(&vec![("gone".into(), dir.path().join("gone.txt"))]).unwrap_err();
        assert!(err.to_string().contains("document `gone`"), "{err}");
    }

    #[test]
    fn directory_mode_sorts_txt_files() {
        let dir = tempfile::tempdir().unwrap();
        for name in ["b.txt", "a.txt", "notes.md", "c.TXT"] {
            fs::write(dir.path().join(name), "x").unwrap();
        }
        let ids: Vec<String> = directory_manifest(dir.path())
            .unwrap()
            .into_iter()
            .map(|(id, _)| id)
            .collect();
        assert_eq!(ids, ["a", "b"]);
    }
}
