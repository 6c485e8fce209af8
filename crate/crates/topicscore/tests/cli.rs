use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use topicscore::vocabulary::load_topic_model;
use topicscore_core::topics::default_sdg_model;

fn fixture_corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/corpus")
}

fn topicscore(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_topicscore"))
        .args(args)
        .env("RUST_LOG", "warn")
        .output()
        .expect("binary runs")
}

fn path_str(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn listing(dir: &Path) -> Vec<String> {
    let mut names: Vec<String> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    names
}

#[test]
fn happy_path_writes_four_files() {
    let tmp = tempfile::tempdir().unwrap();
    let docs = tmp.path().join("docs");
    fs::create_dir(&docs).unwrap();
    fs::write(docs.join("d1.txt"), "hunger and famine").unwrap();
    fs::write(docs.join("d2.txt"), "green energy for food").unwrap();
    fs::write(docs.join("d3.txt"), "food food hunger").unwrap();
    let out = tmp.path().join("out");

    let result = topicscore(&["--input", path_str(&docs), "--output-dir", path_str(&out)]);
    assert!(
        result.status.success(),
        "{}",
        String::from_utf8_lossy(&result.stderr)
    );
    assert_eq!(
        listing(&out),
        ["config.json", "coverage.json", "heatmap.svg", "scores.csv"]
    );

    let scores = fs::read_to_string(out.join("scores.csv")).unwrap();
    assert_eq!(
        scores.lines().next().unwrap(),
        "topic_id,topic_name,d1,d2,d3"
    );
    assert_eq!(scores.lines().count(), 18);
    assert!(result.stdout.is_empty());
}

#[test]
fn exit_codes_by_category() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("out");

    let missing = topicscore(&[
        "--input",
        "/nonexistent/corpus",
        "--output-dir",
        path_str(&out),
    ]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("input error"));
    assert!(!out.exists());

    let corpus = fixture_corpus();
    let bad_mode = topicscore(&[
        "--input",
        path_str(&corpus),
        "--normalize",
        "softmax",
        "--output-dir",
        path_str(&out),
    ]);
    assert_eq!(bad_mode.status.code(), Some(3));

    let bad_ngram = topicscore(&[
        "--input",
        path_str(&corpus),
        "--ngram-max",
        "0",
        "--output-dir",
        path_str(&out),
    ]);
    assert_eq!(bad_ngram.status.code(), Some(3));

    let bad_flag = topicscore(&["--frobnicate"]);
    assert_eq!(bad_flag.status.code(), Some(3));

    let no_input = topicscore(&["--output-dir", path_str(&out)]);
    assert_eq!(no_input.status.code(), Some(3));
    assert!(!out.exists());
}

#[test]
fn unwritable_output_leaves_nothing_behind() {
    let tmp = tempfile::tempdir().unwrap();
    let blocker = tmp.path().join("file");
    fs::write(&blocker, "not a directory").unwrap();
    let out = blocker.join("out");
    let result = topicscore(&[
        "--input",
        path_str(&fixture_corpus()),
        "--output-dir",
        path_str(&out),
    ]);
    assert_eq!(result.status.code(), Some(4));
    assert_eq!(fs::read_to_string(&blocker).unwrap(), "not a directory");
}

#[cfg(unix)]
#[test]
fn partial_outputs_removed_on_failure() {
    use topicscore::pipeline::write_outputs;
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("out");
    // The second file's name is a directory, so writing it fails.
    fs::create_dir_all(out.join("coverage.json")).unwrap();
    let outputs = vec![
        ("scores.csv", "a\n".to_string()),
        ("coverage.json", "{}".to_string()),
    ];
    let err = write_outputs(&out, &outputs).unwrap_err();
    assert_eq!(err.exit_code(), 4);
    assert!(!out.join("scores.csv").exists());
}

#[test]
fn export_default_vocabulary_round_trips() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("sdg.json");
    let result = topicscore(&["--export-default-vocabulary", path_str(&path)]);
    assert!(result.status.success());
    let model = load_topic_model(&path).unwrap();
    assert_eq!(model, default_sdg_model());
    assert_eq!(model.len(), 17);
    assert!(model.get("G0").unwrap().keywords.iter().any(|k| k == "SDG"));

    let bundled = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/sdg_vocabulary.json");
    assert_eq!(
        fs::read_to_string(&path).unwrap(),
        fs::read_to_string(bundled).unwrap(),
        "data/sdg_vocabulary.json is stale; re-export it"
    );
}

#[test]
fn export_default_stopwords() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("stop.txt");
    assert!(topicscore(&["--export-default-stopwords", path_str(&path)])
        .status
        .success());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.contains("# version: 1"));
    assert!(text.lines().any(|l| l == "towards"));
}

#[test]
fn manifest_wins_over_input_and_sets_order() {
    let tmp = tempfile::tempdir().unwrap();
    let corpus = fixture_corpus();
    let manifest = tmp.path().join("manifest.tsv");
    fs::write(
        &manifest,
        format!(
            "# id\tpath\nsecond\t{}\nfirst\t{}\n",
            corpus.join("beta.txt").display(),
            corpus.join("alpha.txt").display()
        ),
    )
    .unwrap();
    let out = tmp.path().join("out");
    let result = topicscore(&[
        "--input",
        path_str(&corpus),
        "--manifest",
        path_str(&manifest),
        "--output-dir",
        path_str(&out),
    ]);
    assert!(
        result.status.success(),
        "{}",
        String::from_utf8_lossy(&result.stderr)
    );
    let scores = fs::read_to_string(out.join("scores.csv")).unwrap();
    assert_eq!(
        scores.lines().next().unwrap(),
        "topic_id,topic_name,second,first"
    );
}

#[test]
fn config_echo_reproduces_the_run() {
    let tmp = tempfile::tempdir().unwrap();
    let first = tmp.path().join("first");
    let result = topicscore(&[
        "--input",
        path_str(&fixture_corpus()),
        "--output-dir",
        path_str(&first),
        "--normalize",
        "per-doc-max",
        "--bands",
        "4",
        "--dump-matrix",
    ]);
    assert!(result.status.success());
    let again = topicscore(&["--config", path_str(&first.join("config.json"))]);
    assert!(again.status.success());
    // Same output directory, same bytes: rerun from the echo alone.
    let second = tmp.path().join("second");
    let rerun = topicscore(&[
        "--config",
        path_str(&first.join("config.json")),
        "--output-dir",
        path_str(&second),
    ]);
    assert!(rerun.status.success());
    for name in ["scores.csv", "coverage.json", "heatmap.svg", "tfidf.csv"] {
        assert_eq!(
            fs::read(first.join(name)).unwrap(),
            fs::read(second.join(name)).unwrap(),
            "{name}"
        );
    }
    let heatmap = fs::read_to_string(second.join("heatmap.svg")).unwrap();
    assert!(heatmap.contains("[0.75, 1.00]"));
}

#[test]
fn custom_vocabulary_and_stopwords() {
    let tmp = tempfile::tempdir().unwrap();
    let vocab = tmp.path().join("vocab.json");
    fs::write(
        &vocab,
        r#"{"topics": [
            {"id": "P", "name": "Privacy", "keywords": ["privacy", "data protection"]},
            {"id": "T", "name": "Trust", "keywords": ["trust", "transparency"]}
        ]}"#,
    )
    .unwrap();
    let stop = tmp.path().join("stop.txt");
    fs::write(&stop, "the\nand\n").unwrap();
    let out = tmp.path().join("out");
    let result = topicscore(&[
        "--input",
        path_str(&fixture_corpus()),
        "--vocabulary",
        path_str(&vocab),
        "--stopwords",
        path_str(&stop),
        "--overarching-topic",
        "",
        "--output-dir",
        path_str(&out),
    ]);
    assert!(
        result.status.success(),
        "{}",
        String::from_utf8_lossy(&result.stderr)
    );
    let scores = fs::read_to_string(out.join("scores.csv")).unwrap();
    let rows: Vec<&str> = scores.lines().skip(1).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("P,Privacy,"));
    let config = fs::read_to_string(out.join("config.json")).unwrap();
    assert!(config.contains("vocab.json") && config.contains("stop.txt"));

    let bad_vocab = tmp.path().join("bad.json");
    fs::write(
        &bad_vocab,
        r#"{"topics": [{"id": "P", "name": "x", "keywords": []}]}"#,
    )
    .unwrap();
    let result = topicscore(&[
        "--input",
        path_str(&fixture_corpus()),
        "--vocabulary",
        path_str(&bad_vocab),
    ]);
    assert_eq!(result.status.code(), Some(3));
}

#[test]
fn compare_reference_reports_deviations() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("out");
    assert!(topicscore(&[
        "--input",
        path_str(&fixture_corpus()),
        "--output-dir",
        path_str(&out)
    ])
    .status
    .success());
    let result = topicscore(&["--compare-reference", path_str(&out.join("coverage.json"))]);
    assert!(result.status.success());
    let stdout = String::from_utf8(result.stdout).unwrap();
    assert!(stdout.contains("DEVIATION goals engaged by denmark: observed document missing"));
    assert!(stdout
        .lines()
        .last()
        .unwrap()
        .ends_with("checks match the reference figures"));
}

/// Golden files for the fixture corpus. Set `UPDATE_GOLDEN=1` to rewrite.
#[test]
fn golden_outputs() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("out");
    let result = topicscore(&[
        "--input",
        path_str(&fixture_corpus()),
        "--output-dir",
        path_str(&out),
        "--dump-matrix",
    ]);
    assert!(
        result.status.success(),
        "{}",
        String::from_utf8_lossy(&result.stderr)
    );
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for name in ["scores.csv", "coverage.json", "heatmap.svg", "tfidf.csv"] {
        let actual = fs::read_to_string(out.join(name)).unwrap();
        let expected_path = golden.join(name);
        if std::env::var_os("UPDATE_GOLDEN").is_some() {
            fs::write(&expected_path, &actual).unwrap();
            continue;
        }
        let expected = fs::read_to_string(&expected_path).unwrap_or_default();
        assert_eq!(actual, expected, "{name} differs from golden copy");
    }
}
