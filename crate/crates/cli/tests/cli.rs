use std::io::Write;
use std::process::{Command, Output};

fn flagdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagdist"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = flagdist(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    flagdist(args).status.code().unwrap()
}

fn document_file(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

fn analyze(json: &str, extra: &[&str]) -> String {
    let f = document_file(json);
    let path = f.path().to_str().unwrap().to_string();
    let mut args = vec!["analyze", path.as_str()];
    args.extend_from_slice(extra);
    stdout_of(&args)
}

fn field<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key:?} line in\n{report}"))
}

#[test]
fn count_examples() {
    assert_eq!(stdout_of(&["count", "motzkin", "--n", "9"]), "835\n");
    assert_eq!(stdout_of(&["count", "catalan", "--n", "10"]), "16796\n");
    assert_eq!(stdout_of(&["count", "elevated", "--n", "1"]), "0\n");
    assert_eq!(stdout_of(&["count", "riordan", "--n", "2"]), "1\n");
    assert_eq!(stdout_of(&["count", "area", "--n", "8", "--d", "6"]), "41\n");
    assert_eq!(stdout_of(&["count", "disjoint", "--n", "6", "--d", "5"]), "1\n");
    assert_eq!(stdout_of(&["count", "disjoint", "--n", "6", "--d", "4"]), "0\n");
    // Exact decimal, no overflow.
    assert_eq!(
        stdout_of(&["count", "motzkin", "--n", "100"]),
        "737415571391164350797051905752637361193303669\n"
    );
}

const AREA_ROWS: [&[u64]; 9] = [
    &[1],
    &[1],
    &[1, 1],
    &[1, 2, 1],
    &[1, 3, 3, 1, 1],
    &[1, 4, 6, 4, 3, 2, 1],
    &[1, 5, 10, 10, 8, 7, 5, 3, 1, 1],
    &[1, 6, 15, 20, 19, 18, 16, 12, 8, 6, 3, 2, 1],
    &[1, 7, 21, 35, 40, 41, 41, 36, 29, 23, 18, 12, 9, 5, 3, 1, 1],
];

fn table_body(text: &str) -> Vec<(usize, Vec<String>)> {
    text.lines()
        .skip(1)
        .map(|l| {
            let (label, cells) = l.split_once('|').unwrap();
            (
                label.trim().parse().unwrap(),
                cells.split_whitespace().map(str::to_string).collect(),
            )
        })
        .collect()
}

#[test]
fn area_table_reproduced() {
    let text = stdout_of(&["table", "area", "--max-n", "8"]);
    let header: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
    assert_eq!(header[..2], ["n\\k", "|"]);
    assert_eq!(header.len(), 2 + 17);
    let body = table_body(&text);
    assert_eq!(body.len(), 9);
    for (n, (label, cells)) in body.into_iter().enumerate() {
        assert_eq!(label, n);
        let expected: Vec<String> = AREA_ROWS[n].iter().map(u64::to_string).collect();
        assert_eq!(cells, expected, "row {n}");
    }
}

#[test]
fn disjoint_table_reproduced() {
    let expected: [&[u64]; 7] = [
        &[1],
        &[1],
        &[1, 1],
        &[1, 2, 1],
        &[1, 3, 3, 1, 1],
        &[1, 4, 6, 4, 3, 2, 1],
        &[1, 5, 10, 10, 8, 7, 5, 3, 1, 1],
    ];
    let text = stdout_of(&["table", "disjoint", "--max-n", "8"]);
    let body = table_body(&text);
    assert_eq!(body.len(), 7);
    for ((label, cells), row) in body.into_iter().zip(expected) {
        let n = label;
        let dashes = cells.iter().take_while(|c| *c == "-").count();
        assert_eq!(dashes, n - 1, "row {n}");
        let values: Vec<u64> = cells[dashes..].iter().map(|c| c.parse().unwrap()).collect();
        assert_eq!(values, row, "row {n}");
    }
}

#[test]
fn table_edges() {
    let text = stdout_of(&["table", "area", "--max-n", "0"]);
    let body = table_body(&text);
    assert_eq!(body, vec![(0, vec!["1".to_string()])]);
    assert!(text.lines().all(|l| l == l.trim_end()));
    assert_eq!(exit_code(&["table", "area", "--max-n", "21"]), 1);
    assert_eq!(exit_code(&["table", "disjoint", "--max-n", "20"]), 0);
}

#[test]
fn convert_examples() {
    assert_eq!(stdout_of(&["convert", "to-path", "1,2,2,3,2,1,1,0"]), "UUHUDDHDH\n");
    assert_eq!(stdout_of(&["convert", "to-vector", "UUUDDUHDD"]), "1,2,3,2,1,2,2,1\n");
    assert_eq!(stdout_of(&["convert", "to-path", "0,0,0"]), "HHHH\n");
    assert_eq!(stdout_of(&["convert", "to-vector", "HHHH"]), "0,0,0\n");
}

#[test]
fn convert_rejections_are_validation_errors() {
    for bad in ["0,2,0", "1,2", "-1,0", "1,x"] {
        let out = flagdist(&["convert", "to-path", bad]);
        assert_eq!(out.status.code(), Some(2), "{bad}");
        assert!(!out.stderr.is_empty());
    }
    for bad in ["UUD", "DU", "UXD"] {
        assert_eq!(exit_code(&["convert", "to-vector", bad]), 2, "{bad}");
    }
    let err = String::from_utf8(flagdist(&["path", "area", "UUXD"]).stderr).unwrap();
    assert!(err.contains("index 2"), "{err}");
}

#[test]
fn path_examples() {
    assert_eq!(stdout_of(&["path", "area", "UUHUDDHDH"]), "12\n");
    assert_eq!(stdout_of(&["path", "decompose", "UUDDUUHDD"]), "UUDD:4 UUHDD:6 total:10\n");
    assert_eq!(stdout_of(&["path", "strips", "UD"]), "(1,2):1\n");
    assert_eq!(
        stdout_of(&["path", "strips", "UUUDDUHDD"]),
        "(1,9):8 (2,5):3 (3,4):1 (6,8):2\n"
    );
    assert_eq!(stdout_of(&["path", "draw", "UHD"]), " _\n/ \\\n");
    assert_eq!(stdout_of(&["path", "draw", "HH"]), "__\n");
}

#[test]
fn enum_examples() {
    assert_eq!(stdout_of(&["enum", "--n", "2"]), "UD\nHH\n");
    assert_eq!(stdout_of(&["enum", "--n", "4", "--area", "2"]).lines().count(), 3);
    assert_eq!(stdout_of(&["enum", "--n", "3", "--class", "elevated"]), "UHD\n");
    assert_eq!(stdout_of(&["enum", "--n", "0"]), "\n");
    for (class, count) in [("all", "motzkin"), ("elevated", "elevated"), ("riordan", "riordan")] {
        let lines = stdout_of(&["enum", "--n", "9", "--class", class]).lines().count();
        let expected = stdout_of(&["count", count, "--n", "9"]);
        assert_eq!(lines.to_string(), expected.trim(), "{class}");
    }
    assert_eq!(exit_code(&["enum", "--n", "19"]), 1);
    assert_eq!(stdout_of(&["enum", "--n", "40", "--limit", "2"]).lines().count(), 2);
}

#[test]
fn realize_examples() {
    let doc = stdout_of(&["realize", "--n", "4", "--q", "2", "--vector", "1,1,0"]);
    assert!(doc.contains("\"distance_vector\": \"1,1,0\""));
    let v: serde_json::Value = serde_json::from_str(&doc).unwrap();
    assert_eq!(v["flags"].as_array().unwrap().len(), 2);

    let doc = stdout_of(&["realize", "--n", "3", "--q", "2", "--vector", "0,0"]);
    let v: serde_json::Value = serde_json::from_str(&doc).unwrap();
    assert_eq!(v["flags"][0], v["flags"][1]);

    let doc = stdout_of(&["realize", "--n", "4", "--q", "3", "--vector", "1,2,1"]);
    let v: serde_json::Value = serde_json::from_str(&doc).unwrap();
    assert_eq!(v["verification"]["flag_distance"], 4);
    assert_eq!(v["verification"]["disjoint"], true);

    assert_eq!(
        doc,
        stdout_of(&["realize", "--n", "4", "--q", "3", "--vector", "1,2,1"])
    );
}

#[test]
fn realize_rejections() {
    assert_eq!(exit_code(&["realize", "--n", "4", "--q", "4", "--vector", "1,2,1"]), 2);
    assert_eq!(exit_code(&["realize", "--n", "4", "--q", "2", "--vector", "1,2"]), 2);
    assert_eq!(exit_code(&["realize", "--n", "4", "--q", "2", "--vector", "2,1,0"]), 2);
    assert_eq!(exit_code(&["realize", "--n", "4", "--q", "2"]), 1);
}

#[test]
fn realize_then_analyze_round_trip() {
    for (n, q, vector) in [
        ("4", "2", "1,1,0"),
        ("4", "3", "1,2,1"),
        ("6", "5", "1,2,2,1,0"),
        ("9", "2", "1,2,2,3,2,1,1,0"),
        ("7", "7", "0,1,0,1,1,0"),
    ] {
        let doc = stdout_of(&["realize", "--n", n, "--q", q, "--vector", vector]);
        let report = analyze(&doc, &["--all-pairs"]);
        let sum: usize = vector.split(',').map(|c| c.parse::<usize>().unwrap()).sum();
        assert_eq!(field(&report, "size"), "2");
        assert_eq!(field(&report, "min distance"), sum.to_string(), "{vector}");
        assert_eq!(
            field(&report, "distance vectors at min distance"),
            format!("({vector})")
        );
    }
}

const TYPE_135_CODE: &str = r#"{"n": 6, "q": 2, "type": [1, 3, 5], "flags": [
  [[[1,0,0,0,0,0]], [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0]],
   [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0]]],
  [[[0,0,0,0,1,0]], [[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]],
   [[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]],
  [[[0,0,0,0,0,1]], [[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]],
   [[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]],
  [[[0,1,0,0,0,0]], [[0,1,0,0,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]],
   [[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]]
]}"#;

const FULL_CODE_N4: &str = r#"{"n": 4, "q": 2, "type": [1, 2, 3], "flags": [
  [[1,0,0,0],[0,1,0,0],[0,0,0,1]],
  [[1,0,0,0],[0,0,1,0],[0,1,0,0]],
  [[0,1,0,0],[0,0,1,0],[1,0,0,0]]
]}"#;

#[test]
fn analyze_non_full_example() {
    let report = analyze(TYPE_135_CODE, &[]);
    assert_eq!(field(&report, "size"), "4");
    assert_eq!(field(&report, "type"), "(1,3,5)");
    assert_eq!(field(&report, "min distance"), "2");
    assert_eq!(field(&report, "distance vectors at min distance"), "(1,0,1) (1,1,0)");
    assert_eq!(field(&report, "projected sizes"), "4,3,3");
    assert_eq!(field(&report, "disjoint"), "no");
    assert!(!report.contains("potential"));
    assert!(!report.contains("pairs:"));
}

#[test]
fn analyze_full_example() {
    let report = analyze(FULL_CODE_N4, &["--all-pairs"]);
    assert_eq!(field(&report, "type"), "(1,2,3) (full)");
    assert_eq!(field(&report, "min distance"), "2");
    assert_eq!(field(&report, "max distance bound"), "4");
    assert_eq!(field(&report, "distance vectors at min distance"), "(0,1,1) (1,1,0)");
    assert_eq!(field(&report, "potential vectors T(4,2)"), "3");
    assert_eq!(field(&report, "disjoint"), "no");
    assert!(report.contains("  1-2: (0,1,1) distance 2\n"));
    assert!(report.contains("  1-3: (1,1,1) distance 3\n"));
    assert!(report.contains("  2-3: (1,1,0) distance 2\n"));
}

#[test]
fn analyze_disjoint_and_singleton() {
    let disjoint = r#"{"n": 4, "q": 2, "type": [1, 2, 3], "flags": [
      [[1,0,0,0],[0,1,0,0],[0,0,0,1]],
      [[0,1,0,0],[0,0,1,0],[1,0,0,0]]
    ]}"#;
    let report = analyze(disjoint, &[]);
    assert_eq!(field(&report, "disjoint"), "yes");
    assert_eq!(field(&report, "min distance"), "3");
    assert_eq!(field(&report, "potential disjoint vectors T(2,0)"), "1");

    let single = r#"{"n": 3, "q": 5, "type": [1, 2], "flags": [[[1,2,3],[0,1,4]]]}"#;
    let report = analyze(single, &[]);
    assert_eq!(field(&report, "min distance"), "0");
    assert_eq!(
        field(&report, "distance vectors at min distance"),
        "none (single flag)"
    );
}

#[test]
fn analyze_rejections() {
    let not_nested = r#"{"n": 3, "q": 2, "type": [1, 2], "flags": [[[[1,0,0]], [[0,1,0],[0,0,1]]]]}"#;
    let f = document_file(not_nested);
    let out = flagdist(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("flag 1: subspace 1 is not contained in subspace 2"), "{err}");

    let wrong_dim = r#"{"n": 3, "q": 2, "type": [1, 2], "flags": [[[[1,0,0]], [[1,0,0],[1,0,0]]]]}"#;
    let f = document_file(wrong_dim);
    let err = String::from_utf8(flagdist(&["analyze", f.path().to_str().unwrap()]).stderr).unwrap();
    assert!(err.contains("flag 1, subspace 2"), "{err}");

    assert_eq!(exit_code(&["analyze", "/nonexistent/code.json"]), 2);
    let f = document_file("[1, 2");
    assert_eq!(exit_code(&["analyze", f.path().to_str().unwrap()]), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(exit_code(&[]), 1);
    assert_eq!(exit_code(&["frobnicate"]), 1);
    assert_eq!(exit_code(&["count", "motzkin", "--n", "-3"]), 1);
    assert_eq!(exit_code(&["count", "motzkin", "--n", "nine"]), 1);
    assert_eq!(exit_code(&["count", "area", "--n", "4"]), 1);
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["--version"]), 0);
}
