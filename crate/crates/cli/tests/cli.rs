use std::process::Command;

use floer_cli::envelope::{GroebnerResult, NilpotencyRow, ResultEnvelope, TableRow, VerifyEntry};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

const FLOER: &str = env!("CARGO_BIN_EXE_floer");

fn floer_env(args: &[&str], max_genus: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(FLOER);
    cmd.args(args).env_remove("FLOER_MAX_GENUS");
    if let Some(v) = max_genus {
        cmd.env("FLOER_MAX_GENUS", v);
    }
    let out = cmd.output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn floer(args: &[&str]) -> (i32, String) {
    let (code, out, _) = floer_env(args, None);
    (code, out)
}

fn round_trip<T: Serialize + DeserializeOwned>(args: &[&str]) -> ResultEnvelope<T> {
    let (code, text) = floer(args);
    assert_eq!(code, 0, "{args:?}");
    let raw: Value = serde_json::from_str(&text).unwrap();
    let typed: ResultEnvelope<T> = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_value(&typed).unwrap(), raw, "{args:?}");
    typed
}

#[test]
fn golden_tables() {
    for (which, file) in [
        ("framed", include_str!("golden/framed_1_8.txt")),
        ("critical", include_str!("golden/critical_1_8.txt")),
    ] {
        let (code, text) = floer(&["table", "--which", which, "--genus-range", "1..8"]);
        assert_eq!(code, 0);
        assert_eq!(text, file, "{which}");
    }
}

#[test]
fn json_round_trips() {
    let t: ResultEnvelope<TableRow> = round_trip(&[
        "table",
        "--which",
        "framed",
        "--genus-range",
        "1..8",
        "--format",
        "json",
    ]);
    assert_eq!(t.results.len(), 8);
    round_trip::<TableRow>(&[
        "table",
        "--which",
        "critical",
        "--genus-range",
        "3..5",
        "--format",
        "json",
    ]);
    round_trip::<NilpotencyRow>(&["nilpotency", "--genus-range", "1..4", "--format", "json"]);
    round_trip::<GroebnerResult>(&[
        "groebner", "--family", "J", "--genus", "2", "--format", "json",
    ]);
    let v: ResultEnvelope<VerifyEntry> =
        round_trip(&["verify", "--max-genus", "3", "--format", "json"]);
    assert!(v.summary.ok);
}

#[test]
fn large_integers_are_strings() {
    let (code, text) = floer(&[
        "table",
        "--which",
        "framed",
        "--genus-range",
        "29..30",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&text).unwrap();
    let total = &doc["results"][1]["total"];
    assert_eq!(total, "6179482551340819488");
    // Small values stay numbers.
    let (_, text) = floer(&[
        "table",
        "--which",
        "framed",
        "--genus-range",
        "1",
        "--format",
        "json",
    ]);
    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["results"][0]["total"], 2);
    round_trip::<TableRow>(&[
        "table",
        "--which",
        "framed",
        "--genus-range",
        "28..31",
        "--format",
        "json",
    ]);
}

#[test]
fn envelope_shape() {
    let (_, text) = floer(&["nilpotency", "--genus-range", "1..3", "--format", "json"]);
    let doc: Value = serde_json::from_str(&text).unwrap();
    let mut keys: Vec<&str> = doc
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    keys.sort_unstable();
    assert_eq!(keys, ["command", "config", "results", "summary", "version"]);
    let first = text.lines().nth(1).unwrap();
    assert!(first.trim_start().starts_with("\"version\""), "{first}");
    assert_eq!(doc["command"], "nilpotency");
    assert_eq!(doc["summary"]["ok"], true);
    let degrees: Vec<u64> = doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["degree"].as_u64().unwrap())
        .collect();
    assert_eq!(degrees, [1, 1, 3]);
}

#[test]
fn csv_has_one_row_per_genus_and_grading() {
    let (code, text) = floer(&[
        "table",
        "--which",
        "framed",
        "--genus-range",
        "1..8",
        "--format",
        "csv",
    ]);
    assert_eq!(code, 0);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        [
            "which",
            "genus",
            "epsilon",
            "grading",
            "table_row",
            "value",
            "plus",
            "minus"
        ]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 32);
    let g7: u64 = rows
        .iter()
        .filter(|r| &r[1] == "7")
        .map(|r| r[5].parse::<u64>().unwrap())
        .sum();
    assert_eq!(g7, 38_400);
    for r in &rows {
        let sum = r[6].parse::<u64>().unwrap() + r[7].parse::<u64>().unwrap();
        assert_eq!(sum, r[5].parse::<u64>().unwrap());
    }
}

#[test]
fn groebner_examples() {
    let (code, text) = floer(&[
        "groebner", "--family", "J", "--genus", "1", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&text).unwrap();
    let basis: Vec<&str> = doc["results"][0]["basis"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b.as_str().unwrap())
        .collect();
    assert_eq!(basis, ["γ", "β - 8", "α"]);

    let (_, text) = floer(&[
        "groebner", "--family", "Jplus", "--genus", "5", "--format", "json",
    ]);
    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["results"][0]["degree"], 9);

    let (code, text) = floer(&["groebner", "--family", "Jminus", "--genus", "4"]);
    assert_eq!(code, 0);
    assert!(text.contains("initial ideal: <γ^2, α^2γ, α^4>"), "{text}");
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["nilpotency", "--genus-range", "0..3"], 2),
        (&["nilpotency", "--genus-range", "4..2"], 2),
        (&["nilpotency", "--genus-range", "1..99"], 2),
        (&["table", "--which", "framed", "--genus-range", "0..2"], 2),
        (
            &[
                "table",
                "--which",
                "critical",
                "--genus-range",
                "1..2",
                "--path",
                "linear-algebra",
            ],
            2,
        ),
        (&["table", "--which", "bogus", "--genus-range", "1..2"], 2),
        (&["groebner", "--family", "Iplus", "--genus", "3"], 2),
        (&["groebner", "--family", "J", "--genus", "0"], 2),
        (&["groebner", "--family", "Jminus", "--genus", "0"], 0),
        (&["verify", "--max-genus", "0"], 2),
        (&["verify", "--max-genus", "2"], 0),
        (&["verify", "--max-genus", "3", "--corrupt-recursion"], 1),
        (
            &["nilpotency", "--genus-range", "1..4", "--corrupt-recursion"],
            1,
        ),
        (&["frobnicate"], 2),
    ];
    for (args, want) in cases {
        assert_eq!(floer(args).0, *want, "{args:?}");
    }
}

#[test]
fn environment_budget() {
    let args = ["nilpotency", "--genus-range", "1..4"];
    assert_eq!(floer_env(&args, Some("3")).0, 2);
    assert_eq!(floer_env(&args, Some("4")).0, 0);
    assert_eq!(floer_env(&args, Some("four")).0, 2);
    let (code, text, _) = floer_env(&["verify", "--format", "json"], Some("2"));
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["config"]["budgets"]["tables"], 2);
    assert_eq!(doc["results"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_is_deterministic() {
    let run = || {
        let (code, text) = floer(&[
            "verify",
            "--max-genus",
            "4",
            "--seed",
            "42",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        let mut doc: Value = serde_json::from_str(&text).unwrap();
        doc["summary"].as_object_mut().unwrap().remove("timing");
        doc
    };
    assert_eq!(run(), run());
    let genera: Vec<u64> = run()["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["genus"].as_u64().unwrap())
        .collect();
    assert_eq!(genera, [1, 2, 3, 4]);
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("floer-out-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, stdout) = floer(&["nilpotency", "--genus-range", "1..2", "--out", p]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(written.starts_with("genus"));
}
