use std::fs;
use std::process::{Command, Output};

use actiongraphs::graph::{AnyGraph, GraphDocument};
use actiongraphs::{
    build_super, Certificate, GateReport, InferenceReport, NTable, Outcome, VerificationReport,
};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_actiongraphs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("actiongraphs-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn seq_prints_one_value_per_line() {
    let out = run(&["seq", "fuss:2", "--count", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1\n1\n3\n12\n55\n");
    let out = run(&["seq", "super-catalan:1", "--count", "5", "--json"]);
    let values: Vec<u64> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(values, [2, 2, 4, 10, 28]);
}

#[test]
fn big_values_stay_exact_in_json() {
    let out = run(&["seq", "catalan", "--count", "61", "--json"]);
    let text = stdout(&out);
    // C_60 does not fit in 64 bits.
    assert!(text.contains("1583850964596120042686772779038896"));
}

#[test]
fn triangle_tables() {
    let out = run(&["triangle", "--rows", "9"]);
    let text = stdout(&out);
    let last = text.lines().last().unwrap();
    let cells: Vec<&str> = last.split_whitespace().collect();
    assert_eq!(
        cells,
        ["8", "1", "8", "35", "110", "275", "572", "1001", "1430", "1430"]
    );

    let out = run(&["triangle", "--rows", "4", "--ab"]);
    let text = stdout(&out);
    let row4: Vec<&str> = text.lines().last().unwrap().split_whitespace().collect();
    assert_eq!(row4, ["4", "1/4", "3/3", "5/2", "5/1"]);
}

#[test]
fn infer_exit_codes_and_text() {
    let out = run(&["infer", "--seq", "internal-triangles"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("forced=98 available=72"));
    assert!(text.contains("28 (length 0 from label 2)"));

    assert_eq!(code(&run(&["infer", "--seq", "catalan", "--integral"])), 0);
    assert_eq!(
        code(&run(&["infer", "--seq", "super-catalan", "--integral"])),
        1
    );
    assert_eq!(code(&run(&["infer", "--seq", "super-catalan"])), 0);
}

#[test]
fn infer_json_round_trips() {
    let out = run(&["infer", "--seq", "internal-triangles", "--json"]);
    let report: InferenceReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(matches!(
        report.outcome,
        Outcome::Contradiction { step: 3, .. }
    ));
    let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
    assert_eq!(again, stdout(&out));
}

#[test]
fn gate_from_file_and_inline() {
    let path = scratch("seq.txt");
    fs::write(&path, "# Example\n1\n4\n14\n48\n").unwrap();
    let out = run(&["gate", "--seq-file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("s_1^2 = 16 > s_2 = 14"));

    let out = run(&["gate", "--seq", "triangle-column:2", "--json"]);
    assert_eq!(code(&out), 1);
    let report: GateReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.violated, Some(actiongraphs::Lemma::LemmaS0));

    assert_eq!(code(&run(&["gate", "--seq", "catalan"])), 0);
    assert_eq!(code(&run(&["gate", "--seq", "triangle-diagonal:2"])), 0);
}

#[test]
fn certify_picks_the_cheapest_certificate() {
    let out = run(&["certify", "--seq", "triangle-row:4", "--json"]);
    assert_eq!(code(&out), 1);
    let cert: Certificate = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(matches!(cert, Certificate::Gate(_)));

    let out = run(&["certify", "--seq", "internal-triangles", "--json"]);
    assert_eq!(code(&out), 1);
    let cert: Certificate = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(matches!(cert, Certificate::Inference(_)));
}

#[test]
fn ntable_formats() {
    let out = run(&["ntable", "--n", "3", "--csv"]);
    assert_eq!(
        stdout(&out),
        "l\\v,0,1,2,3\n0,0,0,0,20\n1,4,4,12,0\n2,8,8,0,0\n3,8,0,0,0\n"
    );
    let out = run(&["ntable", "--n", "4", "--json"]);
    let table: NTable = serde_json::from_str(&stdout(&out)).unwrap();
    let fam = build_super(4).unwrap();
    assert_eq!(table, actiongraphs::compute_ntable(&fam, 4).unwrap());
}

#[test]
fn verify_reports() {
    let out = run(&["verify", "--n-max", "7"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("6 -> 7"));
    let out = run(&["verify", "--n-max", "5", "--json"]);
    let report: VerificationReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.passed());
    assert_eq!(report.transitions.len(), 5);
}

#[test]
fn build_outputs() {
    let out = run(&["build", "super", "--n", "3", "--format", "dot"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph G {"));
    assert!(dot.contains("[label=\"×4\"]"));

    let out = run(&["build", "super", "--n", "3", "--format", "json"]);
    let AnyGraph::Condensed(g) = GraphDocument::from_json(&stdout(&out)).unwrap() else {
        panic!("condensed graph expected")
    };
    assert_eq!(&g, build_super(3).unwrap().graph(3).unwrap());

    let out = run(&[
        "build", "classic", "--n", "3", "--format", "json", "--expand",
    ]);
    let AnyGraph::Expanded(e) = GraphDocument::from_json(&stdout(&out)).unwrap() else {
        panic!("expanded graph expected")
    };
    assert_eq!(e.len(), 9);
}

#[test]
fn convert_round_trip() {
    let condensed = scratch("g.json");
    let out = run(&["build", "fuss", "--k", "2", "--n", "4", "--format", "json"]);
    fs::write(&condensed, stdout(&out)).unwrap();
    let same = run(&["convert", condensed.to_str().unwrap()]);
    assert_eq!(stdout(&same), stdout(&out));

    let expanded = scratch("e.json");
    let out = run(&["convert", condensed.to_str().unwrap(), "--to", "expanded"]);
    fs::write(&expanded, stdout(&out)).unwrap();
    let back = run(&["convert", expanded.to_str().unwrap(), "--to", "condensed"]);
    let AnyGraph::Condensed(c) = GraphDocument::from_json(&stdout(&back)).unwrap() else {
        panic!("condensed graph expected")
    };
    let original = actiongraphs::build_fuss(4, 2).unwrap();
    assert_eq!(c, original.graph(4).unwrap().canonicalize());
}

#[test]
fn export_envelope() {
    let path = scratch("family.json");
    let out = run(&[
        "export",
        "fuss",
        "--k",
        "2",
        "--n",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let value: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["kind"], "fuss");
    assert_eq!(value["params"]["k"], 2);
    assert_eq!(value["params"]["n_max"], 3);
    let graphs = value["graphs"].as_array().unwrap();
    assert_eq!(graphs.len(), 4);
    for g in graphs {
        GraphDocument::from_json(&g.to_string()).unwrap();
    }
    let dot = stdout(&run(&["export", "classic", "--n", "2", "--format", "dot"]));
    assert!(dot.contains("digraph G0 {") && dot.contains("digraph G2 {"));
}

#[test]
fn check_axioms_exit_codes() {
    let out = run(&["check-axioms", "super", "--n", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("2 x G_2, 2 x G_1, 4 x G_0"));

    let out = run(&["check-axioms", "classic", "--n", "3", "--seq", "fuss:2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL at step 2: expected 3, added 2"));

    // Axiom 2 skipped for size is neither a pass nor a failure.
    let out = run(&["check-axioms", "classic", "--n", "4", "--limit", "10"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("not checked"));
}

#[test]
fn usage_and_size_errors_exit_two() {
    assert_eq!(code(&run(&["seq", "nonsense"])), 2);
    assert_eq!(code(&run(&["build", "fuss", "--n", "3"])), 2);
    assert_eq!(code(&run(&["build", "classic", "--n", "3", "--k", "2"])), 2);
    assert_eq!(code(&run(&["gate"])), 2);
    assert_eq!(
        code(&run(&["gate", "--seq", "catalan", "--seq-file", "x"])),
        2
    );
    assert_eq!(code(&run(&["frobnicate"])), 2);
    let out = run(&[
        "build", "super", "--n", "8", "--expand", "--format", "json", "--limit", "100",
    ]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit is 100"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["export", "super", "--n", "6"][..],
        &["infer", "--seq", "super-catalan", "--json"],
        &["check-axioms", "fuss", "--k", "2", "--n", "4", "--json"],
        &["verify", "--n-max", "6", "--json"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}
