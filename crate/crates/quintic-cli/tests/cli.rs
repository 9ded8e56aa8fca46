use std::process::{Command, Output};

fn quintic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quintic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf-8")
}

const K6: &str = "(1);(5);(2);(4);(3)";

#[test]
fn classify_compact_verdict() {
    let out = quintic(&["classify", "--group", "Z6", "--set", K6, "--json"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "{\"admits\":true,\"case\":\"II\",\"m\":6,\"l\":1,\"h\":4,\
         \"a_set\":[1],\"orientation\":\"as-given\",\
         \"codes_containing_identity\":[[\"(0)\"]]}\n"
    );
}

#[test]
fn classify_default_is_indented() {
    let out = quintic(&["classify", "--group", "Z6", "--set", K6]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("{\n  \"admits\": true,"), "got: {text}");
    assert!(text.ends_with("}\n"));
}

#[test]
fn classify_non_admitting_still_succeeds() {
    // three involutions, so no perfect code exists
    let out = quintic(&[
        "classify",
        "--group",
        "Z2xZ2xZ2",
        "--set",
        "(1,0,0);(0,1,0);(0,0,1);(1,1,0);(1,1,1)",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "{\"admits\":false,\"case\":null,\"m\":null,\"l\":null,\"h\":null,\
         \"a_set\":[],\"orientation\":null,\
         \"codes_containing_identity\":[]}\n"
    );
}

#[test]
fn classify_rejects_short_sets() {
    let out = quintic(&["classify", "--group", "Z6", "--set", "(1);(5)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("need exactly 5"));
}

#[test]
fn classify_rejects_bad_group_literal() {
    let out = quintic(&["classify", "--group", "A5", "--set", K6]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("expected 'Z'"));
}

#[test]
fn classify_output_is_deterministic() {
    let args = ["classify", "--group", "Z18", "--set", "(1);(17);(6);(12);(9)", "--json"];
    let first = quintic(&args);
    let second = quintic(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn oracle_finds_and_enumerates() {
    let find = quintic(&["oracle", "--group", "Z6", "--set", K6]);
    assert_eq!(find.status.code(), Some(0));
    assert_eq!(stdout(&find), "[[\"(0)\"]]\n");

    let all = quintic(&["oracle", "--group", "Z6", "--set", K6, "--enumerate"]);
    assert_eq!(
        stdout(&all),
        "[[\"(0)\"],[\"(1)\"],[\"(2)\"],[\"(3)\"],[\"(4)\"],[\"(5)\"]]\n"
    );

    let through = quintic(&[
        "oracle", "--group", "Z6", "--set", K6, "--containing", "(3)",
    ]);
    assert_eq!(stdout(&through), "[[\"(3)\"]]\n");
}

#[test]
fn oracle_accepts_non_quintic_sets() {
    // 4-regular circulant: the oracle is not limited to quintic instances
    let out = quintic(&["oracle", "--group", "Z10", "--set", "(1);(9);(3);(7)", "--enumerate"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "[[\"(0)\",\"(5)\"],[\"(1)\",\"(6)\"],[\"(2)\",\"(7)\"],[\"(3)\",\"(8)\"],[\"(4)\",\"(9)\"]]\n");
}

#[test]
fn oracle_rejects_unclosed_sets() {
    let out = quintic(&["oracle", "--group", "Z7", "--set", "(1);(2);(3);(4);(5)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("connection set rejected"));
}

#[test]
fn construct_edge_list_has_expected_size() {
    let out = quintic(&[
        "construct", "--family", "gamma", "--m", "6", "--l", "3", "--h", "0",
        "--format", "edgelist",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out).lines().count(), 36);
}

#[test]
fn construct_dot_labels_grid_vertices() {
    let out = quintic(&[
        "construct", "--family", "gamma-k2", "--m", "6", "--l", "1", "--h", "4",
        "--format", "dot",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("graph {\n"));
    assert!(text.contains("label=\"(0,0,0)\""));
    assert!(text.ends_with("}\n"));
}

#[test]
fn construct_rejects_degenerate_parameters() {
    let out = quintic(&[
        "construct", "--family", "gamma", "--m", "0", "--l", "3", "--h", "0",
        "--format", "edgelist",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!stderr(&out).is_empty());
}

#[test]
fn codes_prism_fixture() {
    let out = quintic(&[
        "codes", "--prop", "2.3", "--m", "6", "--l", "1", "--h", "4",
        "--a", "1", "--t", "0",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "{\"family\":\"2.3\",\"m\":6,\"l\":1,\"h\":4,\"a\":1,\"t\":[0],\
         \"size\":2,\"code\":[\"(0,0,0)\",\"(3,0,1)\"],\
         \"parametric_agrees\":false}\n"
    );
}

#[test]
fn codes_diagonal_family_runs() {
    let out = quintic(&[
        "codes", "--prop", "2.10", "--m", "6", "--l", "2", "--h", "4",
        "--a", "-1", "--t", "00",
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("\"family\":\"2.10\""));
    assert!(text.contains("\"size\":2"));
}

#[test]
fn codes_rejects_wrong_toggle_length() {
    let out = quintic(&[
        "codes", "--prop", "2.3", "--m", "6", "--l", "1", "--h", "4",
        "--a", "1", "--t", "00",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("toggle vector"));
}

#[test]
fn sweep_small_orders_pass_and_report() {
    let report = format!("{}/sweep_report.txt", env!("CARGO_TARGET_TMPDIR"));
    let out = quintic(&[
        "sweep", "--max-order", "12", "--involutions", "1", "--report", &report,
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 8);
    assert!(text.lines().all(|line| line.starts_with("PASS ")));
    assert_eq!(std::fs::read_to_string(&report).unwrap(), text);
}

#[test]
fn usage_errors_and_help() {
    let bare = quintic(&[]);
    assert_eq!(bare.status.code(), Some(1));

    let help = quintic(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("classify"));

    let bad_value = quintic(&[
        "construct", "--family", "mystery", "--m", "6", "--l", "3", "--h", "0",
        "--format", "edgelist",
    ]);
    assert_eq!(bad_value.status.code(), Some(1));
}
