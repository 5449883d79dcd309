use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use extcrit::{family_g, Graph};

fn extcrit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extcrit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn extcrit_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_extcrit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn corpus(order: usize) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpora")
        .join(format!("connected_{order}.g6"))
        .display()
        .to_string()
}

fn g2() -> String {
    family_g(2).unwrap().to_graph6()
}

#[test]
fn g2_is_two_extendable() {
    let o = extcrit(&["check", "--property", "extendable", "--k", "2", "--graph6", &g2()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "holds");
}

#[test]
fn g2_is_not_four_factor_critical() {
    let o = extcrit(&["check", "--property", "factor-critical", "--n", "4", "--graph6", &g2()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "fails (bad-subset): vertex set [0, 1, 2, 3]");
}

#[test]
fn family_output_decodes_to_the_family() {
    let o = extcrit(&["family", "--family", "G", "--k", "3", "--emit", "graph6"]);
    assert_eq!(o.status.code(), Some(0));
    let g = Graph::from_graph6(stdout(&o).trim()).unwrap();
    assert_eq!(g, family_g(3).unwrap());

    let w = extcrit(&["family", "--family", "H", "--k", "2", "--emit", "witness"]);
    assert_eq!(stdout(&w).trim(), "[0, 1, 2, 3, 9]");
}

#[test]
fn piping_family_into_check_reproduces_tightness() {
    let g = stdout(&extcrit(&["family", "--family", "G", "--k", "3"]));
    let ext = extcrit_stdin(&["check", "--property", "extendable", "--k", "3"], &g);
    assert_eq!(ext.status.code(), Some(0));
    assert!(stdout(&ext).ends_with(": holds\n"));

    let fc = extcrit_stdin(&["check", "--property", "factor-critical", "--n", "6"], &g);
    assert_eq!(fc.status.code(), Some(1));
    let witness = stdout(&extcrit(&["family", "--family", "G", "--k", "3", "--emit", "witness"]));
    assert!(stdout(&fc).contains(witness.trim()));

    let h = stdout(&extcrit(&["family", "--family", "H", "--k", "2"]));
    let half = extcrit_stdin(&["check", "--property", "half-extendable", "--k", "2"], &h);
    assert_eq!(half.status.code(), Some(0));
    let fc = extcrit_stdin(&["check", "--property", "factor-critical", "--n", "5"], &h);
    assert_eq!(fc.status.code(), Some(1));
}

#[test]
fn batch_mode_reports_every_line() {
    let o = extcrit_stdin(
        &["check", "--property", "factor-critical", "--n", "1"],
        "Dhc\nC~\n",
    );
    // C5 is factor-critical; K4 has even order, so the question is ill-posed.
    assert_eq!(o.status.code(), Some(2));
    let out = stdout(&o);
    assert!(out.contains("Dhc: holds"));
    assert!(out.contains("C~: error: parameter 1 has the wrong parity"));

    let o = extcrit_stdin(&["check", "--property", "extendable", "--k", "1"], "C~\nCh\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("C~: holds"));
    assert!(stdout(&o).contains("Ch: fails"));
}

#[test]
fn malformed_input_exits_two() {
    let o = extcrit(&["check", "--property", "extendable", "--k", "1", "--graph6", "C~~"]);
    assert_eq!(o.status.code(), Some(2));
    let o = extcrit_stdin(&["check", "--property", "extendable", "--k", "1"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_is_enforced() {
    let g = family_g(4).unwrap().to_graph6();
    let o = extcrit(&["check", "--property", "extendable", "--k", "4", "--budget", "1000", "--graph6", &g]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("budget of 1000 steps exhausted"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(extcrit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(extcrit(&["check", "--property", "extendable"]).status.code(), Some(2));
    let wrong_param = extcrit(&["check", "--property", "factor-critical", "--k", "2", "--graph6", "C~"]);
    assert_eq!(wrong_param.status.code(), Some(2));
    let both = extcrit(&[
        "check", "--property", "extendable", "--k", "1", "--graph6", "C~", "--input", "x.g6",
    ]);
    assert_eq!(both.status.code(), Some(2));
    let no_corpus = extcrit(&["verify", "--claim", "C-OB1"]);
    assert_eq!(no_corpus.status.code(), Some(2));
    let unknown = extcrit(&["verify", "--claim", "C-NOPE", "--builtin", "4"]);
    assert_eq!(unknown.status.code(), Some(2));
    let too_big = extcrit(&["verify", "--claim", "C-OB1", "--builtin", "9"]);
    assert_eq!(too_big.status.code(), Some(2));
    assert_eq!(extcrit(&["family", "--family", "G", "--k", "1"]).status.code(), Some(2));
}

#[test]
fn encode_prefix_expressions() {
    let o = extcrit(&["encode", "join", "union", "K", "3", "K", "1", "union", "K", "3", "K", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), g2());
    let o = extcrit(&["encode", "K 4"]);
    assert_eq!(stdout(&o).trim(), "C~");
    assert_eq!(extcrit(&["encode", "join", "K", "2"]).status.code(), Some(2));
}

#[test]
fn verify_th21_on_the_order_eight_corpus() {
    let path = corpus(8);
    let o = extcrit(&[
        "verify", "--claim", "C-TH21", "--corpus", &path, "--filters", "connected,non-bipartite",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 counterexamples"));
}

#[test]
fn verify_builtin_and_vacuity_flag() {
    let o = extcrit(&["verify", "--claim", "C-LMY1", "--builtin", "1-6", "--filters", "connected"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[vacuous]"));
}

#[test]
fn reports_are_byte_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let files: Vec<String> = (1..=8).map(corpus).collect();
    let mut outputs = Vec::new();
    for threads in ["1", "3"] {
        let out = dir.path().join(format!("t{threads}.jsonl"));
        let out_s = out.display().to_string();
        let mut args = vec!["verify", "--claim", "all", "--out", &out_s, "--threads", threads, "--corpus"];
        args.extend(files.iter().map(String::as_str));
        let o = extcrit(&args);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        outputs.push(std::fs::read(&out).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let text = String::from_utf8(outputs.remove(0)).unwrap();
    let summaries: Vec<&str> = text.lines().filter(|l| l.contains("\"record\":\"summary\"")).collect();
    assert_eq!(summaries.len(), 19);
    for line in summaries {
        for field in ["\"claim\"", "\"scanned\"", "\"failures\"", "\"elapsed_ms\":null", "\"mode\""] {
            assert!(line.contains(field), "{line}");
        }
    }
}

#[test]
fn scan_reports_degree_histogram() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.jsonl");
    let out_s = out.display().to_string();
    let files: Vec<String> = (1..=8).map(corpus).collect();
    let mut args = vec!["scan", "--mode", "minimal-extendable", "--k", "1", "--out", &out_s, "--corpus"];
    args.extend(files.iter().map(String::as_str));
    let o = extcrit(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("minimum degrees: δ=2: 16, δ=3: 9"));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("\"delta_histogram\":{\"2\":16,\"3\":9}"));

    let c6 = Graph::cycle(6).unwrap().to_graph6();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "{c6}").unwrap();
    let path = file.path().display().to_string();
    let o = extcrit(&["scan", "--mode", "minimal-extendable", "--k", "1", "--corpus", &path]);
    assert!(stdout(&o).contains("δ=2: 1"));
    let bad = extcrit(&["scan", "--mode", "minimal-extendable", "--n", "1", "--corpus", &path]);
    assert_eq!(bad.status.code(), Some(2));
}
