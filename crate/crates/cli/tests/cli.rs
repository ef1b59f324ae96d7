use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

const FAM_A: &str = "1 2\n2 3\n3 4\n1 2 3 4\n";

fn overlap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_overlap")).args(args).output().expect("binary runs")
}

fn family_file(text: &str) -> NamedTempFile {
    let mut file = NamedTempFile::new().unwrap();
    file.write_all(text.as_bytes()).unwrap();
    file
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn run_on(text: &str, args: &[&str]) -> Output {
    let file = family_file(text);
    let mut all = args.to_vec();
    all.push(file.path().to_str().unwrap());
    overlap(&all)
}

#[test]
fn classes_of_fam_a() {
    let out = run_on(FAM_A, &["classes"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "X1 0\nX2 0\nX3 0\nX4 1\n");
}

#[test]
fn max_of_fam_a() {
    let out = run_on(FAM_A, &["max"]);
    assert_eq!(stdout(&out), "X1 -> X2\nX2 -> X1\nX3 -> X2\nX4 -> none\n");
}

#[test]
fn forest_of_fam_a() {
    let out = run_on(FAM_A, &["forest"]);
    assert_eq!(stdout(&out), "tree 0 root X1\n  X1 -- X2\n  X2 -- X3\ntree 1 root X4\n");
}

#[test]
fn json_schema() {
    let out = run_on(FAM_A, &["classes", "--json"]);
    assert_eq!(stdout(&out), "{\"classes\":[[1,2,3],[4]],\"max\":[2,1,2,null],\"edges\":[[1,2],[2,3]]}\n");
    let out = run_on(FAM_A, &["forest", "--json"]);
    assert!(stdout(&out).ends_with("\"edges\":[[1,2],[2,3]]}\n"));
}

#[test]
fn subgraph_dot_has_a_node_per_set() {
    let out = run_on(FAM_A, &["subgraph", "--dot"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("graph overlap_subgraph {\n") && dot.ends_with("}\n"));
    let nodes: Vec<&str> = dot.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("--")).collect();
    assert_eq!(nodes, ["  X1;", "  X2;", "  X3;", "  X4;"]);
    assert_eq!(dot.matches(" -- ").count(), 2);
    let out = run_on(FAM_A, &["max", "--dot"]);
    assert!(stdout(&out).starts_with("digraph max {\n"));
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_overlap"))
        .args(["classes", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"a b\nb c\nx\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out), "X1 0\nX2 0\nX3 1\n");
}

#[test]
fn single_set_is_one_class() {
    assert_eq!(stdout(&run_on("a b c\n", &["classes"])), "X1 0\n");
}

#[test]
fn input_errors_exit_2() {
    let out = run_on("# nothing here\n", &["classes"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no sets"));

    let out = run_on("a b\n\nc\n", &["max"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    assert_eq!(overlap(&["classes", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(overlap(&["gen", "star", "--m", "0"]).status.code(), Some(2));
    assert_eq!(overlap(&["gen", "random", "--n", "5"]).status.code(), Some(2));
    assert_eq!(overlap(&["gen", "random", "--n", "5", "--m", "3", "--density", "1.5"]).status.code(), Some(2));
}

#[test]
fn stats_go_to_stderr() {
    let out = run_on(FAM_A, &["classes", "--stats"]);
    let err = String::from_utf8_lossy(&out.stderr);
    for line in ["n=4", "m=4", "total_size=10", "classes=2", "dgraph_edges=2", "subgraph_edges=2", "forest_edges=2"] {
        assert!(err.lines().any(|l| l.starts_with(line)), "missing {line} in {err}");
    }
    assert!(err.contains("time_total_ms="));
}

#[test]
fn verify_passes_on_clean_runs() {
    let out = run_on(FAM_A, &["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).lines().all(|l| l.starts_with("PASS ")));

    let star = stdout(&overlap(&["gen", "star", "--m", "100"]));
    assert_eq!(run_on(&star, &["verify"]).status.code(), Some(0));
}

#[test]
fn verify_reports_injected_fault() {
    let out = run_on(FAM_A, &["verify", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL subgraph-sound"), "{text}");
    assert!(text.contains("counterexample:\n  X1: 1 2\n"), "{text}");

    // every pair overlaps, so the fault lands on Max instead
    let out = run_on("a b\nb c\n", &["verify", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL max"));
}

#[test]
fn oracle_cap_exits_3() {
    let file = family_file(&stdout(&overlap(&["gen", "star", "--m", "50"])));
    let path = file.path().to_str().unwrap();
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_overlap")).args(["verify", path]).env("OVERLAP_ORACLE_CAP", cap).output().unwrap()
    };
    assert_eq!(run("10").status.code(), Some(3));
    assert_eq!(run("50").status.code(), Some(0));
    assert_eq!(run("many").status.code(), Some(2));
}

#[test]
fn gen_is_deterministic() {
    let args = ["gen", "random", "--n", "20", "--m", "30", "--seed", "7"];
    let a = overlap(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, overlap(&args).stdout);
    assert_ne!(a.stdout, overlap(&["gen", "random", "--n", "20", "--m", "30", "--seed", "8"]).stdout);
    assert_eq!(stdout(&a).lines().count(), 30);

    let star = stdout(&overlap(&["gen", "star", "--m", "4"]));
    assert_eq!(star.lines().count(), 4);
    assert!(star.lines().all(|l| l.split_whitespace().any(|t| t == "x1")));

    assert_eq!(stdout(&overlap(&["gen", "nested", "--k", "3"])), "e1\ne1 e2\ne1 e2 e3\n");

    let blocks = overlap(&["gen", "blocks", "--blocks", "3", "--block-size", "4", "--seed", "2"]);
    assert_eq!(stdout(&blocks).lines().count(), 12);
}

#[test]
fn generated_families_round_trip() {
    let text = stdout(&overlap(&["gen", "blocks", "--blocks", "5", "--seed", "3"]));
    let out = run_on(&text, &["classes"]);
    let ids: Vec<usize> = stdout(&out).lines().map(|l| l.split(' ').nth(1).unwrap().parse().unwrap()).collect();
    // 8 sets per block: 7 sliding pairs, then the random subset
    assert_eq!(ids.len(), 40);
    for block in ids.chunks(8) {
        assert!(block[..7].iter().all(|&c| c == block[0]));
    }
    for (i, a) in ids.chunks(8).enumerate() {
        for b in &ids.chunks(8).collect::<Vec<_>>()[i + 1..] {
            assert!(a.iter().all(|c| !b.contains(c)));
        }
    }
}

#[test]
fn bench_csv_shape() {
    let out = overlap(&["bench", "--sizes", "1024,2048,4096", "--reps", "1", "--seed", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some(
            "total_size,n,m,lf_ms,sl_ms,pf_ms,bounds_ms,am_ms,max_ms,dgraph_ms,classes_ms,subgraph_ms,forest_ms,total_ms,ratio"
        )
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 3);
    let sizes: Vec<usize> = rows.iter().map(|r| r[0].parse().unwrap()).collect();
    assert!(sizes.windows(2).all(|w| w[0] < w[1]), "{sizes:?}");
    assert_eq!(rows[0].last(), Some(&""));
    for r in &rows[1..] {
        let ratio: f64 = r.last().unwrap().parse().unwrap();
        assert!(ratio > 0.0);
    }
    assert_eq!(overlap(&["bench", "--sizes", "8"]).status.code(), Some(2));
}
