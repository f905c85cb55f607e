use std::process::{Command, Output};

fn bench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heap-bench"))
        .args(args)
        .env_remove("HEAPBENCH_OUT_DIR")
        .output()
        .expect("failed to launch heap-bench")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn selftest_passes() {
    let o = bench(&["selftest"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn tiny_pairing_sort() {
    let o = bench(&[
        "sort-bench",
        "--family",
        "uniform",
        "--heaps",
        "pairing",
        "--sizes",
        "4",
        "--trials",
        "1",
        "--seed",
        "7",
    ]);
    assert!(o.status.success());
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        ["experiment", "heap", "n", "param", "trial", "comparisons", "links", "wallNanos"]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 1);
    assert_eq!(&rows[0][0], "sort-uniform");
    assert_eq!(&rows[0][1], "pairing");
    assert_eq!(&rows[0][2], "4");
    assert_eq!(rows[0][5], rows[0][6]);
}

#[test]
fn audit_slim_passes() {
    let o = bench(&["audit", "--mode", "slim", "--ops", "2000", "--size-cap", "512", "--seed", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("allPass = true"));
}

/// The CSV without its timing column.
fn counts(o: &Output) -> Vec<Vec<String>> {
    csv::Reader::from_reader(o.stdout.as_slice())
        .records()
        .map(|r| r.unwrap().iter().take(7).map(str::to_owned).collect())
        .collect()
}

#[test]
fn reruns_are_deterministic() {
    let sort = ["sort-bench", "--family", "separable", "--sizes", "64,128", "--trials", "3", "--seed", "11"];
    assert_eq!(counts(&bench(&sort)), counts(&bench(&sort)));
    let graph = ["dijkstra-bench", "--family", "er", "--sizes", "60", "--p", "0.3", "--trials", "2", "--seed", "5"];
    let a = counts(&bench(&graph));
    assert_eq!(a.len(), 6);
    assert_eq!(a, counts(&bench(&graph)));
}

#[test]
fn writes_to_out_dir() {
    let dir = std::env::temp_dir().join(format!("heap-bench-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_heap-bench"))
        .args(["sort-bench", "--family", "blocks", "--sizes", "100", "--param", "10", "--trials", "2"])
        .env("HEAPBENCH_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(dir.join("sort-blocks.csv")).unwrap();
    assert_eq!(written.lines().count(), 1 + 3 * 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn summarize_reads_bench_output() {
    let path = std::env::temp_dir().join(format!("heap-bench-sum-{}.csv", std::process::id()));
    let o = bench(&[
        "sort-bench",
        "--family",
        "uniform",
        "--sizes",
        "256",
        "--trials",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let s = bench(&["summarize", path.to_str().unwrap()]);
    assert!(s.status.success());
    let text = stdout(&s);
    assert!(text.contains("pairing") && text.contains("smooth") && text.contains("slim"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn usage_errors_exit_nonzero() {
    for args in [
        &["sort-bench", "--family", "uniform", "--heaps", "fibonacci"][..],
        &["sort-bench", "--family", "zigzag"],
        &["dijkstra-bench", "--family", "grid"],
        &["summarize", "/nonexistent/results.csv"],
    ] {
        let o = bench(args);
        assert!(!o.status.success(), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
