use std::path::Path;
use std::process::{Command, Output};

use spse::tensor_file::{read_sidecar, read_tensor};

fn spse(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spse"))
        .current_dir(dir)
        .args(args)
        .env_remove("SPSE_THREADS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

#[test]
fn exact_hexagon_counts() {
    let dir = tempfile::tempdir().unwrap();
    let out = spse(dir.path(), &["gen", "--family", "cycle", "--m", "6", "-o", "c6.edges"]);
    assert_eq!(code(&out), 0);
    let out = spse(dir.path(), &["count", "--exact", "-K", "6", "c6.edges", "-o", "c6.spse"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let t = read_tensor(&dir.path().join("c6.spse")).unwrap().into_counts().unwrap();
    assert_eq!(t.series(0, 1), &[1, 0, 0, 0, 1, 0]);
    let meta = read_sidecar(&dir.path().join("c6.spse")).unwrap();
    assert_eq!(meta.config["mode"], "exact");
}

#[test]
fn preset_count_and_encode() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g.edges", "# nodes=4\n0 1\n1 2\n2 3\n3 0\n");
    let out = spse(dir.path(), &["count", "--preset", "zinc", "g.edges"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let counts = read_tensor(&dir.path().join("g.edges.spse")).unwrap().into_counts().unwrap();
    assert_eq!(counts.k_max(), 20);
    let meta = read_sidecar(&dir.path().join("g.edges.spse")).unwrap();
    assert_eq!(meta.dag_count, Some(4 * 7));
    assert_eq!(meta.config["K"], 20);

    let out = spse(dir.path(), &["encode", "g.edges.spse", "--preset", "zinc", "-o", "g.enc"]);
    assert_eq!(code(&out), 0);
    let enc = read_tensor(&dir.path().join("g.enc")).unwrap().into_reals().unwrap();
    assert!((enc.get(0, 1, 1) - 0.5 * 2f64.ln()).abs() < 1e-15);
    assert_eq!(enc.get(0, 0, 1), 0.0);

    let out = spse(
        dir.path(),
        &["encode", "g.edges.spse", "--alpha", "0.2", "--beta", "-0.2", "--logn", "3", "-o", "h.enc"],
    );
    assert_eq!(code(&out), 0);
    let enc = read_tensor(&dir.path().join("h.enc")).unwrap().into_reals().unwrap();
    assert_eq!(enc.get(0, 0, 3), -0.2);
}

#[test]
fn tree_counts_are_exact_from_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "p4.edges", "0 1\n1 2\n2 3\n");
    let out = spse(
        dir.path(),
        &["count", "-R", "1.0", "-K", "3", "--trials", "1", "--dfs-depth", "0", "p4.edges", "-o", "a"],
    );
    assert_eq!(code(&out), 0);
    let out = spse(dir.path(), &["count", "--exact", "-K", "3", "p4.edges", "-o", "b"]);
    assert_eq!(code(&out), 0);
    let a = std::fs::read(dir.path().join("a")).unwrap();
    let b = std::fs::read(dir.path().join("b")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn thread_count_never_changes_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let out = spse(dir.path(), &["gen", "--family", "er", "--n", "30", "--p", "0.15", "--seed", "4", "-o", "g.edges"]);
    assert_eq!(code(&out), 0);
    for threads in ["1", "3", "8"] {
        let name = format!("t{threads}");
        let out = spse(dir.path(), &["count", "--preset", "mnist", "--threads", threads, "g.edges", "-o", &name]);
        assert_eq!(code(&out), 0);
    }
    let t1 = std::fs::read(dir.path().join("t1")).unwrap();
    assert_eq!(t1, std::fs::read(dir.path().join("t3")).unwrap());
    assert_eq!(t1, std::fs::read(dir.path().join("t8")).unwrap());
}

#[test]
fn dataset_input_writes_one_tensor_per_graph() {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "ds.json",
        r#"{"graphs": [{"n": 3, "edges": [[0, 1], [1, 2]]}, {"n": 4, "edges": [[0, 1], [1, 2], [2, 3], [3, 0]]}]}"#,
    );
    let out = spse(dir.path(), &["count", "-K", "3", "ds.json", "-o", "out"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let second = read_tensor(&dir.path().join("out/graph_00001.spse")).unwrap().into_counts().unwrap();
    assert_eq!(second.n(), 4);
    assert_eq!(second.series(0, 1), &[1, 0, 1]);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "bad.edges", "0 x\n");
    assert_eq!(code(&spse(dir.path(), &["count", "missing.edges"])), 2);
    assert_eq!(code(&spse(dir.path(), &["count", "bad.edges"])), 2);
    assert_eq!(code(&spse(dir.path(), &["count", "--preset", "qm9", "bad.edges"])), 2);
    assert_eq!(code(&spse(dir.path(), &["frobnicate"])), 2);

    spse(dir.path(), &["gen", "--family", "complete", "--n", "25", "-o", "k25.edges"]);
    let out = spse(dir.path(), &["count", "--exact", "-K", "3", "k25.edges"]);
    assert_eq!(code(&out), 3);

    spse(dir.path(), &["gen", "--family", "path", "--n", "3", "-o", "p3.edges"]);
    let out = spse(dir.path(), &["count", "-K", "2", "p3.edges", "-o", "no/such/dir/x.spse"]);
    assert_eq!(code(&out), 4);

    spse(dir.path(), &["count", "-K", "2", "p3.edges", "-o", "p3.spse"]);
    spse(dir.path(), &["encode", "p3.spse", "--preset", "zinc", "-o", "p3.enc"]);
    let out = spse(dir.path(), &["encode", "p3.enc", "--preset", "zinc"]);
    assert_eq!(code(&out), 2);
    write(dir.path(), "junk.spse", "SPSE0 definitely not a tensor");
    let out = spse(dir.path(), &["encode", "junk.spse", "--preset", "zinc"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_reports_json() {
    let dir = tempfile::tempdir().unwrap();
    for (prop, cases) in [("1", "7"), ("3", "100"), ("lower-bound", "200"), ("fig6", "20")] {
        let out = spse(dir.path(), &["verify", "--prop", prop, "--cases", cases]);
        assert_eq!(code(&out), 0, "{prop}");
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report["passed"], true);
        assert_eq!(report["suite"], prop);
    }
    assert_eq!(code(&spse(dir.path(), &["verify", "--prop", "4"])), 2);
}

#[test]
fn sweep_csv() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "canon.json", r#"{"R": 1.0, "K": 10, "D_dfs": 4, "N": 4, "alpha": 1, "beta": 0, "n": 1}"#);
    let out = spse(
        dir.path(),
        &["sweep", "--param", "N", "--values", "1,2,4", "--canonical", "canon.json", "--graphs", "10", "--nodes", "15", "--rings", "2"],
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let csv = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = csv.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(csv.lines().next().unwrap(), "param,value,mean_discovery_ratio,mean_time_per_sample_ms");
    assert_eq!(rows.len(), 3);
    let ratios: Vec<f64> = rows.iter().map(|r| r[2].parse().unwrap()).collect();
    assert!(ratios.windows(2).all(|w| w[1] >= w[0]));
    assert_eq!(ratios[2], 1.0);
    assert!(rows.iter().all(|r| r[3].parse::<f64>().unwrap() > 0.0));
}

#[test]
fn synth_dataset_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["a", "b"] {
        let out = spse(dir.path(), &["gen", "--synth", "--n", "24", "--seed", "1", "-o", name]);
        assert_eq!(code(&out), 0);
    }
    for file in ["dataset.json", "train.json", "val.json", "test.json", "manifest.json"] {
        let a = std::fs::read(dir.path().join("a").join(file)).unwrap();
        let b = std::fs::read(dir.path().join("b").join(file)).unwrap();
        assert_eq!(a, b, "{file}");
    }
    let train: serde_json::Value =
        serde_json::from_slice(&std::fs::read(dir.path().join("a/train.json")).unwrap()).unwrap();
    assert_eq!(train["graphs"].as_array().unwrap().len(), 20);
    assert_eq!(train["labels"][0].as_array().unwrap().len(), 6);
}
