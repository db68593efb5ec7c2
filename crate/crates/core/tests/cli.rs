use std::path::Path;
use std::process::{Command, Output};

use ndsort::datagen::{generate, DatasetSpec};
use ndsort::sort_naive;

fn ndsort(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ndsort"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_owned()
}

#[test]
fn generate_then_sort_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let data = path(dir.path(), "d.txt");
    let out = ndsort(&[
        "generate", "--n", "300", "--m", "4", "--levels", "3", "--seed", "11", "--out", &data,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let expected = sort_naive(&generate(&DatasetSpec::new(300, 4, 3, 11)).unwrap());
    for algo in ["naive", "bos", "dc", "hybrid"] {
        let out = ndsort(&["sort", "--algo", algo, "--in", &data]);
        assert!(out.status.success());
        let ranks: Vec<usize> = String::from_utf8(out.stdout)
            .unwrap()
            .lines()
            .map(|l| l.parse().unwrap())
            .collect();
        assert_eq!(ranks, expected.as_slice(), "{algo}");
    }
}

#[test]
fn grid_and_record_write_csv() {
    let dir = tempfile::tempdir().unwrap();
    let timing = path(dir.path(), "t.csv");
    let summary = path(dir.path(), "s.csv");
    let out = ndsort(&[
        "grid",
        "--n-range",
        "8:9",
        "--m",
        "3",
        "--levels",
        "1,2",
        "--trials",
        "2",
        "--out",
        &timing,
        "--summary",
        &summary,
        "--persist",
        dir.path().to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = std::fs::read_to_string(&timing).unwrap();
    assert!(csv.starts_with("N,M,L,trial,algo,time_ns,checksum\n"));
    assert_eq!(csv.lines().count(), 1 + 2 * 2 * 2 * 3);
    assert!(std::fs::read_to_string(&summary)
        .unwrap()
        .starts_with("N,M,L,algo,avg,min,max\n"));
    assert!(dir.path().join("dataset_177_3_2_1.txt").exists());

    let data = path(dir.path(), "dataset_100_3_1_0.txt");
    let scatter = path(dir.path(), "r.csv");
    let out = ndsort(&["record", "--in", &data, "--out", &scatter, "--trials", "1"]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&scatter).unwrap();
    assert!(csv.starts_with("n,m,kind,t_dc_ns,t_bos_ns,rel_gap\n"));
    assert!(csv.lines().count() > 1);
}

#[test]
fn bad_inputs_fail_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let bad = path(dir.path(), "bad.txt");
    std::fs::write(&bad, "3 2 0 0\n1 2\n3\n").unwrap();
    let out = ndsort(&["sort", "--in", &bad]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let out = ndsort(&[
        "generate",
        "--n",
        "2",
        "--m",
        "3",
        "--levels",
        "5",
        "--out",
        &path(dir.path(), "x"),
    ]);
    assert!(!out.status.success());

    let good = path(dir.path(), "good.txt");
    std::fs::write(&good, "1 2 0 0\n1 2\n").unwrap();
    assert!(ndsort(&["sort", "--in", &good]).status.success());
    let out = ndsort(&["sort", "--in", &good, "--exponent", "3"]);
    assert!(!out.status.success());
}
