//! End-to-end checks of the `irrspec` binary: exit codes, report files,
//! config-file handling, and cross-worker byte stability.

use std::path::Path;
use std::process::Command;

fn irrspec() -> Command {
    Command::new(env!("CARGO_BIN_EXE_irrspec"))
}

#[test]
fn passing_run_exits_zero_and_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let status = irrspec()
        .args([
            "schinzel", "--field", "3", "--poly", "X+2", "--n", "2", "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("\"hits\": 3"));
    assert!(text.contains("\"scanned\": 9"));
}

#[test]
fn failing_verdict_exits_two() {
    // The conic admits 8 good lines over F_5; demanding 100 fails the verdict.
    let status = irrspec()
        .args([
            "linespec", "--field", "5", "--poly", "X^2+T^2+1", "--A", "100",
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn errors_exit_one() {
    let status = irrspec()
        .args(["schinzel", "--field", "6", "--poly", "X+1", "--n", "2"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));

    let status = irrspec()
        .args(["schinzel", "--field", "2", "--poly", "X", "--n", "2"])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));
}

#[test]
fn reports_are_byte_identical_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut bytes = Vec::new();
    for (i, workers) in ["1", "4"].iter().enumerate() {
        let out = dir.path().join(format!("report{i}.json"));
        let status = irrspec()
            .args([
                "chebotarev",
                "--field",
                "101",
                "--poly",
                "X^2+100*T",
                "--mode",
                "sample:400",
                "--seed",
                "7",
                "--workers",
                workers,
                "--out",
            ])
            .arg(&out)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
        bytes.push(std::fs::read(&out).unwrap());
    }
    assert_eq!(bytes[0], bytes[1]);
}

#[test]
fn config_file_supplies_defaults_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    std::fs::write(
        &conf,
        "kind=schinzel\nfield=3\npoly=X+2\nn=2\nseed=1\nformat=json\n",
    )
    .unwrap();

    // config alone carries the whole run
    let out1 = dir.path().join("a.json");
    let status = irrspec()
        .args(["--config"])
        .arg(&conf)
        .args(["--out"])
        .arg(&out1)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let text = std::fs::read_to_string(&out1).unwrap();
    assert!(text.contains("\"kind\": \"schinzel\""));
    assert!(text.contains("\"seed\": 1"));

    // a flag overrides the file key
    let out2 = dir.path().join("b.json");
    let status = irrspec()
        .args(["--config"])
        .arg(&conf)
        .args(["--seed", "9", "--out"])
        .arg(&out2)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let text = std::fs::read_to_string(&out2).unwrap();
    assert!(text.contains("\"seed\": 9"));
}

#[test]
fn csv_report_has_the_shape_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.csv");
    let status = irrspec()
        .args([
            "traceform",
            "--field",
            "3",
            "--matrix",
            "1,0;0,1",
            "--format",
            "csv",
            "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("metric,value\n"));
    assert!(text.contains("shape,observed,predicted\n"));
    assert!(text.contains("hits,12\n"));
    assert!(!text.contains('\r'));
    assert!(Path::new(&out).exists());
}

#[test]
fn dirichlet_end_to_end() {
    let status = irrspec()
        .args([
            "dirichlet", "--field", "7", "--poly", "1", "--poly", "X", "--m", "2",
        ])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
}
