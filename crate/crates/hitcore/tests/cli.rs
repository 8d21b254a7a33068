//! End-to-end tests of the `hitcore` binary.

use std::path::Path;
use std::process::{Command, Output};

fn hitcore(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hitcore"));
    cmd.args(args).env_remove("HITKERNEL_CACHE");
    if let Some(dir) = cache {
        cmd.env("HITKERNEL_CACHE", dir);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn reference_values() {
    for (args, want) in [
        (&["dim", "-d", "5", "-n", "8"][..], "174"),
        (&["dim", "-d", "5", "-n", "21"][..], "840"),
        (&["lambda", "ext", "-s", "5", "-t", "21"][..], "1"),
        (&["lambda", "ext", "-s", "5", "-t", "8"][..], "0"),
    ] {
        let o = hitcore(args, None);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert_eq!(stdout(&o).trim(), want, "{args:?}");
    }
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["basis", "-d", "5", "-n", "8", "--json"][..],
        &["omega-split", "-d", "5", "-n", "8", "--json"][..],
        &["invariants", "--group", "gl", "-d", "5", "-n", "8", "--json"][..],
    ] {
        let a = hitcore(args, None);
        let b = hitcore(args, None);
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", stderr(&a));
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["basis", "-d", "4", "-n", "9", "--json"];
    let cold = hitcore(&args, Some(dir.path()));
    assert_eq!(cold.status.code(), Some(0), "{}", stderr(&cold));
    let file = dir.path().join("basis-v1-d4-n9-pow2.json");
    assert!(file.exists());

    let warm = hitcore(&args, Some(dir.path()));
    assert_eq!(warm.stdout, cold.stdout);
    let flag = hitcore(&["--cache", dir.path().to_str().unwrap(), "basis", "-d", "4", "-n", "9", "--json"], None);
    assert_eq!(flag.stdout, cold.stdout);

    let text = std::fs::read_to_string(&file).unwrap();
    std::fs::write(&file, text.replacen("\"hit_rank\":", "\"hit_rank\":9", 1)).unwrap();
    let bad = hitcore(&args, Some(dir.path()));
    assert_eq!(bad.status.code(), Some(4));
    assert!(stderr(&bad).starts_with("error: cache-corrupt:"), "{}", stderr(&bad));

    // --refresh recomputes and repairs the entry.
    let fixed = hitcore(&["--refresh", "basis", "-d", "4", "-n", "9", "--json"], Some(dir.path()));
    assert_eq!(fixed.status.code(), Some(0), "{}", stderr(&fixed));
    assert_eq!(fixed.stdout, cold.stdout);
    assert_eq!(hitcore(&args, Some(dir.path())).stdout, cold.stdout);
}

#[test]
fn exit_codes() {
    let budget = hitcore(&["--max-rows", "10", "dim", "-d", "5", "-n", "21"], None);
    assert_eq!(budget.status.code(), Some(3));
    assert!(stderr(&budget).starts_with("error: budget-exceeded:"));

    for args in [
        &["dim", "-d", "x", "-n", "3"][..],
        &["frobnicate"][..],
        &["sum-conjecture", "-d", "5", "--omega", "3,x"][..],
        &["dim", "-d", "0", "-n", "3"][..],
    ] {
        let o = hitcore(args, None);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).starts_with("error: usage:"), "{args:?}: {}", stderr(&o));
        assert_eq!(stderr(&o).lines().count(), 1);
    }
}

#[test]
fn quick_selftest_passes() {
    let o = hitcore(&["selftest", "--level", "quick"], None);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), stderr(&o));
}
