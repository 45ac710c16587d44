use assert_cmd::Command;

fn cmd() -> Command {
    let mut c = Command::cargo_bin("wittenmzv").unwrap();
    c.env_remove("WITTENMZV_CACHE");
    c
}

fn stdout(args: &[&str]) -> String {
    let out = cmd().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn reduce_all_ones() {
    let out = stdout(&["reduce", "sl4", "1", "1", "1", "1", "1", "1"]);
    assert!(out.contains("0.261745353"), "{out}");
    assert!(out.contains("[regular]"));
}

#[test]
fn reduce_seven_slots() {
    let out = stdout(&["reduce", "zeta3", "1", "1", "1", "1", "1", "1", "1"]);
    assert!(out.contains("0.08840016918"), "{out}");
}

#[test]
fn divergent_input_exits_two() {
    let out = cmd().args(["reduce", "sl4", "0", "0", "0", "1", "1", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("s1+s2+s3+s4+s5+s6+s7 > 3"), "{err}");
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["reduce", "sl4", "1", "1", "1"],
        vec!["reduce", "sl5", "1", "1", "1", "1", "1", "1"],
        vec!["reduce", "sl4", "1", "1", "x", "1", "1", "1"],
        vec!["reduce", "sl4", "1", "1", "-1", "1", "1", "3"],
        vec!["frobnicate"],
        vec!["table", "3"],
    ] {
        let out = cmd().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn json_is_deterministic_and_exact() {
    let args = ["reduce", "sl4", "0", "0", "0", "0", "0", "4", "--json"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["kind"], "sl4");
    assert_eq!(v["regular"]["regular"], false);
    assert_eq!(v["regular"]["case"], "irr3");
    let terms = v["combination"].as_array().unwrap();
    assert!(terms.iter().any(|t| t["index"] == serde_json::json!([3]) && t["coefficient"]["num"] == "-3"));
}

#[test]
fn trace_and_precision() {
    let out = stdout(&["reduce", "zeta3", "1", "1", "1", "1", "1", "1", "1", "--trace", "--precision", "25"]);
    assert!(out.contains("| step_i"), "{out}");
    assert!(out.contains("0.0884001691"));
    let line = out.lines().find(|l| l.contains('≈')).unwrap();
    let decimals = line.split('.').nth(1).unwrap().split(' ').next().unwrap();
    assert_eq!(decimals.len(), 25, "{line}");
}

#[test]
fn cache_returns_identical_record() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let run = || {
        let out = cmd()
            .env("WITTENMZV_CACHE", &path)
            .args(["reduce", "sl4", "1", "0", "1", "1", "1", "1", "--json"])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    let first = run();
    let second = run();
    assert_eq!(first, second);
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 1);
}

#[test]
fn mt_values() {
    let out = stdout(&["reduce", "mt", "1", "1", "1"]);
    assert!(out.contains("2.404113806319"), "{out}");
}

#[test]
fn weight_four_table() {
    let out = stdout(&["table", "4"]);
    assert!(out.starts_with("weight 4: 34 tuples, 16 distinct values"), "{out}");
    let regular = stdout(&["table", "4", "--regular-only"]);
    assert!(!regular.contains("mixed weight"));
    let five = stdout(&["table", "5", "--regular-only"]);
    assert!(five.contains("0.6150150376") && five.contains("0.4219127176"));
}

#[test]
fn table_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    stdout(&["table", "4", "--json", "--out", path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["tuple_count"], 34);
}

#[test]
fn verify_suites() {
    let out = stdout(&["verify", "paper"]);
    assert!(out.contains("0 failed"), "{out}");
    let strict = cmd().args(["verify", "paper", "--tolerance", "1e-15"]).output().unwrap();
    assert_eq!(strict.status.code(), Some(3));
    let a = stdout(&["verify", "oracle", "--samples", "10", "--seed", "7"]);
    assert_eq!(a, stdout(&["verify", "oracle", "--samples", "10", "--seed", "7"]));
}
