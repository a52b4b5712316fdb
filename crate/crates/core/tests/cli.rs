use std::path::Path;
use std::process::{Command, Output};

use hookkron::fixtures;

fn hookkron(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookkron")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn coeff_values() {
    let o = hookkron(&["coeff", "--lambda", "3,3,3", "--d", "4", "--nu", "5,2,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2\n");

    let o = hookkron(&["coeff", "--lambda", "3,3,3,3", "--d", "4", "--nu", "5,3,2,1,1", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "tableaux 3\noracle 3\nagree\n");

    let o = hookkron(&["coeff", "--lambda", "2,2", "--d", "0", "--nu", "2,2", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["command"], "coeff");
    assert_eq!(v["inputs"]["hook"], "4");
    assert_eq!(v["result"]["g"], 1);
    assert_eq!(v["elapsed_ms"], 0);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["coeff", "--lambda", "2,x", "--d", "0", "--nu", "2,2"],
        vec!["coeff", "--lambda", "2,2", "--d", "0", "--nu", "2,2,1"],
        vec!["coeff", "--lambda", "2,3", "--d", "0", "--nu", "3,2"],
        vec!["coeff", "--lambda", "2,2", "--d", "4", "--nu", "2,2"],
        vec!["decompose", "--m", "0", "--t", "2", "--d", "0"],
        vec!["verify", "--m", "2", "--d", "0", "--t-min", "3", "--t-max", "2"],
        vec!["sweep", "--n-max", "-1"],
        vec!["frobnicate"],
    ] {
        let o = hookkron(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn decompose_tables() {
    let o = hookkron(&["decompose", "--m", "3", "--t", "3", "--d", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "5,2,1,1 : 2"));
    assert!(text.lines().last().unwrap().ends_with(" ok"));

    let o = hookkron(&["decompose", "--m", "2", "--t", "2", "--d", "0"]);
    assert_eq!(stdout(&o), "2,2 : 1\n# dimension check: 2 = 2 ok\n");

    let o = hookkron(&["decompose", "--m", "2", "--t", "3", "--d", "1", "--format", "json"]);
    let v = json(&o);
    let keys: Vec<&String> = v["result"]["expansion"].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["3,2,1", "2,2,1,1"]);
    assert_eq!(v["result"]["dimension_check"]["ok"], true);
}

#[test]
fn verify_ranges() {
    let o = hookkron(&["verify", "--m", "3", "--d", "4", "--t-min", "3", "--t-max", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"][0]["verdict"], "unstable");

    let o = hookkron(&["verify", "--m", "2", "--d", "1", "--t-min", "3", "--t-max", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    for r in v["result"].as_array().unwrap() {
        assert_eq!(r["verdict"], "stable");
    }

    let o = hookkron(&["verify", "--m", "1", "--d", "0", "--t-min", "2", "--t-max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("verdict=stable").count(), 4);

    let o = hookkron(&["verify", "--m", "2", "--d", "2", "--t-min", "3", "--t-max", "3"]);
    assert!(stdout(&o).contains("verdict=conjectural"));
}

#[test]
fn convert_fixtures() {
    let o = hookkron(&["convert", "--fixture", "fig5-left", "--direction", "natural", "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let blocks: Vec<&str> = text.split("-- step ").skip(1).collect();
    assert_eq!(blocks.len(), 6);
    for (block, expected) in blocks.iter().zip(fixtures::FIG5_CHAIN) {
        let (_, body) = block.split_once('\n').unwrap();
        assert_eq!(body, expected);
    }

    let o = hookkron(&["convert", "--fixture", "fig6-natural", "--direction", "small-bar"]);
    assert_eq!(stdout(&o), fixtures::FIG6_SMALL_BAR);

    let dir = tempfile::tempdir().unwrap();
    let plain = dir.path().join("plain.txt");
    std::fs::write(&plain, "1 1 2\n2 3\n").unwrap();
    let o = hookkron(&["convert", "--input", plain.to_str().unwrap(), "--direction", "natural"]);
    assert_eq!(stdout(&o), "1 1 2\n2 3\n");

    let o = hookkron(&["convert", "--fixture", "fig5-left", "--direction", "small-bar"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not semistandard"));
}

#[test]
fn convert_reads_fixture_dir() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("fig5_step0.txt"), "1~ 1\n").unwrap();
    let o = hookkron(&[
        "convert",
        "--fixtures",
        dir.path().to_str().unwrap(),
        "--fixture",
        "fig5-left",
        "--direction",
        "natural",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1~ 1\n");
}

#[test]
fn sweeps() {
    for (n, cases) in [("0", 0), ("6", 421), ("9", 2145)] {
        let o = hookkron(&["sweep", "--n-max", n, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let v = json(&o);
        assert_eq!(v["result"]["cases"], cases);
        assert_eq!(v["result"]["disagreements"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["decompose", "--m", "2", "--t", "4", "--d", "3", "--format", "json"];
    assert_eq!(hookkron(&args).stdout, hookkron(&args).stdout);
    let args = ["sweep", "--n-max", "7"];
    assert_eq!(hookkron(&args).stdout, hookkron(&args).stdout);
}

#[test]
fn cache_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("chars.txt");
    let cache_arg = cache.to_str().unwrap();
    let args = ["coeff", "--lambda", "2,2", "--d", "1", "--nu", "2,1,1", "--oracle", "--cache", cache_arg];
    let first = hookkron(&args);
    assert_eq!(first.status.code(), Some(0));
    assert!(Path::new(&cache).exists());
    let written = std::fs::read_to_string(&cache).unwrap();
    assert!(written.lines().any(|l| l == "2,2|1,1,1,1|2"));
    assert_eq!(hookkron(&args).stdout, first.stdout);
}
