use std::process::{Command, Output};

use serde_json::Value;

fn qprob(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qprob")).args(args).env_remove("QPROB_SEED").output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = qprob(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn bernoulli_pmf_record() {
    let v = json(&["pmf", "bernoulli", "--n", "2", "--p", "1/2", "--q", "1/2"]);
    assert_eq!(v["command"], "pmf");
    assert_eq!(v["spec"]["family"], "bernoulli");
    assert_eq!(v["results"]["entries"], serde_json::json!({"0": "3/8", "1": "3/8", "2": "1/4"}));
    assert_eq!(v["results"]["values"]["2"], "3/2");
    assert_eq!(v["results"]["defect"], "0");
}

#[test]
fn uniform_csv() {
    let out = qprob(&["pmf", "uniform", "--M", "2", "--q", "1/2", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "k,value,probability\n0,0,4/7\n1,1,2/7\n2,3/2,1/7\ndefect,,0\n");
}

#[test]
fn poisson_intervals() {
    let v = json(&["pmf", "poisson", "--lambda", "1", "--q", "1/2", "--kappa-max", "3", "--eps", "1e-9"]);
    let entries = v["results"]["entries"].as_object().unwrap();
    assert_eq!(entries.len(), 4);
    let bound = |k: &str, side: &str| {
        let text = entries[k][side].as_str().unwrap();
        let (n, d) = text.split_once('/').unwrap();
        n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap()
    };
    assert!(bound("0", "lo") <= 0.288_788_095_1 && 0.288_788_095_0 <= bound("0", "hi"));
    assert!(bound("0", "hi") - bound("0", "lo") <= 1e-9);
    assert!((bound("2", "lo") - bound("0", "lo") * 2.0 / 3.0).abs() < 1e-15);
}

#[test]
fn moments_records() {
    let v = json(&["moments", "bernoulli", "--n", "2", "--p", "1/2", "--q", "1/2"]);
    assert_eq!((v["results"]["mean"].as_str(), v["results"]["variance"].as_str()), (Some("3/4"), Some("3/8")));
    let v = json(&["moments", "poisson", "--lambda", "1", "--q", "1/2"]);
    assert_eq!((v["results"]["mean"].as_str(), v["results"]["variance"].as_str()), (Some("1"), Some("1/2")));
}

#[test]
fn verify_single_identity() {
    let v = json(&["verify", "I2_39"]);
    assert_eq!(v["results"]["passed"], true);
    let ids = v["results"]["identities"].as_array().unwrap();
    assert_eq!(ids.len(), 1);
    assert_eq!(ids[0]["id"], "I2_39");
    assert_eq!(ids[0]["outcome"], "pass");
    assert_eq!(ids[0]["mode"], "exact");
}

#[test]
fn verify_with_small_grid() {
    let v = json(&["verify", "I3_16", "I7_12", "--grid", "q=1/2,1", "--grid", "max_int=4"]);
    assert_eq!(v["spec"]["qs"], "1/2,1");
    assert_eq!(v["spec"]["max_int"], "4");
    assert_eq!(v["results"]["passed"], true);
}

#[test]
fn watchlist_counts_only_when_asked() {
    let args = ["verify", "I4_24", "--grid", "q_super=3", "--grid", "max_int=4"];
    let plain = qprob(&args);
    assert_eq!(plain.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&plain.stdout).unwrap();
    assert_eq!(v["results"]["identities"][0]["outcome"], "fail");
    let strict = qprob(&[&args[..], &["--include-watchlist"]].concat());
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let unknown = qprob(&["verify", "BOGUS"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("BOGUS"));
    assert_eq!(qprob(&["pmf", "bernoulli", "--n", "2"]).status.code(), Some(2));
    assert_eq!(qprob(&["pmf", "bernoulli", "--n", "2", "--p", "x", "--q", "1/2"]).status.code(), Some(2));
    assert_eq!(qprob(&["frobnicate"]).status.code(), Some(2));
    let domain = qprob(&["pmf", "bernoulli", "--n", "2", "--p", "3/2", "--q", "1/2"]);
    assert_eq!(domain.status.code(), Some(1));
    assert!(domain.stdout.is_empty());
    assert_eq!(qprob(&["pmf", "bernoulli", "--n", "2", "--p", "1/2", "--q", "2"]).status.code(), Some(1));
}

#[test]
fn sampling_is_deterministic() {
    let args = ["sample", "bernoulli", "--n", "4", "--p", "1/2", "--q", "1/2", "--samples", "100000", "--seed", "7"];
    let first = qprob(&args);
    let second = qprob(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["seed"], 7);
    let tv = v["results"]["tv_distance"].as_str().unwrap();
    let (n, d) = tv.split_once('/').unwrap_or((tv, "1"));
    assert!(n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap() < 0.01);
}

#[test]
fn seed_from_environment() {
    let base = ["sample", "hypergeom", "--m", "3", "--u", "2", "--n", "3", "--q", "1/2", "--samples", "5000"];
    let flagged: Value = serde_json::from_slice(&qprob(&[&base[..], &["--seed", "42"]].concat()).stdout).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_qprob")).args(base).env("QPROB_SEED", "42").output().unwrap();
    let from_env: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(from_env["seed"], 42);
    assert_eq!(flagged["results"], from_env["results"]);
}

#[test]
fn limit_tables() {
    let v = json(&["limit", "L4_3", "--p", "1/2", "--q", "1/2", "--at", "5,10,20"]);
    assert_eq!(v["results"]["strictly_decreasing"], true);
    assert_eq!(v["results"]["rows"].as_array().unwrap().len(), 3);
    let v = json(&["limit", "L5_17", "--q", "2", "--c", "4", "--n", "3", "--at", "10,20,30"]);
    assert_eq!(v["results"]["strictly_decreasing"], true);
    assert_eq!(v["results"]["rows"][0]["distance"]["lo"], "915713/216668672");
    let v = json(&["limit", "I4_24", "--lambda", "1/5", "--q", "3", "--e1-target", "--at", "20,30,40"]);
    assert_eq!(v["results"]["strictly_decreasing"], true);
}
