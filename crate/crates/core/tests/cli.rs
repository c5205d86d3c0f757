use std::process::{Command, Output};

use trispec::eigclass::EnumerationReport;
use trispec::{ExtendedParams, Spectrum};

fn trispec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trispec"))
        .args(args)
        .env_remove("TRISPEC_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = trispec(&a);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn spectrum_of_sp6() {
    let v = json(&["spectrum", "PR4(h=0,m=3)"]);
    assert_eq!(v["size"], 63);
    let s: Spectrum = serde_json::from_value(v["spectrum"].clone()).unwrap();
    assert_eq!(s.to_string(), "<32; [4]^27, [-4]^35>");
    assert_eq!(v["spectrum"]["entries"][0], serde_json::json!({"eig": "32", "mult": 1}));
    assert_eq!(v["min_eigenvalue"], "-4");
}

#[test]
fn spectrum_of_fi22() {
    let v = json(&["spectrum", "PR7a"]);
    assert_eq!(v["size"], 3510);
    assert_eq!(v["min_eigenvalue"], "-64");
}

#[test]
fn out_of_range_is_a_usage_error() {
    let o = trispec(&["spectrum", "PR4(m=0)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
    assert_eq!(trispec(&["spectrum"]).status.code(), Some(2));
    assert_eq!(trispec(&["enumerate", "--t", "-3"]).status.code(), Some(2));
    assert_eq!(trispec(&["matsuo", "--eta", "0"]).status.code(), Some(2));
    assert_eq!(trispec(&["matsuo", "--eta", "x/y"]).status.code(), Some(2));
}

#[test]
fn verify_matches() {
    for ct in ["PR2a(h=1,m=4)", "PR5(h=0,m=6,eps=-)", "PR7d"] {
        let o = trispec(&["verify", ct]);
        assert_eq!(o.status.code(), Some(0), "{ct}");
        assert!(stdout(&o).starts_with("match"));
    }
    let v = json(&["verify", "PR5(h=0,m=6,eps=-)"]);
    assert_eq!(v["n"], 126);
    assert_eq!(v["matches"], true);
}

#[test]
fn verify_without_oracle() {
    let o = trispec(&["verify", "PR7b"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no oracle at this scale"));
    let o = trispec(&["verify", "PR7b", "--cap", "100000"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no oracle at this scale"));
    let o = trispec(&["verify", "PR4(h=0,m=4)", "--cap", "100"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_trispec"))
        .args(["verify", "PR4(h=0,m=3)"])
        .env("TRISPEC_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_trispec"))
        .args(["verify", "PR4(h=0,m=3)", "--cap", "63"])
        .env("TRISPEC_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn quiet_verify_prints_nothing() {
    let o = trispec(&["--quiet", "verify", "PR4(h=0,m=2)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty() && o.stderr.is_empty());
}

#[test]
fn params_both_sides() {
    let p: ExtendedParams = serde_json::from_value(json(&["params", "PR7a"])).unwrap();
    assert_eq!((p.n, p.k, p.lambda, p.mu), (3510, 2816, 2248, 2304));
    let q: ExtendedParams = serde_json::from_value(json(&["params", "PR7a", "--side", "codiagram"])).unwrap();
    assert_eq!((q.k, q.lambda, q.mu), (693, 180, 126));
    assert_eq!(trispec(&["params", "PR2a(h=1,m=5)"]).status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let v = json(&["enumerate", "--t", "8"]);
    assert_eq!((v["S"].as_u64(), v["I"].as_u64()), (Some(4), Some(14)));
    let r: EnumerationReport = serde_json::from_value(v).unwrap();
    assert!(r.individuals[&-8].contains(&"PR4(h=0,m=4)".parse().unwrap()));
    let v = json(&["enumerate", "--t", "64"]);
    assert_eq!((v["S"].as_u64(), v["I"].as_u64()), (Some(13), Some(90)));
}

#[test]
fn matsuo_quarter() {
    let v = json(&["matsuo", "--eta", "1/4", "--symplectic"]);
    assert_eq!(v["moufang"].as_array().unwrap().len(), 1);
    assert_eq!(v["families"].as_array().unwrap().len(), 3);
    let ind = v["individuals"].as_array().unwrap();
    assert_eq!(ind.len(), 9);
    let sp8 = ind.iter().find(|c| c["central_type"] == "PR4(h=0,m=4)").unwrap();
    assert_eq!(sp8["gram"]["status"], "positive_semidefinite");
    assert_eq!(sp8["gram"]["radical_dim"], 135);
}

#[test]
fn catalog_list() {
    let v = json(&["catalog", "list"]);
    let rows = v.as_array().unwrap();
    assert!(rows.len() >= 24);
    for r in rows {
        for key in ["family", "param_ranges", "symplectic_type", "aliases"] {
            assert!(r.get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn export_graph_formats() {
    let o = trispec(&["export-graph", "PR2a(h=0,m=4)"]);
    let text = stdout(&o);
    assert!(text.starts_with("p edge 6 12\n"));
    assert_eq!(text.lines().count(), 13);
    let o = trispec(&["export-graph", "PR2a(h=0,m=4)", "--as", "edges"]);
    assert_eq!(stdout(&o).lines().count(), 12);
    let v = json(&["export-graph", "PR4(h=0,m=2)"]);
    assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(15), Some(60)));
    assert_eq!(trispec(&["export-graph", "PR7a"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["enumerate", "--t", "64", "--format", "json"][..],
        &["matsuo", "--eta", "1/4"],
        &["catalog", "list", "--format", "json"],
        &["export-graph", "PR5(h=0,m=5,eps=-)"],
    ] {
        assert_eq!(trispec(args).stdout, trispec(args).stdout);
    }
}
