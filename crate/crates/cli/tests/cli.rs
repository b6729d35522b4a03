use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const GOLDEN: &str = include_str!("golden/nerve_homotopy_table.tsv");

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_arcnerve"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn homotopy_of(doc: &str, extra: &[&str]) -> Value {
    let mut args = vec!["homotopy", "--input", "-"];
    args.extend_from_slice(extra);
    let out = run(&args, Some(doc));
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice::<Value>(&out.stdout).unwrap()["homotopy"].clone()
}

fn half_arcs_of_six() -> String {
    let arcs: Vec<String> = (0..6)
        .map(|i| format!(r#"{{"start":"{i}/6","length":"1/2"}}"#))
        .collect();
    format!(r#"{{"arcs":[{}]}}"#, arcs.join(","))
}

#[test]
fn six_half_arcs() {
    let h = homotopy_of(&half_arcs_of_six(), &[]);
    assert_eq!(h["type"], "wedge");
    assert_eq!((h["dim"].as_u64(), h["count"].as_u64()), (Some(2), Some(2)));
    assert_eq!(
        homotopy_of(&half_arcs_of_six(), &["--complex", "clique"])["type"],
        "contractible"
    );
}

#[test]
fn rips_complex_of_nine_points() {
    let points: Vec<String> = (0..9).map(|i| format!(r#""{i}/9""#)).collect();
    let doc = format!(
        r#"{{"points":[{}],"radius":"3/9","complex":"vr"}}"#,
        points.join(",")
    );
    let h = homotopy_of(&doc, &[]);
    assert_eq!((h["dim"].as_u64(), h["count"].as_u64()), (Some(2), Some(2)));
    let big = homotopy_of(&doc, &["--radius", "1/2"]);
    assert_eq!(big["type"], "contractible");
}

#[test]
fn removal_log_replays() {
    let out = run(
        &["homotopy", "--random", "8", "--seed", "5", "--log-removals"],
        None,
    );
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["log_verified"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["homotopy", "--input", "-"], Some("{\"arcs\":["))
            .status
            .code(),
        Some(2)
    );
    let negative = r#"{"arcs":[{"start":"0","length":"-1/2"}]}"#;
    assert_eq!(
        run(&["homotopy", "--input", "-"], Some(negative))
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["homotopy", "--input", "-"], Some(r#"{"arcs":[]}"#))
            .status
            .code(),
        Some(3)
    );
    assert_eq!(run(&["chromatic", "3", "2"], None).status.code(), Some(4));
    let fault = run(
        &["verify", "--n-max", "5", "--random", "5", "--inject-fault"],
        None,
    );
    assert_eq!(fault.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&fault.stdout).contains("counterexample"));
}

#[test]
fn verify_passes() {
    let out = run(&["verify", "--n-max", "6", "--random", "20"], None);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

#[test]
fn table_matches_golden() {
    let out = run(&["table", "--n-max", "18", "--k-max", "12"], None);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), GOLDEN);
}

#[test]
fn chromatic_of_five_cycle() {
    let out = run(&["chromatic", "5", "2"], None);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        "chi=3 bound=3 gap=0"
    );
}

#[test]
fn polytope_inclusion() {
    let out = run(&["polytope", "7", "4", "--check-inclusion", "4"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("C_4(7) has 14 facets"));
    assert!(text.contains("every facet lies in N(7,4): true"));
}

#[test]
fn generators_even_case() {
    let out = run(&["generators", "6", "3", "--json"], None);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["case"], "even");
    assert_eq!(v["rank"], 2);
    assert_eq!(v["beta_is_cocycle"], true);
    assert_eq!(v["beta_on_delta_boundary"].as_i64().map(i64::abs), Some(1));
    assert_eq!(v["alpha_sum_is_boundary"], true);
}

#[test]
fn bench_single_arc() {
    let out = run(&["bench", "--count", "1", "--repeats", "1"], None);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        (
            v["runs"][0]["n_prime"].as_u64(),
            v["runs"][0]["k_prime"].as_u64()
        ),
        (Some(1), Some(0))
    );
}

#[test]
fn reduce_is_deterministic() {
    let a = run(&["reduce", "--random", "300", "--seed", "9"], None);
    let b = run(&["reduce", "--random", "300", "--seed", "9"], None);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
