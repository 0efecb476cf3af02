use serde_json::Value;
use std::process::{Command, Output};

fn s3harm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_s3harm"))
        .args(args)
        .env_remove("S3HARM_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = s3harm(&a);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "s3harm/1");
    v
}

#[test]
fn c2_table_ends_with_identity() {
    let o = s3harm(&["group", "--which", "C2", "--format", "csv"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 9);
    assert!(
        rows[8].starts_with("8,g1^8,\"(x0,x1,x2,x3)\""),
        "{}",
        rows[8]
    );
}

#[test]
fn g_count() {
    assert_eq!(
        stdout(&s3harm(&["group", "--which", "G", "--count-only"])).trim(),
        "384"
    );
    assert_eq!(
        json(&["group", "--which", "G", "--count-only"])["data"]["order"],
        384
    );
}

#[test]
fn c3_generators() {
    let v = json(&["group", "--which", "C3"]);
    let els = v["data"]["elements"].as_array().unwrap();
    assert_eq!(els.len(), 8);
    assert_eq!(els[1]["label"], "q1");
    assert_eq!(
        els[1]["element"]["signs"],
        serde_json::json!([1, -1, 1, -1])
    );
}

#[test]
fn multiplicity_tables() {
    let c2 = stdout(&s3harm(&[
        "multiplicity",
        "--manifold",
        "C2",
        "--jmax",
        "8",
        "--format",
        "csv",
    ]));
    let m: Vec<&str> = c2
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(m.join(","), "1,1,7,11,23,27,45,53,77");
    let v = json(&["multiplicity", "--manifold", "C3", "--jmax", "8"]);
    let m: Vec<u64> = v["data"]["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["m"].as_u64().unwrap())
        .collect();
    assert_eq!(m, [1, 0, 10, 7, 27, 22, 52, 45, 85]);
    let single = stdout(&s3harm(&[
        "multiplicity",
        "--manifold",
        "C2",
        "--jmax",
        "0",
        "--format",
        "csv",
    ]));
    assert_eq!(single, "j,m\n0,1\n");
}

#[test]
fn basis_counts() {
    assert_eq!(
        json(&["basis", "--manifold", "C3", "--j", "2"])["data"]["functions"]
            .as_array()
            .unwrap()
            .len(),
        10
    );
    assert_eq!(
        json(&["basis", "--manifold", "C2", "--j", "1"])["data"]["functions"]
            .as_array()
            .unwrap()
            .len(),
        1
    );
    assert_eq!(
        json(&["basis", "--manifold", "C3", "--j", "1"])["data"]["functions"]
            .as_array()
            .unwrap()
            .len(),
        0
    );
}

#[test]
fn induced_summary() {
    let v = json(&["induced"]);
    assert_eq!(v["data"]["sum_dim_squared"], 384);
    assert_eq!(v["data"]["entries"].as_array().unwrap().len(), 20);
    let csv = stdout(&s3harm(&["induced", "--format", "csv"]));
    assert!(csv.starts_with("orbit,K,f,dim,m(C8),m(Q)"));
}

#[test]
fn verify_exit_codes() {
    let o = s3harm(&["verify", "--suite", "all", "--jmax", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = s3harm(&["verify", "--suite", "group"]);
    let text = stdout(&o);
    assert!(text.contains("fixed-point-free") && text.contains("order"));
    let v = json(&["verify", "--suite", "induced"]);
    let checks: Vec<String> = v["data"]["reports"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect();
    assert!(checks.contains(&"sum dim^2 = 384".to_string()));
    assert!(checks.contains(&"sum dim m(C8) = 48".to_string()));
    let o = s3harm(&[
        "verify", "--suite", "basis", "--jmax", "2", "--tol", "1e-30",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn tolerance_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_s3harm"))
        .args([
            "verify",
            "--suite",
            "basis",
            "--jmax",
            "1",
            "--manifold",
            "C2",
            "--format",
            "json",
        ])
        .env("S3HARM_TOL", "1e-30")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["data"]["tol"].as_f64().unwrap() / 1e-30 - 1.0).abs() < 1e-12);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["multiplicity", "--manifold", "C2", "--jmax", "21"][..],
        &["group", "--which", "C5"],
        &["basis", "--manifold", "C2"],
        &["verify", "--suite", "nope"],
        &["frobnicate"],
    ] {
        assert_eq!(s3harm(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn deterministic_output() {
    let args = [
        "verify", "--suite", "basis", "--jmax", "2", "--points", "10", "--format", "json",
    ];
    assert_eq!(s3harm(&args).stdout, s3harm(&args).stdout);
    let seeded = [
        "verify", "--suite", "group", "--seed", "7", "--format", "json",
    ];
    assert_eq!(s3harm(&seeded).stdout, s3harm(&seeded).stdout);
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("s3harm-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let o = s3harm(&[
        "multiplicity",
        "--manifold",
        "C3",
        "--jmax",
        "3",
        "--format",
        "json",
        "--output",
        p,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["data"]["rows"][3]["m"], 7);
    std::fs::remove_file(path).unwrap();
}
