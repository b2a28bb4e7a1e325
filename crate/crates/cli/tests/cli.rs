use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert-kit")).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert-kit"))
        .args(args)
        .env("SCHUBERT_KIT_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = run(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn recursion(a: i128, b: i128, n: usize) -> Vec<(i128, i128)> {
    let mut v = vec![(0, 0), (1, 1)];
    while v.len() <= n {
        let j = v.len() - 1;
        v.push((a * v[j].1 - v[j - 1].0, b * v[j].0 - v[j - 1].1));
    }
    v
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn sequence_table_rows() {
    let o = run(&["rank2", "table", "-a", "2", "-b", "3", "-N", "4", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,c_n,d_n,g_n");
    assert_eq!(*lines.last().unwrap(), "4,8,12,4");

    for (a, b) in [(1, 4), (3, 3), (2, 7)] {
        let v = json(&["rank2", "table", "-a", &a.to_string(), "-b", &b.to_string(), "-N", "18"]);
        let rows = v["results"]["sequences"].as_array().unwrap();
        assert_eq!(rows.len(), 19);
        for (n, (c, d)) in recursion(a, b, 18).into_iter().enumerate() {
            assert_eq!(rows[n]["c_n"], Value::String(c.to_string()));
            assert_eq!(rows[n]["d_n"], Value::String(d.to_string()));
            assert_eq!(rows[n]["g_n"], Value::String(gcd(c, d).to_string()));
        }
    }
}

#[test]
fn prime_order_methods_agree() {
    let v = json(&["rank2", "prime-order", "-a", "2", "-b", "2", "-p", "5"]);
    let row = &v["results"]["orders"][0];
    assert_eq!(row["k"], 5);
    assert_eq!(row["scan_k"], 5);
    assert_eq!(row["matrix_k"], 5);
    assert_eq!(row["agree"], true);

    let o = run(&["rank2", "prime-order", "-a", "1,2,3", "-b", "2,3,5", "-p", "2,3,7", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("a,b,p,k,case,scan_k,matrix_k,agree\n"));
    // (1,2) and (1,3) have ab < 4 and are skipped
    assert_eq!(text.lines().count(), 1 + 7 * 3);
    for line in text.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        let (a, b, p, k): (i128, i128, i128, usize) =
            (f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].parse().unwrap(), f[3].parse().unwrap());
        let seq = recursion(a, b, k);
        let first = (1..seq.len()).find(|&n| gcd(seq[n].0, seq[n].1) % p == 0);
        assert_eq!(first, Some(k), "{line}");
        assert_eq!(f[7], "true");
    }
}

#[test]
fn gcm_check_example() {
    let v = json(&["gcm", "check", "2,-2;-2,2"]);
    let summary = v["results"]["summary"].as_array().unwrap();
    assert!(summary.iter().any(|r| r["property"] == "valid" && r["value"] == true));
    let subsets: Vec<&str> =
        v["results"]["spherical"].as_array().unwrap().iter().map(|r| r["subset"].as_str().unwrap()).collect();
    assert_eq!(subsets, ["{}", "{1}", "{2}"]);
    assert_eq!(v["results"]["coxeter"][0]["m_ij"], "inf");
    assert_eq!(v["results"]["realization"]["torus_rank"], 3);

    let v = json(&["gcm", "poset", "2,-1,0;-1,2,-1;0,-1,2"]);
    assert_eq!(v["results"]["subsets"].as_array().unwrap().len(), 8);
    assert_eq!(v["results"]["covers"].as_array().unwrap().len(), 12);
}

#[test]
fn gcm_from_json_file() {
    let path = std::env::temp_dir().join(format!("schubert-kit-gcm-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"labels": ["s", "t"], "rows": [[2, -1], [-3, 2]]}"#).unwrap();
    let v = json(&["gcm", "check", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["results"]["coxeter"][0]["m_ij"], 6);
    assert!(v["results"]["summary"].as_array().unwrap().iter().any(|r| r["value"] == "s,t"));
}

#[test]
fn weyl_and_schubert_commands() {
    let v = json(&["weyl", "enum", "--gcm", "2,-1;-1,2", "--max-len", "8"]);
    let counts: Vec<i64> =
        v["results"]["counts"].as_array().unwrap().iter().map(|r| r["count"].as_i64().unwrap()).collect();
    assert_eq!(counts, [1, 2, 2, 1]);
    assert_eq!(v["results"]["elements"][3]["word"], serde_json::json!([1, 2]));

    let v = json(&["weyl", "bruhat", "--gcm", "2,-2;-2,2", "--u", "1", "--v", "2,1,2"]);
    assert_eq!(v["results"]["comparison"][0]["u_leq_v"], true);
    assert_eq!(v["results"]["comparison"][0]["v_leq_u"], false);

    // A_2 delta^{r1 r2} = delta^{r1}
    let v = json(&["schubert", "act", "--gcm", "2,-2;-2,2", "--word", "2", "--class", "1,2"]);
    let terms = v["results"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["word"], serde_json::json!([1]));

    let v = json(&["schubert", "coproduct", "--gcm", "2,-3;-2,2", "--word", "1,2,1,2"]);
    let terms = v["results"]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 5);
    assert!(terms.iter().all(|t| t["coefficient"] == "1"));
}

#[test]
fn poly_commands() {
    let v = json(&["poly", "psi", "--gcm", "2,-1;-1,2", "--poly", "a1", "--field", "Q"]);
    let terms = v["results"]["terms"].as_array().unwrap();
    // psi(alpha_1) = 2 delta^{r1} - delta^{r2}
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["coefficient"], "2");
    assert_eq!(terms[1]["coefficient"], "-1");

    let v = json(&["poly", "invariants", "--gcm", "2,-2;-2,2", "--field", "Q", "--max-deg", "8"]);
    let dims: Vec<i64> =
        v["results"]["degrees"].as_array().unwrap().iter().map(|r| r["dim_s"].as_i64().unwrap()).collect();
    assert_eq!(dims, [1, 2, 2, 2, 2]);
    assert_eq!(v["bounds"]["max_deg"], 8);
}

#[test]
fn rank_two_checks() {
    let v = json(&["rank2", "products", "-a", "2", "-b", "3", "-N", "8"]);
    assert!(v["results"]["checks"].as_array().unwrap().iter().all(|r| r["holds"] == true));

    let o = run(&["rank2", "hk", "-a", "2", "-b", "2", "-N", "3", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("degree,group,order\n0,Z,inf\n1,0,1\n2,0,1\n3,Z,inf\n4,Z/2,2\n"));

    let v = json(&["rank2", "hopf", "-a", "2", "-b", "2,3", "-p", "2,3", "-N", "12", "--dual-n", "6"]);
    assert_eq!(v["results"]["checks"].as_array().unwrap().len(), 4);
    assert_eq!(v["results"]["violations"], serde_json::json!([]));
}

#[test]
fn json_shape() {
    let v = json(&["rank2", "table", "-a", "5", "-b", "9", "-N", "40"]);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["bounds", "params", "results"]);
    assert_eq!(v["params"]["precision"], "exact");
    assert_eq!(v["bounds"]["N"], 40);
    // exceeds 64 bits, still exact
    let c = v["results"]["sequences"][40]["c_n"].as_str().unwrap();
    assert!(c.len() > 30 && c.bytes().all(|b| b.is_ascii_digit()));
}

#[test]
fn deterministic_output() {
    let args = ["rank2", "prime-order", "-a", "1,2,3,4,5", "-b", "3,4,5,6", "-p", "2,3,5,7,11", "--format", "json"];
    let one = run_env(&args, "1");
    let many = run_env(&args, "4");
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
    let args = ["rank2", "hopf", "-a", "2", "-b", "2,3", "-p", "2,3", "-N", "10", "--dual-n", "4"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn exit_codes() {
    // usage and invalid input
    assert_eq!(run(&["rank2", "table", "-a", "1", "-b", "2"]).status.code(), Some(2));
    assert_eq!(run(&["gcm", "check", "2,1;-1,2"]).status.code(), Some(2));
    assert_eq!(run(&["schubert", "act", "--gcm", "2,-2;-2,2", "--word", "1,1", "--class", "1"]).status.code(), Some(2));
    assert_eq!(run(&["rank2", "prime-order", "-a", "2", "-b", "2", "-p", "4"]).status.code(), Some(2));
    assert_eq!(run(&["rank2", "prime-order", "-a", "1", "-b", "4", "-p", "2", "--scan-bound", "2"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run_env(&["rank2", "table", "-a", "2", "-b", "2"], "zero").status.code(), Some(2));
    let o = run(&["gcm", "check", "2,-1;-2,3"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("a[2][2]"));

    // a failing identity: p = 2, k = 3 with v_2(g_3) = 1
    let o = run(&["rank2", "bockstein", "-a", "1", "-b", "7", "-p", "2", "-S", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o), "a,b,p,k,holds,failing_s\n1,7,2,3,false,\"2,4\"\n");
    assert_eq!(run(&["rank2", "bockstein", "-a", "2", "-b", "3", "-p", "3"]).status.code(), Some(0));

    // unwritable destination
    assert_eq!(run(&["rank2", "table", "-a", "2", "-b", "2", "-o", "/nonexistent/dir/out.txt"]).status.code(), Some(1));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("schubert-kit-out-{}.csv", std::process::id()));
    let o = run(&["rank2", "table", "-a", "2", "-b", "2", "-N", "3", "--format", "csv", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text, "n,c_n,d_n,g_n\n0,0,0,0\n1,1,1,1\n2,2,2,2\n3,3,3,3\n");
}

#[test]
fn table_headers_name_bounds() {
    let o = run(&["weyl", "enum", "--gcm", "2,-2;-2,2"]);
    let text = stdout(&o);
    assert!(text.starts_with("# schubert-kit weyl enum\n# params: gcm=2,-2;-2,2\n# bounds: max_len=8\n# precision: exact\n"));
    let text = stdout(&run(&["rank2", "hk", "-a", "2", "-b", "2"]));
    assert!(text.contains("# bounds: N=20\n"));
}

#[test]
fn selftests_pass() {
    for module in ["gcm", "weyl", "schubert", "poly", "rank2"] {
        let o = run(&[module, "--selftest", "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{module}: {}", String::from_utf8_lossy(&o.stderr));
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        let checks = v["results"]["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c["passed"] == true));
    }
    assert_eq!(run(&["rank2", "table", "--selftest"]).status.code(), Some(0));
    assert_eq!(run(&["weyl"]).status.code(), Some(2));
}
