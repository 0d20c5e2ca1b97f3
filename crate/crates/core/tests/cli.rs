//! End-to-end tests of the `sgx` binary: pipe composability, formats,
//! exit codes, and config handling.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sgx() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sgx"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = sgx()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn sgx");
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("wait for sgx")
}

fn run(args: &[&str]) -> Output {
    run_with_stdin(args, "")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn construct_pipes_into_spectrum() {
    let constructed = run(&["construct", "gamma", "--s", "2", "--n", "4"]);
    assert!(constructed.status.success());
    let sg6 = stdout_str(&constructed);

    let spectrum = run_with_stdin(&["spectrum"], &sg6);
    assert!(spectrum.status.success());
    let json: serde_json::Value = serde_json::from_str(stdout_str(&spectrum).trim()).unwrap();
    assert_eq!(json["schema"], 1);
    let index = json["index"].as_f64().unwrap();
    assert!((index - 5f64.sqrt()).abs() < 1e-8);
    assert_eq!(json["balanced"], false);
    assert_eq!(json["negative_edges"], 1);
}

#[test]
fn construct_pipes_into_check_for_all_kinds() {
    for (args, check) in [
        (vec!["construct", "gamma", "--s", "2", "--n", "8"], vec!["check", "--tk4-free", "2"]),
        (vec!["construct", "sigma", "--k", "1", "--r", "2", "--n", "10"], vec!["check", "--c3-free"]),
        (vec!["construct", "complete-pos", "--n", "6"], vec!["check", "--kr-free", "4"]),
        (vec!["construct", "complete-neg", "--n", "6"], vec!["check", "--tk4-free", "7"]),
    ] {
        let constructed = run(&args);
        assert!(constructed.status.success(), "{args:?}");
        let checked = run_with_stdin(&check, &stdout_str(&constructed));
        assert!(checked.status.success(), "{check:?}");
        let json: serde_json::Value =
            serde_json::from_str(stdout_str(&checked).trim()).unwrap();
        assert_eq!(json["schema"], 1);
    }
}

#[test]
fn check_reports_the_counts_from_the_examples() {
    // gamma(2,8) with t=2: free, count 1. complete-neg(8) with t=2: not
    // free, count C(6,2) = 15.
    let g = stdout_str(&run(&["construct", "gamma", "--s", "2", "--n", "8"]));
    let out = run_with_stdin(&["check", "--tk4-free", "2"], &g);
    let json: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(json["free"], true);
    assert_eq!(json["count_unbalanced_k4"], 1);

    let g = stdout_str(&run(&["construct", "complete-neg", "--n", "8"]));
    let out = run_with_stdin(&["check", "--tk4-free", "2"], &g);
    let json: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(json["free"], false);
    assert_eq!(json["count_unbalanced_k4"], 15);

    let g = stdout_str(&run(&["construct", "complete-pos", "--n", "5"]));
    let out = run_with_stdin(&["check", "--tk4-free", "2"], &g);
    let json: serde_json::Value = serde_json::from_str(stdout_str(&out).trim()).unwrap();
    assert_eq!(json["free"], true);
    assert_eq!(json["warning"], "input is balanced");
}

#[test]
fn exit_codes_follow_the_contract() {
    // Domain error: 1.
    assert_eq!(run(&["construct", "gamma", "--s", "9", "--n", "5"]).status.code(), Some(1));
    // Usage error: 1.
    assert_eq!(run(&["check", "--tk4-free", "2", "--c3-free"]).status.code(), Some(1));
    // Guard: 2.
    assert_eq!(run(&["search", "--n", "12", "--exhaustive"]).status.code(), Some(2));
    assert_eq!(run(&["search", "--n", "7", "--exhaustive"]).status.code(), Some(2));
    // Parse error: 1.
    assert_eq!(run_with_stdin(&["spectrum"], "garbage\n").status.code(), Some(1));
    // Help: 0.
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn canon_agrees_on_switching_equivalent_inputs() {
    let g = stdout_str(&run(&["construct", "gamma", "--s", "2", "--n", "5"]));
    let switched = stdout_str(&run_with_stdin(&["switch", "--set", "0,3"], &g));
    let canon_a = stdout_str(&run_with_stdin(&["canon"], &g));
    let canon_b = stdout_str(&run_with_stdin(&["canon"], &switched));
    assert_eq!(canon_a, canon_b);
    assert_ne!(g, switched);

    // Switching twice with the same set is the identity.
    let twice = stdout_str(&run_with_stdin(&["switch", "--set", "0,3"], &switched));
    assert_eq!(twice, g);
    // The empty set is the identity.
    let id = stdout_str(&run_with_stdin(&["switch", "--set", ""], &g));
    assert_eq!(id, g);
    // Out-of-range vertices are usage errors.
    assert_eq!(run_with_stdin(&["switch", "--set", "9"], &g).status.code(), Some(1));
}

#[test]
fn search_writes_a_verifiable_certificate() {
    let dir = std::env::temp_dir().join(format!("sgx-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cert_path = dir.join("cert.json");
    let out = run(&[
        "search",
        "--n",
        "5",
        "--t",
        "2",
        "--objective",
        "index",
        "--certificate",
        cert_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(stderr.contains("best_value"), "{stderr}");
    assert!(stderr.contains("structure"), "summary must include the structure report");

    let verified = run(&["verify-cert", cert_path.to_str().unwrap()]);
    assert_eq!(verified.status.code(), Some(0));

    // Tampering with the value must be caught with exit code 3.
    let text = std::fs::read_to_string(&cert_path).unwrap();
    let tampered = text.replace("\"best_value\": 3.", "\"best_value\": 4.");
    assert_ne!(text, tampered);
    std::fs::write(&cert_path, tampered).unwrap();
    assert_eq!(run(&["verify-cert", cert_path.to_str().unwrap()]).status.code(), Some(3));

    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_suite_runs_and_respects_format() {
    let out = run(&["verify", "2.2", "--n-max", "12", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.starts_with("suite,params,margin,pass,skipped"));
    assert!(text.lines().count() > 5);

    let out = run(&["verify", "nope"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn spectrum_reads_files_with_comments_and_formats_csv() {
    let dir = std::env::temp_dir().join(format!("sgx-cli-file-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("graphs.sg6");
    let g1 = stdout_str(&run(&["construct", "complete-pos", "--n", "4"]));
    let g2 = stdout_str(&run(&["construct", "gamma", "--s", "1", "--n", "4"]));
    std::fs::write(&input, format!("# two graphs\n{g1}\n{g2}")).unwrap();

    let out = run(&["spectrum", input.to_str().unwrap(), "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3); // header + 2 rows
    assert!(lines[1].starts_with("4,6,3,3,true,0"));

    // Config file provides the format; an explicit flag overrides it.
    let config = dir.join("sgx.conf");
    std::fs::write(&config, "format = csv\njobs = 1\n").unwrap();
    let out = run(&[
        "spectrum",
        input.to_str().unwrap(),
        "--config",
        config.to_str().unwrap(),
    ]);
    assert!(stdout_str(&out).starts_with("n,m,index"));
    let out = run(&[
        "spectrum",
        input.to_str().unwrap(),
        "--config",
        config.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert!(stdout_str(&out).starts_with('{'));

    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn jobs_default_comes_from_the_environment() {
    let mut cmd = sgx();
    cmd.env("SGX_JOBS", "3");
    cmd.args(["search", "--n", "4", "--family", "all-unbalanced"]);
    let out = cmd.output().unwrap();
    assert!(out.status.success());
    let json: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(json["schema"], 1);
    assert!((json["best_value"].as_f64().unwrap() - 5f64.sqrt()).abs() < 1e-8);

    // A bogus value is a usage error.
    let mut cmd = sgx();
    cmd.env("SGX_JOBS", "zero");
    cmd.args(["search", "--n", "4"]);
    assert_eq!(cmd.output().unwrap().status.code(), Some(1));
}
