use std::process::{Command, Output};

use degen_poly::{DegenSequenceTable, VerificationReport};

fn degen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degen"))
        .args(args)
        .env_remove("DEGEN_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn table_dimorphic() {
    let out = degen(&["table", "dimorphic", "--n-max", "3", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n,value\n0,0\n1,1\n2,3 + (-1)λ\n3,7 + (-9)λ + 2λ^2\n"
    );
}

#[test]
fn table_mersenne_json() {
    let out = degen(&["table", "mersenne", "--n-max", "4"]);
    assert!(out.status.success());
    let table: DegenSequenceTable = serde_json::from_str(&stdout(&out)).unwrap();
    let values: Vec<String> = table.values.iter().map(|v| v.to_string()).collect();
    assert_eq!(values, ["0", "1", "3", "7", "15"]);
}

#[test]
fn table_beta_single_row() {
    let out = degen(&["table", "beta", "--n-max", "0", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,value\n0,1\n");
}

#[test]
fn table_json_round_trips_byte_for_byte() {
    for family in [
        "gff",
        "beta",
        "dimorphic",
        "mersenne",
        "stirling2",
        "bell-triangle",
        "phi",
    ] {
        let out = degen(&["table", family, "--n-max", "6"]);
        assert!(out.status.success(), "{family}");
        let text = stdout(&out);
        let table: DegenSequenceTable = serde_json::from_str(&text).unwrap();
        assert_eq!(table.to_json(), text, "{family}");
    }
}

#[test]
fn table_methods_agree() {
    let a = stdout(&degen(&[
        "table", "beta", "--n-max", "6", "--format", "csv",
    ]));
    let b = stdout(&degen(&[
        "table",
        "beta",
        "--n-max",
        "6",
        "--format",
        "csv",
        "--method",
        "mersenne-recurrence",
    ]));
    let c = stdout(&degen(&[
        "table",
        "beta",
        "--n-max",
        "6",
        "--format",
        "csv",
        "--method",
        "binomial-expansion",
    ]));
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn table_triangle_csv() {
    let out = degen(&["table", "stirling2", "--n-max", "4", "--format", "csv"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,k=0,k=1,k=2,k=3,k=4");
    assert_eq!(lines[5], "4,0,1,7,6,1");
    assert!(!text.contains('\r'));
}

#[test]
fn table_usage_errors() {
    assert_eq!(degen(&["table", "lucas"]).status.code(), Some(2));
    assert_eq!(
        degen(&["table", "beta", "--n-max", "8", "--order", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        degen(&["table", "beta", "--method", "guess"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_single_trivial_row() {
    let out = degen(&["verify", "bernoulli-recurrence", "--n-max", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<VerificationReport> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].results.len(), 1);
    assert!(reports[0].all_pass);
}

#[test]
fn verify_all_to_ten() {
    let out = degen(&["verify", "--all", "--n-max", "10"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let reports: Vec<VerificationReport> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports.len(), 13);
    assert!(reports.iter().all(|r| r.all_pass));
}

#[test]
fn verify_fault_injection_fails() {
    let out = degen(&[
        "verify",
        "bernoulli-recurrence",
        "--n-max",
        "4",
        "--inject-fault",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let reports: Vec<VerificationReport> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(reports[0].results.iter().any(|r| r.residual.is_some()));
    assert!(String::from_utf8_lossy(&out.stderr).contains("residual"));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(degen(&["verify"]).status.code(), Some(2));
    assert_eq!(
        degen(&["verify", "no-such-identity"]).status.code(),
        Some(2)
    );
    assert_eq!(
        degen(&["verify", "dimorphic-bell", "--n-max", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        degen(&["verify", "dimorphic-egf", "--n-max", "30"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = degen(&[
        "verify",
        "mersenne-gf",
        "--n-max",
        "3",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    assert_eq!(
        text,
        "identity,n,pass,residual\nMERSENNE_GF,0,true,\nMERSENNE_GF,1,true,\nMERSENNE_GF,2,true,\nMERSENNE_GF,3,true,\n"
    );
}

#[test]
fn config_file_sets_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("degen.toml");
    std::fs::write(&path, "n_max = 2\nformat = \"csv\"\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_degen"))
        .args(["table", "mersenne"])
        .env("DEGEN_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "n,value\n0,0\n1,1\n2,3\n");

    std::fs::write(&path, "bogus = 1\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_degen"))
        .args(["table", "mersenne"])
        .env("DEGEN_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn eval_examples() {
    assert_eq!(
        stdout(&degen(&["eval", "beta", "2", "--lambda", "0", "--x", "0"])),
        "1/6\n"
    );
    assert_eq!(
        stdout(&degen(&["eval", "dimorphic", "5", "--lambda", "0"])),
        "31\n"
    );
    assert_eq!(
        stdout(&degen(&["eval", "gff", "3", "--lambda", "1", "--x", "3"])),
        "6\n"
    );
    assert_eq!(
        stdout(&degen(&["eval", "beta", "1", "--lambda", "-1/3"])),
        "x + (-2/3)\n"
    );
    assert_eq!(
        stdout(&degen(&["eval", "beta", "1"])),
        "x + (-1/2) + (1/2)λ\n"
    );
}

#[test]
fn eval_rejects_malformed_rationals() {
    assert_eq!(
        degen(&["eval", "beta", "2", "--lambda", "0.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        degen(&["eval", "beta", "2", "--x", "1/0"]).status.code(),
        Some(2)
    );
    assert_eq!(degen(&["eval", "stirling2", "2"]).status.code(), Some(2));
}

#[test]
fn mersenne_prime_subcommand() {
    assert_eq!(stdout(&degen(&["mersenne-prime", "7"])), "7 prime\n");
    assert_eq!(stdout(&degen(&["mersenne-prime", "11"])), "11 composite\n");
    assert_eq!(stdout(&degen(&["mersenne-prime", "4"])), "4 composite\n");
    assert_eq!(
        stdout(&degen(&["mersenne-prime", "--up-to", "31"])),
        "2\n3\n5\n7\n13\n17\n19\n31\n"
    );
    assert_eq!(degen(&["mersenne-prime", "1"]).status.code(), Some(2));
    assert_eq!(degen(&["mersenne-prime"]).status.code(), Some(2));
}
