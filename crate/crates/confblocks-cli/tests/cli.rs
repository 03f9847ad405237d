use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output};
use tempfile::NamedTempFile;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_confblocks"));
    c.env_remove("CONFBLOCKS_STRATUM_CAP").env_remove("CONFBLOCKS_MONOMIAL_CEILING");
    c
}

fn config(text: &str) -> NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".toml").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str], cfg: Option<&NamedTempFile>) -> Output {
    let mut c = bin();
    c.args(args);
    if let Some(t) = cfg {
        c.arg("--config").arg(t.path());
    }
    c.output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn blocks_vacuum_insertion() {
    let cfg = config("algebra = \"A1\"\nlevel = 1\nweights = [[1], [1], [0]]\n");
    let out = run(&["blocks"], Some(&cfg));
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["dim"], 1);
    assert_eq!(v["status"], "PASS");
    assert!(v["result"]["basis"][0][0].is_string());
}

#[test]
fn blocks_mismatch_reports_zero() {
    let cfg = config("algebra = \"A1\"\nlevel = 2\nweights = [[1], [2]]\n");
    let v = json(&run(&["blocks"], Some(&cfg)));
    assert_eq!(v["result"]["dim"], 0);
    assert!(v["result"]["diagnostic"].is_string());
}

#[test]
fn malformed_config_fails() {
    let cfg = config("algebra = \"A1\"\nlevel = \"one\"\n");
    let out = run(&["blocks"], Some(&cfg));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("configuration error"));
}

#[test]
fn verify_theorem_sl3() {
    let cfg = config("algebra = \"A2\"\nlevel = 1\nweights = [[1, 0], [0, 1]]\n");
    let out = run(&["verify-theorem"], Some(&cfg));
    assert!(out.status.success());
    let v = json(&out);
    let inst = &v["result"]["instances"][0];
    assert_eq!(inst["dim_blocks"], 1);
    assert_eq!(inst["dim_admissible"], 1);
    assert_eq!(inst["same_span"], true);
}

#[test]
fn verify_theorem_inconsistent_config() {
    let cfg = config("algebra = \"A1\"\nlevel = 1\nweights = [[1], [1]]\npoints = [0]\n");
    assert_eq!(run(&["verify-theorem"], Some(&cfg)).status.code(), Some(2));
}

#[test]
fn stratum_cap_flag_and_env() {
    let cfg = config("algebra = \"A1\"\nlevel = 2\nweights = [[2], [2], [2], [2]]\n");
    let out = run(&["verify-theorem", "--stratum-cap", "3"], Some(&cfg));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    let out = bin()
        .args(["verify-theorem", "--config"])
        .arg(cfg.path())
        .env("CONFBLOCKS_STRATUM_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn logbasis_counts() {
    let cfg = config("[logbasis]\nm = 3\nn = 2\n");
    let v = json(&run(&["logbasis"], Some(&cfg)));
    assert_eq!(v["result"]["count"], 24);
    assert_eq!(v["result"]["expected_count"], "24");
}

#[test]
fn logbasis_symmetrized_for_instance() {
    let cfg = config("algebra = \"A1\"\nlevel = 1\nweights = [[1], [1]]\n");
    let v = json(&run(&["logbasis"], Some(&cfg)));
    assert_eq!(v["result"]["count"], 2);
    assert_eq!(v["result"]["symmetrized"].as_array().unwrap().len(), 2);
}

#[test]
fn residue_chain() {
    let cfg = config("[residue]\npartition = \"(2,1|3)\"\ndivisors = [\"t2=t1\", \"t1=z1\"]\n");
    let v = json(&run(&["residue"], Some(&cfg)));
    assert_eq!(v["result"]["result"]["text"], "[1] / (t3 - z2) dt3");
    assert_eq!(v["result"]["univariate"]["sum"], "0");
}

#[test]
fn residue_wrong_elimination_order_errors() {
    let cfg = config("[residue]\npartition = \"(1,2)\"\ndivisors = [\"t1=t2\"]\n");
    assert_eq!(run(&["residue"], Some(&cfg)).status.code(), Some(2));
}

#[test]
fn degree_lemma_suite() {
    let out = run(&["degree-lemma", "--suite"], None);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["result"]["all_empty"], true);
    assert_eq!(v["result"]["entries"].as_array().unwrap().len(), 12);
}

#[test]
fn degree_lemma_problem_file() {
    let cfg = config(
        "[problem]\nname = \"pair\"\nvariables = [\"u1\", \"u2\"]\nblocks = [[\"u1\", \"u2\"]]\ndiagonals = [[\"u1\", \"u2\"]]\nbound = 2\n",
    );
    let v = json(&run(&["degree-lemma"], Some(&cfg)));
    assert_eq!(v["result"]["entries"][0]["verdict"], "EMPTY");
    let cfg = config(
        "[problem]\nvariables = [\"u1\", \"u2\"]\nblocks = [[\"u1\", \"u2\"]]\ndiagonals = [[\"u1\", \"u2\"]]\nbound = 3\n",
    );
    let out = run(&["degree-lemma"], Some(&cfg));
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["result"]["entries"][0]["witness"].is_string());
}

#[test]
fn monomial_ceiling_env() {
    let out = bin().args(["degree-lemma", "--suite"]).env("CONFBLOCKS_MONOMIAL_CEILING", "10").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin()
        .args(["degree-lemma", "--suite", "--monomial-ceiling", "200000"])
        .env("CONFBLOCKS_MONOMIAL_CEILING", "10")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn root_info_g2() {
    let v = json(&run(&["root-info", "--algebra", "G2"], None));
    assert_eq!(v["result"]["dual_coxeter"], 4);
    assert_eq!(v["result"]["positive_root_count"], 6);
    assert_eq!(v["result"]["dualb_holds"], true);
}

#[test]
fn reports_are_byte_stable_and_out_flag() {
    let cfg = config("algebra = \"A1\"\nlevel = 2\nweights = [[1], [1], [1], [1]]\n");
    let a = run(&["svmap"], Some(&cfg)).stdout;
    let b = run(&["svmap"], Some(&cfg)).stdout;
    assert_eq!(a, b);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = bin().args(["svmap", "--config"]).arg(cfg.path()).arg("--out").arg(&path).output().unwrap();
    assert!(out.status.success() && out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert!(v.get("elapsed_ms").is_none());
    let t = json(&run(&["root-info", "--algebra", "A1", "--timing"], None));
    assert!(t["elapsed_ms"].is_u64());
}
