use std::process::{Command, Output};

use cyclomono::cli::json::certificate_from_json;
use cyclomono::criteria::Conclusion;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclomono"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn disc_of_x2_plus_1() {
    let o = run(&["disc", "x^2+1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-4\n");
}

#[test]
fn negative_leading_term_is_not_a_flag() {
    let o = run(&["disc", "-x^2+1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\n");
}

#[test]
fn resultant_and_cyclotomic() {
    assert_eq!(stdout(&run(&["resultant", "x-1", "x+1"])), "2\n");
    assert_eq!(stdout(&run(&["cyclotomic", "12"])), "x^4-x^2+1\n");
    assert_eq!(
        stdout(&run(&["compose-T", "--p", "3", "--m", "1", "--n", "2"])),
        "x^4+3x^2+3\n"
    );
}

#[test]
fn factor_modp_is_seed_stable() {
    let a = run(&["factor-modp", "x^4+x^3+x^2+x+1", "11", "--seed", "7"]);
    let b = run(&["factor-modp", "x^4+x^3+x^2+x+1", "11", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a), "unit 1 (mod 11)\n(x+2)\n(x+6)\n(x+7)\n(x+8)\n");
}

#[test]
fn monogenic_exit_codes_and_json() {
    let dir = std::env::temp_dir().join(format!("cyclomono-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cert.json");
    let o = run(&[
        "monogenic",
        "x^4+10x^2+42",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("conclusion:     monogenic"));
    let cert = certificate_from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(cert.conclusion, Conclusion::Monogenic);

    let o = run(&["monogenic", "x^4 + 34*x^2 + 294"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not_monogenic"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn dedekind_emits_json() {
    let o = run(&["dedekind", "x^2-5", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "fail");
    assert_eq!(v["gcd_degree"], 1);
    assert_eq!(v["F"], serde_json::json!(["3", "1"]));
}

#[test]
fn verify_theorem_single_row() {
    let o = run(&[
        "verify-theorem",
        "--p-set",
        "3",
        "--m-max",
        "1",
        "--n-max",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("  3  1  2    4"));
    assert!(text.contains("rows: 2  monogenic: 2"));
}

#[test]
fn jobs_do_not_change_report() {
    let a = run(&["verify-theorem", "--p-set", "2,3,5", "--jobs", "1"]);
    let b = run(&["verify-theorem", "--p-set", "2,3,5", "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn identities_and_gallery() {
    let o = run(&["identities", "--n-max", "12", "--q-set", "2,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
    let o = run(&["final-remarks"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Dedekind at 5: fail"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(run(&["disc", "x^"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["dedekind", "x^2+1", "4"]).status.code(), Some(2));
    assert_eq!(run(&["monogenic", "2x^2+1"]).status.code(), Some(2));
    let o = run(&["disc", "x^2+*"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
