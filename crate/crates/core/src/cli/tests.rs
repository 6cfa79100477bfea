use super::*;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["ospcoh"];
    argv.extend_from_slice(args);
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn audit_default_finds_repair() {
    let (code, out, _) = run(&["audit"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["audit"]["variant"], "repaired-V");
    assert_eq!(v["audit"]["changes"].as_array().unwrap().len(), 2);
    assert_eq!(v["module_axiom"], true);
}

#[test]
fn audit_printed_without_repair_fails() {
    let (code, out, _) = run(&["audit", "--table", "printed", "--no-repair"]);
    assert_eq!(code, 1);
    assert!(out.contains("(A,A,B)"), "{out}");
}

#[test]
fn audit_csv() {
    let (code, out, _) = run(&["audit", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("kind,item,from,to"));
    assert!(out.lines().any(|l| l.starts_with("change,")));
}

#[test]
fn dims_single_point() {
    let (code, out, _) = run(&["dims", "--lambda", "0", "--mu", "1/2", "--kmax", "3"]);
    assert_eq!(code, 0);
    let r: CohomologyReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.weight_zero(), vec![1, 2, 1, 0, 0]);
    assert!(r.matches);
}

#[test]
fn dims_generic_point_is_zero() {
    let (code, out, _) = run(&["dims", "--lambda", "1/3", "--mu", "0", "--format", "csv", "--nmax", "2", "--wmax", "1/2"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 3 * 3);
    assert!(rows.iter().all(|r| r.split(',').nth(5) == Some("0")));
}

#[test]
fn dims_grid_list() {
    let (code, out, _) = run(&["dims", "--grid", "0,0;-1/2,1", "--nmax", "2", "--wmax", "0", "--threads", "2"]);
    assert_eq!(code, 0);
    let rs: Vec<CohomologyReport> = serde_json::from_str(&out).unwrap();
    assert_eq!(rs.len(), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["dims", "--lambda", "0.5", "--mu", "0"]).0, 2);
    assert_eq!(run(&["dims", "--lambda", "0"]).0, 2);
    assert_eq!(run(&["dims", "--lambda", "0", "--mu", "0", "--nmax", "9"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["selftest", "--suite", "nope"]).0, 2);
}

#[test]
fn grid_parsing() {
    assert_eq!(parse_grid("halfints:-1..1").unwrap().len(), 25);
    assert_eq!(parse_grid("0,1/2").unwrap(), vec![(Rational::from_integer(0.into()), q(1, 2))]);
    assert!(parse_grid("halfints:1/3..1").is_err());
}

#[test]
fn cocycles_ftilde() {
    let (code, out, _) = run(&["cocycles", "--kind", "ftilde", "--k", "2"]);
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["slots"]["B"], "∂x^2");
}

#[test]
fn cocycles_h_and_cup() {
    let (code, out, _) = run(&["cocycles", "--kind", "h", "--lambda", "5/2"]);
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["slots"]["B"], "θ");
    let (code, out, _) = run(&["cocycles", "--kind", "cup", "--k", "1"]);
    assert_eq!(code, 0, "{out}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["gelfand_fuchs"]["constant"].is_string());
}

#[test]
fn selftest_algebra() {
    let (code, out, _) = run(&["selftest", "--suite", "algebra"]);
    assert_eq!(code, 0, "{out}");
}
