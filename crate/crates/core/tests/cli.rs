use std::io::Write;
use std::process::Command;

use serde_json::Value;
use tempfile::NamedTempFile;

use wittsat::cli::{
    cmd_check, cmd_cover, cmd_geometry, cmd_models, CommandKind, Input, Route, RunConfig,
};

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn config(kind: CommandKind, f: &NamedTempFile) -> RunConfig {
    RunConfig::new(kind, vec![Input::Path(f.path().to_path_buf())])
}

const CONTRADICTION: &str = "p cnf 1 2\n1 0\n-1 0\n";
const FOUR: &str = "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n";

#[test]
fn contradiction_is_unsat_on_every_route() {
    let f = file(CONTRADICTION);
    let out = cmd_check(&config(CommandKind::Check, &f));
    assert_eq!(out.exit_code, 1);
    assert_eq!(out.report["status"], "UNSAT");
    for r in ["algebra", "cover", "dpll"] {
        assert_eq!(out.report["routes"][r], "UNSAT");
    }
    assert!(out.report["model"].is_null());
}

#[test]
fn single_clause_is_sat_with_model() {
    let f = file("p cnf 3 1\n-2 3 0\n");
    for route in [Route::Algebra, Route::Cover, Route::Dpll, Route::All] {
        let mut c = config(CommandKind::Check, &f);
        c.route = Some(route);
        let out = cmd_check(&c);
        assert_eq!(out.exit_code, 0, "{route:?}");
        let model: Vec<i64> = serde_json::from_value(out.report["model"].clone()).unwrap();
        assert_eq!(model.len(), 3);
        assert!(model.contains(&-2) || model.contains(&3));
    }
}

#[test]
fn solver_codes() {
    let f = file(CONTRADICTION);
    let mut c = config(CommandKind::Check, &f);
    c.solver_codes = true;
    assert_eq!(cmd_check(&c).exit_code, 20);
}

#[test]
fn parse_errors_and_budgets() {
    let bad = file("p cnf 2 1\n1 3 0\n");
    assert_eq!(cmd_check(&config(CommandKind::Check, &bad)).exit_code, 2);
    let f = file(FOUR);
    let mut c = config(CommandKind::Check, &f);
    c.route = Some(Route::Algebra);
    c.term_budget = 1;
    let out = cmd_check(&c);
    assert_eq!(out.exit_code, 3);
    assert_eq!(out.report["error"]["kind"], "resource");
    let missing = RunConfig::new(
        CommandKind::Check,
        vec![Input::Path("/nonexistent/x.cnf".into())],
    );
    assert_eq!(cmd_check(&missing).exit_code, 2);
}

#[test]
fn models_of_empty_formula() {
    let f = file("p cnf 3 0\n");
    let out = cmd_models(&config(CommandKind::Models, &f));
    assert_eq!(out.report["count"], 8);
    assert_eq!(out.report["models"].as_array().unwrap().len(), 8);
}

#[test]
fn cover_of_four_clause_instance() {
    let f = file(FOUR);
    let out = cmd_cover(&config(CommandKind::Cover, &f));
    assert_eq!(out.report["covered"], true);
    assert_eq!(out.exit_code, 1);
    let patterns = file("+*\n-+\n");
    let out = cmd_cover(&config(CommandKind::Cover, &patterns));
    assert_eq!(out.report["covered"], false);
    assert_eq!(out.report["witness"], "--");
}

#[test]
fn geometry_of_mixed_clause() {
    let f = file("p cnf 2 1\n1 -2 0\n");
    let out = cmd_geometry(&config(CommandKind::Geometry, &f));
    assert_eq!(
        out.report["clauses"][0]["generators"],
        serde_json::json!(["p1", "q2"])
    );
    assert_eq!(out.report["assignments"].as_array().unwrap().len(), 4);
}

#[test]
fn reports_are_deterministic_apart_from_timings() {
    let f = file(FOUR);
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timings");
        v
    };
    let a = strip(cmd_check(&config(CommandKind::Check, &f)).report);
    let b = strip(cmd_check(&config(CommandKind::Check, &f)).report);
    assert_eq!(a, b);
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wittsat"))
}

#[test]
fn binary_check_json() {
    let f = file(FOUR);
    let out = binary()
        .args(["check", "--json"])
        .arg(f.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "UNSAT");
    assert_eq!(v["stats"]["patterns"], 4);
}

#[test]
fn binary_rebase_and_explore() {
    let m = file("2\n1 0\n0 1\n\n2\n0 -1\n1 0\n");
    let out = binary()
        .args(["rebase", "--json"])
        .arg(m.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["residuals"]["pairing"].as_f64().unwrap() < 1e-9);

    let same = file("2\n1 0\n0 1\n");
    let out = binary()
        .arg("rebase")
        .arg(same.path())
        .arg(same.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let f = file(FOUR);
    let run = || {
        let out = binary()
            .args(["explore", "--json", "--samples", "100", "--seed", "3"])
            .arg(f.path())
            .output()
            .unwrap();
        serde_json::from_slice::<Value>(&out.stdout).unwrap()
    };
    let a = run();
    assert_eq!(a, run());
    assert_eq!(a["discrete_cover"], true);
    assert_eq!(a["strict_fraction"], 0.0);
}

#[test]
fn limit_from_environment() {
    let f = file(FOUR);
    let out = binary()
        .args(["check", "--route", "algebra"])
        .arg(f.path())
        .env("WITTSAT_LIMIT", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
