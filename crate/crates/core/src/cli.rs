//! Command-line front end. Every command produces a JSON report and a text
//! rendering; the exit code is computed from the report alone.

use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::geometry::{
    assignment_of_sign_vector, cover_check, induced_pattern, induced_patterns, mtnp_of_assignment,
    mtnp_plane, parse_patterns, tnp_of_clause, write_patterns, SignVector, TernaryPattern,
};
use crate::oracle::{dpll, DpllResult};
use crate::orthogonal::{
    eigen_one_multiplicity, explore_cover, parse_matrices, witt_rebase, OrthogonalMatrix,
};
use crate::sat::{
    check_algebraic, encode_formula_with, parse_dimacs, Assignment, ClauseOrder, CnfFormula,
    EncodeOptions, DEFAULT_TERM_BUDGET,
};
use crate::{Error, Result};

pub const EXIT_SAT: i32 = 0;
pub const EXIT_UNSAT: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_DIVERGENCE: i32 = 4;

/// Largest `n` for which the default route runs the exponential routes.
pub const ALL_ROUTES_MAX_N: usize = 16;
/// Largest `n` for which `geometry` lists every assignment.
pub const GEOMETRY_ASSIGNMENTS_MAX_N: usize = 8;
/// Largest `n` for which `models` lists assignments rather than only counting.
pub const MODEL_LIST_MAX_N: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "wittsat",
    version,
    about = "SAT in the Clifford algebra of the neutral space and in O(n)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Decide satisfiability of a DIMACS formula.
    Check { file: Option<PathBuf> },
    /// Count and list satisfying assignments.
    Models { file: Option<PathBuf> },
    /// Pattern cover check on a DIMACS formula or a pattern dump.
    Cover { file: Option<PathBuf> },
    /// Null planes of the clauses and of the assignments.
    Geometry { file: Option<PathBuf> },
    /// Witt basis for two matrices, read from one file or two.
    Rebase {
        #[arg(num_args = 1..=2)]
        files: Vec<PathBuf>,
    },
    /// Sample O(n) against the clause sets of a DIMACS formula.
    Explore { file: Option<PathBuf> },
    /// Run the embedded acceptance suite.
    Selftest,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Route(s) for `check`; defaults to `all` up to 16 variables, `dpll` above.
    #[arg(long, global = true, value_enum)]
    pub route: Option<Route>,
    /// Term budget for the algebraic route.
    #[arg(long, global = true, env = "WITTSAT_LIMIT", default_value_t = DEFAULT_TERM_BUDGET)]
    pub limit: usize,
    /// Maximum number of models listed by `models`.
    #[arg(long, global = true, default_value_t = 1000)]
    pub max_models: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1000)]
    pub samples: usize,
    /// Factor order of the algebraic route.
    #[arg(long, global = true, value_enum, default_value_t = Order::Given)]
    pub order: Order,
    #[arg(long, global = true)]
    pub json: bool,
    /// Exit with 10 for SAT and 20 for UNSAT.
    #[arg(long, global = true)]
    pub solver_codes: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Algebra,
    Cover,
    Dpll,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Given,
    Activity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Check,
    Models,
    Cover,
    Geometry,
    Rebase,
    Explore,
    Selftest,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Stdin,
    Path(PathBuf),
}

impl Input {
    fn from_arg(p: Option<PathBuf>) -> Self {
        match p {
            Some(p) if p.as_os_str() != "-" => Input::Path(p),
            _ => Input::Stdin,
        }
    }

    fn read(&self) -> std::io::Result<String> {
        match self {
            Input::Stdin => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                Ok(s)
            }
            Input::Path(p) => std::fs::read_to_string(p),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    pub inputs: Vec<Input>,
    pub route: Option<Route>,
    pub term_budget: usize,
    pub max_models: usize,
    pub seed: u64,
    pub samples: usize,
    pub order: ClauseOrder,
    pub json: bool,
    pub solver_codes: bool,
}

impl RunConfig {
    pub fn new(command: CommandKind, inputs: Vec<Input>) -> Self {
        RunConfig {
            command,
            inputs,
            route: None,
            term_budget: DEFAULT_TERM_BUDGET,
            max_models: 1000,
            seed: 0,
            samples: 1000,
            order: ClauseOrder::Given,
            json: false,
            solver_codes: false,
        }
    }

    pub fn from_cli(cli: Cli) -> std::result::Result<Self, String> {
        let o = cli.options;
        let (command, inputs) = match cli.command {
            Command::Check { file } => (CommandKind::Check, vec![Input::from_arg(file)]),
            Command::Models { file } => (CommandKind::Models, vec![Input::from_arg(file)]),
            Command::Cover { file } => (CommandKind::Cover, vec![Input::from_arg(file)]),
            Command::Geometry { file } => (CommandKind::Geometry, vec![Input::from_arg(file)]),
            Command::Explore { file } => (CommandKind::Explore, vec![Input::from_arg(file)]),
            Command::Rebase { files } => (
                CommandKind::Rebase,
                files
                    .into_iter()
                    .map(|f| Input::from_arg(Some(f)))
                    .collect(),
            ),
            Command::Selftest => (CommandKind::Selftest, vec![]),
        };
        if o.limit == 0 || o.max_models == 0 {
            return Err("limits must be positive".into());
        }
        if o.route.is_some() && command != CommandKind::Check {
            return Err("--route applies to `check` only".into());
        }
        Ok(RunConfig {
            command,
            inputs,
            route: o.route,
            term_budget: o.limit,
            max_models: o.max_models,
            seed: o.seed,
            samples: o.samples,
            order: match o.order {
                Order::Given => ClauseOrder::Given,
                Order::Activity => ClauseOrder::Activity,
            },
            json: o.json,
            solver_codes: o.solver_codes,
        })
    }

    fn encode_options(&self) -> EncodeOptions {
        EncodeOptions {
            budget: self.term_budget,
            order: self.order,
        }
    }
}

/// A finished command: the report, its text rendering and the exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: Value,
    pub text: String,
    pub exit_code: i32,
}

impl Outcome {
    fn new(report: Value, text: String, solver_codes: bool) -> Self {
        let exit_code = exit_code_of(&report, solver_codes);
        Outcome {
            report,
            text,
            exit_code,
        }
    }

    fn error(e: &Error, solver_codes: bool) -> Self {
        let kind = if e.is_resource_limit() {
            "resource"
        } else {
            "input"
        };
        let report =
            json!({ "status": "ERROR", "error": { "kind": kind, "message": e.to_string() } });
        Outcome::new(report, format!("error: {e}\n"), solver_codes)
    }

    fn io_error(path: &Input, e: &std::io::Error, solver_codes: bool) -> Self {
        let name = match path {
            Input::Stdin => "<stdin>".to_string(),
            Input::Path(p) => p.display().to_string(),
        };
        let report = json!({ "status": "ERROR", "error": { "kind": "input", "message": format!("{name}: {e}") } });
        Outcome::new(report, format!("error: {name}: {e}\n"), solver_codes)
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut s = serde_json::to_string_pretty(&self.report).expect("serializable");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

/// The exit code as a function of the report's `status` field.
pub fn exit_code_of(report: &Value, solver_codes: bool) -> i32 {
    let status = report
        .get("status")
        .and_then(Value::as_str)
        .unwrap_or("ERROR");
    match status {
        "SAT" | "OK" => {
            if solver_codes && status == "SAT" {
                10
            } else {
                EXIT_SAT
            }
        }
        "UNSAT" => {
            if solver_codes {
                20
            } else {
                EXIT_UNSAT
            }
        }
        "DIVERGENCE" | "FAIL" => EXIT_DIVERGENCE,
        _ => match report.pointer("/error/kind").and_then(Value::as_str) {
            Some("resource") => EXIT_RESOURCE,
            _ => EXIT_PARSE,
        },
    }
}

pub fn run(config: &RunConfig) -> Outcome {
    match config.command {
        CommandKind::Check => cmd_check(config),
        CommandKind::Models => cmd_models(config),
        CommandKind::Cover => cmd_cover(config),
        CommandKind::Geometry => cmd_geometry(config),
        CommandKind::Rebase => cmd_rebase(config),
        CommandKind::Explore => cmd_explore(config),
        CommandKind::Selftest => cmd_selftest(config),
    }
}

fn read_inputs(config: &RunConfig) -> std::result::Result<Vec<String>, Outcome> {
    config
        .inputs
        .iter()
        .map(|i| {
            i.read()
                .map_err(|e| Outcome::io_error(i, &e, config.solver_codes))
        })
        .collect()
}

fn read_formula(config: &RunConfig) -> std::result::Result<CnfFormula, Outcome> {
    let text = read_inputs(config)?.concat();
    parse_dimacs(&text).map_err(|e| Outcome::error(&e, config.solver_codes))
}

fn model_json(a: &Assignment) -> Value {
    json!(a.to_dimacs())
}

fn status(unsat: bool) -> &'static str {
    if unsat {
        "UNSAT"
    } else {
        "SAT"
    }
}

fn warnings_json(f: &CnfFormula) -> Value {
    json!(f.meta.warnings)
}

pub fn cmd_check(config: &RunConfig) -> Outcome {
    let f = match read_formula(config) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let route = config.route.unwrap_or(if f.n() <= ALL_ROUTES_MAX_N {
        Route::All
    } else {
        Route::Dpll
    });
    let run_algebra = matches!(route, Route::Algebra | Route::All);
    let run_cover = matches!(route, Route::Cover | Route::All);
    let run_dpll = matches!(route, Route::Dpll | Route::All);

    let mut routes = Map::new();
    let mut timings = Map::new();
    let mut stats = Map::new();
    let mut verdicts = Vec::new();
    let mut model: Option<Assignment> = None;

    if run_algebra {
        let start = Instant::now();
        match check_algebraic(&f, &config.encode_options()) {
            Ok(v) => {
                timings.insert("algebra".into(), json!(start.elapsed().as_millis() as u64));
                routes.insert("algebra".into(), json!(status(v.unsat)));
                stats.insert("splits".into(), json!(v.split.splits));
                stats.insert("peak_terms".into(), json!(v.encode.peak_terms));
                verdicts.push(v.unsat);
            }
            Err(e) => return Outcome::error(&e, config.solver_codes),
        }
    }
    if run_cover {
        let start = Instant::now();
        let result = induced_patterns(&f).and_then(|p| cover_check(&p, f.n()));
        match result {
            Ok((witness, s)) => {
                timings.insert("cover".into(), json!(start.elapsed().as_millis() as u64));
                routes.insert("cover".into(), json!(status(witness.is_none())));
                stats.insert("patterns".into(), json!(s.patterns));
                stats.insert("cover_splits".into(), json!(s.splits));
                verdicts.push(witness.is_none());
                if let Some(w) = witness {
                    model = Some(assignment_of_sign_vector(&w));
                }
            }
            Err(e) => return Outcome::error(&e, config.solver_codes),
        }
    }
    if run_dpll {
        let start = Instant::now();
        let d = dpll(&f);
        timings.insert("dpll".into(), json!(start.elapsed().as_millis() as u64));
        routes.insert("dpll".into(), json!(status(d.is_unsat())));
        verdicts.push(d.is_unsat());
        if let DpllResult::Sat(a) = d {
            model = Some(a);
        }
    }
    // algebra alone: read a model off a surviving term of S
    if model.is_none() && verdicts.iter().all(|u| !u) {
        model = algebraic_model(&f, config);
    }

    let diverged =
        verdicts.windows(2).any(|w| w[0] != w[1]) || model.as_ref().is_some_and(|m| !f.evaluate(m));
    let st = if diverged {
        "DIVERGENCE"
    } else {
        status(verdicts[0])
    };
    let model = if st == "SAT" { model } else { None };
    let report = json!({
        "status": st,
        "n": f.n(),
        "clauses": f.clauses().len(),
        "model": model.as_ref().map(model_json),
        "routes": routes,
        "timings": timings,
        "stats": stats,
        "warnings": warnings_json(&f),
    });
    let mut text = String::new();
    for w in &f.meta.warnings {
        text.push_str(&format!("c warning: {w}\n"));
    }
    for (r, v) in &routes {
        text.push_str(&format!(
            "c {r}: {} ({} ms)\n",
            v.as_str().unwrap_or(""),
            timings[r]
        ));
    }
    text.push_str(match st {
        "SAT" => "s SATISFIABLE\n",
        "UNSAT" => "s UNSATISFIABLE\n",
        _ => "s UNKNOWN\nc routes disagree\n",
    });
    if let Some(m) = &model {
        let lits: Vec<String> = m.to_dimacs().iter().map(|l| l.to_string()).collect();
        text.push_str(&format!("v {} 0\n", lits.join(" ")));
    }
    Outcome::new(report, text, config.solver_codes)
}

/// A satisfying assignment from the first surviving term of `S`, free
/// positions set to false.
fn algebraic_model(f: &CnfFormula, config: &RunConfig) -> Option<Assignment> {
    let (s, _) = encode_formula_with(f, &config.encode_options()).ok()?;
    let model = s
        .terms()
        .filter(|(_, c)| c.is_positive())
        .map(|(p, _)| Assignment::from_bits(f.n(), p.value))
        .find(|a| f.evaluate(a));
    model
}

pub fn cmd_models(config: &RunConfig) -> Outcome {
    let f = match read_formula(config) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let (s, _) = match encode_formula_with(&f, &config.encode_options()) {
        Ok(s) => s,
        Err(e) => return Outcome::error(&e, config.solver_codes),
    };
    let count: BigInt = s.total();
    let mut listed = Vec::new();
    let mut truncated = false;
    if f.n() <= MODEL_LIST_MAX_N {
        match s.expand_primitive_with(MODEL_LIST_MAX_N) {
            Ok(e) => {
                for (p, c) in e.terms() {
                    if c.is_positive() {
                        if listed.len() == config.max_models {
                            truncated = true;
                            break;
                        }
                        listed.push(Assignment::from_bits(f.n(), p.value));
                    }
                }
                listed.sort();
            }
            Err(e) => return Outcome::error(&e, config.solver_codes),
        }
    } else {
        truncated = count.is_positive();
    }
    let unsat = !count.is_positive();
    let count_json = match count.to_u64() {
        Some(c) => json!(c),
        None => json!(count.to_string()),
    };
    let report = json!({
        "status": status(unsat),
        "n": f.n(),
        "count": count_json,
        "models": listed.iter().map(model_json).collect::<Vec<_>>(),
        "truncated": truncated,
        "warnings": warnings_json(&f),
    });
    let mut text = format!("c models {count}\n");
    for m in &listed {
        let lits: Vec<String> = m.to_dimacs().iter().map(|l| l.to_string()).collect();
        text.push_str(&format!("v {} 0\n", lits.join(" ")));
    }
    if truncated {
        text.push_str("c list truncated\n");
    }
    Outcome::new(report, text, config.solver_codes)
}

fn looks_like_dimacs(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .any(|l| l.starts_with("p ") || l.starts_with('c') || l == "p")
}

pub fn cmd_cover(config: &RunConfig) -> Outcome {
    let text = match read_inputs(config) {
        Ok(t) => t.concat(),
        Err(o) => return o,
    };
    let (patterns, n, formula) = if looks_like_dimacs(&text) {
        let f = match parse_dimacs(&text) {
            Ok(f) => f,
            Err(e) => return Outcome::error(&e, config.solver_codes),
        };
        match induced_patterns(&f) {
            Ok(p) => (p, f.n(), Some(f)),
            Err(e) => return Outcome::error(&e, config.solver_codes),
        }
    } else {
        match parse_patterns(&text) {
            Ok(p) if !p.is_empty() => {
                let n = p[0].n();
                (p, n, None)
            }
            Ok(_) => return Outcome::error(&Error::parse(1, "no patterns"), config.solver_codes),
            Err(e) => return Outcome::error(&e, config.solver_codes),
        }
    };
    let (witness, stats) = match cover_check(&patterns, n) {
        Ok(r) => r,
        Err(e) => return Outcome::error(&e, config.solver_codes),
    };
    let model = witness.as_ref().map(assignment_of_sign_vector);
    if let (Some(f), Some(m)) = (&formula, &model) {
        if !f.evaluate(m) {
            let report =
                json!({ "status": "DIVERGENCE", "witness": witness.map(|w| w.to_string()) });
            return Outcome::new(
                report,
                "c witness does not satisfy the formula\n".into(),
                config.solver_codes,
            );
        }
    }
    let report = json!({
        "status": status(witness.is_none()),
        "covered": witness.is_none(),
        "n": n,
        "patterns": patterns.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "witness": witness.as_ref().map(|w| w.to_string()),
        "model": model.as_ref().map(model_json),
        "stats": stats,
    });
    let mut text = write_patterns(&patterns);
    match &witness {
        None => text.push_str("c covered\n"),
        Some(w) => text.push_str(&format!("c uncovered, witness {w}\n")),
    }
    Outcome::new(report, text, config.solver_codes)
}

pub fn cmd_geometry(config: &RunConfig) -> Outcome {
    let f = match read_formula(config) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let n = f.n();
    let result = (|| -> Result<(Value, String)> {
        let mut clauses = Vec::new();
        let mut text = String::new();
        for c in f.effective_clauses() {
            let plane = tnp_of_clause(c, n)?;
            let pattern: TernaryPattern = induced_pattern(c, n)?;
            text.push_str(&format!("clause {c}: {plane} pattern {pattern}\n"));
            clauses.push(json!({
                "clause": c.literals().iter().map(|l| l.to_dimacs()).collect::<Vec<_>>(),
                "generators": plane,
                "pattern": pattern.to_string(),
                "proved_regime": c.width() + 2 < n,
            }));
        }
        let mut assignments = Vec::new();
        if n <= GEOMETRY_ASSIGNMENTS_MAX_N {
            for v in SignVector::all(n)? {
                let a = assignment_of_sign_vector(&v);
                debug_assert_eq!(mtnp_of_assignment(&a)?, v);
                let plane = mtnp_plane(&v);
                text.push_str(&format!("assignment {a}: {v} {plane}\n"));
                assignments.push(json!({
                    "assignment": a.to_dimacs(),
                    "sign_vector": v.to_string(),
                    "generators": plane,
                    "satisfies": f.evaluate(&a),
                }));
            }
        }
        let report = json!({
            "status": "OK",
            "n": n,
            "clauses": clauses,
            "assignments": assignments,
            "assignments_listed": n <= GEOMETRY_ASSIGNMENTS_MAX_N,
        });
        Ok((report, text))
    })();
    match result {
        Ok((report, text)) => Outcome::new(report, text, config.solver_codes),
        Err(e) => Outcome::error(&e, config.solver_codes),
    }
}

fn matrix_rows(m: &nalgebra::DMatrix<f64>) -> Vec<Vec<f64>> {
    m.row_iter().map(|r| r.iter().cloned().collect()).collect()
}

pub fn cmd_rebase(config: &RunConfig) -> Outcome {
    let text = match read_inputs(config) {
        Ok(t) => t.join("\n"),
        Err(o) => return o,
    };
    let ms: Vec<OrthogonalMatrix> = match parse_matrices(&text) {
        Ok(ms) => ms,
        Err(e) => return Outcome::error(&e, config.solver_codes),
    };
    if ms.len() != 2 {
        let e = Error::parse(1, format!("expected two matrices, found {}", ms.len()));
        return Outcome::error(&e, config.solver_codes);
    }
    let (t1, t2) = (&ms[0], &ms[1]);
    match witt_rebase(t1, t2) {
        Ok(w) => {
            let r = w.residuals();
            let plane = w.plane_residual(t1, t2);
            let p: Vec<Vec<f64>> = w
                .p_vectors()
                .iter()
                .map(|v| v.iter().cloned().collect())
                .collect();
            let q: Vec<Vec<f64>> = w
                .q_vectors()
                .iter()
                .map(|v| v.iter().cloned().collect())
                .collect();
            let report = json!({
                "status": "OK",
                "n": w.n(),
                "intersection_dim": 0,
                "p": p,
                "q": q,
                "residuals": { "pairing": r.pairing, "null": r.null, "plane": plane },
            });
            let mut text = format!("c n {}\n", w.n());
            for (i, v) in p.iter().enumerate() {
                text.push_str(&format!("p{} {}\n", i + 1, join_f64(v)));
            }
            for (i, v) in q.iter().enumerate() {
                text.push_str(&format!("q{} {}\n", i + 1, join_f64(v)));
            }
            text.push_str(&format!(
                "c residuals pairing {:e} null {:e} plane {:e}\n",
                r.pairing, r.null, plane
            ));
            Outcome::new(report, text, config.solver_codes)
        }
        Err(Error::NotTransversal { dim }) => {
            let m = t1.matrix().transpose() * t2.matrix();
            debug_assert_eq!(eigen_one_multiplicity(&m), dim);
            let msg = format!("planes are not transversal: intersection dimension {dim}");
            let report = json!({
                "status": "ERROR",
                "intersection_dim": dim,
                "t1t2": matrix_rows(&m),
                "error": { "kind": "input", "message": msg },
            });
            Outcome::new(report, format!("error: {msg}\n"), config.solver_codes)
        }
        Err(e) => Outcome::error(&e, config.solver_codes),
    }
}

fn join_f64(v: &[f64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn cmd_explore(config: &RunConfig) -> Outcome {
    let f = match read_formula(config) {
        Ok(f) => f,
        Err(o) => return o,
    };
    match explore_cover(&f, config.samples, config.seed) {
        Ok(r) => {
            let mut report = serde_json::to_value(&r).expect("serializable");
            report["status"] = json!("OK");
            let text = format!(
                "c discrete_cover {:?}\nc strict_fraction {}\nc transversal_fraction {}\nc transversal_p_or_q_fraction {}\n",
                r.discrete_cover, r.strict_fraction, r.transversal_fraction, r.transversal_p_or_q_fraction
            );
            Outcome::new(report, text, config.solver_codes)
        }
        Err(e) => Outcome::error(&e, config.solver_codes),
    }
}

pub fn cmd_selftest(config: &RunConfig) -> Outcome {
    let reports = crate::acceptance::run_all();
    let passed = reports.iter().all(|r| r.passed);
    let text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    let report = json!({
        "status": if passed { "OK" } else { "FAIL" },
        "criteria": reports,
    });
    Outcome::new(report, text, config.solver_codes)
}

/// Entry point for the binary: parse arguments, run, print.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let config = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_PARSE;
        }
    };
    let outcome = run(&config);
    print!("{}", outcome.render(config.json));
    outcome.exit_code
}
