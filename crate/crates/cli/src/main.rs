//! `hardyx`: closed forms, numerical solver, Wiener-transform checks and
//! figure data for the coefficient problem `Phi_k(p, t)`.
//!
//! Exit codes: 0 success, 1 failed verification or I/O error, 2 invalid
//! input, 3 solver failure.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod record;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hardyx::closed_form as cf;
use hardyx::figures;
use hardyx::hardy_norm::QuadConfig;
use hardyx::solver::{self, ExtremalSolution, SolveConfig, SolveError};
use hardyx::verify::{self, Suite, VerifyOptions};
use hardyx::wiener;
use hardyx::StructuredExtremal;
use serde_json::{json, Value};

use record::{num, opt_num, OutputRecord};

#[derive(Parser)]
#[command(name = "hardyx", version, about = "Coefficient extremal problems in Hardy spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form Phi_1(p, t) with its regime and parameter.
    Phi1 {
        /// Exponent p > 0, or `inf`.
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        /// Value t in [0, 1], or `tp` for the switching point t_p (0 < p < 1).
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        json: bool,
    },
    /// Numerical Phi_k(p, t) by multistart search.
    Solve(SolveArgs),
    /// Write the `p,t,phi1` curves as CSV.
    Figure1 {
        #[arg(long)]
        out: PathBuf,
    },
    /// Write `p,t_p,lower,upper` as CSV.
    Figure2 {
        #[arg(long)]
        out: PathBuf,
    },
    /// Run self-check suites; exit 0 iff every check passes.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        json: bool,
    },
    /// Sharpness ratios ||W_k f_eps||_p^p / ||f_eps||_p^p over a list of eps.
    Wiener {
        #[arg(long)]
        p: String,
        #[arg(long)]
        k: usize,
        /// Comma-separated positive eps values.
        #[arg(long, value_delimiter = ',', default_value = "1e-2,1e-3,1e-4,1e-5")]
        eps_list: Vec<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Solver-driven exploration of the k >= 2 problem.
    Explore {
        #[command(subcommand)]
        what: Explore,
    },
}

#[derive(Args, Clone)]
struct SolveArgs {
    #[arg(long)]
    k: usize,
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    t: String,
    /// Zero counts to search (repeatable); default 0..=k.
    #[arg(long = "l", num_args = 1..)]
    l: Vec<usize>,
    #[arg(long, default_value_t = 64)]
    starts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Explore {
    /// Check Phi_1 <= Phi_k <= k^{1/p-1} Phi_1 at one point.
    Sandwich(SolveArgs),
    /// Winning zero count on a uniform t grid.
    ZeroCount {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 20)]
        points: usize,
        #[arg(long, default_value_t = 64)]
        starts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Empirical threshold above which Phi_k agrees with Phi_1.
    T0 {
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        p: String,
        #[arg(long, default_value_t = 64)]
        grid: usize,
        #[arg(long, default_value_t = 64)]
        starts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn domain(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn io_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let code = match e {
            SolveError::BadConfig(_) | SolveError::ClosedForm(_) => 2,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<cf::ClosedFormError> for Failure {
    fn from(e: cf::ClosedFormError) -> Self {
        domain(e.to_string())
    }
}

fn parse_p(s: &str) -> Result<f64, Failure> {
    let p = match s.trim().to_ascii_lowercase().as_str() {
        "inf" | "infinity" => f64::INFINITY,
        other => other
            .parse::<f64>()
            .map_err(|_| domain(format!("cannot parse p = {s:?}")))?,
    };
    if !(p > 0.0) || p.is_nan() {
        return Err(domain(format!("p = {s} must be positive")));
    }
    Ok(p)
}

fn parse_t(s: &str, p: f64) -> Result<f64, Failure> {
    let t = if s.trim().eq_ignore_ascii_case("tp") {
        if !(p > 0.0 && p < 1.0) {
            return Err(domain("t = tp requires 0 < p < 1"));
        }
        cf::t_p(p)?
    } else {
        s.trim()
            .parse::<f64>()
            .map_err(|_| domain(format!("cannot parse t = {s:?}")))?
    };
    if !(0.0..=1.0).contains(&t) {
        return Err(domain(format!("t = {s} must lie in [0, 1]")));
    }
    Ok(t)
}

fn emit(rec: &OutputRecord, json: bool) {
    if json {
        println!("{}", rec.to_json());
    } else {
        print!("{}", rec.to_text());
    }
}

fn complex_list(f: &StructuredExtremal) -> Value {
    Value::Array(f.lambdas().iter().map(|z| json!([num(z.re), num(z.im)])).collect())
}

fn extremal_json(f: &StructuredExtremal) -> Value {
    json!({
        "scale": [num(f.scale().re), num(f.scale().im)],
        "zero_count": f.zero_count(),
        "lambdas": complex_list(f),
    })
}

fn cmd_phi1(p: &str, t: &str, json: bool) -> Result<(), Failure> {
    let p = parse_p(p)?;
    let t = parse_t(t, p)?;
    let r = cf::phi1(p, t)?;
    let mut rec = OutputRecord::new("phi1");
    rec.input("p", num(p)).input("t", num(t));
    rec.result("value", num(r.value))
        .result("regime", r.regime.as_str())
        .result("alpha", opt_num(r.alpha))
        .result("beta", opt_num(r.beta));
    if p < 1.0 {
        rec.diagnostic("t_p", num(cf::t_p(p)?));
    }
    emit(&rec, json);
    Ok(())
}

fn solve_config(a: &SolveArgs) -> Result<SolveConfig, Failure> {
    let p = parse_p(&a.p)?;
    let t = parse_t(&a.t, p)?;
    let mut cfg = SolveConfig::new(a.k, p, t);
    if !a.l.is_empty() {
        cfg.l_range = a.l.iter().copied().collect();
    }
    cfg.starts = a.starts;
    cfg.seed = a.seed;
    cfg.validate()?;
    Ok(cfg)
}

fn solution_record(cmd: &str, cfg: &SolveConfig, s: &ExtremalSolution, elapsed: f64) -> OutputRecord {
    let mut rec = OutputRecord::new(cmd);
    rec.input("k", cfg.k)
        .input("p", num(cfg.p))
        .input("t", num(cfg.t))
        .input("l_range", cfg.l_range.iter().copied().collect::<Vec<_>>())
        .input("starts", cfg.starts)
        .input("seed", cfg.seed);
    let per_l: serde_json::Map<String, Value> = s.per_l_values.iter().map(|(l, v)| (l.to_string(), num(*v))).collect();
    let clusters: Vec<Value> = s
        .clusters
        .iter()
        .map(|c| json!({"l": c.l, "value": num(c.value), "members": c.members, "extremal": extremal_json(&c.representative)}))
        .collect();
    rec.result("value", num(s.value))
        .result("l_used", s.l_used)
        .result("cluster_count", s.cluster_count)
        .result("per_l_values", Value::Object(per_l))
        .result("best", extremal_json(&s.best))
        .result("clusters", clusters);
    rec.diagnostic("norm_residual", num(s.norm_residual))
        .diagnostic("t_residual", num(s.t_residual))
        .diagnostic("starts_run", s.stats.starts_run)
        .diagnostic("feasible_starts", s.stats.feasible_starts)
        .diagnostic("evaluations", s.stats.evaluations)
        .diagnostic("elapsed_s", num(elapsed));
    rec
}

fn cmd_solve(a: &SolveArgs) -> Result<(), Failure> {
    let cfg = solve_config(a)?;
    let start = Instant::now();
    let s = solver::maximize_phik(&cfg)?;
    let mut rec = solution_record("solve", &cfg, &s, start.elapsed().as_secs_f64());
    if cfg.k == 1 || cfg.p >= 1.0 {
        if let Ok(r) = cf::phi1(cfg.p, cfg.t) {
            rec.diagnostic("phi1_closed_form", num(r.value));
        }
    }
    emit(&rec, a.json);
    Ok(())
}

fn write_file(path: &PathBuf, body: &str) -> Result<(), Failure> {
    fs::write(path, body).map_err(|e| io_failure(format!("cannot write {}: {e}", path.display())))
}

fn cmd_figure1(out: &PathBuf) -> Result<(), Failure> {
    let rows = figures::figure1_rows()?;
    write_file(out, &figures::figure1_csv(&rows))?;
    println!("wrote {} rows to {}", rows.len(), out.display());
    Ok(())
}

fn cmd_figure2(out: &PathBuf) -> Result<(), Failure> {
    let rows = figures::figure2_rows()?;
    write_file(out, &figures::figure2_csv(&rows))?;
    println!("wrote {} rows to {}", rows.len(), out.display());
    Ok(())
}

fn cmd_verify(suite: &str, json: bool) -> Result<bool, Failure> {
    let suite = Suite::parse(suite).ok_or_else(|| domain(format!("unknown suite {suite:?}")))?;
    let start = Instant::now();
    let report = verify::run_suite(suite, &VerifyOptions::default());
    let mut rec = OutputRecord::new("verify");
    rec.input("suite", suite.to_string());
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
        .collect();
    rec.result("all_passed", report.all_passed()).result("checks", checks);
    rec.diagnostic("elapsed_s", num(start.elapsed().as_secs_f64()));
    if json {
        println!("{}", rec.to_json());
    } else {
        for c in &report.checks {
            println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        let passed = report.checks.iter().filter(|c| c.passed).count();
        println!("{passed}/{} checks passed", report.checks.len());
    }
    Ok(report.all_passed())
}

fn cmd_wiener(p: &str, k: usize, eps_list: &[f64], json: bool) -> Result<(), Failure> {
    let p = parse_p(p)?;
    if !(p < 1.0) {
        return Err(domain("the sharpness family needs 0 < p < 1"));
    }
    if k < 2 {
        return Err(domain("k must be at least 2"));
    }
    if let Some(e) = eps_list.iter().find(|e| !(**e > 0.0)) {
        return Err(domain(format!("eps = {e} must be positive")));
    }
    let cfg = QuadConfig::default();
    let mut rows = Vec::with_capacity(eps_list.len());
    for &eps in eps_list {
        let r = wiener::sharpness_ratio(p, k, eps, &cfg).map_err(|e| Failure {
            code: 3,
            message: e.to_string(),
        })?;
        rows.push((eps, r));
    }
    let monotone = rows.windows(2).all(|w| (w[1].0 < w[0].0) == (w[1].1 > w[0].1));
    let constant = hardyx::fn_repr::PolyCoeffs::from_real(&[1.0]);
    let sanity = wiener::wiener_bound_check(&constant, k, p, &cfg, "1")
        .map(|r| r.ratio)
        .map_err(|e| Failure {
            code: 3,
            message: e.to_string(),
        })?;
    let mut rec = OutputRecord::new("wiener");
    rec.input("p", num(p))
        .input("k", k)
        .input("eps_list", eps_list.iter().map(|&e| num(e)).collect::<Vec<_>>());
    rec.result(
        "ratios",
        rows.iter()
            .map(|&(e, r)| json!({"eps": num(e), "ratio": num(r)}))
            .collect::<Vec<_>>(),
    )
    .result("limit", num(wiener::sharpness_limit(p, k)))
    .result("monotone_in_eps", monotone);
    rec.diagnostic("constant_function_ratio", num(sanity));
    if json {
        println!("{}", rec.to_json());
    } else {
        println!("eps,ratio,limit");
        for (e, r) in &rows {
            println!(
                "{},{},{}",
                figures::g17(*e),
                figures::g17(*r),
                figures::g17(wiener::sharpness_limit(p, k))
            );
        }
        println!("monotone_in_eps = {monotone}");
        println!("constant_function_ratio = {}", figures::g17(sanity));
    }
    Ok(())
}

fn cmd_explore(what: &Explore) -> Result<(), Failure> {
    match what {
        Explore::Sandwich(a) => {
            let cfg = solve_config(a)?;
            let r = solver::sandwich_check(&cfg)?;
            let mut rec = OutputRecord::new("explore sandwich");
            rec.input("k", cfg.k).input("p", num(cfg.p)).input("t", num(cfg.t));
            rec.result("lower", num(r.lower))
                .result("solved", num(r.solved))
                .result("upper", num(r.upper));
            emit(&rec, a.json);
        }
        Explore::ZeroCount {
            k,
            p,
            points,
            starts,
            seed,
            json,
        } => {
            let p = parse_p(p)?;
            if *points < 2 {
                return Err(domain("points must be at least 2"));
            }
            let base = SolveConfig {
                starts: *starts,
                seed: *seed,
                ..SolveConfig::new(*k, p, 0.0)
            };
            base.validate()?;
            let grid: Vec<f64> = (0..*points).map(|i| i as f64 / (*points - 1) as f64).collect();
            let rows = solver::zero_count_scan(&base, &grid)?;
            let mut rec = OutputRecord::new("explore zero-count");
            rec.input("k", *k)
                .input("p", num(p))
                .input("points", *points)
                .input("starts", *starts)
                .input("seed", *seed);
            let shown: Vec<Value> = rows
                .iter()
                .map(|r| json!({"t": num(r.t), "l": r.l, "value": num(r.value)}))
                .collect();
            rec.result("rows", shown);
            emit(&rec, *json);
        }
        Explore::T0 {
            k,
            p,
            grid,
            starts,
            seed,
            json,
        } => {
            let p = parse_p(p)?;
            let base = SolveConfig {
                starts: *starts,
                seed: *seed,
                ..SolveConfig::new(*k, p, 0.0)
            };
            base.validate()?;
            let r = solver::t0_scan(&base, *grid)?;
            let mut rec = OutputRecord::new("explore t0");
            rec.input("k", *k)
                .input("p", num(p))
                .input("grid", *grid)
                .input("starts", *starts)
                .input("seed", *seed);
            rec.result("threshold", num(r.threshold))
                .result("reading_negative", num(r.reading_negative))
                .result("reading_positive", num(r.reading_positive))
                .result("consistent", r.consistent)
                .result(
                    "probes",
                    r.probes
                        .iter()
                        .map(|q| json!({"t": num(q.t), "phik": num(q.phik), "phi1": num(q.phi1)}))
                        .collect::<Vec<_>>(),
                );
            emit(&rec, *json);
        }
    }
    Ok(())
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("HARDYX_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| domain(format!("HARDYX_THREADS = {v:?} is not a count")))?;
    if n == 0 {
        return Err(domain("HARDYX_THREADS must be at least 1"));
    }
    // a second initialisation in the same process is harmless
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    configure_threads()?;
    match &cli.command {
        Command::Phi1 { p, t, json } => cmd_phi1(p, t, *json)?,
        Command::Solve(a) => cmd_solve(a)?,
        Command::Figure1 { out } => cmd_figure1(out)?,
        Command::Figure2 { out } => cmd_figure2(out)?,
        Command::Verify { suite, json } => {
            if !cmd_verify(suite, *json)? {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Wiener { p, k, eps_list, json } => cmd_wiener(p, *k, eps_list, *json)?,
        Command::Explore { what } => cmd_explore(what)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
