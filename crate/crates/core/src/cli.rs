//! Command-line front end: config loading, subcommands and output files.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::ensemble::{path_noise, run_ensemble, EnsembleConfig, SolverKind};
use crate::error::{Error, Result};
use crate::problem::{check_contractor_conditions, damped_problem, example_problem, ContractorReport, ProblemSpec};
use crate::solver::MildSolver;
use crate::stability::{
    existence_criterion, fit_decay, resolve_constants, stability_criterion, verify_stability, CriterionReport,
    DecayFit, MonteCarloConfig, ResolvedConstants,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_CRITERION: i32 = 2;
pub const EXIT_DIVERGENCE: i32 = 3;

const DEFAULT_PATHS: usize = 100;
const DEFAULT_DT: f64 = 0.01;
const DEFAULT_TOL: f64 = 1e-10;
const DEFAULT_MAX_ITER: usize = 100;

#[derive(Debug, Parser)]
#[command(name = "fracsde", version, about = "Fractional neutral stochastic equations: criteria, solvers, moment decay")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the existence and stability criteria and the contractor inequalities.
    Check {
        #[command(flatten)]
        common: CommonArgs,
        /// Random path pairs for the contractor inequalities.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Simulate an ensemble, estimate the moment curve and verify decay.
    Simulate {
        #[command(flatten)]
        common: CommonArgs,
        /// Also write every path.
        #[arg(long)]
        trajectories: bool,
        #[arg(long, value_enum, default_value_t = SolverArg::Picard)]
        solver: SolverArg,
        #[arg(long)]
        threads: Option<usize>,
        /// Fit window as `t0,t1`.
        #[arg(long, value_parser = parse_window)]
        window: Option<(f64, f64)>,
    },
    /// Solve one path by successive approximation and record the residuals.
    Picard {
        #[command(flatten)]
        common: CommonArgs,
        /// Index of the noise path.
        #[arg(long, default_value_t = 0)]
        path: usize,
    },
    /// Fit `N e^{-mu t}` to a moment curve CSV.
    Fit {
        #[command(flatten)]
        common: CommonArgs,
        /// CSV with at least the columns `t` and `mean`.
        #[arg(long)]
        curve: PathBuf,
        #[arg(long, value_parser = parse_window)]
        window: Option<(f64, f64)>,
    },
    /// Print a built-in problem configuration.
    Example {
        #[arg(long, value_enum, default_value_t = Preset::Example)]
        preset: Preset,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Problem file, or `builtin:example` / `builtin:damped`.
    #[arg(long, default_value = "builtin:example")]
    pub config: String,
    #[arg(long, env = "FRACSDE_SEED")]
    pub seed: Option<u64>,
    #[arg(long)]
    pub paths: Option<usize>,
    #[arg(long)]
    pub dt: Option<f64>,
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long = "max-iter")]
    pub max_iter: Option<usize>,
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolverArg {
    Picard,
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Example,
    Damped,
}

fn parse_window(s: &str) -> std::result::Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected t0,t1, got {s}"))?;
    let a: f64 = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let b: f64 = b.trim().parse().map_err(|e| format!("{b}: {e}"))?;
    if !(a < b) {
        return Err(format!("window start {a} must precede end {b}"));
    }
    Ok((a, b))
}

/// Optional run parameters stored next to the problem in a config file.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSection {
    pub seed: Option<u64>,
    pub paths: Option<usize>,
    pub dt: Option<f64>,
    pub tol: Option<f64>,
    pub max_iter: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigFile {
    #[serde(flatten)]
    pub problem: ProblemSpec,
    #[serde(default)]
    pub run: RunSection,
}

/// Fully resolved run parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub problem: String,
    pub seed: u64,
    pub paths: usize,
    pub dt: f64,
    pub tol: f64,
    pub max_iter: usize,
    pub out: PathBuf,
    pub format: String,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.paths == 0 {
            return Err(Error::Config("paths must be at least 1".into()));
        }
        if !(self.dt > 0.0) || !self.dt.is_finite() {
            return Err(Error::Config(format!("dt must be > 0, got {}", self.dt)));
        }
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(Error::Config(format!("tol must be > 0, got {}", self.tol)));
        }
        Ok(())
    }

    pub fn ensemble(&self, solver: SolverKind, threads: Option<usize>) -> EnsembleConfig {
        EnsembleConfig {
            paths: self.paths,
            dt: self.dt,
            seed: self.seed,
            tol: self.tol,
            max_iter: self.max_iter,
            solver,
            threads,
        }
    }
}

/// Loads `builtin:<name>` or a JSON file.
pub fn load_config(source: &str) -> Result<ConfigFile> {
    let file = match source {
        "builtin:example" => ConfigFile { problem: example_problem(), run: RunSection::default() },
        "builtin:damped" => ConfigFile { problem: damped_problem(), run: RunSection::default() },
        s if s.starts_with("builtin:") => return Err(Error::Config(format!("unknown built-in preset {s}"))),
        path => {
            let text = fs::read_to_string(path).map_err(|e| Error::Config(format!("{path}: {e}")))?;
            serde_json::from_str::<ConfigFile>(&text).map_err(|e| {
                Error::Config(format!("{path}: line {} column {}: {e}", e.line(), e.column()))
            })?
        }
    };
    file.problem.validate()?;
    Ok(file)
}

/// Merges defaults, the file's run section and the command line; the seed
/// flag already folds in `FRACSDE_SEED`.
pub fn resolve_run(common: &CommonArgs, run: &RunSection) -> Result<RunConfig> {
    let cfg = RunConfig {
        problem: common.config.clone(),
        seed: common.seed.or(run.seed).unwrap_or(0),
        paths: common.paths.or(run.paths).unwrap_or(DEFAULT_PATHS),
        dt: common.dt.or(run.dt).unwrap_or(DEFAULT_DT),
        tol: common.tol.or(run.tol).unwrap_or(DEFAULT_TOL),
        max_iter: common.max_iter.or(run.max_iter).unwrap_or(DEFAULT_MAX_ITER),
        out: common.out.clone(),
        format: match common.format {
            Format::Csv => "csv".into(),
            Format::Json => "json".into(),
        },
    };
    cfg.validate()?;
    Ok(cfg)
}

fn create(path: &Path) -> Result<BufWriter<fs::File>> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    Ok(BufWriter::new(fs::File::create(path)?))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut w = create(path)?;
    serde_json::to_writer_pretty(&mut w, value).map_err(|e| Error::Format(e.to_string()))?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn write_residuals(path: &Path, history: &[f64]) -> Result<()> {
    let mut w = create(path)?;
    writeln!(w, "iteration,residual")?;
    for (i, r) in history.iter().enumerate() {
        writeln!(w, "{i},{r}")?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub run: RunConfig,
    pub constants: ResolvedConstants,
    pub existence: CriterionReport,
    pub stability: Option<CriterionReport>,
    pub stability_error: Option<String>,
    pub contractors: ContractorReport,
    pub pass: bool,
}

pub fn cmd_check(common: &CommonArgs, samples: usize) -> Result<i32> {
    let file = load_config(&common.config)?;
    let run = resolve_run(common, &file.run)?;
    let spec = &file.problem;
    let constants = resolve_constants(spec)?;
    let published = spec.criterion.published;
    let existence = existence_criterion(&constants.constants).with_published(published.map(|v| v[0]));
    let (stability, stability_error) = match stability_criterion(&constants.constants) {
        Ok(r) => (Some(r.with_published(published.map(|v| v[1]))), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let contractors = check_contractor_conditions(spec, samples, run.seed)?;
    let pass = existence.pass && stability.as_ref().map(|s| s.pass).unwrap_or(false) && contractors.pass;
    println!("existence theta = {:.9e} ({})", existence.theta, verdict(existence.pass));
    match &stability {
        Some(s) => println!("stability theta = {:.9e} ({})", s.theta, verdict(s.pass)),
        None => println!("stability: {}", stability_error.as_deref().unwrap_or("")),
    }
    println!("contractor inequalities: {}", verdict(contractors.pass));
    let report = CheckReport { run: run.clone(), constants, existence, stability, stability_error, contractors, pass };
    write_json(&run.out.join("check.json"), &report)?;
    Ok(if pass { EXIT_OK } else { EXIT_CRITERION })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn cmd_simulate(
    common: &CommonArgs,
    write_paths: bool,
    solver: SolverKind,
    threads: Option<usize>,
    window: Option<(f64, f64)>,
) -> Result<i32> {
    let file = load_config(&common.config)?;
    let run = resolve_run(common, &file.run)?;
    let spec = &file.problem;
    let ens = run.ensemble(solver, threads);
    let mc = MonteCarloConfig { ensemble: ens.clone(), fit_window: window };
    let report = match verify_stability(spec, &mc) {
        Ok(r) => r,
        Err(e) => return fail_divergence(&run, e),
    };
    if write_paths {
        let paths = run_ensemble(spec, &ens)?;
        for (i, p) in paths.iter().enumerate() {
            match common.format {
                Format::Csv => {
                    let mut w = create(&run.out.join("paths").join(format!("path_{i:05}.csv")))?;
                    p.trajectory.write_csv(&mut w)?;
                    w.flush()?;
                }
                Format::Json => write_json(&run.out.join("paths").join(format!("path_{i:05}.json")), &p.trajectory)?,
            }
        }
    }
    match common.format {
        Format::Csv => {
            let mut w = create(&run.out.join("moment.csv"))?;
            report.curve.write_csv(&mut w)?;
            w.flush()?;
        }
        Format::Json => write_json(&run.out.join("moment.json"), &report.curve)?,
    }
    #[derive(Serialize)]
    struct Out<'r> {
        run: &'r RunConfig,
        report: &'r crate::stability::StabilityReport,
    }
    write_json(&run.out.join("report.json"), &Out { run: &run, report: &report })?;
    if let Some(f) = &report.fit {
        println!("fitted rate {:.6} (95% CI [{:.6}, {:.6}]), R^2 = {:.6}", f.rate, f.ci.0, f.ci.1, f.r_squared);
    }
    if let Some(ok) = report.envelope_respected {
        println!("envelope respected: {ok}");
    }
    Ok(EXIT_OK)
}

/// Writes the residual history of a diverged solve and maps the error to its
/// exit code.
fn fail_divergence(run: &RunConfig, e: Error) -> Result<i32> {
    if let Error::Divergence { residual_history, .. } = &e {
        write_residuals(&run.out.join("residuals.csv"), residual_history)?;
        eprintln!("{e}");
        return Ok(EXIT_DIVERGENCE);
    }
    Err(e)
}

pub fn cmd_picard(common: &CommonArgs, index: usize) -> Result<i32> {
    let file = load_config(&common.config)?;
    let run = resolve_run(common, &file.run)?;
    let spec = &file.problem;
    let ens = run.ensemble(SolverKind::Picard, None);
    let noise = path_noise(spec, &ens, index)?;
    let solver = MildSolver::new(spec, noise.grid)?;
    let path = solver.attach(&noise)?;
    let out = match solver.solve(&path, run.tol, run.max_iter) {
        Ok(o) => o,
        Err(e) => return fail_divergence(&run, e),
    };
    match common.format {
        Format::Csv => {
            let mut w = create(&run.out.join("trajectory.csv"))?;
            out.trajectory.write_csv(&mut w)?;
            w.flush()?;
            write_residuals(&run.out.join("residuals.csv"), &out.residual_history)?;
        }
        Format::Json => write_json(&run.out.join("picard.json"), &out)?,
    }
    println!("converged after {} residual evaluations", out.iterations);
    Ok(EXIT_OK)
}

/// Reads `t` and `mean` from a curve CSV.
pub fn read_curve(path: &Path) -> Result<(Vec<f64>, Vec<f64>)> {
    let text = fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().ok_or_else(|| Error::Format("empty curve file".into()))?.split(',').map(str::trim).collect();
    let col = |name: &str| {
        header.iter().position(|h| *h == name).ok_or_else(|| Error::Format(format!("missing column '{name}'")))
    };
    let (ti, mi) = (col("t")?, col("mean")?);
    let (mut ts, mut ms) = (Vec::new(), Vec::new());
    for (n, line) in lines.enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        let get = |i: usize, name: &str| -> Result<f64> {
            cells
                .get(i)
                .ok_or_else(|| Error::Format(format!("line {}: missing column '{name}'", n + 2)))?
                .parse()
                .map_err(|e| Error::Format(format!("line {}: column '{name}': {e}", n + 2)))
        };
        ts.push(get(ti, "t")?);
        ms.push(get(mi, "mean")?);
    }
    Ok((ts, ms))
}

pub fn cmd_fit(common: &CommonArgs, curve: &Path, window: Option<(f64, f64)>) -> Result<DecayFit> {
    let (t, v) = read_curve(curve)?;
    let fit = fit_decay(&t, &v, window)?;
    write_json(&common.out.join("fit.json"), &fit)?;
    println!("{}", serde_json::to_string_pretty(&fit).map_err(|e| Error::Format(e.to_string()))?);
    Ok(fit)
}

pub fn cmd_example(preset: Preset) -> Result<String> {
    let spec = match preset {
        Preset::Example => example_problem(),
        Preset::Damped => damped_problem(),
    };
    spec.to_json()
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Divergence { .. } => EXIT_DIVERGENCE,
        _ => EXIT_CONFIG,
    }
}

/// Runs one parsed command and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = match &cli.command {
        Command::Check { common, samples } => cmd_check(common, *samples),
        Command::Simulate { common, trajectories, solver, threads, window } => {
            let kind = match solver {
                SolverArg::Picard => SolverKind::Picard,
                SolverArg::Direct => SolverKind::Direct,
            };
            cmd_simulate(common, *trajectories, kind, *threads, *window)
        }
        Command::Picard { common, path } => cmd_picard(common, *path),
        Command::Fit { common, curve, window } => cmd_fit(common, curve, *window).map(|_| EXIT_OK),
        Command::Example { preset } => cmd_example(*preset).map(|s| {
            // A closed pipe (e.g. `| head`) is not an error for a dump.
            let _ = writeln!(std::io::stdout().lock(), "{s}");
            EXIT_OK
        }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
