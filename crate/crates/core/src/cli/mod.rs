//! The `extscope` command line: scenario files, the verification suite and
//! one-shot computations.
//!
//! Exit codes: 0 success, 1 an expectation failed, 2 the input did not
//! parse (or was otherwise unusable), 3 a computation failed. Hard errors
//! print only the error, never a partial report.

mod report;
pub mod scenario;
mod suite;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

pub use report::{Check, Defaults, Evidence, Report, Status, TaskOutcome};
pub use scenario::{load as load_scenario, parse as parse_scenario, run_plan, Plan, Scenario};
pub use suite::{run_suite, SuiteOptions, GROUPS};

use crate::complexes::free_resolution;
use crate::error::{Error, Result};
use crate::ext::{ext_from_resolution, PresentedModule};
use crate::groebner::Ideal;
use crate::invariants::corpus::{DEFAULT_SEED, DEFAULT_SIZE};
use crate::invariants::{eass_experiment, invariant_report};
use crate::poly::{RingSpec, DEFAULT_DEGREE_CAP};

pub const DEGREE_CAP_ENV: &str = "EXTSCOPE_DEGREE_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_EXPECTATION: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

/// Exit code for a hard error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Usage(_) | Error::Inhomogeneous(..) => EXIT_PARSE,
        Error::DegreeCapExceeded { .. }
        | Error::Truncated { .. }
        | Error::Unsupported(_)
        | Error::Integrity(_) => EXIT_COMPUTATION,
    }
}

/// Options shared by every command.
#[derive(Clone, Debug)]
pub struct Settings {
    pub degree_cap: u32,
    pub degree_cap_source: &'static str,
    pub timings: bool,
    pub parallel: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            degree_cap: DEFAULT_DEGREE_CAP,
            degree_cap_source: "default",
            timings: false,
            parallel: false,
        }
    }
}

impl Settings {
    /// The flag wins over the environment, which wins over the default.
    pub fn resolve(flag: Option<u32>, env: Option<&str>) -> Result<Settings> {
        let mut s = Settings::default();
        if let Some(text) = env {
            s.degree_cap = text.trim().parse().map_err(|_| {
                Error::Usage(format!(
                    "{DEGREE_CAP_ENV} must be a non-negative integer, got {text:?}"
                ))
            })?;
            s.degree_cap_source = "env";
        }
        if let Some(cap) = flag {
            s.degree_cap = cap;
            s.degree_cap_source = "flag";
        }
        Ok(s)
    }

    pub fn ring(&self, text: &str) -> Result<RingSpec> {
        Ok(RingSpec::parse(text)?.with_degree_cap(self.degree_cap))
    }

    pub fn defaults(&self) -> Defaults {
        Defaults {
            degree_cap: self.degree_cap,
            degree_cap_source: self.degree_cap_source.to_string(),
            window: "dim R for invariants, i + 1 for Ext^i, nvars + 1 for resolutions".to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "extscope",
    version,
    about = "Ext modules, free resolutions and homological invariants"
)]
pub struct Cli {
    /// Degree cap for Gröbner computations (overrides EXTSCOPE_DEGREE_CAP).
    #[arg(long, global = true)]
    pub degree_cap: Option<u32>,
    /// Output format; text for run and verify-paper, json for compute by default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Record wall-clock time per task (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
    /// Run independent tasks concurrently; report order is unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a TOML or JSON scenario file.
    Run { file: PathBuf },
    /// Run the built-in suite of worked examples and corpus checks.
    VerifyPaper {
        /// Run only one check group (2 to 6).
        #[arg(long)]
        only: Option<u8>,
        /// Seed of the random monomial corpus.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of corpus modules.
        #[arg(long, default_value_t = DEFAULT_SIZE)]
        corpus_size: usize,
    },
    /// One-shot computations.
    #[command(subcommand)]
    Compute(ComputeCommand),
}

#[derive(Debug, Args)]
pub struct ModuleArgs {
    /// Ring such as "QQ[x,y,z]", "F5[x,y]" or "QQ[X,Y,Z]/(X^2, XY)".
    #[arg(long, default_value = "QQ[x,y,z]")]
    pub ring: String,
    /// Generators of I for R/I; "0" is the zero module, "R" or "" the ring.
    /// With --file, the name of an object in the scenario.
    #[arg(long)]
    pub module: String,
    /// Use the ideal I itself rather than R/I.
    #[arg(long)]
    pub as_ideal: bool,
    /// Take the ring and objects from a scenario file.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ComputeCommand {
    /// Ext^i(M, N), with N = R unless --over is given.
    Ext {
        #[command(flatten)]
        input: ModuleArgs,
        /// Homological index.
        #[arg(long)]
        i: usize,
        /// Second argument, in the same syntax as --module.
        #[arg(long)]
        over: Option<String>,
    },
    /// Minimal free resolution.
    Resolve {
        #[command(flatten)]
        input: ModuleArgs,
        /// Last homological step to compute [default: number of variables + 1].
        #[arg(long)]
        up_to: Option<usize>,
    },
    /// Grade, depth, dimension, Betti numbers, gamma and Hann.
    Invariants {
        #[command(flatten)]
        input: ModuleArgs,
    },
    /// Ext^i(I, R) for i up to the window, with periodicity of the resolution.
    Eass {
        /// Ring such as "QQ[x,y,z]", "F5[x,y]" or "QQ[X,Y,Z]/(X^2, XY)".
        #[arg(long, default_value = "QQ[x,y,z]")]
        ring: String,
        /// Generators of I.
        #[arg(long)]
        ideal: String,
        /// Highest Ext index and resolution step.
        #[arg(long, default_value_t = 8)]
        window: usize,
        /// Test this ideal against rad Ann Ext^i at every index.
        #[arg(long)]
        probe: Option<String>,
    },
}

/// Output of a one-shot computation.
#[derive(Debug, Serialize)]
pub struct ComputeOutput {
    pub command: String,
    pub ring: String,
    pub defaults: Defaults,
    pub result: Value,
}

/// Ring and module for a compute command.
fn module_input(
    settings: &Settings,
    input: &ModuleArgs,
    text: &str,
) -> Result<(RingSpec, PresentedModule)> {
    match &input.file {
        Some(path) => {
            let plan = scenario::load(path, settings)?;
            let m = scenario::module_ref(&plan, text)?;
            Ok((plan.ring, m))
        }
        None => {
            let ring = settings.ring(&input.ring)?;
            let m = scenario::inline_module(&ring, text, input.as_ideal)?;
            Ok((ring, m))
        }
    }
}

pub fn compute(settings: &Settings, cmd: &ComputeCommand) -> Result<ComputeOutput> {
    let (name, ring, result) = match cmd {
        ComputeCommand::Ext { input, i, over } => {
            let (ring, m) = module_input(settings, input, &input.module)?;
            let n = match over {
                Some(t) => module_input(settings, input, t)?.1,
                None => PresentedModule::ring_module(&ring),
            };
            let res = free_resolution(&m, i + 1, true)?;
            let e = ext_from_resolution(&res, &n, *i)?;
            ("ext", ring, report::to_value(e.report()?))
        }
        ComputeCommand::Resolve { input, up_to } => {
            let (ring, m) = module_input(settings, input, &input.module)?;
            let res = free_resolution(&m, up_to.unwrap_or(ring.nvars() + 1), true)?;
            ("resolve", ring, report::to_value(res.report()))
        }
        ComputeCommand::Invariants { input } => {
            let (ring, m) = module_input(settings, input, &input.module)?;
            let label =
                if input.file.is_some() || input.module.trim() == "0" || input.module.trim() == "R"
                {
                    input.module.clone()
                } else if input.as_ideal {
                    format!(
                        "({})",
                        input
                            .module
                            .trim()
                            .trim_start_matches('(')
                            .trim_end_matches(')')
                    )
                } else {
                    format!(
                        "R/({})",
                        input
                            .module
                            .trim()
                            .trim_start_matches('(')
                            .trim_end_matches(')')
                    )
                };
            (
                "invariants",
                ring,
                report::to_value(invariant_report(&m, &label)?),
            )
        }
        ComputeCommand::Eass {
            ring,
            ideal,
            window,
            probe,
        } => {
            let ring = settings.ring(ring)?;
            let i = Ideal::parse(&ring, ideal)?;
            let p = probe
                .as_deref()
                .map(|t| Ideal::parse(&ring, t))
                .transpose()?;
            (
                "eass",
                ring,
                report::to_value(eass_experiment(&i, *window, p.as_ref())?),
            )
        }
    };
    Ok(ComputeOutput {
        command: name.to_string(),
        ring: ring.to_string(),
        defaults: settings.defaults(),
        result,
    })
}

impl ComputeOutput {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("output serializes")
    }

    /// `key: value` lines, nested keys joined with dots.
    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        flatten("", &report::to_value(self), &mut lines);
        let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in lines {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object()) => {
            for (k, v) in items.iter().enumerate() {
                flatten(&key(&k.to_string()), v, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

/// Result of running a command, before printing.
pub enum Outcome {
    Report(Report),
    Computed(ComputeOutput),
}

pub fn execute(cli: &Cli, settings: &Settings) -> Result<Outcome> {
    match &cli.command {
        Command::Run { file } => {
            let plan = scenario::load(file, settings)?;
            Ok(Outcome::Report(run_plan(&plan, settings)?))
        }
        Command::VerifyPaper {
            only,
            seed,
            corpus_size,
        } => {
            let options = SuiteOptions {
                only: *only,
                seed: *seed,
                corpus_size: *corpus_size,
            };
            Ok(Outcome::Report(run_suite(settings, options)?))
        }
        Command::Compute(cmd) => Ok(Outcome::Computed(compute(settings, cmd)?)),
    }
}

/// Parse arguments, run, print, and return the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    let env = std::env::var(DEGREE_CAP_ENV).ok();
    let settings = match Settings::resolve(cli.degree_cap, env.as_deref()) {
        Ok(mut s) => {
            s.timings = cli.timings;
            s.parallel = cli.parallel;
            s
        }
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let outcome = match execute(&cli, &settings) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let mut stdout = std::io::stdout().lock();
    match outcome {
        Outcome::Report(r) => {
            let text = match cli.format.unwrap_or(Format::Text) {
                Format::Json => r.to_json() + "\n",
                Format::Text => r.to_text(),
            };
            let _ = stdout.write_all(text.as_bytes());
            if r.ok() {
                EXIT_OK
            } else {
                EXIT_EXPECTATION
            }
        }
        Outcome::Computed(c) => {
            let text = match cli.format.unwrap_or(Format::Json) {
                Format::Json => c.to_json() + "\n",
                Format::Text => c.to_text(),
            };
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_cap_precedence() {
        let s = Settings::resolve(None, None).unwrap();
        assert_eq!(
            (s.degree_cap, s.degree_cap_source),
            (DEFAULT_DEGREE_CAP, "default")
        );
        let s = Settings::resolve(None, Some("31")).unwrap();
        assert_eq!((s.degree_cap, s.degree_cap_source), (31, "env"));
        let s = Settings::resolve(Some(7), Some("31")).unwrap();
        assert_eq!((s.degree_cap, s.degree_cap_source), (7, "flag"));
        assert!(matches!(
            Settings::resolve(None, Some("lots")),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn exit_codes_by_error_kind() {
        assert_eq!(exit_code(&Error::Parse("x".into())), EXIT_PARSE);
        assert_eq!(exit_code(&Error::Integrity("x".into())), EXIT_COMPUTATION);
        assert_eq!(
            exit_code(&Error::DegreeCapExceeded { cap: 1, needed: 2 }),
            EXIT_COMPUTATION
        );
    }

    #[test]
    fn compute_ext_reports_annihilator() {
        let cli = Cli::try_parse_from([
            "extscope", "compute", "ext", "--module", "xy,xz", "--i", "1",
        ])
        .unwrap();
        let Command::Compute(cmd) = &cli.command else {
            panic!("expected compute")
        };
        let out = compute(&Settings::default(), cmd).unwrap();
        assert_eq!(out.result["annihilator"], serde_json::json!(["x"]));
        assert!(out.to_text().contains("defaults.degree_cap"));
    }
}
