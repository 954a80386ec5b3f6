//! Command-line front end. `run` is the whole program minus process exit,
//! so tests can drive it in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use contalg::report::{self, Config, DemoMonoid, GraphTarget, Report, Suite};
use contalg::{Error, Limits};

#[derive(Debug, Parser)]
#[command(name = "contalg", version, about = "Finite commutative rings, content algebras and zero-divisor graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct Common {
    /// Truncation degree for polynomial checks.
    #[arg(long, global = true, default_value_t = 2)]
    degree: usize,
    /// Degrees for the diameter stability check.
    #[arg(long, global = true, value_delimiter = ',', default_value = "1,2")]
    degrees: Vec<usize>,
    /// Largest Dedekind–Mertens exponent to try.
    #[arg(long, global = true)]
    nmax: Option<usize>,
    /// Also write the report as JSON to this file.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Ring order and graph vertex cap (overrides CONTALG_CAP).
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
    /// Seed for sampled checks.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Zero-divisors, nilradical, primes and graph data of a ring.
    Analyze { expr: String },
    /// Zero-divisor graph of a ring, or of its polynomial ring truncated
    /// at `--degree` when `--poly` is given.
    Graph {
        expr: String,
        #[arg(long)]
        poly: bool,
        /// Write the graph in Graphviz DOT format to this file.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Run a verification suite on one ring, or on the fixture list.
    Verify { suite: String, expr: Option<String> },
    /// Dedekind–Mertens exponent of f and g in R[X].
    Dm { expr: String, f: String, g: String },
    /// Content checks over a monoid ring R[M].
    MonoidDemo {
        kind: DemoKind,
        #[arg(long, default_value = "Z3")]
        ring: String,
        /// Order of the cyclic group (torsion) or rank of N^k (free).
        #[arg(long)]
        order: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DemoKind {
    Torsion,
    Noncancellative,
    Free,
}

impl Common {
    fn config(&self) -> Result<Config, Error> {
        let mut limits = Limits::from_env();
        if let Some(cap) = self.cap {
            limits.set_cap(cap);
        }
        if let Some(seed) = self.seed {
            limits.seed = seed;
        }
        if self.degrees.is_empty() {
            return Err(Error::InvalidParameter("--degrees needs at least one degree".into()));
        }
        Ok(Config {
            limits,
            degree: self.degree,
            degrees: self.degrees.clone(),
            n_max: self.nmax,
        })
    }
}

/// Runs the program on `args` (including the binary name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Core(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::ResourceLimit { .. } => 3,
                _ => 2,
            }
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

enum Failure {
    Core(Error),
    Io(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Io(e)
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let config = cli.common.config()?;
    let mut dot = None;
    let (report, code) = match &cli.command {
        Command::Analyze { expr } => {
            let e = contalg::RingExpr::parse(expr)?;
            let ring = e.build(&config.limits)?;
            (Report::analyze(&e, &ring, &config), 0)
        }
        Command::Graph { expr, poly, dot: path } => {
            let target = if *poly { GraphTarget::Truncated(config.degree) } else { GraphTarget::Base };
            let (r, text) = report::graph_report(expr, target, &config)?;
            dot = path.as_ref().map(|p| (p.clone(), text));
            let code = r.exit_code();
            (r, code)
        }
        Command::Verify { suite, expr } => {
            let suite: Suite = suite.parse()?;
            let r = match expr {
                Some(e) => report::verify(suite, e, &config)?,
                None => report::verify_fixtures(suite, &config)?,
            };
            let code = r.exit_code();
            (r, code)
        }
        Command::Dm { expr, f, g } => {
            let r = report::dm_report(expr, f, g, &config)?;
            let code = r.exit_code();
            (r, code)
        }
        Command::MonoidDemo { kind, ring, order } => {
            let kind = match kind {
                DemoKind::Torsion => DemoMonoid::Torsion(order.unwrap_or(2)),
                DemoKind::Noncancellative => DemoMonoid::NonCancellative,
                DemoKind::Free => DemoMonoid::Free(order.unwrap_or(1)),
            };
            let r = report::monoid_demo(ring, kind, &config)?;
            let code = r.exit_code();
            (r, code)
        }
    };
    write_outputs(&report, dot, cli.common.json.as_deref(), out)?;
    Ok(code)
}

fn write_outputs(
    report: &Report,
    dot: Option<(PathBuf, String)>,
    json: Option<&std::path::Path>,
    out: &mut dyn Write,
) -> anyhow::Result<()> {
    use anyhow::Context;
    out.write_all(report.to_text().as_bytes()).context("writing report")?;
    if let Some((path, text)) = dot {
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = json {
        std::fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}
