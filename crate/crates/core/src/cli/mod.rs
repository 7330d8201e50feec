//! The `blt` command line: argument parsing, file I/O and output formats.
//! Every subcommand is also callable as a library function.

mod commands;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::limits::Limits;

pub use commands::{cmd_graph_conn, cmd_group, cmd_space, GroupCommand, GroupInput, SpaceCommand, SpaceInput};
pub use verify::{
    counterexample_report, run_verify, verify_graph, CounterexampleReport, GroupSeparation, Level, VerifyConfig,
    VerifyReport, VerifyRow, VerifySummary,
};

/// Exit code for a run where every check passed.
pub const EXIT_OK: i32 = 0;
/// Exit code when a verification row or check failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for usage, parse and input errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "blt",
    version,
    about = "Connectivity of graphs, alternating matrix spaces and p-groups of class 2"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Field order for matrix spaces and maps.
    #[arg(long, global = true, default_value_t = 3)]
    pub q: u32,
    /// Prime for groups.
    #[arg(long, global = true, default_value_t = 3)]
    pub p: u32,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "BLT_THREADS")]
    pub threads: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Lift the search guards.
    #[arg(long, global = true)]
    pub force: bool,
}

impl GlobalArgs {
    pub fn limits(&self) -> Limits {
        if self.force {
            Limits::forced()
        } else {
            Limits::default()
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex and edge connectivity and minimum degree of an edge-list graph.
    GraphConn { file: PathBuf },
    /// Alternating matrix spaces.
    #[command(subcommand)]
    Space(SpaceCommand),
    /// Baer groups.
    #[command(subcommand)]
    Group(GroupCommand),
    /// Sweep all labeled graphs and compare the parameters level by level.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Largest vertex count swept (at most 6).
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = Level::All)]
    pub level: Level,
    /// Extra seeded random spaces compared at the space and map levels.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
    /// Check the κ > λ construction for the given block sizes instead of sweeping.
    #[arg(long, num_args = 2, value_names = ["S", "T"])]
    pub counterexample: Option<Vec<String>>,
}

/// Reads `"s=2"` or `"2"`.
fn parse_size(text: &str) -> Result<usize> {
    let v = text.rsplit('=').next().unwrap_or(text);
    v.trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("block size {text:?} is not a number")))
}

pub(crate) fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_out(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => {
            let mut so = io::stdout().lock();
            so.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string()))
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

/// Renders a JSON report in the chosen format. Objects become `key: value`
/// lines (text) or a header plus one row (CSV).
pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("values serialize") + "\n",
        Format::Text => match value {
            Value::Object(map) => map.iter().map(|(k, v)| format!("{k}: {}\n", scalar(v))).collect(),
            other => scalar(other) + "\n",
        },
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if let Value::Object(map) = value {
                w.write_record(map.keys()).expect("in-memory write");
                w.write_record(map.values().map(scalar)).expect("in-memory write");
            } else {
                w.write_record([scalar(value)]).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8")
        }
    }
}

fn exec(cli: &Cli) -> Result<i32> {
    let g = &cli.global;
    if g.force {
        eprintln!("warning: --force lifts the search guards; exhaustive searches may take very long");
    }
    let limits = g.limits();
    let format = g.format.unwrap_or(Format::Json);
    let single = |value: Value| -> Result<i32> {
        write_out(g.out.as_deref(), &render(&value, format))?;
        Ok(EXIT_OK)
    };
    match &cli.command {
        Command::GraphConn { file } => single(cmd_graph_conn(&read_file(file)?)?),
        Command::Space(sub) => single(cmd_space(sub, g.q, &limits)?),
        Command::Group(sub) => single(cmd_group(sub, g.p, &limits)?),
        Command::Verify(args) => {
            if let Some(sizes) = &args.counterexample {
                let (s, t) = (parse_size(&sizes[0])?, parse_size(&sizes[1])?);
                let report = counterexample_report(s, t, g.q, g.p, &limits)?;
                single(serde_json::to_value(&report)?)?;
                return Ok(if report.separation { EXIT_OK } else { EXIT_FAIL });
            }
            let cfg = VerifyConfig {
                max_n: args.max_n,
                q: g.q,
                p: g.p,
                level: args.level,
                limits,
                seed: g.seed,
                random: args.random,
            };
            verify::run_verify_cli(&cfg, g.format.unwrap_or(Format::Text), g.out.as_deref())
        }
    }
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let threads = match cli.global.threads {
        Some(0) => {
            eprintln!("error: --threads must be at least 1");
            return EXIT_USAGE;
        }
        Some(t) => t,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: thread pool: {e}");
            return EXIT_USAGE;
        }
    };
    match pool.install(|| exec(&cli)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(parse_size("s=2").unwrap(), 2);
        assert_eq!(parse_size("3").unwrap(), 3);
        assert!(parse_size("t=x").is_err());
    }

    #[test]
    fn render_formats() {
        let v = serde_json::json!({"kappa": 1, "W": [[1, 0]]});
        assert_eq!(render(&v, Format::Text), "kappa: 1\nW: [[1,0]]\n");
        assert_eq!(render(&v, Format::Csv), "kappa,W\n1,\"[[1,0]]\"\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(main_with_args(["blt", "frobnicate"]), EXIT_USAGE);
        assert_eq!(main_with_args(["blt", "verify", "--max-n", "7"]), EXIT_USAGE);
        assert_eq!(main_with_args(["blt", "--threads", "0", "verify"]), EXIT_USAGE);
    }
}
