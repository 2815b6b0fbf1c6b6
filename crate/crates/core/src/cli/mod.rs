//! Command-line front end: instance generation, property checks, cover
//! algorithms and corpus verification, all speaking JSON.
//!
//! Exit codes: 0 when every check passes, 1 when a property or bound fails,
//! 2 on usage or parse errors.

mod cover;
mod gen;
mod instance;
mod report;
mod verify;

pub use instance::{parse_instance, Instance};
pub use report::{BoundCheck, InstanceInfo, InstanceKind, RunReport, Step, Summary};
pub use verify::{
    chordal_tk_instance, run_verify, verify_c4free22, verify_constructions, verify_lower,
    verify_t33, verify_tt, VerifyParams,
};

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::{Read, Write};
use std::path::PathBuf;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "strongcover",
    version,
    about = "Strong monochromatic clique covers of multicolored complete graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a generated instance as JSON.
    Gen(GenArgs),
    /// Check properties of an instance.
    Check(CheckArgs),
    /// Run a cover algorithm on an instance.
    Cover(CoverArgs),
    /// Run an algorithm and its bound over a seeded corpus.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    K5star,
    K4paths,
    K8c4free,
    Onefourth,
    Partition,
    Blowup,
    RandomIntervals,
    RandomSubtrees,
    RandomC4free,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    pub construction: Construction,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Reject random draws that are not (t,k)-colorings.
    #[arg(long)]
    pub k: Option<usize>,
    /// Blow-up base: k5star, k4paths, k8c4free, or a path to an instance.
    #[arg(long)]
    pub base: Option<String>,
    /// Blow-up clique sizes, one per base vertex.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Vec<usize>,
    #[arg(long)]
    pub anchor_prob: Option<f64>,
    #[arg(long)]
    pub coord_range: Option<i64>,
    #[arg(long)]
    pub max_len: Option<i64>,
    #[arg(long)]
    pub host_size: Option<usize>,
    #[arg(long)]
    pub max_subtree: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    pub max_retries: usize,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Instance file; standard input when absent.
    pub input: Option<PathBuf>,
    /// Every color graph is chordal.
    #[arg(long)]
    pub chordal: bool,
    /// Every color graph is induced-C4-free.
    #[arg(long)]
    pub c4free: bool,
    /// Every K vertices span a monochromatic clique.
    #[arg(long, value_name = "K")]
    pub tk: Option<usize>,
    /// Report the fewest colors on an edge; with a value, require at least that many.
    #[arg(long, value_name = "K", num_args = 0..=1, default_missing_value = "0")]
    pub kfold: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Greedy,
    Exact,
    T33,
    Tt,
    C4free22,
}

#[derive(Args, Debug)]
pub struct CoverArgs {
    pub algorithm: Algorithm,
    /// Instance file; standard input when absent.
    pub input: Option<PathBuf>,
    /// k of the (t,k)-coloring, for the greedy bound.
    #[arg(long)]
    pub k: Option<usize>,
    /// Greedy color order, comma separated; defaults to 1,2,..,t.
    #[arg(long, value_delimiter = ',')]
    pub order: Vec<usize>,
    /// Run greedy on every color order.
    #[arg(long)]
    pub all_orders: bool,
    /// Largest n accepted by the exact oracles.
    #[arg(long, default_value_t = 40)]
    pub max_exact: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lower,
    T33,
    Tt,
    C4free22,
    Constructions,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub suite: Suite,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 40)]
    pub max_exact: usize,
}

/// Error message for the error stream, with its exit code (usage errors
/// unless stated otherwise).
#[derive(Debug)]
pub(crate) struct Usage(pub String, pub i32);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string(), EXIT_USAGE)
    }
}

pub(crate) fn read_input(
    path: Option<&PathBuf>,
    stdin: &mut dyn Read,
) -> Result<(String, String), Usage> {
    match path {
        Some(p) => Ok((p.display().to_string(), std::fs::read_to_string(p)?)),
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(("stdin".to_string(), s))
        }
    }
}

/// Runs the command line `args` (program name first) against the given
/// streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_PASS
            };
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => gen::run(a).map(|json| (json, EXIT_PASS)),
        Command::Check(a) => cover::check(a, stdin).map(emit),
        Command::Cover(a) => cover::cover(a, stdin).map(emit),
        Command::Verify(a) => verify::run(a).map(emit),
    };
    match result {
        Ok((text, code)) => {
            let _ = writeln!(out, "{text}");
            code
        }
        Err(Usage(msg, code)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn emit(report: RunReport) -> (String, i32) {
    let code = if report.pass { EXIT_PASS } else { EXIT_FAIL };
    (
        serde_json::to_string_pretty(&report).expect("report serializes"),
        code,
    )
}
