//! `dnagc`: command-line front end of the dnagc library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use dnagc::groups::GroupSpec;
use dnagc::search::Baseline;

mod cache;
mod cmd;
mod config;
mod error;

use config::RunConfig;
use error::CliResult;

#[derive(Parser, Debug)]
#[command(name = "dnagc", version, about = "Reversible group codes over GF(4) and DNA code constraints")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Worker threads; defaults to the number of available CPUs.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Largest number of codewords any single enumeration may visit.
    #[arg(long, global = true, default_value_t = dnagc::algebra::DEFAULT_CAP)]
    cap: u64,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Search group-ring generators for codes with a target distance.
    Search(SearchArgs),
    /// Report parameters and weight data of a code file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count GC-balanced codewords through Krawtchouk polynomials.
    GcCount {
        file: PathBuf,
        /// Cross-check against full enumeration.
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the GC-balanced codewords of a code as DNA words.
    GcExtract {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = WordFormat::Plain)]
        format: WordFormat,
        /// Keep only words free of secondary structure.
        #[arg(long)]
        ssf_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check DNA words for conflicts, secondary structure or code constraints.
    DnaCheck(DnaCheckArgs),
    /// Reproduce a lower-bound table row: search, extract, filter.
    Tables {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        /// Groups to search; all catalog groups of order n by default.
        #[arg(long = "group")]
        groups: Vec<GroupSpec>,
        #[arg(long)]
        all_involutions: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List catalog groups or show one group.
    Groups {
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        show: Option<GroupSpec>,
        /// Involution used for the ordering shown with --show.
        #[arg(long, requires = "show")]
        involution: Option<usize>,
        /// Write the Cayley table of the --show group.
        #[arg(long, requires = "show")]
        export: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time every GC computation method on random codes.
    Bench {
        #[arg(long, default_value_t = 24)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        codes: usize,
        /// Skip the brute-force complete weight enumerator.
        #[arg(long)]
        skip_brute: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: u32,
    /// Groups to search; all catalog groups of order n by default.
    #[arg(long = "group")]
    groups: Vec<GroupSpec>,
    /// Involution (element index) fixing the reversible ordering.
    #[arg(long, conflicts_with = "all_involutions")]
    involution: Option<usize>,
    #[arg(long)]
    all_involutions: bool,
    /// Record only codes larger than this (`inf` for no known bound).
    #[arg(long, default_value = "0")]
    baseline: Baseline,
    /// Also try generators of weight d+1 ..= d+widen.
    #[arg(long, default_value_t = 0)]
    widen: usize,
    /// Count secondary-structure-free GC-balanced words of each RC-closed code.
    #[arg(long)]
    ffs: bool,
    #[arg(long, default_value_t = dnagc::search::DEFAULT_CHUNK_SIZE)]
    chunk_size: u64,
    /// JSONL results file; without it results go to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Chunk ledger to resume from and append to.
    #[arg(long)]
    resume: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("check").required(true).args(["cf", "ssf", "audit"])))]
pub struct DnaCheckArgs {
    file: PathBuf,
    /// Conflict-free test for repeated blocks of length up to L.
    #[arg(long = "cf", value_name = "L")]
    cf: Option<usize>,
    /// Secondary-structure test on 3-base windows.
    #[arg(long)]
    ssf: bool,
    /// Pairwise distance audit at distance D, including reversed words.
    #[arg(long, value_name = "D")]
    audit: Option<u32>,
    /// Code generating the words; switches the audit to the linear shortcut.
    #[arg(long, requires = "audit")]
    code: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WordFormat {
    /// One DNA word per line.
    Plain,
    Fasta,
    /// GF(4) symbols `0 1 w W`.
    F4,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn run(cli: Cli) -> CliResult<()> {
    let g = &cli.global;
    let base = |name: &str| RunConfig::new(name, g.workers.unwrap_or_else(default_workers), g.cap, g.seed);
    match cli.command {
        Command::Search(args) => cmd::search::run(base("search"), args),
        Command::Analyze { file, out } => cmd::analyze::run(base("analyze"), file, out),
        Command::GcCount { file, brute, out } => cmd::gc::count(base("gc-count"), file, brute, out),
        Command::GcExtract { file, format, ssf_only, out } => {
            cmd::gc::extract(base("gc-extract"), file, format, ssf_only, out)
        }
        Command::DnaCheck(args) => cmd::dna_check::run(base("dna-check"), args),
        Command::Tables { n, d, groups, all_involutions, out } => {
            cmd::tables::run(base("tables"), n, d, groups, all_involutions, out)
        }
        Command::Groups { order, show, involution, export, out } => {
            cmd::groups::run(base("groups"), order, show, involution, export, out)
        }
        Command::Bench { n, k, codes, skip_brute, out } => cmd::bench::run(base("bench"), n, k, codes, skip_brute, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
