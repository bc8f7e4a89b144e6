use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use kitespec::cli::{self, GraphSpec, OutputFormat, RunConfig, CACHE_DIR_ENV, EXIT_USAGE};
use kitespec::enumeration::EnumConstraints;

/// Exact spectral tools for kite graphs.
///
/// Graphs are given as `kite:p,q`, `path:n`, `complete:n`, `knm:n,m`, `gb:p`,
/// `gc:p` or `g6:<graph6>`. Exit status: 0 success, 1 usage error, 2 when a
/// verification contradicts the theorem it checks.
#[derive(Parser)]
#[command(name = "kitespec", version)]
struct Cli {
    /// Cache directory for enumeration results
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    /// Jacobi convergence tolerance
    #[arg(long, global = true, default_value_t = kitespec::spectral::DEFAULT_TOL)]
    tol: f64,
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// json, csv or text
    #[arg(long, global = true, default_value = "json")]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial, lowest power first
    Charpoly { spec: GraphSpec },
    /// Adjacency eigenvalues and spectral radius
    Spectrum { spec: GraphSpec },
    /// Compare two graphs' polynomials and isomorphism classes
    Cospectral { a: GraphSpec, b: GraphSpec },
    /// Spectrum-determined parameters and applicable bounds
    Invariants { spec: GraphSpec },
    /// Pairwise distinctness of kite polynomials for every order up to N
    KiteCensus {
        #[arg(long)]
        max_n: usize,
    },
    /// Exhaustive cospectral-mate search for Kite_{p,q} (q >= 2)
    DasVerify {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Spectral-radius sandwich, and the clique bound when q is given
    Bounds {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: Option<usize>,
    },
    /// One graph per isomorphism class, as graph6
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        edges: Option<usize>,
        #[arg(long)]
        connected: bool,
    },
    /// Exact check of the clique-bound inequality for every p up to P
    Lemma41Check {
        #[arg(long)]
        max_p: usize,
    },
}

fn run(args: Cli) -> kitespec::Result<cli::Emitted> {
    let cfg = RunConfig { cache_dir: args.cache_dir, tol: args.tol, workers: args.workers, format: args.format };
    cfg.validate()?;
    match args.command {
        Command::Charpoly { spec } => cli::cmd_charpoly(&spec, &cfg),
        Command::Spectrum { spec } => cli::cmd_spectrum(&spec, &cfg),
        Command::Cospectral { a, b } => cli::cmd_cospectral(&a, &b, &cfg),
        Command::Invariants { spec } => cli::cmd_invariants(&spec, &cfg),
        Command::KiteCensus { max_n } => cli::cmd_kite_census(max_n, &cfg),
        Command::DasVerify { p, q } => cli::cmd_das_verify(p, q, &cfg),
        Command::Bounds { p, q } => cli::cmd_bounds(p, q, &cfg),
        Command::Enumerate { n, edges, connected } => {
            let c = EnumConstraints { n, edges, connected_only: connected, triangle_count: None };
            cli::cmd_enumerate(&c, &cfg)
        }
        Command::Lemma41Check { max_p } => cli::cmd_lemma41_check(max_p, &cfg),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = match Cli::try_parse() {
        Ok(args) => args,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE as u8);
        }
        Err(e) => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(args) {
        Ok(out) => {
            print!("{}", out.body);
            if !out.body.ends_with('\n') {
                println!();
            }
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
