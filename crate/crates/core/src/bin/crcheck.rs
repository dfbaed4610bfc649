use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crcheck::error::Error;
use crcheck::manifold::Point;
use crcheck::manifold_file::ManifoldSpec;
use crcheck::order::BaseOrder;
use crcheck::parse::parse_scalar;
use crcheck::report::{self, DiscMode, Report, RunConfig};

#[derive(Parser)]
#[command(name = "crcheck", version, about = "Segre sets, minimality and analytic discs of real-algebraic submanifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Base monomial order for all Gröbner computations.
    #[arg(long, global = true, value_enum, default_value_t = Order::Grevlex)]
    order: Order,
    #[arg(long, global = true, default_value_t = 50_000)]
    max_pairs: usize,
    #[arg(long, global = true, default_value_t = 64)]
    max_degree: u32,
    /// Longest Segre sequence computed (default 2n+1).
    #[arg(long, global = true)]
    minimality_cap: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Generic)]
    mode: Mode,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Tuples drawn from base points when k ≥ 2.
    #[arg(long, global = true, default_value_t = 20)]
    samples: usize,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Print the JSON report instead of the summary.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Grevlex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Fixed,
    Generic,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining equations and base points.
    Validate { manifold: PathBuf },
    /// Generic rank of the complex Jacobian.
    Genericity { manifold: PathBuf },
    /// Segre varieties at points (base points by default).
    Segre {
        manifold: PathBuf,
        /// Comma-separated coordinates, e.g. "1,0"; repeatable.
        #[arg(long)]
        point: Vec<String>,
    },
    /// Segre set dimensions and minimality.
    Minimal {
        manifold: PathBuf,
        #[arg(long)]
        point: Vec<String>,
    },
    /// Analytic disc search.
    Discs { manifold: PathBuf },
    /// Both hypotheses for a source and a target.
    Theorem { source: PathBuf, target: PathBuf },
}

fn points(raw: &[String]) -> Result<Vec<Point>, Error> {
    raw.iter()
        .map(|s| s.split(',').map(|c| parse_scalar(c.trim()).map_err(Error::from)).collect())
        .collect()
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let o = &cli.opts;
    let config = RunConfig {
        order: match o.order {
            Order::Lex => BaseOrder::Lex,
            Order::Grevlex => BaseOrder::GrevLex,
        },
        max_pairs: o.max_pairs,
        max_degree: o.max_degree,
        minimality_cap: o.minimality_cap,
        mode: match o.mode {
            Mode::Fixed => DiscMode::Fixed,
            Mode::Generic => DiscMode::Generic,
        },
        seed: o.seed,
        samples: o.samples,
        ..RunConfig::default()
    };
    match &cli.command {
        Command::Validate { manifold } => report::cmd_validate(&ManifoldSpec::load(manifold)?, &config),
        Command::Genericity { manifold } => report::cmd_genericity(&ManifoldSpec::load(manifold)?, &config),
        Command::Segre { manifold, point } => {
            report::cmd_segre(&ManifoldSpec::load(manifold)?, &points(point)?, &config)
        }
        Command::Minimal { manifold, point } => {
            report::cmd_minimal(&ManifoldSpec::load(manifold)?, &points(point)?, &config)
        }
        Command::Discs { manifold } => report::cmd_discs(&ManifoldSpec::load(manifold)?, &config),
        Command::Theorem { source, target } => {
            report::cmd_theorem(&ManifoldSpec::load(source)?, &ManifoldSpec::load(target)?, &config)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            let json = r.to_json();
            if let Some(path) = &cli.opts.report {
                if let Err(e) = std::fs::write(path, &json) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if cli.opts.json {
                print!("{json}");
            } else {
                print!("{}", report::summary(&r));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
