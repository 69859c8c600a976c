//! Command-line front end: one verb per library operation, plain-text reports.
//!
//! Exit codes: 0 success, 1 a refuted or negative outcome, 2 bad input,
//! 3 a cap or budget ran out.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub mod error;
pub mod input;
pub mod report;
mod verbs;

pub use error::{CliError, Result};
pub use report::Report;

#[derive(Debug, Parser)]
#[command(name = "toric", about = "Toric fiber products, Markov bases and their decompositions")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    /// Degree bound for verification, compatibility checks and pruning.
    #[arg(long, global = true)]
    pub bound: Option<u64>,
    /// Fiber point cap.
    #[arg(long, global = true)]
    pub cap: Option<usize>,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Print reduction and bound derivations.
    #[arg(long, global = true)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct ConfigInput {
    /// Complex file `{"vertices", "d", "facets"}`.
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// Matrix file: `m n` then `m` rows.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SideInput {
    /// Complex file of the first factor.
    #[arg(long)]
    pub left: PathBuf,
    /// Complex file of the second factor; the vertices shared with the first
    /// form the separator.
    #[arg(long)]
    pub right: PathBuf,
    /// Where to write the resulting moves, in cell order of the glued model.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Experiment {
    /// Exact widths of small cycles against the cycle bound.
    Cycle,
    /// Degrees of the assembled bipyramid sets.
    Bipyramid,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Minimal Markov basis, degree histogram and width.
    Markov {
        #[command(flatten)]
        input: ConfigInput,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks a move set against every fiber up to the bound.
    Verify {
        #[command(flatten)]
        input: ConfigInput,
        #[arg(long)]
        moves: PathBuf,
    },
    /// Markov width of a hierarchical model.
    Width {
        #[arg(long)]
        model: PathBuf,
    },
    /// Shape of the fiber product of two complexes.
    Product(SideInput),
    /// Quadratic exchange moves.
    Quad(SideInput),
    /// Lifted moves from both associated codimension-zero sides.
    Lift(SideInput),
    /// Glued moves from the side bases.
    Glue(SideInput),
    /// Assembled generating set; verified when a bound is given.
    Assemble(SideInput),
    /// Compatible projection check up to the bound.
    Cpp(SideInput),
    /// Slow-varying check of the side bases.
    Slow(SideInput),
    /// Design matrix and codimension of a hierarchical model.
    Hier {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Conditional independence statements and generators; with `--with`,
    /// their fiber product.
    Ci {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        with: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Global Markov statements of a graph.
    Global {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Splits a graph along a clique and compares graded pieces.
    Split {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        left: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        right: Vec<usize>,
    },
    /// Product of two decompositions.
    Combine {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Removes redundant components of a decomposition, or of the product of two.
    Prune {
        #[arg(long, conflicts_with_all = ["left", "right"])]
        input: Option<PathBuf>,
        #[arg(long, requires = "right")]
        left: Option<PathBuf>,
        #[arg(long, requires = "left")]
        right: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reports observations only.
    Experiment {
        #[arg(long, value_enum)]
        kind: Experiment,
        /// Largest instance size.
        #[arg(long)]
        max: Option<usize>,
    },
    /// Upper bound on the width of a graph model.
    WidthBound {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Degree 2 and 4 basis of a binary series-parallel graph model.
    Sp {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Minor tests and the derived graph classes.
    Outerplanar {
        #[arg(long)]
        graph: PathBuf,
    },
}

/// Options shared by all verbs.
#[derive(Clone, Copy, Debug, Default)]
pub struct Settings {
    pub bound: Option<u64>,
    pub cap: Option<usize>,
    pub trace: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

/// Parses `argv` (program name first) and runs the verb.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                code,
                report: e.render().to_string(),
            };
        }
    };
    let settings = Settings {
        bound: cli.bound,
        cap: cli.cap,
        trace: cli.trace,
    };
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| verbs::dispatch(&cli.verb, &settings)),
            Err(e) => Err(CliError::Usage(format!("cannot start {n} threads: {e}"))),
        },
        None => verbs::dispatch(&cli.verb, &settings),
    };
    match result {
        Ok((report, success)) => Outcome {
            code: if success { 0 } else { 1 },
            report: report.to_string(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            report: format!("error: {e}\n"),
        },
    }
}
