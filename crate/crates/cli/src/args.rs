use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "degcon",
    version,
    about = "Connectivity experiments on uniform random graphs with a given degree sequence"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Print errors as a JSON object on stderr.
    #[arg(long, global = true)]
    pub error_json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test graphicality and print the invariants and disconnection bound.
    Check {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Draw uniform simple graphs and print their edge lists.
    Sample {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Explore the component of one vertex in sampled graphs.
    Explore {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        sampling: SamplingArgs,
        /// Start vertex, labelled from 1.
        #[arg(long, default_value_t = 1)]
        start: usize,
        /// Reveal an unconditioned configuration-model multigraph instead.
        #[arg(long)]
        multigraph: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Monte Carlo estimate of the disconnection probability.
    Census {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        sampling: SamplingArgs,
        /// Fail unless the 95% Wilson interval is at most this wide.
        #[arg(long)]
        max_width: Option<f64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exact connection probability by enumeration (2m <= 20).
    Oracle {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Small-component means against their invariants across sizes.
    Tightness {
        /// regular(d), leaves-sqrt(d) or twos-fraction(divisor,d).
        #[arg(long)]
        scaled: String,
        /// Edge counts, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<u64>,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SourceArgs {
    /// Degree list, e.g. "3 3 2 2" or "[3,3,2,2]".
    #[arg(long)]
    pub seq: Option<String>,
    /// File holding a degree list.
    #[arg(long)]
    pub seq_file: Option<PathBuf>,
    /// regular(d,n), with-leaves(n1,d,n), with-twos(n2,d,n), two-stars(n)
    /// or star(n).
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Debug, Args)]
pub struct SamplingArgs {
    /// Number of graphs (default 1 for sample/explore, 1000 otherwise).
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = SamplerKind::Auto)]
    pub sampler: SamplerKind,
    /// Switch-chain steps (default: the chain's own schedule).
    #[arg(long)]
    pub steps: Option<u64>,
    /// Rejection sampler attempt limit.
    #[arg(long)]
    pub max_attempts: Option<u64>,
    /// Worker threads (0 = all cores). Results never depend on it.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SamplerKind {
    Rejection,
    SwitchChain,
    Auto,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}
