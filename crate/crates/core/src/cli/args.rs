use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::qnum::{parse_rational, Rational};

#[derive(Debug, Parser)]
#[command(name = "qprob", version, about = "Exact q-deformed discrete distributions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the pmf of a family.
    Pmf {
        family: Family,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print mean, second moment and variance.
    Moments {
        family: Family,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run catalog identities and exit 0 iff every gated identity passes.
    Verify {
        /// Identity ids, e.g. I2_39.
        ids: Vec<String>,
        #[arg(long, conflicts_with = "ids")]
        all: bool,
        /// Grid override such as `q=1/2,3/4`, `q_super=2`, `p=1/5` or `max_int=6`; repeatable.
        #[arg(long)]
        grid: Vec<String>,
        /// Count watchlist identities towards the exit code.
        #[arg(long)]
        include_watchlist: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Simulate the trial or urn process and compare with the exact law.
    Sample {
        family: Family,
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, env = "QPROB_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Tabulate the distance to a limit along an increasing parameter.
    Limit {
        /// L4_3, L5_17, L5_25 or I4_24.
        name: String,
        #[command(flatten)]
        params: Params,
        /// Urn offset: the marked count for L5_17 is N - c, the unmarked count for L5_25 is N - c.
        #[arg(long)]
        c: Option<u32>,
        /// Comma-separated parameter sequence, e.g. 10,20,30.
        #[arg(long, value_delimiter = ',')]
        at: Vec<u32>,
        /// For I4_24, compare with 1/E_1(lambda) instead of the reciprocal series.
        #[arg(long)]
        e1_target: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Bernoulli,
    BernoulliInf,
    Geometric,
    Negbinomial,
    Poisson,
    Hypergeom,
    Contagious,
    Uniform,
    Range,
    RangeAlt,
    Parties,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Distribution parameters shared by the subcommands. Rationals accept
/// `a/b`, integers, decimals and scientific notation.
#[derive(Debug, Clone, Args)]
pub struct Params {
    #[arg(long, value_parser = rational)]
    pub q: Option<Rational>,
    #[arg(long, value_parser = rational)]
    pub p: Option<Rational>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub u: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub s: Option<i64>,
    #[arg(long = "M")]
    pub max_index: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub a: Option<u32>,
    #[arg(long)]
    pub b: Option<u32>,
    #[arg(long, value_parser = rational)]
    pub lambda: Option<Rational>,
    /// Last listed index for laws with infinite support.
    #[arg(long, default_value_t = 20)]
    pub kappa_max: u32,
    /// Width bound for certified enclosures (default 1e-12, or 1e-30 for limit tables).
    #[arg(long, value_parser = rational)]
    pub eps: Option<Rational>,
    /// Divide the q-geometric law by its total mass.
    #[arg(long)]
    pub rescaled: bool,
}

fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}
