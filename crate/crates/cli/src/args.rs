use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "parhiggs", version, about = "Exact Betti numbers of rank-3 parabolic Higgs moduli spaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Poincaré polynomial of the rank-3 parabolic Higgs moduli space.
    Higgs {
        #[command(flatten)]
        curve: Curve,
        /// Fix the determinant.
        #[arg(long)]
        fixed: bool,
        /// Print the contribution of each stratum type as well as the total.
        #[arg(long)]
        breakdown: bool,
        #[command(flatten)]
        higgs: HiggsOpts,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Poincaré polynomial of the moduli of stable rank-3 parabolic bundles.
    Bundles {
        #[command(flatten)]
        curve: Curve,
        #[arg(long)]
        fixed: bool,
        #[command(flatten)]
        higgs: HiggsOpts,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Poincaré polynomial of the moduli of sigma-stable parabolic triples.
    Triples {
        #[command(flatten)]
        curve: Curve,
        #[command(flatten)]
        triple: TripleOpts,
        /// Stability parameter, an exact rational `P/Q`.
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long)]
        fixed: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the critical values of the stability parameter for triples.
    Walls {
        #[command(flatten)]
        curve: Curve,
        #[command(flatten)]
        triple: TripleOpts,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the critical submanifolds of one type.
    Strata {
        #[command(flatten)]
        curve: Curve,
        #[arg(long = "type", value_enum)]
        kind: StrataKind,
        #[arg(long)]
        fixed: bool,
        #[command(flatten)]
        higgs: HiggsOpts,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Poincaré polynomial of a symmetric product of the curve.
    Symprod {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        power: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a consistency suite.
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
        #[command(flatten)]
        curve: Curve,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Curve {
    #[arg(long)]
    pub genus: u32,
    /// Number of marked points.
    #[arg(long)]
    pub points: usize,
}

#[derive(Args, Debug, Clone)]
pub struct HiggsOpts {
    /// Degree of the bundle; must not be divisible by 3.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub degree: i64,
    /// JSON file of weights, one array of three "num/den" strings per point.
    #[arg(long)]
    pub weights: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct TripleOpts {
    /// Degree of the rank-2 bundle.
    #[arg(long, allow_hyphen_values = true)]
    pub d1: i64,
    /// Degree of the line bundle.
    #[arg(long, allow_hyphen_values = true)]
    pub d2: i64,
    /// JSON file of weights `[alpha, beta1, beta2]` per point.
    #[arg(long)]
    pub weights: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrataKind {
    #[value(name = "111")]
    OneOneOne,
    #[value(name = "12")]
    OneTwo,
    #[value(name = "21")]
    TwoOne,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Hausel,
    Euler,
    Oracle,
    All,
}
