use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use genstirling::{parse_rational, Rational};

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn epsilon(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(format!("`{s}` is not a positive decimal")),
    }
}

#[derive(Parser, Debug)]
#[command(name = "genstirling", version, about = "Generalized Stirling numbers and the polynomials they generate")]
pub struct Cli {
    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Args, Debug, Clone)]
pub struct Params {
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    pub alpha: Rational,

    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    pub beta: Rational,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the coefficient triangle S(n, k) for n <= nmax
    Table {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print P_n as a coefficient list, low degree first
    Poly {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Evaluate P_n(x) exactly and by the Dobinski series
    Eval {
        #[command(flatten)]
        params: Params,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        x: Rational,
        #[arg(long, default_value = "1e-12", value_parser = epsilon)]
        epsilon: f64,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Real-rootedness report for P_1 ..= P_nmax
    Zeros {
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        /// Also check the Newton inequalities on each row (needs alpha <= 0, beta < 0)
        #[arg(long)]
        logconcave: bool,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
    /// Check identities exactly and print one PASS/FAIL line per case
    Verify(VerifyArgs),
    /// Named members of the family
    Family {
        #[arg(value_enum)]
        which: FamilyName,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = rational)]
        lambda: Option<Rational>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    U,
    V,
    Laguerre,
    AssocLah,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run the full acceptance suite over the built-in parameter grid
    #[arg(long, conflicts_with = "identity")]
    pub all: bool,

    /// One of t2, t4, bell-operator, p2, p3, p4-lah, p5, c3, c4, lemma1, composition, rebase
    #[arg(long, required_unless_present = "all")]
    pub identity: Option<String>,

    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    pub alpha: Option<Rational>,

    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    pub beta: Option<Rational>,

    /// Second parameter pair for composition and rebase
    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    pub alpha2: Option<Rational>,

    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    pub beta2: Option<Rational>,

    #[arg(long, allow_hyphen_values = true, value_parser = rational)]
    pub lambda: Option<Rational>,

    #[arg(long, default_value_t = 1)]
    pub r: usize,

    #[arg(long, default_value_t = 10)]
    pub nmax: usize,

    /// Series order for t2; defaults to nmax + 2
    #[arg(long)]
    pub order: Option<usize>,
}
