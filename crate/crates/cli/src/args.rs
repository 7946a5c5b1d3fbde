use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_core::Partition;

#[derive(Parser, Debug)]
#[command(name = "hurwitz", version, about = "Exact Hurwitz numbers of almost simple coverings of the sphere")]
pub struct Cli {
    /// Directory for cached Psi series (default: $HURWITZ_CACHE_DIR, else none).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads for the parallel kernels.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// f, mu and c for one partition and genus.
    Compute(ComputeArgs),
    /// Tabulate f_m^(g) as an e-polynomial or as a value grid, or dump factorization counts.
    Table(TableArgs),
    /// Run a cross-validation suite and print a JSON report.
    Verify(VerifyArgs),
    /// Inspect or fill the Psi cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteChoice {
    /// Engine if cached or within the degree budget, else formulas, else oracle.
    Auto,
    Engine,
    Formula,
    Oracle,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    E,
    Values,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Appendix,
    Oracle,
    Recurrence,
    Closedform,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    All,
    Transitive,
}

/// Budgets for the brute-force route.
#[derive(Args, Debug, Clone, Copy)]
pub struct OracleArgs {
    /// Largest n the oracle may tabulate.
    #[arg(long = "oracle-n-max", id = "oracle_n_max", default_value_t = 8)]
    pub n_max: u32,
    /// Largest number of transpositions the oracle may tabulate.
    #[arg(long, default_value_t = 14)]
    pub j_max: u32,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    /// Comma-separated parts, e.g. 3,2,1.
    #[arg(long)]
    pub alpha: Partition,
    #[arg(long)]
    pub genus: u32,
    #[arg(long, value_enum, default_value_t = RouteChoice::Auto)]
    pub route: RouteChoice,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long, required_unless_present = "factorizations")]
    pub genus: Option<u32>,
    #[arg(long, required_unless_present = "factorizations")]
    pub m: Option<usize>,
    #[arg(long, value_enum, default_value_t = Basis::E)]
    pub basis: Basis,
    /// Same as --basis values.
    #[arg(long)]
    pub values: bool,
    /// Largest n of the value grid or factorization dump.
    #[arg(long)]
    pub n_max: Option<u32>,
    #[arg(long, value_enum, default_value_t = RouteChoice::Auto)]
    pub route: RouteChoice,
    /// Dump the factorization count table instead.
    #[arg(long, conflicts_with_all = ["genus", "m", "values"])]
    pub factorizations: bool,
    #[arg(long, value_enum, default_value_t = ModeArg::Transitive)]
    pub mode: ModeArg,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Largest n for the oracle and closed-form suites.
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Largest genus for the oracle suite.
    #[arg(long, default_value_t = 2)]
    pub genus_max: u32,
    #[command(flatten)]
    pub oracle: OracleArgs,
}

#[derive(Subcommand, Debug)]
pub enum CacheAction {
    /// Cells present in the cache directory.
    List,
    /// Remove every cache file.
    Clear,
    /// Compute and store cells: one (--m, --genus) or all tabulated cells.
    Build {
        #[arg(long, requires = "genus")]
        m: Option<usize>,
        #[arg(long, requires = "m")]
        genus: Option<usize>,
    },
}

#[cfg(test)]
mod tests {
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        super::Cli::command().debug_assert();
    }
}
