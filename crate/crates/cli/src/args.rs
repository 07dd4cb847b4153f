use std::path::Path as FsPath;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qperiod::{RootSystem, RootVector, Weight};

const AFTER_HELP: &str = "\
Weights (--lambda, --mu, --gamma) are given in fundamental-weight coordinates,
so `--lambda 1,1` for A2 is the adjoint highest weight. Heights (--height,
--bound) are given in simple-root coordinates. Negative entries work either as
`--lambda=-1,2` or `--lambda -1,2`.

Systems: A1-A12, B2-B12, C2-C12, D4-D12, F4, G2, or a path to a JSON file
{\"name\": \"...\", \"cartan\": [[2,-1],[-1,2]]} with a[i][j] = <alpha_i, alpha_j^vee>.

Fields: Q@1, F<p>@1, Q@zeta<l>, F<p>@zeta<l>, F<p>@zeta<l>[g=c0,c1,...]
(g lists the coefficients of the defining factor, lowest degree first).

JSON output:
  gram   {\"system\", \"lambda\", \"height\", \"paths\", \"entries\"}
  table  {\"system\", \"field\", \"lambda\", \"height_bound\", \"mults\": [{\"mu\", \"dim\", \"depth\"}]}
  verify one report per line, then {\"summary\": {...}}

Exit status: 0 on success, 1 if any check fails, 2 on usage or input errors.";

#[derive(Parser, Debug)]
#[command(name = "qperiod", version, about = "Exact weight multiplicities of simple quantum group modules", after_help = AFTER_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    /// Worker threads for parallel work; 1 runs everything sequentially.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Refuse Gram matrices with more paths than this (memory grows with its square).
    #[arg(long, default_value_t = 5000, global = true)]
    pub max_paths: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Multiplicity of one weight in the simple module L(lambda).
    Mult(MultArgs),
    /// Multiplicities of all weights lambda - c with 0 <= c <= bound.
    Table(TableArgs),
    /// Gram matrix of the contravariant form at one height.
    Gram(GramArgs),
    /// Seeded verification batteries, or a single instance when weights are given.
    Verify(VerifyArgs),
    /// Agreement of the pipeline with the independent classical oracles.
    Selftest,
}

#[derive(Args, Debug)]
pub struct MultArgs {
    #[arg(long)]
    pub system: String,
    #[arg(long)]
    pub field: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: String,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub system: String,
    #[arg(long)]
    pub field: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// Height bound in simple-root coordinates.
    #[arg(long)]
    pub bound: String,
}

#[derive(Args, Debug)]
pub struct GramArgs {
    #[arg(long)]
    pub system: String,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// Height in simple-root coordinates.
    #[arg(long, conflicts_with = "mu", required_unless_present = "mu")]
    pub height: Option<String>,
    /// Weight whose height below lambda selects the matrix.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    /// Multiplicity periodicity over a field.
    Periodicity,
    /// Entrywise Gram matrix congruence modulo a cyclotomic polynomial.
    Congruence,
    /// Quantum binomial identity.
    Identities,
    /// Divided-power commutation relations on path space.
    Commutation,
    /// Quantum integer congruence.
    Qint,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub kind: VerifyKind,
    /// Restrict to one system (default: a fixed list per check).
    #[arg(long)]
    pub system: Option<String>,
    /// Field for periodicity (default: Q@zeta3, Q@zeta5, Q@zeta7).
    #[arg(long)]
    pub field: Option<String>,
    /// Period; required for q = 1 fields, otherwise read from the field.
    #[arg(long)]
    pub l: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    /// Height for a single congruence instance, in simple-root coordinates.
    #[arg(long)]
    pub height: Option<String>,
    /// Cap on each simple-root coordinate of random heights.
    #[arg(long, default_value_t = 3)]
    pub bound: i64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Run instances outside the validity filter and record what happens.
    #[arg(long)]
    pub force: bool,
}

pub fn parse_ints(flag: &str, text: &str) -> anyhow::Result<Vec<i64>> {
    text.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| anyhow::anyhow!("--{flag}: `{t}` is not an integer")))
        .collect()
}

pub fn parse_weight(flag: &str, text: &str, rs: &RootSystem) -> anyhow::Result<Weight> {
    let v = parse_ints(flag, text)?;
    anyhow::ensure!(v.len() == rs.rank(), "--{flag} has {} coordinates, {} has rank {}", v.len(), rs.name(), rs.rank());
    Ok(Weight(v))
}

pub fn parse_height(flag: &str, text: &str, rs: &RootSystem) -> anyhow::Result<RootVector> {
    let v = parse_ints(flag, text)?;
    anyhow::ensure!(v.len() == rs.rank(), "--{flag} has {} coordinates, {} has rank {}", v.len(), rs.name(), rs.rank());
    anyhow::ensure!(v.iter().all(|&x| x >= 0), "--{flag} must be nonnegative");
    Ok(RootVector(v))
}

/// A system name or a path to a Cartan JSON document.
pub fn load_system(spec: &str) -> anyhow::Result<RootSystem> {
    if let Ok(rs) = RootSystem::named(spec) {
        return Ok(rs);
    }
    let path = FsPath::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        return Ok(RootSystem::from_json(&text)?);
    }
    anyhow::bail!("unknown root system `{spec}` (not a built-in name or a readable file)")
}
