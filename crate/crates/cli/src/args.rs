use clap::{Args, Parser, Subcommand, ValueEnum};

use permstat::tableaux::BallotWord;
use permstat::{PatternSet, Permutation, Statistic};

#[derive(Debug, Parser)]
#[command(name = "permstat", version, about = "Permutation statistics over pattern-avoidance classes")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads for sharded enumeration (default: available parallelism).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a statistic on one permutation.
    Stat(StatArgs),
    /// Generating polynomial of a statistic over Av_n.
    Poly(PolyArgs),
    /// List or count Av_n.
    Avoid(AvoidArgs),
    /// Partition pattern sets into st-Wilf classes.
    Classes(ClassesArgs),
    /// Run one of the built-in verifications.
    Verify(VerifyArgs),
    /// Print the insertion and recording tableaux of a permutation.
    Rsk(RskArgs),
    /// Apply the two-row involution to a ballot word.
    Involution(InvolutionArgs),
}

#[derive(Debug, Args)]
pub struct StatArgs {
    /// Permutation, e.g. `3,2,8,5,7,4,6,1,9` or `328574619`.
    #[arg(long)]
    pub perm: Permutation,
    #[arg(long, value_parser = parse_stat)]
    pub stat: Statistic,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long)]
    pub n: usize,
    /// Forbidden pattern; repeatable, and `132/213` adds both.
    #[arg(long, value_parser = parse_pattern_set)]
    pub avoid: Vec<PatternSet>,
    #[arg(long, value_parser = parse_stat)]
    pub stat: Statistic,
    /// Use the tableau route (only for `--avoid 321 --stat ch`).
    #[arg(long)]
    pub fast: bool,
}

#[derive(Debug, Args)]
pub struct AvoidArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_pattern_set)]
    pub avoid: Vec<PatternSet>,
    /// Only report the count.
    #[arg(long)]
    pub count: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// The six singletons of S_3.
    S3Singletons,
    /// The 2-subsets of S_3 other than {123, 321}.
    S3Pairs,
    /// All 64 subsets of S_3.
    S3All,
}

#[derive(Debug, Args)]
pub struct ClassesArgs {
    #[arg(long, default_value_t = 8)]
    pub nmax: usize,
    #[arg(long, value_parser = parse_stat)]
    pub stat: Statistic,
    /// One candidate pattern set per flag, patterns separated by `/`.
    #[arg(long, value_parser = parse_pattern_set)]
    pub avoid: Vec<PatternSet>,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Lemma1,
    Lemma2,
    Theorem3,
    Theorem4,
    Lemma5,
    Theorem8,
    Corollary9,
    Involution,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: Target,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub nmax: Option<usize>,
    /// Statistic for theorem3/theorem4 (default ch).
    #[arg(long, value_parser = parse_stat)]
    pub stat: Option<Statistic>,
}

#[derive(Debug, Args)]
pub struct RskArgs {
    #[arg(long)]
    pub perm: Permutation,
}

#[derive(Debug, Args)]
pub struct InvolutionArgs {
    /// Ballot word over {1, 2}, e.g. `1121`.
    #[arg(long)]
    pub word: BallotWord,
}

fn parse_stat(s: &str) -> Result<Statistic, String> {
    s.parse().map_err(|e: permstat::Error| e.to_string())
}

pub fn parse_pattern_set(s: &str) -> Result<PatternSet, String> {
    s.split('/')
        .map(|tok| tok.parse::<Permutation>().map_err(|e| e.to_string()))
        .collect()
}
