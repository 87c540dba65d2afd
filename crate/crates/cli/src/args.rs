use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use floer_core::IdealKind;
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(
    name = "floer",
    version,
    about = "Exact computations in the instanton Floer ring of a surface times a circle"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Swap in an engine with a broken recursion (harness self-test).
    #[arg(long, global = true, hide = true)]
    pub corrupt_recursion: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smallest n with (β² − 64)ⁿ in J_g, per genus.
    Nilpotency {
        #[arg(long, value_name = "A..B")]
        genus_range: GenusRange,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Mod 4 betti numbers of the framed group or of the critical set.
    Table {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_name = "A..B")]
        genus_range: GenusRange,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// How the numbers are computed.
        #[arg(long, value_enum, default_value_t = PathArg::ClosedForm)]
        path: PathArg,
    },
    /// Reduced lex Gröbner basis and quotient data of one ideal.
    Groebner {
        #[arg(long, value_parser = parse_family, value_name = "J|Jplus|Jminus|Jclassical")]
        family: IdealKind,
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the full check suite.
    Verify {
        /// Cap every per-check genus budget at N.
        #[arg(long, value_name = "N", env = "FLOER_MAX_GENUS")]
        max_genus: Option<u32>,
        /// Seed for the sampled checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Framed,
    Critical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathArg {
    ClosedForm,
    Assembly,
    LinearAlgebra,
}

fn parse_family(s: &str) -> Result<IdealKind, String> {
    let kind: IdealKind = s.parse()?;
    match kind {
        IdealKind::J | IdealKind::Jplus | IdealKind::Jminus | IdealKind::Jclassical => Ok(kind),
        _ => Err(format!("`{s}` is not one of J, Jplus, Jminus, Jclassical")),
    }
}

/// Inclusive genus range written `A..B`, `A..=B` or `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusRange {
    pub start: u32,
    pub end: u32,
}

impl GenusRange {
    pub fn iter(self) -> impl Iterator<Item = u32> {
        self.start..=self.end
    }
}

impl fmt::Display for GenusRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

impl FromStr for GenusRange {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("`{t}` is not a genus"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let g = num(s)?;
                (g, g)
            }
        };
        if start > end {
            return Err(format!("empty range {start}..{end}"));
        }
        Ok(GenusRange { start, end })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("1..4".parse(), Ok(GenusRange { start: 1, end: 4 }));
        assert_eq!("2..=3".parse(), Ok(GenusRange { start: 2, end: 3 }));
        assert_eq!("6".parse(), Ok(GenusRange { start: 6, end: 6 }));
        assert!("4..1".parse::<GenusRange>().is_err());
        assert!("a..b".parse::<GenusRange>().is_err());
    }

    #[test]
    fn families() {
        assert_eq!(parse_family("Jplus"), Ok(IdealKind::Jplus));
        assert!(parse_family("Iplus").is_err());
    }
}
