use serde::{Deserialize, Serialize};

use floer_core::betti::{Counts, ExactInt, GenusReport};
use floer_core::munoz::CheckOutcome;
use floer_core::verify::Budgets;
use floer_core::{IdealKind, PoincarePoly};

use crate::args::{Format, GenusRange, PathArg, Which};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Top-level JSON document written by every command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultEnvelope<T> {
    pub version: String,
    pub command: String,
    pub config: RunConfig,
    pub results: Vec<T>,
    pub summary: Summary,
}

/// Echo of the parsed invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus_range: Option<GenusRange>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<IdealKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub which: Option<Which>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathArg>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budgets: Option<Budgets>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(format: Format) -> Self {
        RunConfig {
            genus_range: None,
            genus: None,
            family: None,
            which: None,
            path: None,
            seed: None,
            budgets: None,
            format,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub ok: bool,
    pub passed: usize,
    pub failed: usize,
    /// Wall-clock time; the only field that varies between identical runs.
    pub timing: Timing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub wall_us: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NilpotencyRow {
    pub genus: u32,
    pub degree: u32,
    pub expected: u32,
    pub matches: bool,
    pub quotient_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRow {
    pub which: Which,
    pub genus: u32,
    pub epsilon: usize,
    /// `(x_ε, x_{2+ε})`, the two table rows.
    pub rows: [ExactInt; 2],
    pub total: ExactInt,
    /// Values in absolute ℤ/4 labels.
    pub absolute: Counts,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plus: Option<Counts>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minus: Option<Counts>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroebnerResult {
    pub family: IdealKind,
    pub genus: u32,
    pub ring: String,
    pub order: String,
    pub basis: Vec<String>,
    pub initial_ideal: Vec<String>,
    pub standard_monomials: Vec<String>,
    pub degree: usize,
    pub poincare: PoincarePoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyEntry {
    pub genus: u32,
    pub checks: Vec<CheckOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<GenusReport>,
}
