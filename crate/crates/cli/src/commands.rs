use std::time::Instant;

use floer_core::betti::{
    classical_poincare_assembly, critical_betti, epsilon, framed_betti_closed_form,
    framed_poincare_assembly, framed_poincare_linear_algebra, BettiError, Counts, ExactInt, Part,
};
use floer_core::munoz::{expected_nilpotency, nilpotency_degree};
use floer_core::verify::{self, Budgets, VerifyConfig};
use floer_core::{Engine, IdealKind};

use crate::args::{Format, GenusRange, PathArg, Which};
use crate::envelope::{
    GroebnerResult, NilpotencyRow, ResultEnvelope, RunConfig, Summary, TableRow, Timing,
    VerifyEntry, VERSION,
};
use crate::CliError;

/// Largest genus accepted by each command. `FLOER_MAX_GENUS` replaces
/// all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub nilpotency: u32,
    pub groebner: u32,
    pub table: u32,
    pub assembly: u32,
    pub linear_algebra: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            nilpotency: 10,
            groebner: 12,
            table: 1000,
            assembly: 10,
            linear_algebra: 8,
        }
    }
}

impl Limits {
    pub fn uniform(n: u32) -> Self {
        Limits {
            nilpotency: n,
            groebner: n,
            table: n,
            assembly: n,
            linear_algebra: n,
        }
    }

    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var("FLOER_MAX_GENUS") {
            Ok(v) => v
                .trim()
                .parse()
                .map(Limits::uniform)
                .map_err(|_| CliError::Usage(format!("FLOER_MAX_GENUS=`{v}` is not a genus"))),
            Err(_) => Ok(Limits::default()),
        }
    }
}

fn within(range: GenusRange, max: u32, what: &str) -> Result<(), CliError> {
    if range.start == 0 {
        return Err(CliError::Usage("genus must be at least 1".into()));
    }
    if range.end > max {
        return Err(CliError::Usage(format!(
            "genus {} exceeds the {what} budget of {max} (set FLOER_MAX_GENUS to change it)",
            range.end
        )));
    }
    Ok(())
}

fn engine(corrupted: bool) -> Engine {
    if corrupted {
        Engine::corrupted()
    } else {
        Engine::new()
    }
}

fn compute(e: impl std::fmt::Display) -> CliError {
    CliError::Compute(e.to_string())
}

fn envelope<T>(
    command: &str,
    config: RunConfig,
    results: Vec<T>,
    passed: usize,
    failed: usize,
    start: Instant,
) -> ResultEnvelope<T> {
    ResultEnvelope {
        version: VERSION.into(),
        command: command.into(),
        config,
        results,
        summary: Summary {
            ok: failed == 0,
            passed,
            failed,
            timing: Timing {
                wall_us: start.elapsed().as_micros() as u64,
            },
        },
    }
}

pub fn nilpotency(
    range: GenusRange,
    format: Format,
    limits: &Limits,
    corrupted: bool,
) -> Result<ResultEnvelope<NilpotencyRow>, CliError> {
    within(range, limits.nilpotency, "nilpotency")?;
    let start = Instant::now();
    let engine = engine(corrupted);
    let mut rows = Vec::new();
    for g in range.iter() {
        let degree = nilpotency_degree(&engine, g).map_err(compute)?;
        let expected = expected_nilpotency(g);
        let quotient_dim = engine.ideal(IdealKind::J, g).degree().map_err(compute)?;
        rows.push(NilpotencyRow {
            genus: g,
            degree,
            expected,
            matches: degree == expected,
            quotient_dim,
        });
    }
    let passed = rows.iter().filter(|r| r.matches).count();
    let failed = rows.len() - passed;
    let mut config = RunConfig::new(format);
    config.genus_range = Some(range);
    Ok(envelope("nilpotency", config, rows, passed, failed, start))
}

fn table_row(
    which: Which,
    g: u32,
    total: Counts,
    split: Option<(Counts, Counts)>,
) -> Result<TableRow, CliError> {
    let eps = epsilon(g);
    let (lo, hi) = total.table_rows(eps).ok_or_else(|| {
        compute(BettiError::Inconsistent {
            what: "graded values do not pair up under the parity shift",
            genus: g,
        })
    })?;
    let (plus, minus) = match split {
        Some((p, m)) => (Some(p), Some(m)),
        None => (None, None),
    };
    Ok(TableRow {
        which,
        genus: g,
        epsilon: eps,
        rows: [ExactInt(lo), ExactInt(hi)],
        total: ExactInt(total.total()),
        absolute: total,
        plus,
        minus,
    })
}

pub fn table(
    which: Which,
    range: GenusRange,
    path: PathArg,
    format: Format,
    limits: &Limits,
    corrupted: bool,
) -> Result<ResultEnvelope<TableRow>, CliError> {
    let budget = match path {
        PathArg::ClosedForm => limits.table,
        PathArg::Assembly => limits.assembly,
        PathArg::LinearAlgebra => limits.linear_algebra,
    };
    within(range, budget, "table")?;
    if which == Which::Critical && path == PathArg::LinearAlgebra {
        return Err(CliError::Usage(
            "the critical table has no linear-algebra path; use closed-form or assembly".into(),
        ));
    }
    let start = Instant::now();
    let engine = engine(corrupted);
    let mut rows = Vec::new();
    for g in range.iter() {
        let row = match (which, path) {
            (Which::Framed, PathArg::ClosedForm) => {
                let b = framed_betti_closed_form(g).map_err(compute)?;
                table_row(which, g, b.total, Some((b.plus, b.minus)))?
            }
            (Which::Framed, _) => {
                let run = |part| -> Result<Counts, CliError> {
                    let p = if path == PathArg::Assembly {
                        framed_poincare_assembly(&engine, g, part)
                    } else {
                        framed_poincare_linear_algebra(&engine, g, part)
                    };
                    p.map(Counts::from).map_err(compute)
                };
                let split = (run(Part::Plus)?, run(Part::Minus)?);
                table_row(which, g, run(Part::Both)?, Some(split))?
            }
            (Which::Critical, PathArg::ClosedForm) => {
                table_row(which, g, critical_betti(g).map_err(compute)?, None)?
            }
            (Which::Critical, _) => {
                let p = classical_poincare_assembly(&engine, g).map_err(compute)?;
                table_row(which, g, Counts::from(p).scale(2), None)?
            }
        };
        rows.push(row);
    }
    let n = rows.len();
    let mut config = RunConfig::new(format);
    config.genus_range = Some(range);
    config.which = Some(which);
    config.path = Some(path);
    Ok(envelope("table", config, rows, n, 0, start))
}

pub fn groebner(
    family: IdealKind,
    genus: u32,
    format: Format,
    limits: &Limits,
    corrupted: bool,
) -> Result<ResultEnvelope<GroebnerResult>, CliError> {
    if genus == 0 && family != IdealKind::Jminus {
        return Err(CliError::Usage(format!(
            "genus must be at least 1 for {family}"
        )));
    }
    if genus > limits.groebner {
        return Err(CliError::Usage(format!(
            "genus {genus} exceeds the groebner budget of {} (set FLOER_MAX_GENUS to change it)",
            limits.groebner
        )));
    }
    let start = Instant::now();
    let engine = engine(corrupted);
    let ideal = engine.ideal(family, genus);
    let gb = ideal.groebner().map_err(compute)?;
    let basis = ideal.quotient_basis().map_err(compute)?;
    let result = GroebnerResult {
        family,
        genus,
        ring: gb.ring().to_string(),
        order: "lex α > β > γ".into(),
        basis: gb.generators().iter().map(|p| p.to_string()).collect(),
        initial_ideal: gb.initial_ideal().iter().map(|m| m.to_string()).collect(),
        standard_monomials: basis.monomials().iter().map(|m| m.to_string()).collect(),
        degree: basis.len(),
        poincare: basis.graded_poincare(),
    };
    let mut config = RunConfig::new(format);
    config.family = Some(family);
    config.genus = Some(genus);
    Ok(envelope("groebner", config, vec![result], 1, 0, start))
}

pub fn verify(
    max_genus: Option<u32>,
    seed: u64,
    format: Format,
    corrupted: bool,
) -> Result<ResultEnvelope<VerifyEntry>, CliError> {
    let budgets = match max_genus {
        Some(0) => return Err(CliError::Usage("--max-genus must be positive".into())),
        Some(n) => Budgets::default().capped(n),
        None => Budgets::default(),
    };
    let start = Instant::now();
    let config = VerifyConfig {
        budgets,
        seed,
        corrupted,
    };
    let report = verify::run(&config);
    let passed = report.passed();
    let failed = report.failed();
    let mut entries: Vec<VerifyEntry> = Vec::new();
    for check in report.checks {
        match entries.last_mut() {
            Some(e) if e.genus == check.genus => e.checks.push(check),
            _ => entries.push(VerifyEntry {
                genus: check.genus,
                checks: vec![check],
                report: None,
            }),
        }
    }
    for r in report.reports {
        if let Some(e) = entries.iter_mut().find(|e| e.genus == r.genus) {
            e.report = Some(r);
        }
    }
    let mut run_config = RunConfig::new(format);
    run_config.seed = Some(seed);
    run_config.budgets = Some(budgets);
    Ok(envelope(
        "verify", run_config, entries, passed, failed, start,
    ))
}
