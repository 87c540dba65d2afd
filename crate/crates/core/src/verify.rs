//! The aggregated check suite: every structural and numerical invariant,
//! run per genus within configurable budgets.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{
    framed_total_closed_form, invariant_total_closed_form, s_func, BettiError, BinomialTable,
    GenusReport, ReportOptions,
};
use crate::munoz::{
    alpha_eigenvalue_check, beta_eigenvalue_check, check_lemma_memberships,
    check_lemma_proportionality, check_section5_structure, classical_parity_check,
    degree_law_check, gamma_power_check, initial_ideal_shape_check, invariant_basis_check,
    leading_term_check, nesting_check, specialization_check, unit_evaluation_check, CheckOutcome,
    Engine,
};
use crate::poly::Sign;
use crate::scalar::Scalar;

/// Reference rows `(x_ε, x_{2+ε})` and totals for genus 1 to 8.
pub mod reference {
    /// Framed rows. The g = 4 lower row is 83: with the total 428 nothing
    /// else is possible.
    pub const FRAMED_ROWS: [(u64, u64); 8] = [
        (0, 1),
        (2, 6),
        (29, 15),
        (131, 83),
        (409, 575),
        (1902, 2486),
        (10646, 8554),
        (45275, 37659),
    ];
    pub const FRAMED_TOTALS: [u64; 8] = [2, 16, 88, 428, 1968, 8776, 38400, 165868];
    pub const CRITICAL_ROWS: [(u64, u64); 8] = [
        (0, 2),
        (2, 10),
        (44, 16),
        (188, 92),
        (464, 796),
        (2188, 3356),
        (14104, 9920),
        (59096, 43864),
    ];
    pub const CRITICAL_TOTALS: [u64; 8] = [4, 24, 120, 560, 2520, 11088, 48048, 205920];
}

/// Largest genus for each family of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    pub nilpotency: u32,
    pub tables: u32,
    pub assembly: u32,
    pub linear_algebra: u32,
    pub identities: u32,
    pub s_identity: u32,
    pub memberships: u32,
    pub proportionality: u32,
    pub structure: u32,
    pub eigenvalues: u32,
    pub ring: u32,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            nilpotency: 6,
            tables: 8,
            assembly: 6,
            linear_algebra: 5,
            identities: 10,
            s_identity: 12,
            memberships: 6,
            proportionality: 5,
            structure: 8,
            eigenvalues: 6,
            ring: 6,
        }
    }
}

impl Budgets {
    /// Every budget set to at most `n`.
    pub fn capped(self, n: u32) -> Self {
        Budgets {
            nilpotency: self.nilpotency.min(n),
            tables: self.tables.min(n),
            assembly: self.assembly.min(n),
            linear_algebra: self.linear_algebra.min(n),
            identities: self.identities.min(n),
            s_identity: self.s_identity.min(n),
            memberships: self.memberships.min(n),
            proportionality: self.proportionality.min(n),
            structure: self.structure.min(n),
            eigenvalues: self.eigenvalues.min(n),
            ring: self.ring.min(n),
        }
    }

    fn max(self) -> u32 {
        [
            self.nilpotency,
            self.tables,
            self.assembly,
            self.linear_algebra,
            self.identities,
            self.s_identity,
            self.memberships,
            self.proportionality,
            self.structure,
            self.eigenvalues,
            self.ring,
        ]
        .into_iter()
        .max()
        .unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub struct VerifyConfig {
    pub budgets: Budgets,
    pub seed: u64,
    /// Run against an engine with a deliberately broken recursion.
    #[serde(skip)]
    pub corrupted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
    pub reports: Vec<GenusReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn run(config: &VerifyConfig) -> VerifyReport {
    let engine: Engine<crate::Rational> = if config.corrupted {
        Engine::corrupted()
    } else {
        Engine::new()
    };
    run_with(&engine, config)
}

pub fn run_with<F: Scalar>(engine: &Engine<F>, config: &VerifyConfig) -> VerifyReport {
    let b = config.budgets;
    let per_genus: Vec<(Vec<CheckOutcome>, Option<GenusReport>)> = (1..=b.max())
        .into_par_iter()
        .map(|g| genus_suite(engine, g, config))
        .collect();
    let mut checks = Vec::new();
    let mut reports = Vec::new();
    for (c, r) in per_genus {
        checks.extend(c);
        reports.extend(r);
    }
    checks.sort_by(|x, y| (x.genus, &x.name).cmp(&(y.genus, &y.name)));
    reports.sort_by_key(|r| r.genus);
    VerifyReport { checks, reports }
}

fn outcome(name: &str, g: u32, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome::new(name, g, passed, detail)
}

fn report_checks(r: &GenusReport, b: &Budgets, out: &mut Vec<CheckOutcome>) {
    let g = r.genus;
    let agree_detail = if r.provenance.disagreements.is_empty() {
        format!("paths {:?}", r.provenance.framed)
    } else {
        r.provenance.disagreements.join("; ")
    };
    out.push(outcome(
        "betti.paths_agree",
        g,
        r.provenance.agree,
        agree_detail,
    ));
    if let Some(n) = r.nilpotency {
        out.push(outcome(
            "nilpotency",
            g,
            n == r.nilpotency_expected,
            format!("degree {n}, expected {}", r.nilpotency_expected),
        ));
    }
    let split = r.framed_betti_plus.clone() + r.framed_betti_minus.clone() == r.framed_betti;
    out.push(outcome(
        "betti.signed_split",
        g,
        split,
        format!("{}", r.framed_betti),
    ));
    let chi = r.framed_betti.euler_characteristic();
    out.push(outcome(
        "betti.euler_zero",
        g,
        chi == BigInt::from(0),
        format!("χ = {chi}"),
    ));
    if g <= b.identities {
        let want = framed_total_closed_form(g);
        out.push(outcome(
            "betti.total_dimension",
            g,
            r.framed_total.0 == want,
            format!("{} vs {want}", r.framed_total.0),
        ));
        let h = &r.newstead_h;
        let symmetric = h.iter().eq(h.iter().rev());
        let sum: BigInt = h.iter().map(|x| x.0.clone()).sum();
        let want = BinomialTable::new(2 * g as usize).get(2 * g as i64, g as i64) * g;
        out.push(outcome(
            "newstead.symmetry_and_rank",
            g,
            symmetric && sum == want,
            format!("symmetric {symmetric}, rank {sum}, expected {want}"),
        ));
    }
    if g <= b.tables {
        let inv = invariant_total_closed_form(g);
        out.push(outcome(
            "invariant.total",
            g,
            r.invariant.total == inv,
            format!("{} vs {inv}", r.invariant.total),
        ));
        out.push(outcome(
            "betti.rank_inequality",
            g,
            r.critical_betti.dominates(&r.framed_betti),
            format!("{} ≥ {}", r.critical_betti, r.framed_betti),
        ));
        if let Some(i) = (g as usize).checked_sub(1).filter(|i| *i < 8) {
            let table = |name: &str,
                         rows: &[crate::betti::ExactInt; 2],
                         total,
                         want: (u64, u64),
                         want_total: u64| {
                let got = (rows[0].0.clone(), rows[1].0.clone());
                let ok =
                    got == (want.0.into(), want.1.into()) && total == &BigInt::from(want_total);
                outcome(name, g, ok, format!("({}, {}) total {total}", got.0, got.1))
            };
            out.push(table(
                "table.framed",
                &r.framed_rows,
                &r.framed_total.0,
                reference::FRAMED_ROWS[i],
                reference::FRAMED_TOTALS[i],
            ));
            out.push(table(
                "table.critical",
                &r.critical_rows,
                &r.critical_total.0,
                reference::CRITICAL_ROWS[i],
                reference::CRITICAL_TOTALS[i],
            ));
        }
    }
}

fn genus_suite<F: Scalar>(
    engine: &Engine<F>,
    g: u32,
    config: &VerifyConfig,
) -> (Vec<CheckOutcome>, Option<GenusReport>) {
    let b = &config.budgets;
    let mut out = Vec::new();

    let mut report = None;
    if g <= b.tables.max(b.identities).max(b.nilpotency).max(b.assembly) {
        let options = ReportOptions {
            nilpotency: g <= b.nilpotency,
            assembly: g <= b.assembly,
            linear_algebra: g <= b.linear_algebra,
        };
        match GenusReport::build(engine, g, options) {
            Ok(r) => {
                report_checks(&r, b, &mut out);
                report = Some(r);
            }
            Err(e) => out.push(betti_error("betti.report", g, e)),
        }
    }

    if g <= b.s_identity {
        let sum = s_func(0, g) + s_func(2, g);
        let (want, form) = if g % 2 == 1 {
            (BigInt::from(1) << (2 * g - 2), "2^(2g-2)")
        } else {
            let mid = BinomialTable::new(2 * g as usize).get(2 * g as i64, g as i64);
            (
                ((BigInt::from(1) << (2 * g - 1)) - mid) / 2,
                "(2^(2g-1) - C(2g,g))/2",
            )
        };
        out.push(outcome(
            "s.partial_sum_identity",
            g,
            sum == want,
            format!("s0 + s2 = {sum}, {form} = {want}"),
        ));
    }

    if g <= b.memberships {
        out.push(match check_lemma_memberships(engine, g) {
            Ok(rep) => outcome(
                "memberships",
                g,
                rep.passed(),
                format!(
                    "{} indices, failing {:?}",
                    rep.entries.len(),
                    rep.failures()
                ),
            ),
            Err(e) => outcome("memberships", g, false, format!("error: {e}")),
        });
    }
    if g % 2 == 1 && g <= b.proportionality {
        out.push(match check_lemma_proportionality(engine, g) {
            Ok(rep) => {
                let constants: Vec<String> = rep
                    .entries
                    .iter()
                    .map(|e| e.constant.clone().unwrap_or_else(|| "none".into()))
                    .collect();
                outcome("proportionality", g, rep.passed(), constants.join(", "))
            }
            Err(e) => outcome("proportionality", g, false, format!("error: {e}")),
        });
    }

    if g <= b.structure {
        out.extend(check_section5_structure(engine, g, config.seed));
        for sign in Sign::BOTH {
            out.push(degree_law_check(engine, sign, g));
        }
        if g.is_multiple_of(2) {
            out.push(initial_ideal_shape_check(engine, Sign::Minus, g));
        } else {
            out.push(initial_ideal_shape_check(engine, Sign::Plus, g));
        }
        out.push(classical_parity_check(engine, g));
    }

    if g <= b.eigenvalues {
        out.push(beta_eigenvalue_check(engine, g));
        let sign = if g % 2 == 1 { Sign::Minus } else { Sign::Plus };
        out.push(alpha_eigenvalue_check(engine, sign, g));
        out.push(unit_evaluation_check(engine, sign, g, config.seed, 16));
    }

    if g <= b.ring {
        out.push(gamma_power_check(engine, g, true));
        out.push(leading_term_check(engine, g));
        out.push(specialization_check(engine, g));
        out.push(nesting_check(engine, g));
        out.push(invariant_basis_check(engine, g));
    }
    (out, report)
}

fn betti_error(name: &str, g: u32, e: BettiError) -> CheckOutcome {
    outcome(name, g, false, format!("error: {e}"))
}
