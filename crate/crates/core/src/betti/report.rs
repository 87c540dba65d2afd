use serde::{Deserialize, Serialize};

use crate::betti::{
    classical_poincare_assembly, collapse_mod4, critical_betti_from_kernels, epsilon,
    framed_betti_closed_form, framed_poincare_assembly, framed_poincare_linear_algebra,
    invariant_framed_closed_form, invariant_framed_dims, newstead_h, BettiError, Counts, ExactInt,
    InvariantDims, Part,
};
use crate::munoz::{expected_nilpotency, nilpotency_degree, Engine, IdealKind};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathKind {
    ClosedForm,
    Assembly,
    LinearAlgebra,
}

/// Which paths produced each group of values, and whether they agreed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub framed: Vec<PathKind>,
    pub critical: Vec<PathKind>,
    pub invariant: Vec<PathKind>,
    pub agree: bool,
    pub disagreements: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDegrees {
    pub j: usize,
    pub jplus: usize,
    pub jminus: usize,
    pub jclassical: usize,
}

/// Which engine-backed computations to run; closed forms always run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportOptions {
    pub nilpotency: bool,
    pub assembly: bool,
    pub linear_algebra: bool,
}

impl ReportOptions {
    pub fn closed_form_only() -> Self {
        Self::default()
    }

    pub fn all() -> Self {
        ReportOptions {
            nilpotency: true,
            assembly: true,
            linear_algebra: true,
        }
    }

    fn needs_engine(self) -> bool {
        self.nilpotency || self.assembly || self.linear_algebra
    }
}

/// Everything computed for one genus. Graded values are in absolute
/// labels; `*_rows` hold the two table rows after the parity shift.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusReport {
    pub genus: u32,
    pub epsilon: usize,
    pub nilpotency: Option<u32>,
    pub nilpotency_expected: u32,
    pub ideal_degrees: Option<IdealDegrees>,
    pub framed_betti: Counts,
    pub framed_betti_plus: Counts,
    pub framed_betti_minus: Counts,
    pub framed_rows: [ExactInt; 2],
    pub framed_total: ExactInt,
    pub critical_betti: Counts,
    pub critical_rows: [ExactInt; 2],
    pub critical_total: ExactInt,
    pub newstead_h: Vec<ExactInt>,
    pub invariant: InvariantDims,
    pub provenance: Provenance,
}

fn rows(counts: &Counts, eps: usize, genus: u32) -> Result<[ExactInt; 2], BettiError> {
    let (a, b) = counts.table_rows(eps).ok_or(BettiError::Inconsistent {
        what: "graded values do not pair up under the parity shift",
        genus,
    })?;
    Ok([ExactInt(a), ExactInt(b)])
}

impl GenusReport {
    pub fn build<F: Scalar>(
        engine: &Engine<F>,
        g: u32,
        options: ReportOptions,
    ) -> Result<Self, BettiError> {
        let eps = epsilon(g);
        let framed = framed_betti_closed_form(g)?;
        let h = newstead_h(g)?;
        let critical = collapse_mod4(&h).scale(2);
        let invariant = invariant_framed_closed_form(g);

        let mut prov = Provenance {
            framed: vec![PathKind::ClosedForm],
            critical: vec![PathKind::ClosedForm],
            invariant: vec![PathKind::ClosedForm],
            agree: true,
            disagreements: Vec::new(),
        };
        let compare = |prov: &mut Provenance, what: String, ok: bool| {
            if !ok {
                prov.agree = false;
                prov.disagreements.push(what);
            }
        };

        let from_kernels = critical_betti_from_kernels(g)?;
        compare(
            &mut prov,
            format!("critical: Newstead {critical} vs kernel formula {from_kernels}"),
            from_kernels == critical,
        );

        if options.assembly {
            prov.framed.push(PathKind::Assembly);
            for (part, closed) in [
                (Part::Plus, &framed.plus),
                (Part::Minus, &framed.minus),
                (Part::Both, &framed.total),
            ] {
                let got = Counts::from(framed_poincare_assembly(engine, g, part)?);
                compare(
                    &mut prov,
                    format!("framed {part:?}: assembly {got} vs closed form {closed}"),
                    &got == closed,
                );
            }
            prov.critical.push(PathKind::Assembly);
            let classical = Counts::from(classical_poincare_assembly(engine, g)?).scale(2);
            compare(
                &mut prov,
                format!("critical: classical assembly {classical} vs Newstead {critical}"),
                classical == critical,
            );
            prov.invariant.push(PathKind::Assembly);
            let inv = invariant_framed_dims(engine, g)?;
            compare(
                &mut prov,
                format!("invariant: assembly {inv:?} vs closed form {invariant:?}"),
                inv == invariant,
            );
        }
        if options.linear_algebra {
            prov.framed.push(PathKind::LinearAlgebra);
            for (part, closed) in [
                (Part::Plus, &framed.plus),
                (Part::Minus, &framed.minus),
                (Part::Both, &framed.total),
            ] {
                let got = Counts::from(framed_poincare_linear_algebra(engine, g, part)?);
                compare(
                    &mut prov,
                    format!("framed {part:?}: mapping cone {got} vs closed form {closed}"),
                    &got == closed,
                );
            }
        }

        let nilpotency = if options.nilpotency {
            Some(nilpotency_degree(engine, g)?)
        } else {
            None
        };
        let ideal_degrees = if options.needs_engine() {
            let deg = |kind| engine.ideal(kind, g).degree();
            Some(IdealDegrees {
                j: deg(IdealKind::J)?,
                jplus: deg(IdealKind::Jplus)?,
                jminus: deg(IdealKind::Jminus)?,
                jclassical: deg(IdealKind::Jclassical)?,
            })
        } else {
            None
        };

        Ok(GenusReport {
            genus: g,
            epsilon: eps,
            nilpotency,
            nilpotency_expected: expected_nilpotency(g),
            ideal_degrees,
            framed_rows: rows(&framed.total, eps, g)?,
            framed_total: ExactInt(framed.total.total()),
            framed_betti: framed.total,
            framed_betti_plus: framed.plus,
            framed_betti_minus: framed.minus,
            critical_rows: rows(&critical, eps, g)?,
            critical_total: ExactInt(critical.total()),
            critical_betti: critical,
            newstead_h: h.into_iter().map(ExactInt).collect(),
            invariant,
            provenance: prov,
        })
    }

    /// Whether every computed path agreed and the nilpotency degree, if
    /// computed, has the expected value.
    pub fn consistent(&self) -> bool {
        self.provenance.agree
            && self
                .nilpotency
                .is_none_or(|n| n == self.nilpotency_expected)
    }
}
