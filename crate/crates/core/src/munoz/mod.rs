//! Generator families, their ideals and the structural checks built on
//! top of them.

mod checks;
mod ev;
pub mod helpers;
mod ideal;
mod zeta;

pub use checks::{
    alpha_eigenvalue_check, beta_eigenvalue_check, check_lemma_memberships,
    check_lemma_proportionality, check_section5_structure, classical_parity_check,
    degree_law_check, expected_nilpotency, gamma_power_check, initial_ideal_shape_check,
    invariant_basis_check, leading_term_check, nesting_check, nilpotency_degree,
    specialization_check, unit_evaluation_check, CheckOutcome, MembershipEntry, MembershipReport,
    ProportionalityEntry, ProportionalityReport,
};
pub use ev::{ev_indices, ev_map, Evaluation};
pub use ideal::{Engine, Ideal, IdealKind};
pub use zeta::{FamilyKind, ZetaFamilies, ZetaFamily};

use crate::groebner::GroebnerError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MunozError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error("index {index} outside {}..={} at genus {genus}", range.0, range.1)]
    IndexOutOfRange {
        index: u32,
        genus: u32,
        range: (u32, u32),
    },
    #[error("genus {genus} has the wrong parity for the {family:?} family")]
    Parity { family: FamilyKind, genus: u32 },
    #[error("the {0:?} family has no evaluation maps")]
    UnsupportedFamily(FamilyKind),
    #[error("polynomial involves β")]
    InvolvesBeta,
    #[error("genus must be at least 1")]
    GenusZero,
    #[error("β² − 64 is not nilpotent modulo J_{0}")]
    NotNilpotent(u32),
}
