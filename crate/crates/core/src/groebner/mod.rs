//! Gröbner bases, quotient rings and multiplication operators.
//!
//! Bases are reduced and in lex order with α > β > γ; the packed
//! [`Monomial`] representation makes that order the natural integer order,
//! so polynomials already store their terms leading-first.

mod buchberger;
mod fglm;
mod linalg;
mod ordered;
mod quotient;
mod reduce;
mod univariate;

pub use buchberger::{buchberger, buchberger_direct, buchberger_in_ring, s_polynomial};
pub use linalg::Matrix;
pub use quotient::{
    graded_poincare, kernel_graded_dims, mapping_cone_graded_dims, mult_operator, quotient_basis,
    MultOperator, QuotientBasis,
};
pub use reduce::{ideal_member, normal_form};
pub use univariate::UniPoly;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{Monomial, Polynomial, Var};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("an ideal needs at least one generator")]
    EmptyGenerators,
    #[error("generator {0} uses a variable outside the ambient ring {1}")]
    ForeignVariable(String, VarSet),
    #[error("quotient is infinite dimensional: no pure power of {0} is a leading monomial")]
    InfiniteQuotient(&'static str),
    #[error("operator does not preserve the ℤ/4-grading (entry {row},{col})")]
    GradingMismatch { row: usize, col: usize },
    #[error("operator has size {op} but the basis has {basis} monomials")]
    DimensionMismatch { op: usize, basis: usize },
}

/// Monomial orders. Only lex with α > β > γ is used; on β-free ideals it
/// restricts to lex with α > γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum MonomialOrder {
    #[default]
    Lex,
}

/// The variables of the ambient polynomial ring of an ideal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VarSet(u8);

impl VarSet {
    pub const ALL: VarSet = VarSet(0b111);
    pub const ALPHA_GAMMA: VarSet = VarSet(0b101);
    pub const ALPHA: VarSet = VarSet(0b100);
    pub const GAMMA: VarSet = VarSet(0b001);

    fn bit(v: Var) -> u8 {
        match v {
            Var::Alpha => 0b100,
            Var::Beta => 0b010,
            Var::Gamma => 0b001,
        }
    }

    pub fn of(vars: &[Var]) -> Self {
        VarSet(vars.iter().map(|&v| Self::bit(v)).fold(0, |a, b| a | b))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & Self::bit(v) != 0
    }

    pub fn vars(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |&v| self.contains(v))
    }

    pub fn admits(self, m: Monomial) -> bool {
        Var::ALL.iter().all(|&v| self.contains(v) || m.exp(v) == 0)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ℚ[")?;
        for (i, v) in self.vars().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(v.symbol())?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VarSet({self})")
    }
}

/// A reduced Gröbner basis: monic generators sorted by increasing leading
/// monomial, no term of any generator divisible by another's leading
/// monomial.
#[derive(Clone)]
pub struct GroebnerBasis<F> {
    generators: Vec<Polynomial<F>>,
    leading: Vec<Monomial>,
    order: MonomialOrder,
    ring: VarSet,
    /// The generators again, stored for fast division.
    divisors: Vec<ordered::OPoly<F>>,
}

impl<F: Scalar> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.order == other.order && self.ring == other.ring
    }
}

impl<F: Scalar> Eq for GroebnerBasis<F> {}

impl<F: Scalar> GroebnerBasis<F> {
    pub(crate) fn from_reduced(
        mut generators: Vec<Polynomial<F>>,
        order: MonomialOrder,
        ring: VarSet,
    ) -> Self {
        generators.sort_by_key(|g| g.leading_monomial());
        let leading = generators
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero generator"))
            .collect();
        let divisors = generators
            .iter()
            .map(|g| ordered::OPoly::from_poly(g, ordered::TermOrder::Lex))
            .collect();
        GroebnerBasis {
            generators,
            leading,
            order,
            ring,
            divisors,
        }
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> VarSet {
        self.ring
    }

    /// Minimal generators of the initial ideal, increasing.
    pub fn initial_ideal(&self) -> &[Monomial] {
        &self.leading
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    /// Whether some leading monomial divides `m`.
    pub fn is_leading_multiple(&self, m: Monomial) -> bool {
        self.leading.iter().any(|l| l.divides(m))
    }

    pub(crate) fn divisors(&self) -> &[ordered::OPoly<F>] {
        &self.divisors
    }

    /// Checks the defining properties directly: monic, reduced, and every
    /// S-polynomial reduces to zero.
    pub fn certify(&self) -> bool {
        let monic = self
            .generators
            .iter()
            .all(|g| g.leading_coeff().is_some_and(|c| c.is_one()));
        let reduced = self.generators.iter().enumerate().all(|(i, g)| {
            g.monomials().enumerate().all(|(t, m)| {
                self.leading
                    .iter()
                    .enumerate()
                    .all(|(j, l)| (t == 0 && i == j) || !l.divides(m))
            })
        });
        let closed = (0..self.len()).all(|i| {
            (i + 1..self.len()).all(|j| {
                normal_form(
                    &s_polynomial(&self.generators[i], &self.generators[j]),
                    self,
                )
                .is_zero()
            })
        });
        monic && reduced && closed
    }
}

impl<F: Scalar> fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroebnerBasis")
            .field("ring", &self.ring)
            .field("generators", &self.generators)
            .finish()
    }
}

impl<F: Scalar> fmt::Display for GroebnerBasis<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}
