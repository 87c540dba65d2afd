//! Exact sparse polynomials in α, β, γ and ℤ/4-graded dimension counts.

mod monomial;
mod poincare;
mod polynomial;

pub use monomial::{Monomial, Var, MAX_EXPONENT};
pub use poincare::{z4_poincare_of_monomials, PoincarePoly};
pub use polynomial::Polynomial;

use serde::{Deserialize, Serialize};

/// A choice of sign, used for β ↦ ±8 and for the two summands of the
/// framed group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}
