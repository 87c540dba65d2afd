//! Exact computations in Muñoz's presentation of the instanton Floer ring
//! of a surface times a circle.
//!
//! The crate is layered bottom-up:
//!
//! * [`poly`]: sparse polynomials in α, β, γ and ℤ/4-graded dimensions;
//! * [`groebner`]: Buchberger's algorithm, normal forms, quotient bases and
//!   multiplication operators;
//! * [`munoz`]: the recursive generator families, their ideals, the
//!   nilpotency degree of β² − 64 and structural membership checks;
//! * [`betti`]: closed-form counts and the three routes to the graded
//!   dimensions of the framed group;
//! * [`verify`]: the aggregated check suite behind `floer verify`.
//!
//! All algorithms are generic over a [`Scalar`] field; the aliases below
//! pin the production choice of arbitrary precision rationals.

pub mod betti;
pub mod groebner;
pub mod munoz;
pub mod poly;
pub mod scalar;
pub mod verify;

pub use scalar::Scalar;

/// Arbitrary precision rational numbers.
pub type Rational = num_rational::BigRational;
/// Polynomials over [`Rational`].
pub type Poly = poly::Polynomial<Rational>;
/// Gröbner bases over [`Rational`].
pub type Basis = groebner::GroebnerBasis<Rational>;
/// The computation engine over [`Rational`].
pub type Engine = munoz::Engine<Rational>;

pub use groebner::{GroebnerBasis, MonomialOrder, QuotientBasis};
pub use munoz::{FamilyKind, IdealKind};
pub use poly::{Monomial, PoincarePoly, Polynomial, Sign, Var};
