//! Graded dimensions computed from the engine: sums over the primitive
//! exterior powers, each placed in degree `3k`, of data attached to the
//! ideals of lower genus.

use serde::{Deserialize, Serialize};

use crate::betti::formulas::small;
use crate::betti::{BettiError, BinomialTable, InvariantDims};
use crate::groebner::{mapping_cone_graded_dims, mult_operator};
use crate::munoz::{Engine, IdealKind};
use crate::poly::{PoincarePoly, Polynomial, Sign};
use crate::scalar::Scalar;

/// Which summand of the framed group: the cone of `β + 8`, of `β − 8`, or
/// of `β² − 64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Part {
    Plus,
    Minus,
    Both,
}

impl Part {
    pub const ALL: [Part; 3] = [Part::Plus, Part::Minus, Part::Both];

    /// The specialized ideals whose quotients give the kernel. The kernel
    /// of `β ± 8` is where β acts as `∓8`.
    fn ideals(self) -> &'static [IdealKind] {
        match self {
            Part::Plus => &[IdealKind::Jminus],
            Part::Minus => &[IdealKind::Jplus],
            Part::Both => &[IdealKind::Jplus, IdealKind::Jminus],
        }
    }

    fn operator<F: Scalar>(self) -> Polynomial<F> {
        let b = Polynomial::beta();
        match self {
            Part::Plus => &b + &Polynomial::int(8),
            Part::Minus => &b - &Polynomial::int(8),
            Part::Both => &b.pow(2) - &Polynomial::int(64),
        }
    }
}

impl From<Sign> for Part {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Plus => Part::Plus,
            Sign::Minus => Part::Minus,
        }
    }
}

/// `Σ_k dim Λ₀ᵏ · t^{3k} · term(g − k)` for `k = 0..=g`.
fn primitive_sum(
    g: u32,
    mut term: impl FnMut(u32) -> Result<PoincarePoly, BettiError>,
) -> Result<PoincarePoly, BettiError> {
    let table = BinomialTable::new(2 * g as usize);
    let mut acc = PoincarePoly::ZERO;
    for k in 0..=g {
        let mult = small(&table.primitive_dim(g, k as i64), g)?;
        acc += term(g - k)?.shift(3 * u64::from(k)).scale(mult);
    }
    Ok(acc)
}

fn check_genus(g: u32) -> Result<(), BettiError> {
    if g == 0 {
        Err(BettiError::GenusZero)
    } else {
        Ok(())
    }
}

/// Framed graded dimensions from the quotient dimensions of `J_h^±`.
pub fn framed_poincare_assembly<F: Scalar>(
    engine: &Engine<F>,
    g: u32,
    part: Part,
) -> Result<PoincarePoly, BettiError> {
    check_genus(g)?;
    let kernels = primitive_sum(g, |h| {
        let mut p = PoincarePoly::ZERO;
        for kind in part.ideals() {
            p += engine.ideal(*kind, h).graded_poincare()?;
        }
        Ok(p)
    })?;
    Ok(kernels * PoincarePoly::cone_factor())
}

/// Framed graded dimensions as the homology of the mapping cone of
/// multiplication on each summand `R/J_h`, computed by exact rank.
pub fn framed_poincare_linear_algebra<F: Scalar>(
    engine: &Engine<F>,
    g: u32,
    part: Part,
) -> Result<PoincarePoly, BettiError> {
    check_genus(g)?;
    let element = part.operator::<F>();
    primitive_sum(g, |h| {
        let ideal = engine.ideal(IdealKind::J, h);
        let gb = ideal.groebner()?;
        let basis = ideal.quotient_basis()?;
        let op = mult_operator(&element, gb, basis);
        Ok(mapping_cone_graded_dims(&op, basis)?)
    })
}

/// Single-copy mod 4 betti numbers of the framed moduli space, assembled
/// from the classical ideals.
pub fn classical_poincare_assembly<F: Scalar>(
    engine: &Engine<F>,
    g: u32,
) -> Result<PoincarePoly, BettiError> {
    check_genus(g)?;
    let kernels = primitive_sum(g, |h| {
        Ok(engine.ideal(IdealKind::Jclassical, h).graded_poincare()?)
    })?;
    Ok(kernels * PoincarePoly::cone_factor())
}

/// Invariant parts of the framed group, from the quotients `R/J_g^∓`.
pub fn invariant_framed_dims<F: Scalar>(
    engine: &Engine<F>,
    g: u32,
) -> Result<InvariantDims, BettiError> {
    check_genus(g)?;
    let cone = |kind| -> Result<PoincarePoly, BettiError> {
        Ok(engine.ideal(kind, g).graded_poincare()? * PoincarePoly::cone_factor())
    };
    let plus = cone(IdealKind::Jminus)?;
    let minus = cone(IdealKind::Jplus)?;
    Ok(InvariantDims {
        total: plus.total() + minus.total(),
        plus,
        minus,
    })
}
