//! Betti numbers of the framed instanton group and of the critical set.
//!
//! Three routes lead to the framed numbers: closed formulas, assembly from
//! the quotient dimensions of the specialized ideals, and the mapping cone
//! of multiplication by `β² − 64` on the assembled ring. All graded values
//! are stored in absolute ℤ/4 labels; the parity shift used for tables is
//! applied only by [`Counts::table_rows`].

mod assembly;
mod binomial;
mod formulas;
mod report;

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use assembly::{
    classical_poincare_assembly, framed_poincare_assembly, framed_poincare_linear_algebra,
    invariant_framed_dims, Part,
};
pub use binomial::BinomialTable;
pub use formulas::{
    collapse_mod4, critical_betti, critical_betti_from_kernels, epsilon, framed_betti_closed_form,
    framed_total_closed_form, invariant_framed_closed_form, invariant_total_closed_form,
    kernel_counts_closed_form, newstead_h, poincare_ng, s_func, signed_poincare_closed_form,
    FramedBetti, InvariantDims, KernelCounts,
};
pub use report::{GenusReport, IdealDegrees, PathKind, Provenance, ReportOptions};

use crate::groebner::GroebnerError;
use crate::munoz::MunozError;
use crate::poly::PoincarePoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BettiError {
    #[error("genus must be at least 1")]
    GenusZero,
    #[error("P_t(N^{genus}) division left a remainder")]
    InexactDivision { genus: u32 },
    #[error("{quantity} at genus {genus} evaluated to {value}, not a natural number")]
    NonIntegral {
        quantity: &'static str,
        genus: u32,
        value: String,
    },
    #[error("genus {genus}: {what}")]
    Inconsistent { what: &'static str, genus: u32 },
    #[error("count at genus {genus} does not fit in 64 bits")]
    Overflow { genus: u32 },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Munoz(#[from] MunozError),
}

/// Four exact counts indexed by ℤ/4 degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Counts(pub [BigInt; 4]);

impl Counts {
    pub fn zero() -> Self {
        Counts(Default::default())
    }

    pub fn from_u64(xs: [u64; 4]) -> Self {
        Counts(xs.map(BigInt::from))
    }

    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn euler_characteristic(&self) -> BigInt {
        &self.0[0] - &self.0[1] + &self.0[2] - &self.0[3]
    }

    pub fn scale(&self, n: u64) -> Self {
        Counts(self.0.clone().map(|x| x * n))
    }

    /// Product with `1 + t³`: kernel plus cokernel of a degree-0 map.
    pub fn cone(&self) -> Self {
        Counts(std::array::from_fn(|i| &self.0[i] + &self.0[(i + 1) % 4]))
    }

    /// Entries `≥` the other's in every degree.
    pub fn dominates(&self, other: &Counts) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// The two rows of the tables: `(x_ε, x_{2+ε})`, provided
    /// `x_ε = x_{1+ε}` and `x_{2+ε} = x_{3+ε}`.
    pub fn table_rows(&self, epsilon: usize) -> Option<(BigInt, BigInt)> {
        let at = |i: usize| &self.0[(i + epsilon) % 4];
        (at(0) == at(1) && at(2) == at(3)).then(|| (at(0).clone(), at(2).clone()))
    }

    pub fn to_poincare(&self) -> Option<PoincarePoly> {
        let mut coeffs = [0u64; 4];
        for (c, x) in coeffs.iter_mut().zip(&self.0) {
            *c = x.to_u64()?;
        }
        Some(PoincarePoly::new(coeffs))
    }
}

impl From<PoincarePoly> for Counts {
    fn from(p: PoincarePoly) -> Self {
        Counts::from_u64(p.coeffs)
    }
}

impl Add for Counts {
    type Output = Counts;
    fn add(self, rhs: Counts) -> Counts {
        let [a, b, c, d] = self.0;
        let [w, x, y, z] = rhs.0;
        Counts([a + w, b + x, c + y, d + z])
    }
}

impl fmt::Display for Counts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.0;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

impl Serialize for Counts {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let wrapped: Vec<ExactInt> = self.0.iter().cloned().map(ExactInt).collect();
        wrapped.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Counts {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v: Vec<ExactInt> = Vec::deserialize(d)?;
        let arr: [ExactInt; 4] = v
            .try_into()
            .map_err(|_| serde::de::Error::custom("expected four counts"))?;
        Ok(Counts(arr.map(|x| x.0)))
    }
}

/// Largest integer magnitude that survives a round trip through an IEEE
/// double.
pub const SAFE_INTEGER: u64 = (1 << 53) - 1;

/// An exact integer that serializes as a JSON number when it is within
/// ±(2⁵³ − 1) and as a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactInt(pub BigInt);

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) if v.unsigned_abs() <= SAFE_INTEGER => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for ExactInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl serde::de::Visitor<'_> for Visitor {
            type Value = ExactInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<ExactInt, E> {
                Ok(ExactInt(v.into()))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<ExactInt, E> {
                Ok(ExactInt(v.into()))
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<ExactInt, E> {
                v.parse().map(ExactInt).map_err(E::custom)
            }
        }
        d.deserialize_any(Visitor)
    }
}

impl From<BigInt> for ExactInt {
    fn from(x: BigInt) -> Self {
        ExactInt(x)
    }
}

impl ExactInt {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cone_is_multiplication_by_one_plus_t_cubed() {
        let k = Counts::from_u64([1, 2, 3, 4]);
        let p = PoincarePoly::new([1, 2, 3, 4]) * PoincarePoly::cone_factor();
        assert_eq!(k.cone(), Counts::from(p));
    }

    #[test]
    fn table_rows_apply_the_parity_shift() {
        let b = Counts::from_u64([1, 0, 0, 1]);
        assert_eq!(b.table_rows(1), Some((0.into(), 1.into())));
        assert_eq!(b.table_rows(0), None);
    }
}
