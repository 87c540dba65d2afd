use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use serde::{Deserialize, Serialize};

use crate::poly::Monomial;

/// Graded dimension vector, an element of `ℤ[t]/(t⁴ − 1)`.
///
/// `coeffs[i]` is the dimension of the summand in degree `i mod 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PoincarePoly {
    pub coeffs: [u64; 4],
}

impl PoincarePoly {
    pub const ZERO: PoincarePoly = PoincarePoly { coeffs: [0; 4] };
    pub const ONE: PoincarePoly = PoincarePoly {
        coeffs: [1, 0, 0, 0],
    };

    pub fn new(coeffs: [u64; 4]) -> Self {
        PoincarePoly { coeffs }
    }

    /// `t^k` reduced mod 4.
    pub fn t_pow(k: u64) -> Self {
        let mut coeffs = [0; 4];
        coeffs[(k % 4) as usize] = 1;
        PoincarePoly { coeffs }
    }

    /// `1 + t³`, the mapping-cone factor.
    pub fn cone_factor() -> Self {
        PoincarePoly::new([1, 0, 0, 1])
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs[i % 4]
    }

    pub fn total(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Value at t = −1.
    pub fn euler_characteristic(&self) -> i128 {
        let c = self.coeffs.map(i128::from);
        c[0] - c[1] + c[2] - c[3]
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: u64) -> Self {
        let mut coeffs = [0; 4];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(i + (k % 4) as usize) % 4] = *c;
        }
        PoincarePoly { coeffs }
    }

    pub fn scale(&self, n: u64) -> Self {
        PoincarePoly {
            coeffs: self
                .coeffs
                .map(|c| c.checked_mul(n).expect("graded dimension overflow")),
        }
    }
}

impl Add for PoincarePoly {
    type Output = PoincarePoly;
    fn add(self, rhs: Self) -> Self {
        let mut coeffs = self.coeffs;
        for (c, r) in coeffs.iter_mut().zip(rhs.coeffs) {
            *c = c.checked_add(r).expect("graded dimension overflow");
        }
        PoincarePoly { coeffs }
    }
}

impl AddAssign for PoincarePoly {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Mul for PoincarePoly {
    type Output = PoincarePoly;
    fn mul(self, rhs: Self) -> Self {
        let mut coeffs = [0u64; 4];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.checked_mul(*b).expect("graded dimension overflow");
                coeffs[(i + j) % 4] = coeffs[(i + j) % 4]
                    .checked_add(prod)
                    .expect("graded dimension overflow");
            }
        }
        PoincarePoly { coeffs }
    }
}

impl std::iter::Sum for PoincarePoly {
    fn sum<I: Iterator<Item = PoincarePoly>>(iter: I) -> Self {
        iter.fold(PoincarePoly::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for PoincarePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, *c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (i, 1) => write!(f, "t^{i}")?,
                (i, c) => write!(f, "{c}t^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Counts monomials by ℤ/4-degree.
pub fn z4_poincare_of_monomials<'a, I>(basis: I) -> PoincarePoly
where
    I: IntoIterator<Item = &'a Monomial>,
{
    let mut coeffs = [0u64; 4];
    for m in basis {
        coeffs[m.z4_degree() as usize] += 1;
    }
    PoincarePoly { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        assert_eq!(
            z4_poincare_of_monomials(&[Monomial::ONE]),
            PoincarePoly::ONE
        );
        let one_alpha = [Monomial::ONE, Monomial::new(1, 0, 0)];
        assert_eq!(
            z4_poincare_of_monomials(&one_alpha),
            PoincarePoly::new([1, 0, 1, 0])
        );
        let four = [
            Monomial::ONE,
            Monomial::new(1, 0, 0),
            Monomial::new(0, 1, 0),
            Monomial::new(0, 0, 1),
        ];
        assert_eq!(
            z4_poincare_of_monomials(&four),
            PoincarePoly::new([2, 0, 2, 0])
        );
    }

    #[test]
    fn arithmetic_is_mod_t4_minus_1() {
        let t3 = PoincarePoly::t_pow(3);
        assert_eq!(t3 * t3, PoincarePoly::t_pow(2));
        assert_eq!(PoincarePoly::t_pow(4), PoincarePoly::ONE);
        let p = PoincarePoly::new([2, 0, 2, 4]);
        assert_eq!(
            PoincarePoly::cone_factor() * p,
            PoincarePoly::new([2, 2, 6, 6])
        );
        assert_eq!(p.shift(3), PoincarePoly::new([0, 2, 4, 2]));
    }

    #[test]
    fn display() {
        assert_eq!(PoincarePoly::new([1, 0, 1, 0]).to_string(), "1 + t^2");
        assert_eq!(PoincarePoly::new([0, 1, 0, 3]).to_string(), "t + 3t^3");
        assert_eq!(PoincarePoly::ZERO.to_string(), "0");
    }
}
