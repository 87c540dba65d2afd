use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

const FIELD_BITS: u32 = 20;
const FIELD_MASK: u64 = (1 << FIELD_BITS) - 1;
const ALPHA_SHIFT: u32 = 2 * FIELD_BITS;
const BETA_SHIFT: u32 = FIELD_BITS;

/// Largest exponent a single variable may carry.
pub const MAX_EXPONENT: u32 = FIELD_MASK as u32;

/// The three ring generators, in decreasing lex priority.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    Alpha,
    Beta,
    Gamma,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Alpha, Var::Beta, Var::Gamma];

    /// Integer cohomological degree of the generator.
    pub fn degree(self) -> u32 {
        match self {
            Var::Alpha => 2,
            Var::Beta => 4,
            Var::Gamma => 6,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Var::Alpha => "α",
            Var::Beta => "β",
            Var::Gamma => "γ",
        }
    }

    fn shift(self) -> u32 {
        match self {
            Var::Alpha => ALPHA_SHIFT,
            Var::Beta => BETA_SHIFT,
            Var::Gamma => 0,
        }
    }
}

/// A monomial `α^a β^b γ^c`.
///
/// Exponents are packed into one word with α in the most significant
/// field, so the natural integer order is lex with `α > β > γ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn new(alpha: u32, beta: u32, gamma: u32) -> Self {
        assert!(
            alpha <= MAX_EXPONENT && beta <= MAX_EXPONENT && gamma <= MAX_EXPONENT,
            "exponent overflow"
        );
        Monomial(
            (u64::from(alpha) << ALPHA_SHIFT) | (u64::from(beta) << BETA_SHIFT) | u64::from(gamma),
        )
    }

    pub fn var(v: Var) -> Self {
        Monomial(1 << v.shift())
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        assert!(e <= MAX_EXPONENT, "exponent overflow");
        Monomial(u64::from(e) << v.shift())
    }

    pub fn exp(self, v: Var) -> u32 {
        ((self.0 >> v.shift()) & FIELD_MASK) as u32
    }

    pub fn alpha(self) -> u32 {
        self.exp(Var::Alpha)
    }

    pub fn beta(self) -> u32 {
        self.exp(Var::Beta)
    }

    pub fn gamma(self) -> u32 {
        self.exp(Var::Gamma)
    }

    pub fn exponents(self) -> [u32; 3] {
        [self.alpha(), self.beta(), self.gamma()]
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Integer degree with deg α = 2, deg β = 4, deg γ = 6.
    pub fn degree(self) -> u32 {
        Var::ALL.iter().map(|&v| v.degree() * self.exp(v)).sum()
    }

    /// Degree modulo 4: α and γ contribute 2, β contributes 0.
    pub fn z4_degree(self) -> u8 {
        ((2 * (self.alpha() + self.gamma())) % 4) as u8
    }

    pub fn total_degree(self) -> u32 {
        self.alpha() + self.beta() + self.gamma()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Monomial) -> Monomial {
        let out = Monomial(self.0 + other.0);
        debug_assert!(Var::ALL
            .iter()
            .all(|&v| out.exp(v) == self.exp(v) + other.exp(v)));
        out
    }

    pub fn divides(self, other: Monomial) -> bool {
        Var::ALL.iter().all(|&v| self.exp(v) <= other.exp(v))
    }

    /// `other / self`, if `self` divides `other`.
    pub fn divide_into(self, other: Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial(other.0 - self.0))
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial::new(
            self.alpha().max(other.alpha()),
            self.beta().max(other.beta()),
            self.gamma().max(other.gamma()),
        )
    }

    pub fn is_coprime(self, other: Monomial) -> bool {
        Var::ALL
            .iter()
            .all(|&v| self.exp(v) == 0 || other.exp(v) == 0)
    }

    pub fn pow(self, e: u32) -> Monomial {
        Monomial::new(self.alpha() * e, self.beta() * e, self.gamma() * e)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, v: Var, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => f.write_str(v.symbol()),
        _ => write!(f, "{}^{}", v.symbol(), e),
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for v in Var::ALL {
            write_power(f, v, self.exp(v))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.exponents().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b, c] = <[u32; 3]>::deserialize(d)?;
        if a > MAX_EXPONENT || b > MAX_EXPONENT || c > MAX_EXPONENT {
            return Err(serde::de::Error::custom("exponent overflow"));
        }
        Ok(Monomial::new(a, b, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_order_is_lex_alpha_beta_gamma() {
        let a = Monomial::var(Var::Alpha);
        let b2 = Monomial::var_pow(Var::Beta, 2);
        let g9 = Monomial::var_pow(Var::Gamma, 9);
        assert!(a > b2);
        assert!(b2 > g9);
        assert!(g9 > Monomial::ONE);
        assert!(Monomial::new(1, 0, 0) > Monomial::new(0, 7, 7));
        assert!(Monomial::new(1, 2, 0) > Monomial::new(1, 1, 5));
    }

    #[test]
    fn gradings() {
        let m = Monomial::new(1, 1, 1);
        assert_eq!(m.degree(), 12);
        assert_eq!(m.z4_degree(), 0);
        assert_eq!(Monomial::var(Var::Alpha).z4_degree(), 2);
        assert_eq!(Monomial::var(Var::Beta).z4_degree(), 0);
        assert_eq!(Monomial::var(Var::Gamma).z4_degree(), 2);
    }

    #[test]
    fn division_and_lcm() {
        let m = Monomial::new(2, 0, 1);
        let n = Monomial::new(1, 3, 1);
        assert_eq!(m.lcm(n), Monomial::new(2, 3, 1));
        assert!(!m.divides(n));
        assert_eq!(
            Monomial::new(1, 0, 1).divide_into(m),
            Some(Monomial::new(1, 0, 0))
        );
        assert!(Monomial::new(2, 0, 0).is_coprime(Monomial::new(0, 4, 1)));
        assert!(!m.is_coprime(n));
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::new(2, 0, 1).to_string(), "α^2γ");
        assert_eq!(Monomial::ONE.to_string(), "1");
    }
}
