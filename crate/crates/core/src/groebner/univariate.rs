use std::fmt;

use crate::scalar::Scalar;

/// Dense univariate polynomial in `x`, coefficients in increasing degree.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![F::one()])
    }

    /// `x − root`.
    pub fn linear(root: F) -> Self {
        Self::new(vec![-root, F::one()])
    }

    /// `x² + c`.
    pub fn quadratic(c: F) -> Self {
        Self::new(vec![c, F::zero(), F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::new(Vec::new()), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d].clone() / &lead;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= c.clone() * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Self::new(quot), Self::new(rem))
    }

    /// Divides out `factor` as often as it goes; returns the multiplicity
    /// and the cofactor.
    pub fn strip_factor(&self, factor: &Self) -> (u32, Self) {
        let mut mult = 0;
        let mut cur = self.clone();
        if factor.degree().unwrap_or(0) == 0 {
            return (0, cur);
        }
        loop {
            if cur.is_zero() {
                return (mult, cur);
            }
            let (q, r) = cur.div_rem(factor);
            if !r.is_zero() {
                return (mult, cur);
            }
            mult += 1;
            cur = q;
        }
    }

    /// Writes a monic polynomial as a product of the candidate factors, if
    /// possible, returning multiplicities in candidate order.
    pub fn factor_over(&self, candidates: &[Self]) -> Option<Vec<u32>> {
        let mut cur = self.clone();
        let mut mults = Vec::with_capacity(candidates.len());
        for c in candidates {
            let (m, rest) = cur.strip_factor(c);
            mults.push(m);
            cur = rest;
        }
        (cur.degree() == Some(0)).then_some(mults)
    }
}

impl<F: Scalar> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
