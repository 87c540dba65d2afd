use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::poly::{Monomial, Sign, Var};
use crate::scalar::Scalar;

/// Sparse polynomial in α, β, γ.
///
/// Terms are kept sorted by strictly decreasing monomial (lex α > β > γ)
/// and never carry a zero coefficient, so the zero polynomial is the
/// empty term list and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F> {
    terms: Vec<(Monomial, F)>,
}

impl<F: Scalar> Default for Polynomial<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Scalar> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(F::from_int(n))
    }

    pub fn term(m: Monomial, c: F) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, F::one())
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v))
    }

    pub fn alpha() -> Self {
        Self::var(Var::Alpha)
    }

    pub fn beta() -> Self {
        Self::var(Var::Beta)
    }

    pub fn gamma() -> Self {
        Self::var(Var::Gamma)
    }

    /// Builds the canonical form of an arbitrary term list: sorts,
    /// combines repeated monomials, drops zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, F)>>(terms: I) -> Self {
        let mut raw: Vec<(Monomial, F)> = terms.into_iter().collect();
        raw.sort_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match out.last_mut() {
                Some((last, acc)) if *last == m => *acc += c,
                _ => {
                    if let Some((_, acc)) = out.last() {
                        if acc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if matches!(out.last(), Some((_, c)) if c.is_zero()) {
            out.pop();
        }
        Polynomial { terms: out }
    }

    /// Wraps a term list that is already sorted descending with nonzero
    /// coefficients.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// True for nonzero constants.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(|(m, _)| *m)
    }

    pub fn leading_term(&self) -> Option<(Monomial, &F)> {
        self.terms.first().map(|(m, c)| (*m, c))
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|(m, _)| *m)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coeff(&self, m: Monomial) -> F {
        self.terms
            .binary_search_by(|(n, _)| m.cmp(n))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| F::zero())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, a.clone() * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(n, c)| (n.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Rescales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&(F::one() / lc)),
        }
    }

    /// `self -= c · m · q`, by a single merge pass.
    pub fn sub_scaled_shifted(&mut self, c: &F, m: Monomial, q: &Polynomial<F>) {
        if c.is_zero() || q.is_zero() {
            return;
        }
        let old = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(old.len() + q.terms.len());
        let mut left = old.into_iter().peekable();
        let mut right = q.terms.iter().map(|(n, b)| (n.mul(m), b)).peekable();
        loop {
            let ord = match (left.peek(), right.peek()) {
                (Some((a, _)), Some((b, _))) => a.cmp(b),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => out.push(left.next().unwrap()),
                Ordering::Less => {
                    let (n, b) = right.next().unwrap();
                    out.push((n, -(b.clone() * c)));
                }
                Ordering::Equal => {
                    let (n, mut a) = left.next().unwrap();
                    let (_, b) = right.next().unwrap();
                    a -= b.clone() * c;
                    if !a.is_zero() {
                        out.push((n, a));
                    }
                }
            }
        }
        self.terms = out;
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value at a point.
    pub fn evaluate(&self, alpha: &F, beta: &F, gamma: &F) -> F {
        let point = [alpha, beta, gamma];
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, x) in Var::ALL.iter().zip(point) {
                let e = m.exp(*v);
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes a constant for one variable.
    pub fn substitute(&self, v: Var, value: &F) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let e = m.exp(v);
            let reduced = Monomial::var_pow(v, e)
                .divide_into(*m)
                .expect("variable power divides monomial");
            (
                reduced,
                c.clone() * num_traits::pow(value.clone(), e as usize),
            )
        }))
    }

    /// Image under β ↦ ±8.
    pub fn specialize_beta(&self, sign: Sign) -> Self {
        self.substitute(Var::Beta, &F::from_int(8 * sign.value()))
    }

    pub fn is_free_of(&self, v: Var) -> bool {
        self.terms.iter().all(|(m, _)| m.exp(v) == 0)
    }

    /// The common ℤ/4-degree of all terms, if there is one. The zero
    /// polynomial is homogeneous of every degree and reports `None`.
    pub fn z4_degree(&self) -> Option<u8> {
        let d = self.leading_monomial()?.z4_degree();
        self.terms
            .iter()
            .all(|(m, _)| m.z4_degree() == d)
            .then_some(d)
    }

    /// The common integer degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.leading_monomial()?.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn max_exponent(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    /// Coefficient-wise conversion to another scalar type.
    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

impl<F: Scalar> From<Monomial> for Polynomial<F> {
    fn from(m: Monomial) -> Self {
        Self::monomial(m)
    }
}

fn merge_add<F: Scalar>(
    a: &[(Monomial, F)],
    b: &[(Monomial, F)],
    negate_b: bool,
) -> Vec<(Monomial, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let signed = |c: &F| if negate_b { -c.clone() } else { c.clone() };
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, signed(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let s = if negate_b {
                    a[i].1.clone() - &b[j].1
                } else {
                    a[i].1.clone() + &b[j].1
                };
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(m, c)| (*m, signed(c))));
    out
}

impl<F: Scalar> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        Polynomial::from_sorted_unchecked(merge_add(&self.terms, &rhs.terms, false))
    }
}

impl<F: Scalar> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        Polynomial::from_sorted_unchecked(merge_add(&self.terms, &rhs.terms, true))
    }
}

impl<F: Scalar> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if rhs.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return Polynomial {
                terms: self
                    .terms
                    .iter()
                    .map(|(n, a)| (n.mul(*m), a.clone() * c))
                    .collect(),
            };
        }
        Polynomial::from_terms(self.terms.iter().flat_map(|(m, a)| {
            rhs.terms
                .iter()
                .map(move |(n, b)| (m.mul(*n), a.clone() * b))
        }))
    }
}

impl<F: Scalar> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl<F: Scalar> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Self) -> Polynomial<F> {
                (&self).$method(&rhs)
            }
        }
        impl<F: Scalar> $tr<&Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                (&self).$method(rhs)
            }
        }
        impl<F: Scalar> $tr<Polynomial<F>> for &Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<F: Scalar> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(mut self) -> Polynomial<F> {
        for (_, c) in &mut self.terms {
            *c = -c.clone();
        }
        self
    }
}

impl<F: Scalar> AddAssign<&Polynomial<F>> for Polynomial<F> {
    fn add_assign(&mut self, rhs: &Polynomial<F>) {
        self.terms = merge_add(&self.terms, &rhs.terms, false);
    }
}

impl<F: Scalar> SubAssign<&Polynomial<F>> for Polynomial<F> {
    fn sub_assign(&mut self, rhs: &Polynomial<F>) {
        self.terms = merge_add(&self.terms, &rhs.terms, true);
    }
}

impl<F: Scalar> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}{m}")?;
            }
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = Polynomial<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn zeta2() -> P {
        &(&P::alpha().pow(2) + &P::beta()) - &P::int(8)
    }

    #[test]
    fn additive_inverse_cancels() {
        let a = P::alpha();
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn constant_cancellation() {
        let lhs = &zeta2() + &P::int(8);
        assert_eq!(lhs, &P::alpha().pow(2) + &P::beta());
    }

    #[test]
    fn zeta_sum() {
        let sum = &zeta2() + &P::alpha();
        let expect = P::from_terms([
            (Monomial::new(2, 0, 0), q(1)),
            (Monomial::new(1, 0, 0), q(1)),
            (Monomial::new(0, 1, 0), q(1)),
            (Monomial::ONE, q(-8)),
        ]);
        assert_eq!(sum, expect);
        assert_eq!(sum.to_string(), "α^2 + α + β - 8");
    }

    #[test]
    fn difference_of_squares() {
        let b = P::beta();
        let prod = &(&b - &P::int(8)) * &(&b + &P::int(8));
        assert_eq!(prod, &b.pow(2) - &P::int(64));
    }

    #[test]
    fn gamma_times_alpha() {
        assert_eq!(
            &P::gamma() * &P::alpha(),
            P::monomial(Monomial::new(1, 0, 1))
        );
        let z = zeta2();
        assert_eq!(&P::one() * &z, z);
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(P::alpha().evaluate(&q(4), &q(17), &q(0)), q(4));
        assert_eq!(zeta2().evaluate(&q(0), &q(8), &q(0)), q(0));
        let b2 = &P::beta().pow(2) - &P::int(64);
        assert_eq!(b2.evaluate(&q(3), &q(-8), &q(5)), q(0));
    }

    #[test]
    fn beta_specialization() {
        assert_eq!(zeta2().specialize_beta(Sign::Plus), P::alpha().pow(2));
        assert_eq!(
            zeta2().specialize_beta(Sign::Minus),
            &P::alpha().pow(2) - &P::int(16)
        );
        for s in [Sign::Plus, Sign::Minus] {
            assert_eq!(P::gamma().specialize_beta(s), P::gamma());
        }
    }

    #[test]
    fn from_terms_drops_cancelled_entries() {
        let m = Monomial::new(1, 0, 0);
        let p = P::from_terms([(m, q(2)), (Monomial::ONE, q(1)), (m, q(-2))]);
        assert_eq!(p, P::one());
        let z = P::from_terms([(m, q(3)), (m, q(-3))]);
        assert!(z.is_zero());
    }

    #[test]
    fn sub_scaled_shifted_matches_naive() {
        let mut p = zeta2();
        let q_ = &P::alpha() + &P::gamma();
        let m = Monomial::new(1, 0, 0);
        let naive = &p - &(&q_ * &P::term(m, q(3)));
        p.sub_scaled_shifted(&q(3), m, &q_);
        assert_eq!(p, naive);
    }

    #[test]
    fn pow_and_display_of_negatives() {
        let p = &P::alpha() - &P::int(1);
        assert_eq!(p.pow(2).to_string(), "α^2 - 2α + 1");
        assert_eq!((-&P::gamma()).to_string(), "-γ");
        assert_eq!(P::zero().to_string(), "0");
    }
}
