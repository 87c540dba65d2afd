//! Buchberger's algorithm over an explicit term order.
//!
//! Polynomials here keep their terms in increasing order of an additive
//! integer key, so the leading term is the last one and pops are cheap.

use std::collections::{BTreeSet, HashSet};

use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TermOrder {
    /// α > β > γ.
    Lex,
    /// Weighted degree with deg α = 2, deg β = 4, deg γ = 6, ties broken by
    /// reverse lex.
    WeightedRevLex,
}

impl TermOrder {
    /// An additive key: `key(m·n) = key(m) + key(n)`, increasing in the order.
    pub(crate) fn key(self, m: Monomial) -> i128 {
        let [a, b, c] = m.exponents().map(i128::from);
        match self {
            TermOrder::Lex => (a << 42) + (b << 21) + c,
            TermOrder::WeightedRevLex => (i128::from(m.degree()) << 64) - (c << 32) - b,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct OPoly<F> {
    terms: Vec<(i128, Monomial, F)>,
}

impl<F: Scalar> OPoly<F> {
    pub(crate) fn from_poly(p: &Polynomial<F>, order: TermOrder) -> Self {
        let mut terms: Vec<_> = p
            .terms()
            .iter()
            .map(|(m, c)| (order.key(*m), *m, c.clone()))
            .collect();
        terms.sort_by_key(|t| t.0);
        OPoly { terms }
    }

    pub(crate) fn to_poly(&self) -> Polynomial<F> {
        Polynomial::from_terms(self.terms.iter().map(|(_, m, c)| (*m, c.clone())))
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one()
    }

    pub(crate) fn lead(&self) -> Option<(Monomial, &F)> {
        self.terms.last().map(|(_, m, c)| (*m, c))
    }

    pub(crate) fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.last().map(|t| t.1)
    }

    pub(crate) fn terms(&self) -> impl Iterator<Item = (Monomial, &F)> {
        self.terms.iter().map(|(_, m, c)| (*m, c))
    }

    pub(crate) fn make_monic(&mut self) {
        if let Some((_, _, lc)) = self.terms.last() {
            if !lc.is_one() {
                let inv = F::one() / lc;
                for t in &mut self.terms {
                    t.2 *= &inv;
                }
            }
        }
    }

    fn pop_lead(&mut self) -> Option<(i128, Monomial, F)> {
        self.terms.pop()
    }

    /// `self −= c · shift · q`, one merge pass.
    fn sub_scaled_shifted(&mut self, c: &F, shift: Monomial, shift_key: i128, q: &OPoly<F>) {
        let old = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(old.len() + q.terms.len());
        let mut left = old.into_iter().peekable();
        let mut right = q.terms.iter().peekable();
        loop {
            let take_left = match (left.peek(), right.peek()) {
                (Some(a), Some(b)) => {
                    let kb = b.0 + shift_key;
                    if a.0 == kb {
                        let (k, m, mut x) = left.next().unwrap();
                        let (_, _, y) = right.next().unwrap();
                        x -= y.clone() * c;
                        if !x.is_zero() {
                            out.push((k, m, x));
                        }
                        continue;
                    }
                    a.0 < kb
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if take_left {
                out.push(left.next().unwrap());
            } else {
                let (k, m, y) = right.next().unwrap();
                out.push((k + shift_key, m.mul(shift), -(y.clone() * c)));
            }
        }
        self.terms = out;
    }

    fn shifted(&self, shift: Monomial, shift_key: i128) -> OPoly<F> {
        OPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, m, c)| (k + shift_key, m.mul(shift), c.clone()))
                .collect(),
        }
    }
}

/// Full reduction of `p` by `divisors`, whose leading monomials are
/// `leading`. Divisors are tried in list order.
pub(crate) fn reduce_full<F: Scalar>(
    mut work: OPoly<F>,
    divisors: &[OPoly<F>],
    leading: &[Monomial],
    order: TermOrder,
) -> OPoly<F> {
    let mut remainder = Vec::new();
    while let Some((m, c)) = work.lead() {
        match leading.iter().position(|l| l.divides(m)) {
            Some(i) => {
                let g = &divisors[i];
                let shift = leading[i].divide_into(m).expect("divisor");
                let lc = g.lead().expect("nonzero divisor").1;
                let factor = if lc.is_one() {
                    c.clone()
                } else {
                    c.clone() / lc
                };
                // The leading terms cancel exactly; drop both up front.
                work.pop_lead();
                let mut tail = g.clone();
                tail.pop_lead();
                work.sub_scaled_shifted(&factor, shift, order.key(shift), &tail);
            }
            None => remainder.push(work.pop_lead().expect("nonzero")),
        }
    }
    remainder.reverse();
    OPoly { terms: remainder }
}

fn s_polynomial<F: Scalar>(f: &OPoly<F>, g: &OPoly<F>, order: TermOrder) -> OPoly<F> {
    let (mf, cf) = f.lead().expect("nonzero");
    let (mg, cg) = g.lead().expect("nonzero");
    let lcm = mf.lcm(mg);
    let sf = mf.divide_into(lcm).expect("lcm");
    let sg = mg.divide_into(lcm).expect("lcm");
    let mut s = f.shifted(sf, order.key(sf));
    let inv = F::one() / cf;
    for t in &mut s.terms {
        t.2 *= &inv;
    }
    s.pop_lead();
    let mut tail = g.clone();
    tail.pop_lead();
    s.sub_scaled_shifted(&(F::one() / cg), sg, order.key(sg), &tail);
    s
}

struct State<F> {
    order: TermOrder,
    basis: Vec<OPoly<F>>,
    leading: Vec<Monomial>,
    queue: BTreeSet<(i128, usize, usize)>,
    pending: HashSet<(usize, usize)>,
}

impl<F: Scalar> State<F> {
    fn push(&mut self, mut poly: OPoly<F>) {
        poly.make_monic();
        let lm = poly.lead_monomial().expect("nonzero");
        let j = self.basis.len();
        for (i, &li) in self.leading.iter().enumerate() {
            self.queue.insert((self.order.key(li.lcm(lm)), i, j));
            self.pending.insert((i, j));
        }
        self.basis.push(poly);
        self.leading.push(lm);
    }

    /// Chain criterion: a third leading monomial divides the lcm and both
    /// companion pairs are already settled.
    fn chain_criterion(&self, i: usize, j: usize, lcm: Monomial) -> bool {
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        self.leading.iter().enumerate().any(|(k, lk)| {
            k != i
                && k != j
                && lk.divides(lcm)
                && !self.pending.contains(&key(i, k))
                && !self.pending.contains(&key(j, k))
        })
    }

    fn reduce(&self, p: OPoly<F>) -> OPoly<F> {
        reduce_full(p, &self.basis, &self.leading, self.order)
    }
}

/// Reduced Gröbner basis in `order`, monic, sorted by increasing leading
/// monomial in that order. The unit ideal gives `[1]`.
pub(crate) fn ordered_buchberger<F: Scalar>(
    generators: &[Polynomial<F>],
    order: TermOrder,
) -> Vec<OPoly<F>> {
    let mut state = State {
        order,
        basis: Vec::new(),
        leading: Vec::new(),
        queue: BTreeSet::new(),
        pending: HashSet::new(),
    };
    let unit = || vec![OPoly::from_poly(&Polynomial::one(), order)];
    for g in generators {
        let h = state.reduce(OPoly::from_poly(g, order));
        if h.is_zero() {
            continue;
        }
        if h.is_unit_constant() {
            return unit();
        }
        state.push(h);
    }
    while let Some((_, i, j)) = state.queue.pop_first() {
        state.pending.remove(&(i, j));
        let (li, lj) = (state.leading[i], state.leading[j]);
        if li.is_coprime(lj) || state.chain_criterion(i, j, li.lcm(lj)) {
            continue;
        }
        let s = s_polynomial(&state.basis[i], &state.basis[j], order);
        let h = state.reduce(s);
        if h.is_zero() {
            continue;
        }
        if h.is_unit_constant() {
            return unit();
        }
        state.push(h);
    }
    interreduce(state.basis, state.leading, order)
}

fn interreduce<F: Scalar>(
    basis: Vec<OPoly<F>>,
    leading: Vec<Monomial>,
    order: TermOrder,
) -> Vec<OPoly<F>> {
    // Keep one polynomial per minimal leading monomial, the earliest on ties.
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len()).any(|j| {
                j != i && leading[j].divides(leading[i]) && (leading[j] != leading[i] || j < i)
            })
        })
        .collect();
    let mut polys: Vec<OPoly<F>> = keep.iter().map(|&i| basis[i].clone()).collect();
    let lms: Vec<Monomial> = keep.iter().map(|&i| leading[i]).collect();
    for i in 0..polys.len() {
        let mut tail = polys[i].clone();
        let lead = tail.pop_lead().expect("nonzero");
        let (others, other_lms): (Vec<_>, Vec<_>) = polys
            .iter()
            .zip(&lms)
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, (p, m))| (p.clone(), *m))
            .unzip();
        let mut reduced = reduce_full(tail, &others, &other_lms, order);
        reduced.terms.push(lead);
        reduced.make_monic();
        polys[i] = reduced;
    }
    polys.sort_by_key(|p| order.key(p.lead_monomial().expect("nonzero")));
    polys
}
