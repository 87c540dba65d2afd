//! Change of order for zero-dimensional ideals: from a reduced basis in
//! one order to the reduced lex basis, by linear algebra on the quotient.

use std::collections::{BTreeMap, HashMap};

use crate::groebner::ordered::{reduce_full, OPoly, TermOrder};
use crate::groebner::VarSet;
use crate::poly::{Monomial, Polynomial, Var};
use crate::scalar::Scalar;

/// Standard monomials of a basis, or `None` if some ring variable has no
/// pure power among the leading monomials.
pub(crate) fn staircase(leading: &[Monomial], ring: VarSet) -> Option<Vec<Monomial>> {
    let mut bounds = [1u32; 3];
    for (slot, v) in Var::ALL.iter().enumerate() {
        if !ring.contains(*v) {
            continue;
        }
        bounds[slot] = leading
            .iter()
            .filter(|m| m.exp(*v) == m.total_degree())
            .map(|m| m.exp(*v))
            .min()?;
    }
    let mut out = Vec::new();
    for a in 0..bounds[0] {
        for b in 0..bounds[1] {
            for c in 0..bounds[2] {
                let m = Monomial::new(a, b, c);
                if !leading.iter().any(|l| l.divides(m)) {
                    out.push(m);
                }
            }
        }
    }
    Some(out)
}

/// Sparse column vector over the quotient basis.
type Vector<F> = BTreeMap<usize, F>;

fn axpy<F: Scalar>(y: &mut Vector<F>, a: &F, x: &Vector<F>) {
    for (i, xi) in x {
        let entry = y.entry(*i).or_insert_with(F::zero);
        *entry += xi.clone() * a;
        if entry.is_zero() {
            y.remove(i);
        }
    }
}

struct Row<F> {
    pivot: usize,
    reduced: Vector<F>,
    /// `reduced = Σ combo[k] · v(s_k)` over the lex staircase found so far.
    combo: Vector<F>,
}

/// Converts a reduced basis in `from` of a zero-dimensional ideal into the
/// reduced lex basis. Returns `None` for ideals with infinite quotient.
pub(crate) fn fglm<F: Scalar>(
    basis: &[OPoly<F>],
    from: TermOrder,
    ring: VarSet,
) -> Option<Vec<Polynomial<F>>> {
    if basis.iter().any(OPoly::is_unit_constant) {
        return Some(vec![Polynomial::one()]);
    }
    let leading: Vec<Monomial> = basis.iter().map(|p| p.lead_monomial().unwrap()).collect();
    let standard = staircase(&leading, ring)?;
    let index: HashMap<Monomial, usize> =
        standard.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let coords = |p: OPoly<F>| -> Vector<F> {
        let r = reduce_full(p, basis, &leading, from);
        r.terms().map(|(m, c)| (index[&m], c.clone())).collect()
    };
    let vars: Vec<Var> = ring.vars().collect();
    // Column k of mult[v] is the normal form of v · standard[k].
    let mult: Vec<Vec<Vector<F>>> = vars
        .iter()
        .map(|v| {
            standard
                .iter()
                .map(|m| {
                    coords(OPoly::from_poly(
                        &Polynomial::monomial(m.mul(Monomial::var(*v))),
                        from,
                    ))
                })
                .collect()
        })
        .collect();

    let mut lex_leading: Vec<Monomial> = Vec::new();
    let mut result: Vec<Polynomial<F>> = Vec::new();
    let mut stair: Vec<Monomial> = Vec::new();
    let mut stair_vectors: Vec<Vector<F>> = Vec::new();
    let mut rows: Vec<Row<F>> = Vec::new();
    // Candidate monomial -> (parent staircase index, variable slot).
    let mut candidates: BTreeMap<Monomial, Option<(usize, usize)>> = BTreeMap::new();
    candidates.insert(Monomial::ONE, None);

    while let Some((m, parent)) = candidates.pop_first() {
        if lex_leading.iter().any(|l| l.divides(m)) {
            continue;
        }
        let v = match parent {
            None => coords(OPoly::from_poly(&Polynomial::one(), from)),
            Some((s, slot)) => {
                let mut out = Vector::new();
                for (k, c) in &stair_vectors[s] {
                    axpy(&mut out, c, &mult[slot][*k]);
                }
                out
            }
        };
        let new_index = stair.len();
        let mut reduced = v.clone();
        let mut combo = Vector::new();
        combo.insert(new_index, F::one());
        for row in &rows {
            let Some(x) = reduced.get(&row.pivot).cloned() else {
                continue;
            };
            let f = -(x / &row.reduced[&row.pivot]);
            axpy(&mut reduced, &f, &row.reduced);
            axpy(&mut combo, &f, &row.combo);
        }
        if reduced.is_empty() {
            // combo[new] = 1, so m + Σ_{k < new} combo[k] s_k lies in the ideal.
            let mut terms = vec![(m, F::one())];
            for (k, c) in &combo {
                if *k != new_index {
                    terms.push((stair[*k], c.clone()));
                }
            }
            result.push(Polynomial::from_terms(terms));
            lex_leading.push(m);
            continue;
        }
        let pivot = *reduced.keys().next().expect("nonzero");
        rows.push(Row {
            pivot,
            reduced,
            combo,
        });
        stair.push(m);
        stair_vectors.push(v);
        for (slot, var) in vars.iter().enumerate() {
            candidates
                .entry(m.mul(Monomial::var(*var)))
                .or_insert(Some((new_index, slot)));
        }
    }
    debug_assert_eq!(stair.len(), standard.len());
    Some(result)
}
