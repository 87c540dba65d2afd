use crate::groebner::fglm::fglm;
use crate::groebner::ordered::{ordered_buchberger, OPoly, TermOrder};
use crate::groebner::{GroebnerBasis, GroebnerError, MonomialOrder, VarSet};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// `lcm/lt(f)·f − lcm/lt(g)·g` on leading terms of `f` and `g`.
pub fn s_polynomial<F: Scalar>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let (Some((mf, cf)), Some((mg, cg))) = (f.leading_term(), g.leading_term()) else {
        return Polynomial::zero();
    };
    let lcm = mf.lcm(mg);
    let mut s = f
        .mul_monomial(mf.divide_into(lcm).expect("lcm"))
        .scale(&(F::one() / cf));
    s.sub_scaled_shifted(&(F::one() / cg), mg.divide_into(lcm).expect("lcm"), g);
    s
}

/// Reduced Gröbner basis of the ideal generated by `generators` in
/// `ℚ[α,β,γ]`.
pub fn buchberger<F: Scalar>(
    generators: &[Polynomial<F>],
    order: MonomialOrder,
) -> Result<GroebnerBasis<F>, GroebnerError> {
    buchberger_in_ring(generators, order, VarSet::ALL)
}

fn validate<F: Scalar>(generators: &[Polynomial<F>], ring: VarSet) -> Result<(), GroebnerError> {
    if generators.is_empty() {
        return Err(GroebnerError::EmptyGenerators);
    }
    for g in generators {
        if !g.monomials().all(|m| ring.admits(m)) {
            return Err(GroebnerError::ForeignVariable(g.to_string(), ring));
        }
    }
    Ok(())
}

/// Reduced Gröbner basis of the ideal generated by `generators` inside the
/// polynomial ring on `ring`.
///
/// The basis is first computed in a weighted degree order, where these
/// ideals behave far better, and then converted to lex by linear algebra
/// on the quotient whenever that quotient is finite. Ideals with infinite
/// quotient go through Buchberger's algorithm in lex directly. The reduced
/// basis is unique, so the output does not depend on the route.
pub fn buchberger_in_ring<F: Scalar>(
    generators: &[Polynomial<F>],
    order: MonomialOrder,
    ring: VarSet,
) -> Result<GroebnerBasis<F>, GroebnerError> {
    validate(generators, ring)?;
    let graded = ordered_buchberger(generators, TermOrder::WeightedRevLex);
    match fglm(&graded, TermOrder::WeightedRevLex, ring) {
        Some(lex) => Ok(GroebnerBasis::from_reduced(lex, order, ring)),
        None => buchberger_direct(generators, order, ring),
    }
}

/// Buchberger's algorithm run in lex throughout.
///
/// Pairs are processed smallest lcm first with ties broken by index, and
/// the coprime and chain criteria discard pairs.
pub fn buchberger_direct<F: Scalar>(
    generators: &[Polynomial<F>],
    order: MonomialOrder,
    ring: VarSet,
) -> Result<GroebnerBasis<F>, GroebnerError> {
    validate(generators, ring)?;
    let polys = ordered_buchberger(generators, TermOrder::Lex);
    Ok(GroebnerBasis::from_reduced(
        polys.iter().map(OPoly::to_poly).collect(),
        order,
        ring,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use crate::{Poly, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn j1_reduces_to_linear_generators() {
        let a = Poly::alpha();
        let z2 = &(&a.pow(2) + &Poly::beta()) - &Poly::int(8);
        let z3 = Poly::from_terms([
            (Monomial::new(3, 0, 0), q(1)),
            (Monomial::new(1, 1, 0), q(5)),
            (Monomial::new(1, 0, 0), q(24)),
            (Monomial::new(0, 0, 1), q(4)),
        ]);
        let gb = buchberger(&[a.clone(), z2, z3], MonomialOrder::Lex).unwrap();
        let expect = vec![Poly::gamma(), &Poly::beta() - &Poly::int(8), a];
        assert_eq!(gb.generators(), expect.as_slice());
        assert!(gb.certify());
    }

    #[test]
    fn unit_ideal() {
        let gb = buchberger(&[Poly::one()], MonomialOrder::Lex).unwrap();
        assert!(gb.is_unit_ideal());
        let gb = buchberger(
            &[Poly::alpha(), &Poly::alpha() + &Poly::int(3)],
            MonomialOrder::Lex,
        )
        .unwrap();
        assert!(gb.is_unit_ideal());
    }

    #[test]
    fn empty_input_is_rejected() {
        assert_eq!(
            buchberger::<Rational>(&[], MonomialOrder::Lex).unwrap_err(),
            GroebnerError::EmptyGenerators
        );
    }

    #[test]
    fn ring_restriction_is_enforced() {
        let err = buchberger_in_ring(&[Poly::beta()], MonomialOrder::Lex, VarSet::ALPHA_GAMMA);
        assert!(matches!(err, Err(GroebnerError::ForeignVariable(..))));
    }

    #[test]
    fn classic_two_variable_example() {
        // (α² − γ, αγ − 1) has lex basis {γ³ − 1, α − γ²}.
        let a = Poly::alpha();
        let g = Poly::gamma();
        let f1 = &a.pow(2) - &g;
        let f2 = &(&a * &g) - &Poly::one();
        let gb = buchberger(&[f1, f2], MonomialOrder::Lex).unwrap();
        let expect = vec![&g.pow(3) - &Poly::one(), &a - &g.pow(2)];
        assert_eq!(gb.generators(), expect.as_slice());
        assert!(gb.certify());
    }

    #[test]
    fn input_order_does_not_change_the_reduced_basis() {
        let a = Poly::alpha();
        let b = Poly::beta();
        let g = Poly::gamma();
        let f = vec![
            &(&a.pow(2) * &b) - &g,
            &b.pow(2) - &(&a * &g),
            &g.pow(2) - &Poly::int(1),
        ];
        let mut rev = f.clone();
        rev.reverse();
        let x = buchberger(&f, MonomialOrder::Lex).unwrap();
        let y = buchberger(&rev, MonomialOrder::Lex).unwrap();
        assert_eq!(x, y);
        assert!(x.certify());
    }

    #[test]
    fn direct_lex_matches_order_change() {
        let a = Poly::alpha();
        let b = Poly::beta();
        let g = Poly::gamma();
        let gens = vec![
            &(&a.pow(2) + &b) - &Poly::int(8),
            &(&(&a.pow(3) + &(&a * &b).scale(&q(5))) + &a.scale(&q(24))) + &g.scale(&q(4)),
            &(&b.pow(2) - &(&a * &g)) - &Poly::int(64),
        ];
        let via = buchberger(&gens, MonomialOrder::Lex).unwrap();
        let direct = buchberger_direct(&gens, MonomialOrder::Lex, VarSet::ALL).unwrap();
        assert_eq!(via, direct);
        assert!(via.certify());
    }
}
