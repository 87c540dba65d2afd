use crate::groebner::ordered::{reduce_full, OPoly, TermOrder};
use crate::groebner::GroebnerBasis;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Remainder of `p` on division by a reduced basis: no term of the result
/// is divisible by a leading monomial of `gb`.
pub fn normal_form<F: Scalar>(p: &Polynomial<F>, gb: &GroebnerBasis<F>) -> Polynomial<F> {
    let work = OPoly::from_poly(p, TermOrder::Lex);
    reduce_full(work, gb.divisors(), gb.initial_ideal(), TermOrder::Lex).to_poly()
}

pub fn ideal_member<F: Scalar>(p: &Polynomial<F>, gb: &GroebnerBasis<F>) -> bool {
    normal_form(p, gb).is_zero()
}
