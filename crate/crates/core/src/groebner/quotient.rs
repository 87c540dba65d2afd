use std::collections::HashMap;

use crate::groebner::{normal_form, GroebnerBasis, GroebnerError, Matrix, UniPoly};
use crate::poly::{z4_poincare_of_monomials, Monomial, PoincarePoly, Polynomial, Var};
use crate::scalar::Scalar;

/// Standard monomials of a zero-dimensional ideal: the monomials outside
/// its initial ideal, increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientBasis {
    standard_monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl QuotientBasis {
    pub fn monomials(&self) -> &[Monomial] {
        &self.standard_monomials
    }

    /// Dimension of the quotient, i.e. the degree of the ideal.
    pub fn len(&self) -> usize {
        self.standard_monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.standard_monomials.is_empty()
    }

    pub fn position(&self, m: Monomial) -> Option<usize> {
        self.index.get(&m).copied()
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.index.contains_key(&m)
    }

    pub fn graded_poincare(&self) -> PoincarePoly {
        z4_poincare_of_monomials(&self.standard_monomials)
    }

    /// Coordinates of a reduced polynomial in this basis.
    pub fn coordinates<F: Scalar>(&self, reduced: &Polynomial<F>) -> Vec<F> {
        let mut v = vec![F::zero(); self.len()];
        for (m, c) in reduced.terms() {
            let i = self
                .position(*m)
                .unwrap_or_else(|| panic!("{m} is not a standard monomial"));
            v[i] = c.clone();
        }
        v
    }

    /// Inverse of [`Self::coordinates`].
    pub fn polynomial<F: Scalar>(&self, coords: &[F]) -> Polynomial<F> {
        assert_eq!(coords.len(), self.len());
        Polynomial::from_terms(
            self.standard_monomials
                .iter()
                .zip(coords)
                .map(|(m, c)| (*m, c.clone())),
        )
    }
}

/// Enumerates standard monomials; fails when some ring variable has no
/// pure power among the leading monomials.
pub fn quotient_basis<F: Scalar>(gb: &GroebnerBasis<F>) -> Result<QuotientBasis, GroebnerError> {
    let mut bounds = [0u32; 3];
    for (slot, v) in Var::ALL.iter().enumerate() {
        if !gb.ring().contains(*v) {
            continue;
        }
        let pure = gb
            .initial_ideal()
            .iter()
            .filter(|m| m.exp(*v) == m.total_degree())
            .map(|m| m.exp(*v))
            .min();
        match pure {
            Some(e) => bounds[slot] = e,
            None => return Err(GroebnerError::InfiniteQuotient(v.symbol())),
        }
    }
    let mut standard = Vec::new();
    if !gb.is_unit_ideal() {
        for a in 0..bounds[0].max(1) {
            for b in 0..bounds[1].max(1) {
                for c in 0..bounds[2].max(1) {
                    let m = Monomial::new(a, b, c);
                    if !gb.is_leading_multiple(m) {
                        standard.push(m);
                    }
                }
            }
        }
    }
    standard.sort();
    let index = standard.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    Ok(QuotientBasis {
        standard_monomials: standard,
        index,
    })
}

pub fn graded_poincare<F: Scalar>(gb: &GroebnerBasis<F>) -> Result<PoincarePoly, GroebnerError> {
    Ok(quotient_basis(gb)?.graded_poincare())
}

/// Matrix of multiplication by `element` on a quotient, in the
/// standard-monomial basis: column `j` holds the normal form of
/// `element · m_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultOperator<F: Scalar> {
    pub matrix: Matrix<F>,
    pub element: Polynomial<F>,
}

impl<F: Scalar> MultOperator<F> {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn char_poly(&self) -> UniPoly<F> {
        self.matrix.char_poly()
    }

    pub fn commutes_with(&self, other: &MultOperator<F>) -> bool {
        &self.matrix * &other.matrix == &other.matrix * &self.matrix
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.rank() == self.dim()
    }

    /// Smallest `n ≥ 1` with `Aⁿ = 0`, if the operator is nilpotent.
    pub fn nilpotency_index(&self) -> Option<u32> {
        let n = self.dim();
        let mut power = self.matrix.clone();
        for k in 1..=n.max(1) as u32 {
            if power.is_zero() {
                return Some(k);
            }
            power = &power * &self.matrix;
        }
        None
    }
}

pub fn mult_operator<F: Scalar>(
    element: &Polynomial<F>,
    gb: &GroebnerBasis<F>,
    basis: &QuotientBasis,
) -> MultOperator<F> {
    let n = basis.len();
    let mut matrix = Matrix::zeros(n, n);
    let reduced = normal_form(element, gb);
    for (j, m) in basis.monomials().iter().enumerate() {
        let col = normal_form(&reduced.mul_monomial(*m), gb);
        for (mono, c) in col.terms() {
            let i = basis.position(*mono).expect("normal form is standard");
            matrix.set(i, j, c.clone());
        }
    }
    MultOperator {
        matrix,
        element: element.clone(),
    }
}

/// Indices of the basis grouped by ℤ/4-degree, after checking that the
/// operator maps each degree into itself.
fn graded_blocks<F: Scalar>(
    op: &MultOperator<F>,
    basis: &QuotientBasis,
) -> Result<[Vec<usize>; 4], GroebnerError> {
    if op.dim() != basis.len() {
        return Err(GroebnerError::DimensionMismatch {
            op: op.dim(),
            basis: basis.len(),
        });
    }
    let degrees: Vec<u8> = basis.monomials().iter().map(|m| m.z4_degree()).collect();
    for row in 0..op.dim() {
        for col in 0..op.dim() {
            if degrees[row] != degrees[col] && !op.matrix.get(row, col).is_zero() {
                return Err(GroebnerError::GradingMismatch { row, col });
            }
        }
    }
    let mut blocks: [Vec<usize>; 4] = Default::default();
    for (i, d) in degrees.iter().enumerate() {
        blocks[*d as usize].push(i);
    }
    Ok(blocks)
}

/// Graded dimensions of the kernel of a degree-preserving operator.
pub fn kernel_graded_dims<F: Scalar>(
    op: &MultOperator<F>,
    basis: &QuotientBasis,
) -> Result<PoincarePoly, GroebnerError> {
    let blocks = graded_blocks(op, basis)?;
    let mut coeffs = [0u64; 4];
    for (d, idx) in blocks.iter().enumerate() {
        let rank = op.matrix.select(idx, idx).rank();
        coeffs[d] = (idx.len() - rank) as u64;
    }
    Ok(PoincarePoly::new(coeffs))
}

/// Kernel plus cokernel shifted by three, the graded dimension of the
/// homology of the mapping cone of a degree-preserving operator.
pub fn mapping_cone_graded_dims<F: Scalar>(
    op: &MultOperator<F>,
    basis: &QuotientBasis,
) -> Result<PoincarePoly, GroebnerError> {
    let blocks = graded_blocks(op, basis)?;
    let mut kernel = [0u64; 4];
    let mut cokernel = [0u64; 4];
    for (d, idx) in blocks.iter().enumerate() {
        let block = op.matrix.select(idx, idx);
        let rank = block.rank();
        kernel[d] = (idx.len() - rank) as u64;
        // The cokernel is computed from the column space of the block.
        cokernel[d] = (idx.len() - block_column_rank(&block)) as u64;
    }
    Ok(PoincarePoly::new(kernel) + PoincarePoly::new(cokernel).shift(3))
}

fn block_column_rank<F: Scalar>(block: &Matrix<F>) -> usize {
    let n = block.rows();
    let mut transpose = Matrix::zeros(block.cols(), n);
    for r in 0..n {
        for c in 0..block.cols() {
            transpose.set(c, r, block.get(r, c).clone());
        }
    }
    transpose.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, buchberger_in_ring, MonomialOrder, VarSet};
    use crate::{Poly, Rational};

    fn j1() -> GroebnerBasis<Rational> {
        let gens = [Poly::alpha(), &Poly::beta() - &Poly::int(8), Poly::gamma()];
        buchberger(&gens, MonomialOrder::Lex).unwrap()
    }

    #[test]
    fn quotient_of_j1_is_one_dimensional() {
        let gb = j1();
        let basis = quotient_basis(&gb).unwrap();
        assert_eq!(basis.monomials(), &[Monomial::ONE]);
        let beta = mult_operator(&Poly::beta(), &gb, &basis);
        assert_eq!(
            beta.matrix,
            Matrix::from_rows(vec![vec![Rational::from_int(8)]])
        );
        assert_eq!(beta.char_poly(), UniPoly::linear(Rational::from_int(8)));
        let b2 = mult_operator(&(&Poly::beta().pow(2) - &Poly::int(64)), &gb, &basis);
        assert_eq!(kernel_graded_dims(&b2, &basis).unwrap(), PoincarePoly::ONE);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let gens = [Poly::alpha().pow(2), Poly::gamma()];
        let gb = buchberger_in_ring(&gens, MonomialOrder::Lex, VarSet::ALPHA_GAMMA).unwrap();
        let basis = quotient_basis(&gb).unwrap();
        let id = mult_operator(&Poly::one(), &gb, &basis);
        assert_eq!(id.matrix, Matrix::identity(2));
        assert_eq!(kernel_graded_dims(&id, &basis).unwrap(), PoincarePoly::ZERO);
        assert_eq!(
            mapping_cone_graded_dims(&id, &basis).unwrap(),
            PoincarePoly::ZERO
        );
    }

    #[test]
    fn infinite_staircase_is_reported() {
        let gb = buchberger(&[Poly::alpha(), Poly::gamma()], MonomialOrder::Lex).unwrap();
        assert_eq!(
            quotient_basis(&gb).unwrap_err(),
            GroebnerError::InfiniteQuotient("β")
        );
    }

    #[test]
    fn grading_violation_is_reported() {
        let gens = [Poly::alpha().pow(2), Poly::gamma()];
        let gb = buchberger_in_ring(&gens, MonomialOrder::Lex, VarSet::ALPHA_GAMMA).unwrap();
        let basis = quotient_basis(&gb).unwrap();
        let op = mult_operator(&Poly::alpha(), &gb, &basis);
        assert!(matches!(
            kernel_graded_dims(&op, &basis),
            Err(GroebnerError::GradingMismatch { .. })
        ));
    }

    #[test]
    fn unit_ideal_has_empty_quotient() {
        let gb = buchberger(&[Poly::one()], MonomialOrder::Lex).unwrap();
        let basis = quotient_basis(&gb).unwrap();
        assert!(basis.is_empty());
        assert_eq!(basis.graded_poincare(), PoincarePoly::ZERO);
    }
}
