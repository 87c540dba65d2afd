//! Products of β − 8 and β + 8 used as multipliers in the membership
//! checks for J_r.

use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// β − 8.
pub fn beta_minus<F: Scalar>() -> Polynomial<F> {
    &Polynomial::beta() - &Polynomial::int(8)
}

/// β + 8.
pub fn beta_plus<F: Scalar>() -> Polynomial<F> {
    &Polynomial::beta() + &Polynomial::int(8)
}

/// β_r = β + (−1)^r 8.
pub fn beta_r<F: Scalar>(r: i64) -> Polynomial<F> {
    if r.rem_euclid(2) == 0 {
        beta_plus()
    } else {
        beta_minus()
    }
}

fn product<F: Scalar>(minus: i64, plus: i64) -> Polynomial<F> {
    debug_assert!(minus >= 0 && plus >= 0);
    &beta_minus::<F>().pow(minus as u32) * &beta_plus::<F>().pow(plus as u32)
}

/// φ_r = β₋^{⌊r/2⌋+1} β₊^{⌈r/2⌉}, for r ≥ 0.
pub fn phi<F: Scalar>(r: i64) -> Polynomial<F> {
    assert!(r >= 0, "phi index must be nonnegative");
    product(r / 2 + 1, (r + 1) / 2)
}

/// ψ_r = β₋^{⌊r/2⌋} β₊^{⌈r/2⌉}, for r ≥ 0.
pub fn psi<F: Scalar>(r: i64) -> Polynomial<F> {
    assert!(r >= 0, "psi index must be nonnegative");
    product(r / 2, (r + 1) / 2)
}

/// ρ_j = β₋^{2⌊(j−1)/2⌋} β₊^{j−1}, and 1 for j < 1.
pub fn rho<F: Scalar>(j: i64) -> Polynomial<F> {
    if j < 1 {
        return Polynomial::one();
    }
    product(2 * ((j - 1) / 2), j - 1)
}

/// η_j = β₋^{j−1} β₊^{j−1}, and 1 for j < 1.
pub fn eta<F: Scalar>(j: i64) -> Polynomial<F> {
    if j < 1 {
        return Polynomial::one();
    }
    product(j - 1, j - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational};

    #[test]
    fn basic_identities() {
        assert_eq!(phi::<Rational>(0), beta_minus());
        assert!(psi::<Rational>(0).is_one());
        assert!(rho::<Rational>(1).is_one());
        assert!(eta::<Rational>(1).is_one());
        for r in 0..10 {
            assert_eq!(phi::<Rational>(r + 1), &beta_r::<Rational>(r) * &phi(r));
            assert_eq!(phi::<Rational>(r), &beta_minus::<Rational>() * &psi(r));
        }
    }

    #[test]
    fn parity_relations() {
        // ρ_{2k} = ρ_{2k−1} β₊ and ρ_{2k+1} = ρ_{2k} β₋² β₊.
        for k in 1..6 {
            let bm: Poly = beta_minus();
            let bp: Poly = beta_plus();
            assert_eq!(rho::<Rational>(2 * k), &rho::<Rational>(2 * k - 1) * &bp);
            assert_eq!(
                rho::<Rational>(2 * k + 1),
                &(&rho::<Rational>(2 * k) * &bm.pow(2)) * &bp
            );
        }
    }

    #[test]
    fn rho_zero_phi_one() {
        let p = &rho::<Rational>(0) * &phi::<Rational>(1);
        assert_eq!(p, &beta_minus::<Rational>() * &beta_plus::<Rational>());
    }
}
