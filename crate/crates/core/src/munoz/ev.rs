use serde::Serialize;

use crate::munoz::{FamilyKind, MunozError};
use crate::poly::{Polynomial, Sign, Var};
use crate::scalar::Scalar;

/// The value of an evaluation map. The plus family evaluates at purely
/// imaginary α, so its values carry an imaginary part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Evaluation<F> {
    Real(F),
    Complex { re: F, im: F },
}

impl<F: Scalar> Evaluation<F> {
    pub fn is_zero(&self) -> bool {
        match self {
            Evaluation::Real(x) => x.is_zero(),
            Evaluation::Complex { re, im } => re.is_zero() && im.is_zero(),
        }
    }
}

/// Range of the index `j` for the evaluation maps at genus `g`.
pub fn ev_indices(g: u32, family: FamilyKind) -> Result<std::ops::RangeInclusive<u32>, MunozError> {
    match family {
        FamilyKind::Minus if g % 2 == 1 => Ok(1..=(g - 1) / 2),
        FamilyKind::Plus if g.is_multiple_of(2) && g > 0 => Ok(1..=g / 2),
        FamilyKind::Minus | FamilyKind::Plus => Err(MunozError::Parity { family, genus: g }),
        _ => Err(MunozError::UnsupportedFamily(family)),
    }
}

/// `f(±4(g−2j), 0)` for the minus family, `f(±4(g−2j)i, 0)` for the plus
/// family. `p` must not involve β.
pub fn ev_map<F: Scalar>(
    g: u32,
    j: u32,
    sign: Sign,
    family: FamilyKind,
    p: &Polynomial<F>,
) -> Result<Evaluation<F>, MunozError> {
    let range = ev_indices(g, family)?;
    if !range.contains(&j) {
        return Err(MunozError::IndexOutOfRange {
            index: j,
            genus: g,
            range: (*range.start(), *range.end()),
        });
    }
    if !p.is_free_of(Var::Beta) {
        return Err(MunozError::InvolvesBeta);
    }
    let x = F::from_int(4 * sign.value() * (g as i64 - 2 * j as i64));
    let at_gamma_zero = p.substitute(Var::Gamma, &F::zero());
    match family {
        FamilyKind::Minus => Ok(Evaluation::Real(at_gamma_zero.evaluate(
            &x,
            &F::zero(),
            &F::zero(),
        ))),
        _ => {
            let mut re = F::zero();
            let mut im = F::zero();
            for (m, c) in at_gamma_zero.terms() {
                let a = m.alpha();
                let mut v = c.clone() * num_traits::pow(x.clone(), a as usize);
                // i^a
                if a % 4 >= 2 {
                    v = -v;
                }
                if a % 2 == 0 {
                    re += v;
                } else {
                    im += v;
                }
            }
            Ok(Evaluation::Complex { re, im })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::munoz::ZetaFamily;
    use crate::{Poly, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn minus_alpha_at_genus_three() {
        let v = ev_map(3, 1, Sign::Plus, FamilyKind::Minus, &Poly::alpha()).unwrap();
        assert_eq!(v, Evaluation::Real(q(4)));
        let v = ev_map(3, 1, Sign::Minus, FamilyKind::Minus, &Poly::alpha()).unwrap();
        assert_eq!(v, Evaluation::Real(q(-4)));
    }

    #[test]
    fn minus_zeta_vanishes() {
        let fam = ZetaFamily::<Rational>::new(FamilyKind::Minus);
        for g in [3u32, 5, 7] {
            for j in 1..=(g - 1) / 2 {
                for s in Sign::BOTH {
                    let v = ev_map(g, j, s, FamilyKind::Minus, &fam.get(g as i64)).unwrap();
                    assert!(v.is_zero(), "g={g} j={j}");
                }
            }
        }
    }

    #[test]
    fn plus_zeta_vanishes() {
        let fam = ZetaFamily::<Rational>::new(FamilyKind::Plus);
        for g in [2u32, 4, 6] {
            for j in 1..=g / 2 {
                for s in Sign::BOTH {
                    let v = ev_map(g, j, s, FamilyKind::Plus, &fam.get(g as i64)).unwrap();
                    assert!(v.is_zero(), "g={g} j={j}");
                }
            }
        }
    }

    #[test]
    fn gamma_evaluates_to_zero() {
        for s in Sign::BOTH {
            assert!(ev_map(5, 2, s, FamilyKind::Minus, &Poly::gamma())
                .unwrap()
                .is_zero());
            assert!(ev_map(4, 1, s, FamilyKind::Plus, &Poly::gamma())
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn imaginary_powers() {
        // α² + 1 at α = 8i is −63; α³ at 8i is −512i.
        let p = &Poly::alpha().pow(2) + &Poly::one();
        let v = ev_map(4, 1, Sign::Plus, FamilyKind::Plus, &p).unwrap();
        assert_eq!(
            v,
            Evaluation::Complex {
                re: q(-63),
                im: q(0)
            }
        );
        let v = ev_map(4, 1, Sign::Plus, FamilyKind::Plus, &Poly::alpha().pow(3)).unwrap();
        assert_eq!(
            v,
            Evaluation::Complex {
                re: q(0),
                im: q(-512)
            }
        );
    }

    #[test]
    fn rejects_bad_input() {
        let a = Poly::alpha();
        assert!(matches!(
            ev_map(3, 2, Sign::Plus, FamilyKind::Minus, &a),
            Err(MunozError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            ev_map(3, 0, Sign::Plus, FamilyKind::Minus, &a),
            Err(MunozError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            ev_map(4, 1, Sign::Plus, FamilyKind::Minus, &a),
            Err(MunozError::Parity { .. })
        ));
        assert_eq!(
            ev_map(3, 1, Sign::Plus, FamilyKind::Minus, &Poly::beta()),
            Err(MunozError::InvolvesBeta)
        );
    }
}
