use floer_core::groebner::{
    buchberger_direct, buchberger_in_ring, ideal_member, normal_form, VarSet,
};
use floer_core::{Engine, FamilyKind, IdealKind, Monomial, MonomialOrder, Poly, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

const SIDE: usize = 4;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (0..SIDE as u32, 0..SIDE as u32, 0..SIDE as u32).prop_map(|(a, b, c)| Monomial::new(a, b, c))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((monomial(), rational()), 0..6).prop_map(Poly::from_terms)
}

/// Polynomials in α and γ only, of low degree, for Gröbner computations.
fn small_ag_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(((0..3u32, 0..2u32), -3i64..=3), 1..4).prop_map(|terms| {
        Poly::from_terms(
            terms
                .into_iter()
                .map(|((a, c), k)| (Monomial::new(a, 0, c), Rational::from_integer(k.into()))),
        )
    })
}

fn homogeneous(z4: u8) -> impl Strategy<Value = Poly> {
    prop::collection::vec((monomial(), rational()), 0..6).prop_map(move |terms| {
        Poly::from_terms(terms.into_iter().filter(|(m, _)| m.z4_degree() == z4))
    })
}

/// Dense coefficient cube indexed by exponents, the reference model for
/// ring arithmetic.
#[derive(Debug, Clone, PartialEq)]
struct Dense {
    side: usize,
    c: Vec<Rational>,
}

impl Dense {
    fn zero(side: usize) -> Self {
        Dense {
            side,
            c: vec![Rational::zero(); side * side * side],
        }
    }

    fn idx(&self, a: usize, b: usize, g: usize) -> usize {
        (a * self.side + b) * self.side + g
    }

    fn from_poly(p: &Poly, side: usize) -> Self {
        let mut d = Dense::zero(side);
        for (m, c) in p.terms() {
            let i = d.idx(m.alpha() as usize, m.beta() as usize, m.gamma() as usize);
            d.c[i] += c;
        }
        d
    }

    fn mul(&self, other: &Dense, side: usize) -> Dense {
        let mut out = Dense::zero(side);
        let s = self.side;
        for a in 0..s {
            for b in 0..s {
                for g in 0..s {
                    let x = &self.c[self.idx(a, b, g)];
                    if x.is_zero() {
                        continue;
                    }
                    for a2 in 0..s {
                        for b2 in 0..s {
                            for g2 in 0..s {
                                let y = &other.c[other.idx(a2, b2, g2)];
                                if !y.is_zero() {
                                    let i = out.idx(a + a2, b + b2, g + g2);
                                    out.c[i] += x * y;
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn add(&self, other: &Dense) -> Dense {
        let mut out = self.clone();
        for (o, y) in out.c.iter_mut().zip(&other.c) {
            *o += y;
        }
        out
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_and_product_match_dense_model(p in poly(), q in poly()) {
        let big = 2 * SIDE;
        let (dp, dq) = (Dense::from_poly(&p, SIDE), Dense::from_poly(&q, SIDE));
        prop_assert_eq!(Dense::from_poly(&(&p * &q), big), dp.mul(&dq, big));
        prop_assert_eq!(Dense::from_poly(&(&p + &q), SIDE), dp.add(&dq));
    }

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &Poly::one(), p.clone());
    }

    #[test]
    fn zero_is_the_empty_term_list(p in poly()) {
        let z = &p - &p;
        prop_assert!(z.terms().is_empty());
        prop_assert_eq!(z, Poly::zero());
    }

    #[test]
    fn grading_is_additive(p in homogeneous(0), q in homogeneous(2)) {
        for (x, y) in [(&p, &p), (&p, &q), (&q, &q)] {
            let prod = x * y;
            if let (Some(a), Some(b)) = (x.z4_degree(), y.z4_degree()) {
                prop_assert_eq!(prod.z4_degree(), Some((a + b) % 4));
            }
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        p in poly(), q in poly(), a in rational(), b in rational(), c in rational()
    ) {
        let ev = |f: &Poly| f.evaluate(&a, &b, &c);
        prop_assert_eq!(ev(&(&p * &q)), ev(&p) * ev(&q));
        prop_assert_eq!(ev(&(&p + &q)), ev(&p) + ev(&q));
    }

    #[test]
    fn normal_form_is_idempotent_and_differs_by_a_member(g in 1u32..=4, p in poly()) {
        let engine = Engine::new();
        let ideal = engine.ideal(IdealKind::J, g);
        let gb = ideal.groebner().unwrap();
        let nf = normal_form(&p, gb);
        prop_assert_eq!(normal_form(&nf, gb), nf.clone());
        prop_assert!(ideal_member(&(&p - &nf), gb));
        for m in nf.monomials() {
            prop_assert!(!gb.is_leading_multiple(m));
        }
    }

    #[test]
    fn reduced_basis_is_route_independent(gens in prop::collection::vec(small_ag_poly(), 1..3)) {
        let ring = VarSet::ALPHA_GAMMA;
        let via_fglm = buchberger_in_ring(&gens, MonomialOrder::Lex, ring).unwrap();
        let direct = buchberger_direct(&gens, MonomialOrder::Lex, ring).unwrap();
        prop_assert!(direct.certify());
        for f in &gens {
            prop_assert!(ideal_member(f, &direct));
        }
        prop_assert_eq!(via_fglm, direct);
    }
}

#[test]
fn zeta_members_are_homogeneous_term_by_term() {
    let engine = Engine::new();
    for family in FamilyKind::ALL {
        for k in 0..=12i64 {
            let z = engine.zeta(family, k);
            for (m, _) in z.terms() {
                assert_eq!(
                    m.z4_degree() as i64,
                    (2 * k) % 4,
                    "{family:?} ζ_{k} term {m}"
                );
            }
            if family == FamilyKind::Classical {
                assert_eq!(z.homogeneous_degree(), Some(2 * k as u32), "ζ'_{k}");
            }
        }
    }
}

#[test]
fn generators_are_members_of_their_ideals() {
    let engine = Engine::new();
    for kind in [
        IdealKind::J,
        IdealKind::Jplus,
        IdealKind::Jminus,
        IdealKind::Jclassical,
    ] {
        for g in 1..=6 {
            let ideal = engine.ideal(kind, g);
            for p in ideal.generators() {
                assert!(ideal.contains(p).unwrap(), "{kind}_{g}");
            }
        }
    }
}

#[test]
fn machine_rationals_agree_with_big_rationals() {
    use floer_core::Scalar;
    use num_rational::Ratio;
    let small = floer_core::munoz::Engine::<Ratio<i128>>::new();
    let big = Engine::new();
    for kind in [IdealKind::J, IdealKind::Jplus, IdealKind::Jminus] {
        for g in 1..=3 {
            let lhs = small.ideal(kind, g);
            let lhs = lhs.groebner().unwrap();
            let rhs = big.ideal(kind, g);
            let rhs = rhs.groebner().unwrap();
            let lifted: Vec<Poly> = lhs
                .generators()
                .iter()
                .map(|p| p.map_coeffs(|c| c.to_big_rational()))
                .collect();
            assert_eq!(lifted, rhs.generators(), "{kind}_{g}");
        }
    }
}
