use floer_core::betti::{
    classical_poincare_assembly, collapse_mod4, critical_betti, epsilon, framed_betti_closed_form,
    framed_poincare_assembly, framed_poincare_linear_algebra, framed_total_closed_form,
    invariant_framed_closed_form, invariant_framed_dims, invariant_total_closed_form, newstead_h,
    poincare_ng, s_func, signed_poincare_closed_form, Counts, Part,
};
use floer_core::{Engine, IdealKind, PoincarePoly, Sign};
use num_bigint::BigInt;

const FRAMED_ROWS: [(u64, u64); 8] = [
    (0, 1),
    (2, 6),
    (29, 15),
    // 83, not 88: the row total 428 forces it.
    (131, 83),
    (409, 575),
    (1902, 2486),
    (10646, 8554),
    (45275, 37659),
];
const FRAMED_TOTALS: [u64; 8] = [2, 16, 88, 428, 1968, 8776, 38400, 165868];

const CRITICAL_ROWS: [(u64, u64); 8] = [
    (0, 2),
    (2, 10),
    (44, 16),
    (188, 92),
    (464, 796),
    (2188, 3356),
    (14104, 9920),
    (59096, 43864),
];
const CRITICAL_TOTALS: [u64; 8] = [4, 24, 120, 560, 2520, 11088, 48048, 205920];

fn rows(c: &Counts, g: u32) -> (BigInt, BigInt) {
    c.table_rows(epsilon(g)).expect("rows pair up")
}

#[test]
fn framed_table() {
    for g in 1..=8u32 {
        let b = framed_betti_closed_form(g).unwrap();
        let (lo, hi) = FRAMED_ROWS[g as usize - 1];
        assert_eq!(rows(&b.total, g), (lo.into(), hi.into()), "genus {g}");
        assert_eq!(b.total.total(), FRAMED_TOTALS[g as usize - 1].into());
    }
}

#[test]
fn critical_table() {
    for g in 1..=8u32 {
        let n = critical_betti(g).unwrap();
        let (lo, hi) = CRITICAL_ROWS[g as usize - 1];
        assert_eq!(rows(&n, g), (lo.into(), hi.into()), "genus {g}");
        assert_eq!(n.total(), CRITICAL_TOTALS[g as usize - 1].into());
    }
}

#[test]
fn closed_form_identities() {
    for g in 1..=10u32 {
        let b = framed_betti_closed_form(g).unwrap();
        assert_eq!(b.total.total(), framed_total_closed_form(g));
        assert_eq!(b.total.euler_characteristic(), BigInt::from(0));
        let h = newstead_h(g).unwrap();
        let n = h.len();
        assert!((0..n).all(|i| h[i] == h[n - 1 - i]));
        let mid = num_integer::binomial(BigInt::from(2 * g), BigInt::from(g));
        assert_eq!(h.iter().sum::<BigInt>(), mid * g);
    }
    for g in 1..=12u32 {
        let sum = s_func(0, g) + s_func(2, g);
        if g % 2 == 1 {
            assert_eq!(sum, BigInt::from(1) << (2 * g - 2), "genus {g}");
        } else {
            // The middle binomial is excluded and the two residues no
            // longer pair off under k ↦ 2g − k.
            let mid = num_integer::binomial(BigInt::from(2 * g), BigInt::from(g));
            assert_eq!(sum * 2, (BigInt::from(1) << (2 * g - 1)) - mid, "genus {g}");
        }
    }
}

#[test]
fn critical_dominates_framed() {
    for g in 1..=8u32 {
        let b = framed_betti_closed_form(g).unwrap().total;
        assert!(critical_betti(g).unwrap().dominates(&b), "genus {g}");
    }
}

#[test]
fn moduli_space_euler_characteristic_vanishes() {
    for g in 2..=10u32 {
        let p = poincare_ng(g).unwrap();
        assert_eq!(p.len(), 6 * g as usize - 5);
        let chi: BigInt = p
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() })
            .sum();
        assert_eq!(chi, BigInt::from(0));
    }
}

#[test]
fn three_paths_agree() {
    let engine = Engine::new();
    for g in 1..=6u32 {
        let closed = framed_betti_closed_form(g).unwrap();
        for (part, want) in [
            (Part::Plus, &closed.plus),
            (Part::Minus, &closed.minus),
            (Part::Both, &closed.total),
        ] {
            let a = Counts::from(framed_poincare_assembly(&engine, g, part).unwrap());
            assert_eq!(&a, want, "assembly {part:?} genus {g}");
            if g <= 5 {
                let l = Counts::from(framed_poincare_linear_algebra(&engine, g, part).unwrap());
                assert_eq!(&l, want, "mapping cone {part:?} genus {g}");
            }
        }
    }
}

#[test]
fn signed_parts_sum() {
    let engine = Engine::new();
    for g in 1..=5u32 {
        let p = framed_poincare_assembly(&engine, g, Part::Plus).unwrap();
        let m = framed_poincare_assembly(&engine, g, Part::Minus).unwrap();
        assert_eq!(
            p + m,
            framed_poincare_assembly(&engine, g, Part::Both).unwrap()
        );
    }
}

#[test]
fn classical_assembly_recovers_newstead() {
    let engine = Engine::new();
    for g in 1..=6u32 {
        let got = Counts::from(classical_poincare_assembly(&engine, g).unwrap());
        assert_eq!(got, collapse_mod4(&newstead_h(g).unwrap()), "genus {g}");
    }
}

#[test]
fn signed_quotients_match_closed_forms() {
    let engine = Engine::new();
    for g in 0..=9u32 {
        for sign in Sign::BOTH {
            let got = engine
                .ideal(IdealKind::signed(sign), g)
                .graded_poincare()
                .unwrap();
            assert_eq!(
                got,
                signed_poincare_closed_form(sign, g),
                "{sign:?} genus {g}"
            );
        }
    }
}

#[test]
fn invariant_parts() {
    let engine = Engine::new();
    for g in 1..=8u32 {
        let closed = invariant_framed_closed_form(g);
        assert_eq!(closed.total, invariant_total_closed_form(g));
        assert_eq!(
            invariant_framed_dims(&engine, g).unwrap(),
            closed,
            "genus {g}"
        );
    }
    assert_eq!(
        invariant_framed_dims(&engine, 3).unwrap().minus,
        PoincarePoly::new([2, 2, 2, 2])
    );
}
