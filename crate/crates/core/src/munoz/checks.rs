use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::groebner::{
    buchberger_in_ring, ideal_member, mult_operator, normal_form, Matrix, MonomialOrder, UniPoly,
};
use crate::munoz::helpers::{beta_minus, beta_plus, eta, phi, psi, rho};
use crate::munoz::{ev_indices, ev_map, Engine, FamilyKind, IdealKind, MunozError};
use crate::poly::{Monomial, Polynomial, Sign, Var};
use crate::scalar::Scalar;

/// Result of one named check at one genus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub genus: u32,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn new(
        name: impl Into<String>,
        genus: u32,
        passed: bool,
        detail: impl Into<String>,
    ) -> Self {
        CheckOutcome {
            name: name.into(),
            genus,
            passed,
            detail: detail.into(),
        }
    }

    /// Folds an error into a failed outcome.
    pub fn from_result(
        name: impl Into<String>,
        genus: u32,
        result: Result<(bool, String), MunozError>,
    ) -> Self {
        match result {
            Ok((passed, detail)) => Self::new(name, genus, passed, detail),
            Err(e) => Self::new(name, genus, false, format!("error: {e}")),
        }
    }
}

fn seeded_rng(seed: u64, tag: u64, genus: u32) -> ChaCha8Rng {
    let mix = seed
        ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15)
        ^ (genus as u64).wrapping_mul(0xc2b2_ae3d_27d4_eb4f);
    ChaCha8Rng::seed_from_u64(mix)
}

pub fn expected_nilpotency(g: u32) -> u32 {
    2 * g.div_ceil(2) - 1
}

/// Smallest `n` with `(β² − 64)ⁿ ∈ J_g`, by repeated multiplication and
/// reduction.
pub fn nilpotency_degree<F: Scalar>(engine: &Engine<F>, g: u32) -> Result<u32, MunozError> {
    if g == 0 {
        return Err(MunozError::GenusZero);
    }
    let ideal = engine.ideal(IdealKind::J, g);
    let gb = ideal.groebner()?;
    // The index of a nilpotent operator never exceeds the dimension.
    let bound = ideal.degree().unwrap_or(64) as u32;
    let p = &Polynomial::beta().pow(2) - &Polynomial::int(64);
    let mut cur = normal_form(&p, gb);
    let mut n = 1;
    while !cur.is_zero() {
        if n > bound {
            return Err(MunozError::NotNilpotent(g));
        }
        cur = normal_form(&(&cur * &p), gb);
        n += 1;
    }
    Ok(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipEntry {
    pub j: u32,
    /// ρ_j φ_{r−j} ζ_{r−j} ∈ J_r.
    pub rho_phi: bool,
    /// α η_j ψ_{r−j} ζ_{r−j} ∈ J_r.
    pub alpha_eta_psi: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub r: u32,
    pub entries: Vec<MembershipEntry>,
}

impl MembershipReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.rho_phi && e.alpha_eta_psi)
    }

    pub fn failures(&self) -> Vec<u32> {
        self.entries
            .iter()
            .filter(|e| !(e.rho_phi && e.alpha_eta_psi))
            .map(|e| e.j)
            .collect()
    }
}

pub fn check_lemma_memberships<F: Scalar>(
    engine: &Engine<F>,
    r: u32,
) -> Result<MembershipReport, MunozError> {
    if r == 0 {
        return Err(MunozError::GenusZero);
    }
    let ideal = engine.ideal(IdealKind::J, r);
    let gb = ideal.groebner()?;
    let r = r as i64;
    let entries = (0..=r)
        .map(|j| {
            let z = engine.zeta(FamilyKind::Full, r - j);
            let first = &(&rho::<F>(j) * &phi::<F>(r - j)) * &z;
            let second = &(&(&Polynomial::alpha() * &eta::<F>(j)) * &psi::<F>(r - j)) * &z;
            MembershipEntry {
                j: j as u32,
                rho_phi: ideal_member(&first, gb),
                alpha_eta_psi: ideal_member(&second, gb),
            }
        })
        .collect();
    Ok(MembershipReport {
        r: r as u32,
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProportionalityEntry {
    pub j: u32,
    /// The ratio to the normal form of γ^{g−1}, when the two are
    /// proportional.
    pub constant: Option<String>,
    pub positive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProportionalityReport {
    pub genus: u32,
    pub entries: Vec<ProportionalityEntry>,
}

impl ProportionalityReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.positive)
    }
}

/// For odd g and 0 ≤ j ≤ (g−1)/2, compares β₋^{j+(g−1)/2} β₊^{g−1} ζ_{g−2j−1}
/// with γ^{g−1} modulo J_g.
pub fn check_lemma_proportionality<F: Scalar>(
    engine: &Engine<F>,
    g: u32,
) -> Result<ProportionalityReport, MunozError> {
    if g.is_multiple_of(2) {
        return Err(MunozError::Parity {
            family: FamilyKind::Full,
            genus: g,
        });
    }
    let ideal = engine.ideal(IdealKind::J, g);
    let gb = ideal.groebner()?;
    let reference = normal_form(&Polynomial::gamma().pow(g - 1), gb);
    let half = (g - 1) / 2;
    let entries = (0..=half)
        .map(|j| {
            let lhs = &(&beta_minus::<F>().pow(j + half) * &beta_plus::<F>().pow(g - 1))
                * &engine.zeta(FamilyKind::Full, (g - 2 * j - 1) as i64);
            let nf = normal_form(&lhs, gb);
            let constant = match (reference.leading_term(), nf.leading_term()) {
                (Some((rm, rc)), Some((nm, nc))) if rm == nm => {
                    let c = nc.clone() / rc;
                    (reference.scale(&c) == nf).then_some(c)
                }
                _ => None,
            };
            ProportionalityEntry {
                j,
                positive: constant.as_ref().is_some_and(|c| c.is_positive()),
                constant: constant.map(|c| c.to_string()),
            }
        })
        .collect();
    Ok(ProportionalityReport { genus: g, entries })
}

fn gamma_shift_generation<F: Scalar>(
    engine: &Engine<F>,
    kind: IdealKind,
    g: u32,
) -> Result<(bool, String), MunozError> {
    let ideal = engine.ideal(kind, g);
    let lower = engine.ideal(kind, g - 2);
    let mut gens = vec![ideal.generators()[0].clone()];
    gens.extend(lower.generators().iter().map(|p| &Polynomial::gamma() * p));
    let rebuilt = buchberger_in_ring(&gens, MonomialOrder::Lex, kind.ring())?;
    let same = rebuilt.generators() == ideal.groebner()?.generators();
    Ok((same, format!("{kind}_{g} = (ζ_{g}, γ·{kind}_{})", g - 2)))
}

fn equal_to_previous<F: Scalar>(
    engine: &Engine<F>,
    kind: IdealKind,
    g: u32,
) -> Result<(bool, String), MunozError> {
    let same = engine
        .ideal(kind, g)
        .same_ideal(&engine.ideal(kind, g - 1))?;
    Ok((same, format!("{kind}_{g} = {kind}_{}", g - 1)))
}

fn plus_jump<F: Scalar>(engine: &Engine<F>, g: u32) -> Result<(bool, String), MunozError> {
    let top = engine.ideal(IdealKind::Jplus, g);
    let prev = engine.ideal(IdealKind::Jplus, g - 1);
    let gamma_power = Polynomial::gamma().pow(g / 2);
    let mut gens = top.generators().to_vec();
    gens.push(gamma_power.clone());
    let extended = buchberger_in_ring(&gens, MonomialOrder::Lex, IdealKind::Jplus.ring())?;
    let equal = extended.generators() == prev.groebner()?.generators();
    let jump = top.degree()? as i64 - prev.degree()? as i64;
    let outside = !top.contains(&gamma_power)?;
    Ok((
        equal && jump == 1 && outside,
        format!(
            "degree jump {jump}, Jplus_{} = (Jplus_{g}, γ^{}) {equal}, γ^{} ∉ Jplus_{g} {outside}",
            g - 1,
            g / 2,
            g / 2
        ),
    ))
}

/// Samples nonzero u outside J⁺_{g−4} (combinations of its standard
/// monomials) and checks γ²u ∉ J⁺_g.
fn gamma_square_cancellation<F: Scalar>(
    engine: &Engine<F>,
    g: u32,
    seed: u64,
    samples: usize,
) -> Result<(bool, String), MunozError> {
    let top = engine.ideal(IdealKind::Jplus, g);
    let low = engine.ideal(IdealKind::Jplus, g - 4);
    let basis = low.quotient_basis()?;
    if basis.is_empty() {
        return Ok((
            true,
            format!("Jplus_{} is the unit ideal; nothing to sample", g - 4),
        ));
    }
    let mut rng = seeded_rng(seed, 57, g);
    let gb = top.groebner()?;
    let gamma2 = Polynomial::gamma().pow(2);
    let mut violations = 0;
    for _ in 0..samples {
        let u = loop {
            let mut terms = Vec::new();
            for m in basis.monomials() {
                if rng.random_bool(0.5) {
                    terms.push((*m, F::from_int(rng.random_range(-5..=5))));
                }
            }
            let u = Polynomial::from_terms(terms);
            if !u.is_zero() {
                break u;
            }
        };
        if ideal_member(&(&gamma2 * &u), gb) {
            violations += 1;
        }
    }
    Ok((
        violations == 0,
        format!("{samples} samples, {violations} with γ²u ∈ Jplus_{g}"),
    ))
}

/// The generation and stability identities for the signed families at
/// genus `g`, plus the sampled γ² cancellation for even g ≥ 4.
pub fn check_section5_structure<F: Scalar>(
    engine: &Engine<F>,
    g: u32,
    seed: u64,
) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    if g == 0 {
        return out;
    }
    if g.is_multiple_of(2) {
        out.push(CheckOutcome::from_result(
            "minus.gamma_shift_generation",
            g,
            gamma_shift_generation(engine, IdealKind::Jminus, g),
        ));
    } else {
        out.push(CheckOutcome::from_result(
            "minus.odd_equals_previous",
            g,
            equal_to_previous(engine, IdealKind::Jminus, g),
        ));
    }
    if g % 2 == 1 && g >= 3 {
        out.push(CheckOutcome::from_result(
            "plus.gamma_shift_generation",
            g,
            gamma_shift_generation(engine, IdealKind::Jplus, g),
        ));
    }
    if g.is_multiple_of(4) {
        out.push(CheckOutcome::from_result(
            "plus.even_equals_previous",
            g,
            equal_to_previous(engine, IdealKind::Jplus, g),
        ));
    }
    if g % 4 == 2 {
        out.push(CheckOutcome::from_result(
            "plus.even_jump",
            g,
            plus_jump(engine, g),
        ));
    }
    if g.is_multiple_of(2) && g >= 4 {
        out.push(CheckOutcome::from_result(
            "plus.gamma_square_cancellation",
            g,
            gamma_square_cancellation(engine, g, seed, 24),
        ));
    }
    out
}

/// Expected minimal generators of the initial ideal: γ^i α^{g−2i}, with
/// the last one a pure power of γ.
pub fn expected_initial_ideal(sign: Sign, g: u32) -> Option<Vec<Monomial>> {
    let top = match sign {
        Sign::Minus if g.is_multiple_of(2) => g / 2,
        Sign::Plus if g % 2 == 1 => g.div_ceil(2),
        _ => return None,
    };
    let mut v: Vec<Monomial> = (0..=top)
        .map(|i| Monomial::new(g.saturating_sub(2 * i), 0, i))
        .collect();
    v.sort();
    Some(v)
}

pub fn initial_ideal_shape_check<F: Scalar>(
    engine: &Engine<F>,
    sign: Sign,
    g: u32,
) -> CheckOutcome {
    let kind = IdealKind::signed(sign);
    let name = format!("{}.initial_ideal_shape", sign_name(sign));
    let result = (|| {
        let expect = expected_initial_ideal(sign, g).ok_or(MunozError::Parity {
            family: kind.family(),
            genus: g,
        })?;
        let gb = engine.ideal(kind, g).groebner()?.clone();
        let mut got = gb.initial_ideal().to_vec();
        got.sort();
        let show = |ms: &[Monomial]| {
            ms.iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        Ok((got == expect, format!("({})", show(&got))))
    })();
    CheckOutcome::from_result(name, g, result)
}

fn sign_name(sign: Sign) -> &'static str {
    match sign {
        Sign::Plus => "plus",
        Sign::Minus => "minus",
    }
}

/// Closed-form degree of the signed ideals, where one is known.
pub fn expected_signed_degree(sign: Sign, g: u32) -> Option<u64> {
    let g = g as u64;
    match sign {
        Sign::Minus if g.is_multiple_of(2) => Some(g * (g + 2) / 4),
        Sign::Plus if g % 2 == 1 => Some((g + 1) * (g + 1) / 4),
        _ => None,
    }
}

/// Degree laws of J^±_g: the closed forms, stability at the steps where
/// the ideal does not change, and the unit jump otherwise.
pub fn degree_law_check<F: Scalar>(engine: &Engine<F>, sign: Sign, g: u32) -> CheckOutcome {
    let kind = IdealKind::signed(sign);
    let name = format!("{}.degree_law", sign_name(sign));
    let result = (|| {
        let deg = engine.ideal(kind, g).degree()? as u64;
        if let Some(e) = expected_signed_degree(sign, g) {
            return Ok((deg == e, format!("deg {deg}, expected {e}")));
        }
        if g == 0 {
            return Ok((deg == 0, format!("deg {deg}")));
        }
        let prev = engine.ideal(kind, g - 1).degree()? as u64;
        let expect = match sign {
            Sign::Plus if g % 4 == 2 => prev + 1,
            _ => prev,
        };
        Ok((deg == expect, format!("deg {deg}, previous {prev}")))
    })();
    CheckOutcome::from_result(name, g, result)
}

/// Pure γ powers in the ideals: γ^{⌈g/2⌉} ∈ J⁻_g (g even), γ^{(g+1)/2} ∈ J⁺_g
/// (g odd), and γ^{g−1} ∉ J_g ∋ γ^g.
pub fn gamma_power_check<F: Scalar>(engine: &Engine<F>, g: u32, full: bool) -> CheckOutcome {
    let result = (|| {
        let mut parts = Vec::new();
        let mut ok = true;
        let gamma = Polynomial::<F>::gamma();
        if g.is_multiple_of(2) {
            let e = g.div_ceil(2);
            let m = engine.ideal(IdealKind::Jminus, g).contains(&gamma.pow(e))?;
            ok &= m;
            parts.push(format!("γ^{e} ∈ Jminus_{g} {m}"));
        } else {
            let e = g.div_ceil(2);
            let m = engine.ideal(IdealKind::Jplus, g).contains(&gamma.pow(e))?;
            ok &= m;
            parts.push(format!("γ^{e} ∈ Jplus_{g} {m}"));
        }
        if full {
            let j = engine.ideal(IdealKind::J, g);
            let below = !j.contains(&gamma.pow(g - 1))?;
            let at = j.contains(&gamma.pow(g))?;
            ok &= below && at;
            parts.push(format!("γ^{} ∉ J_{g} {below}, γ^{g} ∈ J_{g} {at}", g - 1));
        }
        Ok((ok, parts.join("; ")))
    })();
    CheckOutcome::from_result("gamma_powers", g, result)
}

/// Leading term α^k, specialization coherence and homogeneity of ζ_k.
pub fn leading_term_check<F: Scalar>(engine: &Engine<F>, k: u32) -> CheckOutcome {
    let mut bad = Vec::new();
    for kind in FamilyKind::ALL {
        let z = engine.zeta(kind, k as i64);
        let lead_ok = z
            .leading_term()
            .is_some_and(|(m, c)| m == Monomial::new(k, 0, 0) && c.is_one());
        if !lead_ok {
            bad.push(format!("{kind:?} leading term"));
        }
    }
    let full = engine.zeta(FamilyKind::Full, k as i64);
    if full.z4_degree() != Some(((2 * k) % 4) as u8) {
        bad.push("Full ℤ/4 degree".into());
    }
    let classical = engine.zeta(FamilyKind::Classical, k as i64);
    if classical.homogeneous_degree() != Some(2 * k) {
        bad.push("Classical degree".into());
    }
    CheckOutcome::new(
        "zeta.leading_term_and_grading",
        k,
        bad.is_empty(),
        if bad.is_empty() {
            format!("ζ_{k} = α^{k} + lower terms")
        } else {
            bad.join(", ")
        },
    )
}

pub fn specialization_check<F: Scalar>(engine: &Engine<F>, k: u32) -> CheckOutcome {
    let full = engine.zeta(FamilyKind::Full, k as i64);
    let ok = Sign::BOTH
        .iter()
        .all(|s| full.specialize_beta(*s) == engine.zeta(FamilyKind::for_sign(*s), k as i64));
    CheckOutcome::new(
        "zeta.specialization",
        k,
        ok,
        format!("ζ_{k}(β = ±8) = ζ^±_{k}"),
    )
}

/// J_g ⊂ J_{g−1} and γJ_g ⊂ J_{g+1}.
pub fn nesting_check<F: Scalar>(engine: &Engine<F>, g: u32) -> CheckOutcome {
    let result = (|| {
        let cur = engine.ideal(IdealKind::J, g);
        let prev = engine.ideal(IdealKind::J, g - 1);
        let next = engine.ideal(IdealKind::J, g + 1);
        let down = prev.contains_ideal(&cur)?;
        let next_gb = next.groebner()?;
        let up = cur
            .generators()
            .iter()
            .all(|p| ideal_member(&(&Polynomial::gamma() * p), next_gb));
        Ok((
            down && up,
            format!("J_{g} ⊂ J_{} {down}, γJ_{g} ⊂ J_{} {up}", g - 1, g + 1),
        ))
    })();
    CheckOutcome::from_result("nesting", g, result)
}

/// dim R/J_g = C(g+2, 3), with the monomials of total exponent below g
/// spanning the quotient.
pub fn invariant_basis_check<F: Scalar>(engine: &Engine<F>, g: u32) -> CheckOutcome {
    let result = (|| {
        let ideal = engine.ideal(IdealKind::J, g);
        let gb = ideal.groebner()?;
        let basis = ideal.quotient_basis()?;
        let expect = (g as usize + 2) * (g as usize + 1) * g as usize / 6;
        let mut rows = Vec::new();
        for a in 0..g {
            for b in 0..g - a {
                for c in 0..g - a - b {
                    let nf = normal_form(&Polynomial::monomial(Monomial::new(a, b, c)), gb);
                    rows.push(basis.coordinates(&nf));
                }
            }
        }
        let count = rows.len();
        let rank = if rows.is_empty() {
            0
        } else {
            Matrix::from_rows(rows).rank()
        };
        Ok((
            basis.len() == expect && count == expect && rank == expect,
            format!("dim {}, expected {expect}, rank {rank}", basis.len()),
        ))
    })();
    CheckOutcome::from_result("invariant_basis", g, result)
}

/// The classical quotient has the graded dimensions of J⁻_g for even g and
/// of J⁺_g for odd g.
pub fn classical_parity_check<F: Scalar>(engine: &Engine<F>, g: u32) -> CheckOutcome {
    let result = (|| {
        let classical = engine.ideal(IdealKind::Jclassical, g).graded_poincare()?;
        let other = if g.is_multiple_of(2) {
            IdealKind::Jminus
        } else {
            IdealKind::Jplus
        };
        let signed = engine.ideal(other, g).graded_poincare()?;
        Ok((
            classical == signed,
            format!("P(Jclassical_{g}) = {classical}, P({other}_{g}) = {signed}"),
        ))
    })();
    CheckOutcome::from_result("classical.parity", g, result)
}

/// The characteristic polynomial of β on R/J_g has roots ±8 only.
pub fn beta_eigenvalue_check<F: Scalar>(engine: &Engine<F>, g: u32) -> CheckOutcome {
    let result = (|| {
        let ideal = engine.ideal(IdealKind::J, g);
        let op = mult_operator(
            &Polynomial::beta(),
            ideal.groebner()?,
            ideal.quotient_basis()?,
        );
        let cp = op.char_poly();
        let cands = [
            UniPoly::linear(F::from_int(8)),
            UniPoly::linear(F::from_int(-8)),
        ];
        Ok(match cp.factor_over(&cands) {
            Some(m) => (true, format!("(x − 8)^{} (x + 8)^{}", m[0], m[1])),
            None => (false, format!("char poly {cp}")),
        })
    })();
    CheckOutcome::from_result("beta.eigenvalues", g, result)
}

/// α on R/J⁻_g (g odd) has eigenvalues ±4(g−2j); on R/J⁺_g (g even) it
/// has eigenvalues ±4(g−2j)i.
pub fn alpha_eigenvalue_check<F: Scalar>(engine: &Engine<F>, sign: Sign, g: u32) -> CheckOutcome {
    let name = format!("{}.alpha_eigenvalues", sign_name(sign));
    let result = (|| {
        let family = FamilyKind::for_sign(sign);
        let range = ev_indices(g, family)?;
        let cands: Vec<UniPoly<F>> = range
            .map(|j| {
                let d = 4 * (g as i64 - 2 * j as i64);
                match sign {
                    Sign::Minus => UniPoly::quadratic(F::from_int(-d * d)),
                    Sign::Plus if d == 0 => UniPoly::linear(F::zero()),
                    Sign::Plus => UniPoly::quadratic(F::from_int(d * d)),
                }
            })
            .collect();
        let ideal = engine.ideal(IdealKind::signed(sign), g);
        let op = mult_operator(
            &Polynomial::alpha(),
            ideal.groebner()?,
            ideal.quotient_basis()?,
        );
        let cp = op.char_poly();
        Ok(match cp.factor_over(&cands) {
            Some(m) => (true, format!("multiplicities {m:?}")),
            None => (false, format!("char poly {cp}")),
        })
    })();
    CheckOutcome::from_result(name, g, result)
}

/// A β-free u is a unit modulo J^±_g exactly when no evaluation map kills
/// it. Samples include forced non-units.
pub fn unit_evaluation_check<F: Scalar>(
    engine: &Engine<F>,
    sign: Sign,
    g: u32,
    seed: u64,
    samples: usize,
) -> CheckOutcome {
    let name = format!("{}.units_by_evaluation", sign_name(sign));
    let result = (|| {
        let family = FamilyKind::for_sign(sign);
        let range = ev_indices(g, family)?;
        let ideal = engine.ideal(IdealKind::signed(sign), g);
        let gb = ideal.groebner()?;
        let basis = ideal.quotient_basis()?;
        let mut rng = seeded_rng(seed, if sign == Sign::Plus { 53 } else { 59 }, g);
        let mut mismatches = 0;
        let mut units = 0;
        for s in 0..samples {
            let mut u = Polynomial::from_terms(
                [
                    Monomial::ONE,
                    Monomial::var(Var::Alpha),
                    Monomial::new(2, 0, 0),
                    Monomial::var(Var::Gamma),
                ]
                .into_iter()
                .map(|m| (m, F::from_int(rng.random_range(-6..=6)))),
            );
            if s % 2 == 1 && !range.is_empty() {
                let j = rng.random_range(range.clone()) as i64;
                let d = 4 * (g as i64 - 2 * j);
                let factor = match sign {
                    Sign::Minus => &Polynomial::alpha() - &Polynomial::int(d),
                    Sign::Plus => &Polynomial::alpha().pow(2) + &Polynomial::int(d * d),
                };
                u = &u * &factor;
            }
            let by_eval = range.clone().try_fold(true, |acc, j| {
                Sign::BOTH.iter().try_fold(acc, |acc, s| {
                    Ok::<_, MunozError>(acc && !ev_map(g, j, *s, family, &u)?.is_zero())
                })
            })?;
            let by_matrix = mult_operator(&u, gb, basis).is_invertible();
            if by_eval != by_matrix {
                mismatches += 1;
            }
            units += by_matrix as usize;
        }
        Ok((
            mismatches == 0,
            format!("{samples} samples, {units} units, {mismatches} disagreements"),
        ))
    })();
    CheckOutcome::from_result(name, g, result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn nilpotency_small_genus() {
        let engine = Engine::<Rational>::new();
        for g in 1..=4 {
            assert_eq!(
                nilpotency_degree(&engine, g).unwrap(),
                expected_nilpotency(g)
            );
        }
        assert_eq!(nilpotency_degree(&engine, 0), Err(MunozError::GenusZero));
    }

    #[test]
    fn expected_nilpotency_values() {
        let got: Vec<u32> = (1..=6).map(expected_nilpotency).collect();
        assert_eq!(got, vec![1, 1, 3, 3, 5, 5]);
    }

    #[test]
    fn memberships_small_r() {
        let engine = Engine::<Rational>::new();
        for r in 1..=4 {
            let report = check_lemma_memberships(&engine, r).unwrap();
            assert!(report.passed(), "r={r}: {:?}", report.failures());
            assert_eq!(report.entries.len(), r as usize + 1);
        }
    }

    #[test]
    fn proportionality_genus_one_and_three() {
        let engine = Engine::<Rational>::new();
        let one = check_lemma_proportionality(&engine, 1).unwrap();
        assert_eq!(one.entries[0].constant.as_deref(), Some("1"));
        let three = check_lemma_proportionality(&engine, 3).unwrap();
        assert!(three.passed(), "{three:?}");
        assert!(check_lemma_proportionality(&engine, 2).is_err());
    }

    #[test]
    fn structure_small_genus() {
        let engine = Engine::<Rational>::new();
        for g in 1..=6 {
            for o in check_section5_structure(&engine, g, 7) {
                assert!(o.passed, "{o:?}");
            }
        }
    }

    #[test]
    fn initial_ideal_of_jminus_4() {
        let expect = expected_initial_ideal(Sign::Minus, 4).unwrap();
        let mut want = vec![
            Monomial::new(4, 0, 0),
            Monomial::new(2, 0, 1),
            Monomial::new(0, 0, 2),
        ];
        want.sort();
        assert_eq!(expect, want);
        let engine = Engine::<Rational>::new();
        assert!(initial_ideal_shape_check(&engine, Sign::Minus, 4).passed);
        assert!(initial_ideal_shape_check(&engine, Sign::Plus, 3).passed);
    }

    #[test]
    fn signed_checks_small_genus() {
        let engine = Engine::<Rational>::new();
        for g in 1..=5 {
            for s in Sign::BOTH {
                assert!(degree_law_check(&engine, s, g).passed);
            }
            assert!(gamma_power_check(&engine, g, g <= 4).passed);
            assert!(classical_parity_check(&engine, g).passed);
            assert!(leading_term_check(&engine, g).passed);
            assert!(specialization_check(&engine, g).passed);
        }
    }

    #[test]
    fn eigenvalue_checks() {
        let engine = Engine::<Rational>::new();
        for g in 1..=4 {
            assert!(beta_eigenvalue_check(&engine, g).passed);
        }
        for g in [3, 5] {
            assert!(alpha_eigenvalue_check(&engine, Sign::Minus, g).passed);
            assert!(unit_evaluation_check(&engine, Sign::Minus, g, 1, 10).passed);
        }
        for g in [2, 4] {
            assert!(alpha_eigenvalue_check(&engine, Sign::Plus, g).passed);
            assert!(unit_evaluation_check(&engine, Sign::Plus, g, 1, 10).passed);
        }
    }

    #[test]
    fn nesting_and_basis() {
        let engine = Engine::<Rational>::new();
        for g in 2..=4 {
            assert!(nesting_check(&engine, g).passed);
        }
        for g in 1..=4 {
            assert!(invariant_basis_check(&engine, g).passed);
        }
    }

    #[test]
    fn corrupted_engine_is_detected() {
        let engine = Engine::<Rational>::corrupted();
        assert_eq!(
            nilpotency_degree(&engine, 2),
            Err(MunozError::NotNilpotent(2))
        );
        assert!(!specialization_check(&engine, 3).passed);
        assert!(!beta_eigenvalue_check(&engine, 2).passed);
        assert!(!check_lemma_memberships(&engine, 2).unwrap().passed());
    }
}
