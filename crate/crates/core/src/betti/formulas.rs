//! Closed-form counts: partial binomial sums, the Poincaré polynomial of
//! the moduli space, Newstead's betti numbers and the framed kernel and
//! betti formulas.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::betti::{BettiError, BinomialTable, Counts};
use crate::poly::{PoincarePoly, Sign};

/// 0 for even genus, 1 for odd.
pub fn epsilon(g: u32) -> usize {
    (g % 2) as usize
}

fn check_genus(g: u32) -> Result<(), BettiError> {
    if g == 0 {
        Err(BettiError::GenusZero)
    } else {
        Ok(())
    }
}

fn table_for(g: u32) -> BinomialTable {
    BinomialTable::new(2 * g as usize)
}

/// `Σ C(2g, k)` over `0 ≤ k < g` with `k ≡ i (mod 4)`.
pub fn s_func(i: u32, g: u32) -> BigInt {
    let table = table_for(g);
    s_with(&table, i, g)
}

fn s_with(table: &BinomialTable, i: u32, g: u32) -> BigInt {
    (0..g as i64)
        .filter(|k| k.rem_euclid(4) == i64::from(i % 4))
        .map(|k| table.get(2 * g as i64, k))
        .sum()
}

fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `2^e` for possibly negative `e`.
fn pow2(e: i64) -> BigRational {
    let p = int(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

fn integral(x: BigRational, quantity: &'static str, genus: u32) -> Result<BigInt, BettiError> {
    if x.is_integer() && !x.is_negative() {
        Ok(x.to_integer())
    } else {
        Err(BettiError::NonIntegral {
            quantity,
            genus,
            value: x.to_string(),
        })
    }
}

/// Coefficients of `P_t(N^g)` in degrees `0..=6g−6`, by exact division of
/// `(1+t³)^{2g} − t^{2g}(1+t)^{2g}` by `(1−t²)(1−t⁴)`.
pub fn poincare_ng(g: u32) -> Result<Vec<BigInt>, BettiError> {
    check_genus(g)?;
    let table = table_for(g);
    let n = 2 * g as usize;
    let mut num = vec![BigInt::zero(); 3 * n + 1];
    for k in 0..=n {
        num[3 * k] += table.get(n as i64, k as i64);
        num[n + k] -= table.get(n as i64, k as i64);
    }
    // (1 − t²)(1 − t⁴) = 1 − t² − t⁴ + t⁶, monic in t⁶.
    let den: [i64; 7] = [1, 0, -1, 0, -1, 0, 1];
    let top = num.len() - 1;
    let quot_len = top - 5;
    let mut quot = vec![BigInt::zero(); quot_len];
    for d in (0..quot_len).rev() {
        let c = num[d + 6].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            if *dj != 0 {
                num[d + j] -= &c * BigInt::from(*dj);
            }
        }
        quot[d] = c;
    }
    if num.iter().any(|c| !c.is_zero()) {
        return Err(BettiError::InexactDivision { genus: g });
    }
    while quot.len() > 1 && quot.last().is_some_and(Zero::is_zero) {
        quot.pop();
    }
    Ok(quot)
}

/// Betti numbers `h₀..h_{6g−3}` of the framed moduli space.
pub fn newstead_h(g: u32) -> Result<Vec<BigInt>, BettiError> {
    check_genus(g)?;
    let table = table_for(g);
    let top = 6 * g as i64 - 3;
    let low: Vec<BigInt> = (0..3 * g as i64 - 1)
        .map(|i| {
            let lo = i - 2 * g as i64 + 2;
            (lo..=i / 3)
                .filter(|k| (k - i).rem_euclid(2) == 0)
                .map(|k| table.get(2 * g as i64, k))
                .sum()
        })
        .collect();
    Ok((0..=top)
        .map(|i| {
            if i < 3 * g as i64 - 1 {
                low[i as usize].clone()
            } else {
                low[(top - i) as usize].clone()
            }
        })
        .collect())
}

/// Sums of a degree-indexed sequence over each residue mod 4.
pub fn collapse_mod4(values: &[BigInt]) -> Counts {
    let mut out = Counts::zero();
    for (i, v) in values.iter().enumerate() {
        out.0[i % 4] += v;
    }
    out
}

/// Mod 4 betti numbers of two disjoint copies of the framed moduli space.
pub fn critical_betti(g: u32) -> Result<Counts, BettiError> {
    Ok(collapse_mod4(&newstead_h(g)?).scale(2))
}

/// Graded dimensions of the kernels of `β + 8` (plus) and `β − 8` (minus)
/// on the whole ring, in absolute labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelCounts {
    pub plus: Counts,
    pub minus: Counts,
}

pub fn kernel_counts_closed_form(g: u32) -> Result<KernelCounts, BettiError> {
    check_genus(g)?;
    let table = table_for(g);
    let e = epsilon(g);
    let gi = i64::from(g);
    let mid = int(table.get(2 * gi, gi));
    let den = 4 * (2 * gi - 1);
    let s = int(s_with(&table, 1 - e as u32, g));
    let q = pow2(2 * gi - 3);

    let plus_a = ratio(gi * gi - gi, den) * &mid;
    let plus_b = ratio(gi * gi, den) * &mid - &q;
    let minus_a = ratio(gi * gi + 3 * gi - 2, den) * &mid - pow2(gi - 2) * (int(1) + pow2(gi - 1));
    let square = ratio(gi * gi, den) * &mid;
    let minus_j0 = &square + (&s - &q);
    let minus_j1 = &square - (&s - &q);

    let mut plus = [BigRational::zero(), int(0), int(0), int(0)];
    let mut minus = plus.clone();
    plus[e] = plus_a.clone();
    plus[(2 + e) % 4] = plus_a;
    plus[(1 + e) % 4] = plus_b.clone();
    plus[(3 + e) % 4] = plus_b;
    minus[e] = minus_a.clone();
    minus[(2 + e) % 4] = minus_a;
    minus[(3 + e) % 4] = minus_j0;
    minus[(1 + e) % 4] = minus_j1;

    let to_counts = |xs: [BigRational; 4], what| -> Result<Counts, BettiError> {
        let mut out = Counts::zero();
        for (slot, x) in xs.into_iter().enumerate() {
            out.0[slot] = integral(x, what, g)?;
        }
        Ok(out)
    };
    Ok(KernelCounts {
        plus: to_counts(plus, "kernel of β + 8")?,
        minus: to_counts(minus, "kernel of β − 8")?,
    })
}

/// Framed betti numbers in absolute labels, with the split into the
/// mapping cones of `β + 8` and `β − 8`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramedBetti {
    pub total: Counts,
    pub plus: Counts,
    pub minus: Counts,
}

/// Framed betti numbers from the closed formulas. The total, the signed
/// parts and the kernel counts are evaluated independently and must agree.
pub fn framed_betti_closed_form(g: u32) -> Result<FramedBetti, BettiError> {
    check_genus(g)?;
    let table = table_for(g);
    let e = epsilon(g);
    let gi = i64::from(g);
    let mid = int(table.get(2 * gi, gi));
    let s = int(s_with(&table, 1 - e as u32, g));

    let row_low = ratio(gi + 1, 2) * &mid - pow2(gi - 2) * (int(1) + pow2(gi - 1)) - &s;
    let row_high = ratio(gi + 1, 2) * &mid - pow2(gi - 2) * (int(1) + int(3) * pow2(gi - 1)) + &s;
    let plus_all = ratio(gi, 4) * &mid - pow2(2 * gi - 3);
    let minus_low = ratio(gi + 2, 4) * &mid - &s - pow2(gi - 2);
    let minus_high = ratio(gi + 2, 4) * &mid + &s - pow2(gi - 2) * (int(1) + pow2(gi));

    let spread = |low: BigRational, high: BigRational, what| -> Result<Counts, BettiError> {
        let low = integral(low, what, g)?;
        let high = integral(high, what, g)?;
        let mut out = Counts::zero();
        out.0[e] = low.clone();
        out.0[(1 + e) % 4] = low;
        out.0[(2 + e) % 4] = high.clone();
        out.0[(3 + e) % 4] = high;
        Ok(out)
    };
    let result = FramedBetti {
        total: spread(row_low, row_high, "framed betti number")?,
        plus: spread(plus_all.clone(), plus_all, "plus betti number")?,
        minus: spread(minus_low, minus_high, "minus betti number")?,
    };

    if result.plus.clone() + result.minus.clone() != result.total {
        return Err(BettiError::Inconsistent {
            what: "total differs from the sum of the signed parts",
            genus: g,
        });
    }
    let kernels = kernel_counts_closed_form(g)?;
    if kernels.plus.cone() != result.plus || kernels.minus.cone() != result.minus {
        return Err(BettiError::Inconsistent {
            what: "signed parts differ from the cone of the kernel counts",
            genus: g,
        });
    }
    Ok(result)
}

/// Critical-set betti numbers from the kernel counts, which must agree with
/// the collapse of Newstead's numbers.
pub fn critical_betti_from_kernels(g: u32) -> Result<Counts, BettiError> {
    let k = kernel_counts_closed_form(g)?;
    let e = epsilon(g);
    let low: BigInt = (&k.plus.0[e] + &k.minus.0[(1 + e) % 4]) * 2u32;
    let high: BigInt = (&k.plus.0[e] + &k.minus.0[(3 + e) % 4]) * 2u32;
    let mut out = Counts::zero();
    out.0[e] = low.clone();
    out.0[(1 + e) % 4] = low;
    out.0[(2 + e) % 4] = high.clone();
    out.0[(3 + e) % 4] = high;
    Ok(out)
}

/// `2(g+1)C(2g,g) − 2^g(1 + 2^g)`.
pub fn framed_total_closed_form(g: u32) -> BigInt {
    let table = table_for(g);
    let gi = i64::from(g);
    let two_g = BigInt::one() << g;
    BigInt::from(2 * (gi + 1)) * table.get(2 * gi, gi) - &two_g * (BigInt::one() + &two_g)
}

/// `g(g+1) + 2` if `g + 2 ≡ 0 (mod 4)`, else `g(g+1)`.
pub fn invariant_total_closed_form(g: u32) -> u64 {
    let g = u64::from(g);
    g * (g + 1) + if (g + 2) % 4 == 0 { 2 } else { 0 }
}

/// Quotient dimensions of the specialized ideals `J_g^±` by grading.
pub fn signed_poincare_closed_form(sign: Sign, g: u32) -> PoincarePoly {
    let g = u64::from(g);
    match sign {
        Sign::Minus => {
            let m = g / 2;
            let c = m * (m + 1) / 2;
            PoincarePoly::new([c, 0, c, 0])
        }
        Sign::Plus if g % 2 == 1 => {
            let sq = (g + 1) * (g + 1);
            PoincarePoly::new([sq.div_ceil(8), 0, sq / 8, 0])
        }
        Sign::Plus => {
            let c = (g * g).div_ceil(8);
            PoincarePoly::new([c, 0, c, 0])
        }
    }
}

/// Graded dimensions of the invariant parts of the framed group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantDims {
    pub total: u64,
    pub plus: PoincarePoly,
    pub minus: PoincarePoly,
}

pub fn invariant_framed_closed_form(g: u32) -> InvariantDims {
    let gu = u64::from(g);
    let m = gu / 2;
    let plus = PoincarePoly::new([m * (m + 1) / 2; 4]);
    let minus = if gu % 2 == 0 {
        PoincarePoly::new([(gu * gu).div_ceil(8); 4])
    } else {
        let sq = (gu + 1) * (gu + 1);
        let (c, f) = (sq.div_ceil(8), sq / 8);
        PoincarePoly::new([c, f, f, c])
    };
    InvariantDims {
        total: plus.total() + minus.total(),
        plus,
        minus,
    }
}

/// Fits a count into `u64`, for the engine-side graded dimensions.
pub(crate) fn small(x: &BigInt, genus: u32) -> Result<u64, BettiError> {
    x.to_u64().ok_or(BettiError::Overflow { genus })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|x| BigInt::from(*x)).collect()
    }

    #[test]
    fn small_s_values() {
        assert_eq!(s_func(1, 3), BigInt::from(6));
        assert_eq!(s_func(0, 3), BigInt::from(1));
        assert_eq!(s_func(2, 1), BigInt::zero());
    }

    #[test]
    fn poincare_of_low_genus() {
        assert_eq!(poincare_ng(1).unwrap(), big(&[1]));
        let p2 = poincare_ng(2).unwrap();
        assert_eq!(p2, big(&[1, 0, 1, 4, 1, 0, 1]));
        let p3 = poincare_ng(3).unwrap();
        assert_eq!(p3.len(), 13);
        assert_eq!(p3[..4], big(&[1, 0, 1, 6])[..]);
    }

    #[test]
    fn newstead_genus_one_is_so3() {
        assert_eq!(newstead_h(1).unwrap(), big(&[1, 0, 0, 1]));
    }

    #[test]
    fn first_framed_rows() {
        let b = framed_betti_closed_form(1).unwrap();
        assert_eq!(b.total, Counts::from_u64([1, 0, 0, 1]));
        let b = framed_betti_closed_form(2).unwrap();
        assert_eq!(b.plus, Counts::from_u64([1, 1, 1, 1]));
        assert_eq!(b.total.total(), BigInt::from(16));
    }

    #[test]
    fn genus_zero_rejected() {
        assert_eq!(newstead_h(0), Err(BettiError::GenusZero));
        assert_eq!(framed_betti_closed_form(0), Err(BettiError::GenusZero));
    }

    #[test]
    fn invariant_cases() {
        assert_eq!(invariant_framed_closed_form(1).total, 2);
        assert_eq!(invariant_framed_closed_form(2).total, 8);
        assert_eq!(
            invariant_framed_closed_form(3).minus,
            PoincarePoly::new([2, 2, 2, 2])
        );
    }
}
