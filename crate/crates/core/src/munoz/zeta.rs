use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::groebner::VarSet;
use crate::poly::{Polynomial, Sign};
use crate::scalar::Scalar;

/// Which recursion a family of generators follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    /// ζ_{k+1} = αζ_k + k²(β + (−1)^k 8)ζ_{k−1} + 2k(k−1)γζ_{k−2}.
    Full,
    /// The β = +8 image of the full family.
    Plus,
    /// The β = −8 image of the full family.
    Minus,
    /// The undeformed recursion ζ'_{k+1} = αζ'_k + 2k(k−1)γζ'_{k−2}.
    Classical,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::Full,
        FamilyKind::Plus,
        FamilyKind::Minus,
        FamilyKind::Classical,
    ];

    pub fn ring(self) -> VarSet {
        match self {
            FamilyKind::Full => VarSet::ALL,
            _ => VarSet::ALPHA_GAMMA,
        }
    }

    pub fn for_sign(sign: Sign) -> Self {
        match sign {
            Sign::Plus => FamilyKind::Plus,
            Sign::Minus => FamilyKind::Minus,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Memoized generator family. The cache only grows; readers take a shared
/// lock and writers extend it in place.
#[derive(Debug)]
pub struct ZetaFamily<F: Scalar> {
    kind: FamilyKind,
    corrupted: bool,
    cache: RwLock<Vec<Polynomial<F>>>,
}

impl<F: Scalar> ZetaFamily<F> {
    pub fn new(kind: FamilyKind) -> Self {
        ZetaFamily {
            kind,
            corrupted: false,
            cache: RwLock::new(vec![Polynomial::one()]),
        }
    }

    /// A family built with the deformation constant 9 in place of 8. Used
    /// to check that the verification suite notices a wrong recursion.
    #[doc(hidden)]
    pub fn corrupted(kind: FamilyKind) -> Self {
        ZetaFamily {
            corrupted: true,
            ..Self::new(kind)
        }
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    /// ζ_k, with ζ_k = 0 for k < 0 and ζ_0 = 1.
    pub fn get(&self, k: i64) -> Polynomial<F> {
        if k < 0 {
            return Polynomial::zero();
        }
        let k = k as usize;
        {
            let cache = self.cache.read().expect("zeta cache poisoned");
            if let Some(p) = cache.get(k) {
                return p.clone();
            }
        }
        let mut cache = self.cache.write().expect("zeta cache poisoned");
        while cache.len() <= k {
            let next = self.step(&cache);
            cache.push(next);
        }
        cache[k].clone()
    }

    /// The coefficient of ζ_{k−1} in the expression for ζ_{k+1}.
    fn middle_coefficient(&self, k: i64) -> Polynomial<F> {
        let k2 = F::from_int(k * k);
        let even = k % 2 == 0;
        // The deformation constant; the corrupted families use 9.
        let c = if self.corrupted { 9 } else { 8 };
        match self.kind {
            FamilyKind::Full => {
                let shift = if even { c } else { -c };
                (&Polynomial::beta() + &Polynomial::int(shift)).scale(&k2)
            }
            FamilyKind::Plus if even => Polynomial::constant(k2 * F::from_int(2 * c)),
            FamilyKind::Minus if !even => Polynomial::constant(k2 * F::from_int(-2 * c)),
            _ => Polynomial::zero(),
        }
    }

    fn step(&self, cache: &[Polynomial<F>]) -> Polynomial<F> {
        let k = cache.len() as i64 - 1;
        let at = |i: i64| {
            if i < 0 {
                Polynomial::zero()
            } else {
                cache[i as usize].clone()
            }
        };
        let gamma_coeff = 2 * k * (k - 1);
        let alpha_term = &Polynomial::alpha() * &at(k);
        let middle = &self.middle_coefficient(k) * &at(k - 1);
        let gamma_term = (&Polynomial::gamma() * &at(k - 2)).scale(&F::from_int(gamma_coeff));
        &(&alpha_term + &middle) + &gamma_term
    }
}

/// One memoized family per [`FamilyKind`].
#[derive(Debug)]
pub struct ZetaFamilies<F: Scalar> {
    families: [ZetaFamily<F>; 4],
}

impl<F: Scalar> ZetaFamilies<F> {
    pub fn new() -> Self {
        ZetaFamilies {
            families: FamilyKind::ALL.map(ZetaFamily::new),
        }
    }

    #[doc(hidden)]
    pub fn corrupted() -> Self {
        ZetaFamilies {
            families: FamilyKind::ALL.map(ZetaFamily::corrupted),
        }
    }

    pub fn family(&self, kind: FamilyKind) -> &ZetaFamily<F> {
        &self.families[kind.index()]
    }

    pub fn zeta(&self, kind: FamilyKind, k: i64) -> Polynomial<F> {
        self.family(kind).get(k)
    }
}

impl<F: Scalar> Default for ZetaFamilies<F> {
    fn default() -> Self {
        Self::new()
    }
}
