use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::groebner::{
    buchberger_in_ring, ideal_member, normal_form, quotient_basis, GroebnerBasis, GroebnerError,
    MonomialOrder, QuotientBasis, VarSet,
};
use crate::munoz::zeta::{FamilyKind, ZetaFamilies};
use crate::poly::{PoincarePoly, Polynomial, Sign, Var};
use crate::scalar::Scalar;

/// The ideals built from three consecutive members of a generator family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdealKind {
    J,
    Jplus,
    Jminus,
    Jclassical,
    /// α = 0 image of `Jplus`, in ℚ[γ].
    Iplus,
    /// γ = 0 image of `Jminus`, in ℚ[α].
    Iminus,
}

impl IdealKind {
    pub const ALL: [IdealKind; 6] = [
        IdealKind::J,
        IdealKind::Jplus,
        IdealKind::Jminus,
        IdealKind::Jclassical,
        IdealKind::Iplus,
        IdealKind::Iminus,
    ];

    pub fn family(self) -> FamilyKind {
        match self {
            IdealKind::J => FamilyKind::Full,
            IdealKind::Jplus | IdealKind::Iplus => FamilyKind::Plus,
            IdealKind::Jminus | IdealKind::Iminus => FamilyKind::Minus,
            IdealKind::Jclassical => FamilyKind::Classical,
        }
    }

    pub fn ring(self) -> VarSet {
        match self {
            IdealKind::Iplus => VarSet::GAMMA,
            IdealKind::Iminus => VarSet::ALPHA,
            other => other.family().ring(),
        }
    }

    pub fn signed(sign: Sign) -> Self {
        match sign {
            Sign::Plus => IdealKind::Jplus,
            Sign::Minus => IdealKind::Jminus,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::J => "J",
            IdealKind::Jplus => "Jplus",
            IdealKind::Jminus => "Jminus",
            IdealKind::Jclassical => "Jclassical",
            IdealKind::Iplus => "Iplus",
            IdealKind::Iminus => "Iminus",
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdealKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown ideal family `{s}`"))
    }
}

/// One ideal of a family at a fixed genus, with its Gröbner basis and
/// quotient basis computed on first use.
#[derive(Debug)]
pub struct Ideal<F: Scalar> {
    kind: IdealKind,
    genus: u32,
    generators: Vec<Polynomial<F>>,
    gb: OnceLock<Result<GroebnerBasis<F>, GroebnerError>>,
    basis: OnceLock<Result<QuotientBasis, GroebnerError>>,
}

impl<F: Scalar> Ideal<F> {
    fn new(kind: IdealKind, genus: u32, zetas: &ZetaFamilies<F>) -> Self {
        let family = kind.family();
        let g = genus as i64;
        let generators = (g..g + 3)
            .map(|k| {
                let z = zetas.zeta(family, k);
                match kind {
                    IdealKind::Iplus => z.substitute(Var::Alpha, &F::zero()),
                    IdealKind::Iminus => z.substitute(Var::Gamma, &F::zero()),
                    _ => z,
                }
            })
            .collect();
        Ideal {
            kind,
            genus,
            generators,
            gb: OnceLock::new(),
            basis: OnceLock::new(),
        }
    }

    pub fn kind(&self) -> IdealKind {
        self.kind
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn ring(&self) -> VarSet {
        self.kind.ring()
    }

    pub fn groebner(&self) -> Result<&GroebnerBasis<F>, GroebnerError> {
        self.gb
            .get_or_init(|| buchberger_in_ring(&self.generators, MonomialOrder::Lex, self.ring()))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn quotient_basis(&self) -> Result<&QuotientBasis, GroebnerError> {
        self.basis
            .get_or_init(|| quotient_basis(self.groebner()?))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Dimension of the quotient ring.
    pub fn degree(&self) -> Result<usize, GroebnerError> {
        Ok(self.quotient_basis()?.len())
    }

    pub fn graded_poincare(&self) -> Result<PoincarePoly, GroebnerError> {
        Ok(self.quotient_basis()?.graded_poincare())
    }

    pub fn normal_form(&self, p: &Polynomial<F>) -> Result<Polynomial<F>, GroebnerError> {
        Ok(normal_form(p, self.groebner()?))
    }

    pub fn contains(&self, p: &Polynomial<F>) -> Result<bool, GroebnerError> {
        Ok(ideal_member(p, self.groebner()?))
    }

    /// Whether every generator of `other` lies in this ideal.
    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool, GroebnerError> {
        let gb = self.groebner()?;
        Ok(other.generators.iter().all(|p| ideal_member(p, gb)))
    }

    /// Equality as ideals, decided by comparing reduced bases.
    pub fn same_ideal(&self, other: &Ideal<F>) -> Result<bool, GroebnerError> {
        Ok(self.groebner()?.generators() == other.groebner()?.generators())
    }
}

/// Shared state for all computations: the generator families and a cache
/// of ideals keyed by kind and genus. Distinct keys can be computed from
/// different threads concurrently.
#[derive(Debug, Default)]
pub struct Engine<F: Scalar> {
    zetas: ZetaFamilies<F>,
    ideals: Mutex<IdealCache<F>>,
}

type IdealCache<F> = HashMap<(IdealKind, u32), Arc<Ideal<F>>>;

impl<F: Scalar> Engine<F> {
    pub fn new() -> Self {
        Engine {
            zetas: ZetaFamilies::new(),
            ideals: Mutex::new(HashMap::new()),
        }
    }

    /// An engine whose recursions carry a deliberate error.
    #[doc(hidden)]
    pub fn corrupted() -> Self {
        Engine {
            zetas: ZetaFamilies::corrupted(),
            ideals: Mutex::new(HashMap::new()),
        }
    }

    pub fn zetas(&self) -> &ZetaFamilies<F> {
        &self.zetas
    }

    pub fn zeta(&self, kind: FamilyKind, k: i64) -> Polynomial<F> {
        self.zetas.zeta(kind, k)
    }

    /// The ideal of `kind` at `genus`. Genus 0 gives the unit ideal.
    pub fn ideal(&self, kind: IdealKind, genus: u32) -> Arc<Ideal<F>> {
        let mut map = self.ideals.lock().expect("ideal cache poisoned");
        map.entry((kind, genus))
            .or_insert_with(|| Arc::new(Ideal::new(kind, genus, &self.zetas)))
            .clone()
    }

    pub fn groebner(&self, kind: IdealKind, genus: u32) -> Result<GroebnerBasis<F>, GroebnerError> {
        self.ideal(kind, genus).groebner().cloned()
    }
}
