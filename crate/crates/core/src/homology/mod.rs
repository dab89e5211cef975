//! Multigraded Betti numbers of monomial ideals from upper-Koszul complexes.
//!
//! `β_{i,α}(I) = dim H̃_{i-1}(K^α(I); k)`, evaluated at every `α` in the lcm
//! lattice of the minimal generators (Betti numbers vanish elsewhere). The
//! default field is GF(2); the rationals, computed through integer Smith
//! normal form, are available as a cross-check.

mod betti;
mod complex;
mod gf2;
mod packed;
mod smith;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use betti::{BettiEngine, BettiEntry, BettiTable, EngineConfig, EngineStats, Finding};
pub use complex::{ReducedHomology, SimplicialComplex, TorsionFactor, UpperKoszulComplex};
pub use gf2::BitMatrix;
pub use packed::{MAX_PACKED_EXPONENT, MAX_PACKED_VARS};
pub use smith::invariant_factors;

use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Gf2,
    Rational,
}

impl Field {
    pub fn other(self) -> Field {
        match self {
            Field::Gf2 => Field::Rational,
            Field::Rational => Field::Gf2,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Field::Gf2 => "gf2",
            Field::Rational => "rational",
        }
    }
}

impl std::str::FromStr for Field {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "gf2" => Ok(Field::Gf2),
            "rational" | "q" => Ok(Field::Rational),
            _ => Err(format!("unknown field `{s}` (expected gf2 or rational)")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("face budget of {budget} exceeded while enumerating a complex")]
    FaceBudget { budget: usize },
    #[error("multidegree budget of {budget} exceeded while building the lcm lattice")]
    MultidegreeBudget { budget: usize },
    #[error("the zero ideal has no Betti table")]
    ZeroIdeal,
    #[error("regularity is not defined for the unit ideal")]
    UnitIdeal,
    #[error("{0} variables exceeds the engine limit of {MAX_PACKED_VARS}")]
    TooManyVariables(usize),
    #[error("exponent {0} exceeds the engine limit of {MAX_PACKED_EXPONENT}")]
    ExponentTooLarge(u8),
    #[error("ambient variable counts differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("integer overflow during Smith normal form")]
    IntegerOverflow,
    #[error("self-check failed: {0}")]
    SelfCheck(String),
}

impl HomologyError {
    /// Resource and capacity limits, as opposed to bad input or internal faults.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            HomologyError::FaceBudget { .. }
                | HomologyError::MultidegreeBudget { .. }
                | HomologyError::TooManyVariables(_)
                | HomologyError::ExponentTooLarge(_)
        )
    }
}

/// `K^α(I)`.
pub fn upper_koszul(ideal: &MonomialIdeal, alpha: &Monomial) -> Result<UpperKoszulComplex, HomologyError> {
    UpperKoszulComplex::new(ideal, alpha)
}

/// Reduced homology ranks `H̃_{-1}, H̃_0, ...` with the default face budget.
pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: Field) -> Result<Vec<u64>, HomologyError> {
    Ok(complex.reduced_homology(field, EngineConfig::default().max_faces)?.ranks)
}

/// Betti table over `field` with a default engine.
pub fn betti_table(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable, HomologyError> {
    BettiEngine::new(EngineConfig { field, ..EngineConfig::default() }).betti_table(ideal)
}

/// `reg(I) = max { j - i : β_{i,j}(I) ≠ 0 }` with a default engine.
pub fn regularity(ideal: &MonomialIdeal, field: Field) -> Result<usize, HomologyError> {
    BettiEngine::new(EngineConfig { field, ..EngineConfig::default() }).regularity(ideal)
}
