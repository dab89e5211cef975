//! Castelnuovo–Mumford regularity of powers of edge ideals, computed from
//! first principles.
//!
//! - [`graph`]: simple graphs, subgraphs, Hamiltonian search, enumeration.
//! - [`monomial`]: monomials, monomial ideals, powers, colons, polarization.
//! - [`homology`]: multigraded Betti numbers via upper-Koszul complexes.
//! - [`invariants`]: matching numbers and the closed-form regularity formulas.
//! - [`even`]: even-connected pairs and colon ideals `(I^{s+1} : M)`.
//! - [`verify`]: sweeps comparing formulas with the homology engine.
//! - [`cache`]: on-disk cache of Betti tables.
//!
//! ```
//! use edgereg::{Graph, MonomialIdeal, BettiEngine};
//!
//! let c5 = MonomialIdeal::edge_ideal(&Graph::cycle(5).unwrap());
//! let engine = BettiEngine::default();
//! assert_eq!(engine.regularity(&c5).unwrap(), 3);
//! assert_eq!(engine.regularity(&c5.power(2).unwrap()).unwrap(), 4);
//! ```

pub mod cache;
pub mod even;
pub mod graph;
pub mod homology;
pub mod invariants;
pub mod monomial;
pub mod verify;

use thiserror::Error;

pub use cache::{BettiCache, CacheEntry, CacheError};
pub use even::{EdgeProduct, EvenConnectionCertificate, EvenError};
pub use graph::{Edge, Graph, GraphClass, GraphError, VertexSet};
pub use homology::{BettiEngine, BettiTable, EngineConfig, Field, HomologyError};
pub use invariants::{BoundReport, InvariantError, RegularityForm};
pub use monomial::{IdealError, Monomial, MonomialIdeal};
pub use verify::{Suite, SuiteConfig, VerificationReport, VerifyError};

/// Any error raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Even(#[from] EvenError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Cache(#[from] CacheError),
}

impl Error {
    /// True when a budget or engine capacity limit was hit.
    pub fn is_budget(&self) -> bool {
        match self {
            Error::Homology(h) | Error::Invariant(InvariantError::Homology(h)) | Error::Even(EvenError::Homology(h)) | Error::Cache(CacheError::Homology(h)) => {
                h.is_budget()
            }
            Error::Verify(VerifyError::Budget(_)) => true,
            _ => false,
        }
    }
}
