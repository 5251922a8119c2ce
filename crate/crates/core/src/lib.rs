//! Monomial ideals in `K[x_1, ..., x_n]` (characteristic 0): irreducible
//! decomposition, multigraded Betti numbers through lcm-lattice homology,
//! monomial localization, and the stable projective dimension test together
//! with the closed forms for Veronese-type and transversal ideals.

pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod expr;
pub mod homology;
pub mod ideal;
mod linalg;
pub mod localization;
pub mod polymatroidal;
pub mod ring;
pub mod stability;

pub use decomposition::{Decomposition, IrreducibleComponent, MonomialPrime};
pub use error::{Error, Result};
pub use expr::{eval, parse, parse_ideal, render, IdealExpr};
pub use homology::{betti_table, BettiTable, SimplicialComplex};
pub use ideal::MonomialIdeal;
pub use localization::{localize, LocalizedIdeal};
pub use polymatroidal::{TransversalSpec, VeroneseParams};
pub use ring::{Monomial, Ring};
pub use stability::{classify, is_stable_pd, Mode, StabilityChecker, StabilityReport};
