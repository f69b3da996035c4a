//! Exact v-numbers of monomial ideals and of edge ideals of simple graphs.
//!
//! * [`monomial`]: monomials, monomial ideals, colons, powers, regularity of
//!   zero-dimensional quotients.
//! * [`engine`]: v-numbers, localized v-numbers and associated primes, by
//!   exhaustive search and by the m-primary matrix formula.
//! * [`graph`]: graph constructions, edge ideals and stable-set v-numbers.
//! * [`asymptotics`]: v-numbers of powers and the related bounds.
//! * [`parse`]: text grammars for ideals and graphs.

pub mod asymptotics;
pub mod engine;
pub mod error;
pub mod graph;
pub mod monomial;
pub mod parse;

pub use engine::{SearchConfig, VWitness, DEFAULT_BUDGET};
pub use error::{Error, Result};
pub use graph::{Graph, StableWitness};
pub use monomial::{Monomial, MonomialIdeal, MonomialPrime};
