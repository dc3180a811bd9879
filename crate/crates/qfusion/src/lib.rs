//! Exact fusion coefficients of the sl(n) Verlinde algebra and three-point
//! genus-zero Gromov-Witten invariants of Grassmannians, computed from
//! boson/fermion lattice operators, from spectral (Bethe ansatz) formulas
//! and from classical combinatorial oracles.

pub mod boson;
pub mod error;
pub mod fermion;
pub mod identities;
pub mod laurent;
pub mod ncpoly;
pub mod partition;
pub mod plactic;
pub mod spectral;
pub mod state;
pub mod suites;
pub mod symfunc;
pub mod weight;
pub mod word;

pub use error::{Error, Result};
pub use laurent::LaurentInt;
pub use partition::Partition;
pub use state::{BosonState, FermionState, StateVector};
pub use weight::AffineWeight;
pub use word::Word01;
