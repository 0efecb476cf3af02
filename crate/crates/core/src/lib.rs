//! Deck groups of the cubic spherical 3-manifolds C2 and C3, their periodic
//! harmonics on the 3-sphere, and the induced representations of the
//! hyperoctahedral Coxeter group that organize them.

pub mod cli;
pub mod cyclo;
pub mod deck;
pub mod error;
pub mod group;
pub mod harmonics;
pub mod induced;
pub mod quadrature;
pub mod reference;
pub mod report;
pub mod su2;
pub mod suites;
pub mod wigner;

pub use error::{Error, Result};
