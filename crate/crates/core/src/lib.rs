//! Exact computation of multigraded invariants for determinantal, Schubert,
//! binomial edge and linear-closure ideals.
//!
//! Everything is computed over the rationals. The crate is organised bottom
//! up: [`poly`] is the polynomial substrate, [`symfunc`], [`latticepaths`] and
//! [`hilbert`] provide the combinatorics, [`groebner`] is the Gröbner engine,
//! and the remaining modules assemble these into the individual families of
//! ideals. [`verify`] bundles the end-to-end checks used by the CLI.

pub mod binedge;
pub mod closure;
pub mod determinantal;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod latticepaths;
pub mod poly;
pub mod schubert;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use poly::{Grading, Monomial, Polynomial, TermOrder, Variable};
