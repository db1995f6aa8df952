//! Exact-arithmetic machinery for double Schubert polynomials and the
//! complexes they control.
//!
//! The crate is organized around a chain of increasingly rich objects:
//!
//! * [`perm`] — permutations in one-line notation, their diagrams, rank
//!   functions, Bruhat orders, and maximal transitions.
//! * [`poly`] — sparse multivariate polynomials over arbitrary-precision
//!   integers, divided difference operators, and double Schubert
//!   polynomials.
//! * [`superlabel`] — the marked/unmarked super alphabet and balanced super
//!   labelings (BSLs) of permutation diagrams, whose generating function
//!   recovers the double Schubert polynomial.
//! * [`functor`] — the Z/2-graded Schubert functor: row tensor spaces,
//!   column exterior spaces, the projection map between them, and
//!   linear-algebra straightening onto the BSL image basis.
//! * [`complex`] — Schubert complexes of flagged maps, with symbolic
//!   differentials over the generic matrix and exact homology at
//!   rational or prime-field specializations.
//! * [`ideal`] — Schubert determinantal ideals, their essential
//!   (southeast-corner) generators, and degeneracy-locus membership tests.
//!
//! Everything is exact: polynomial coefficients are big integers, linear
//! algebra runs over the rationals or a large prime field, and no floating
//! point is used anywhere.

pub mod complex;
mod error;
pub mod functor;
pub mod ideal;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod superlabel;
pub mod verify;

pub use error::Error;

#[cfg(doctest)]
mod book;
