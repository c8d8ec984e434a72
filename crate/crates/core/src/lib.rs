//! Exact arithmetic for enumerative-invariant generating functions of
//! complex surfaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`]: truncated power series with exact rational coefficients
//!   and a rational exponent shift, plus two-variable Poincaré series.
//! * [`linalg`]: exact row reduction, determinants and nullspaces.
//! * [`modular`]: q-expansions of η, E2, E4, E6 and the E8 theta series,
//!   and exact fitting of quasi-homogeneous Eisenstein polynomials.
//! * [`lattice`]: integral lattices, intersection pairings, signatures,
//!   short-vector enumeration and exceptional-class search.
//! * [`invariants`]: Hilbert-scheme series, Göttsche's formula,
//!   half-K3 series, Seiberg–Witten values and wall-crossing sums.
//! * [`verify`]: the golden verification suite.
//! * [`cli`]: the `enumgeo` command-line front end.

// Matrix code indexes rows and columns symmetrically.
#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod cli;
pub mod invariants;
pub mod lattice;
pub mod linalg;
pub mod modular;
pub mod series;
pub mod verify;

pub use arith::Rational;
pub use series::{BiSeries, QSeries, SeriesError};
