//! Exact orbit counting for integer sequences.
//!
//! Any sequence of nonnegative integers can be read as the number of closed
//! orbits of each length of some map. Under that reading the classical
//! sequence transforms become dynamical operations:
//!
//! - [`transforms`]: periodic points <-> orbits (Möbius inversion) and
//!   orbits <-> orbit monoid (Euler transform),
//! - [`operators`]: Cartesian product, disjoint union and iteration of maps,
//! - [`dirichlet`] and [`zeta_series`]: truncated Dirichlet series and
//!   ordinary power series with exact rational coefficients,
//! - [`asymptotics`]: orbit-growth statistics (prime orbit and Mertens sums),
//! - [`oracle`]: brute-force ground truth from explicit unions of cycles,
//! - [`factorization`]: search for all ways a sequence splits as a product.
//!
//! Everything outside [`asymptotics`] is exact big-integer or big-rational
//! arithmetic. Sequences are one-indexed throughout.

pub mod asymptotics;
pub mod bfile;
pub mod cli;
pub mod dirichlet;
pub mod error;
pub mod factorization;
pub mod numtheory;
pub mod operators;
pub mod oracle;
pub mod sequences;
pub mod transforms;
pub mod verify;
pub mod zeta_series;

pub use error::{Error, Result};
pub use sequences::{PrimeSet, Sequence, View};
