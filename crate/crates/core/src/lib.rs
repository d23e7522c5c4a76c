//! Exact Jantzen-type sum formulas for Weyl and tilting modules of the
//! classical groups, and their quantum analogues at a root of unity.
//!
//! Everything is computed in exact integer / half-integer arithmetic in the
//! standard epsilon-coordinates. The crate is organized bottom-up:
//!
//! * [`arith`] — formal divisors, p-adic valuations, Gaussian multiplicities
//! * [`rootsys`] — the root systems A/B/C/D and their weights
//! * [`weylact`] — Weyl groups as signed permutations, the dot action,
//!   reduction to the dominant chamber
//! * [`chars`] — chi-combinations, weight-multiset expansion (Freudenthal),
//!   Weyl dimensions
//! * [`rootsets`] — the root-with-multiplicity sets attached to a pair of
//!   dominant weights, by brute force and by the fast case analysis
//! * [`sumformulas`] — Euler coefficients, torsion divisors, and the Jantzen
//!   and tilting sum formulas, classical and quantum
//! * [`verify`] — randomized cross-checks of the fast paths against oracles

pub mod arith;
pub mod chars;
pub mod error;
pub mod rootsets;
pub mod rootsys;
pub mod sumformulas;
pub mod verify;
pub mod weylact;

pub use arith::{Divisor, QuantumSpec};
pub use error::Error;
pub use rootsys::{Family, Root, RootSystem, Weight};
pub use weylact::{Reduction, WeylElement};
