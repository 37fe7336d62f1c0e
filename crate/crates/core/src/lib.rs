//! Exact rational partition, subset-sum and knapsack solvers, together with
//! the reduction pipeline that makes them strongly NP-hard:
//!
//! 3-CNF (each variable at most four times)
//! → one-in-three gadget → all-the-same gadget
//! → unbounded subset sum / partition with prime-denominator weights.
//!
//! Also included: prime generation with its size bounds, the uniqueness
//! oracle for prime-denominator sums, and an FPTAS for rational 0-1 knapsack.

pub mod error;
pub mod fptas;
pub mod gadgets;
pub mod primes;
pub mod rational;
pub mod reduction;
pub mod sat;
pub mod solvers;

pub use error::{Error, Result};
pub use rational::Rational;
