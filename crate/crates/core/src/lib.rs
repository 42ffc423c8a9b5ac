//! Exact arithmetic over Z[ζ₅] and the capitulation analysis of pure
//! metacyclic fields k = Q(⁵√n, ζ₅) whose 5-class group has type (5, 5)
//! with every class ambiguous.

pub mod capitulation;
pub mod cas;
pub mod classify;
pub mod cyclotomic;
pub mod error;
pub mod fixtures;
pub mod primes;
pub mod report;
pub mod scan;
pub mod symbols;

pub use cyclotomic::{CycInt, LambdaExpansion};
pub use error::{Error, Result};
