//! Signed-digit `g`-adic expansions of integers, word lengths on Cayley
//! graphs of `ℤ` with infinite generating sets, and searches for short
//! sums of signed prime powers.
//!
//! * [`gadic`]: minimal expansions, `ℓ_g(n)` and the closed form for `λ_g(k)`.
//! * [`cayley`]: breadth-first word lengths for arbitrary generating sets.
//! * [`prime`]: primality, prime-power detection, factoring and sieves.
//! * [`plength`]: prime-power lengths, Goldbach-type decompositions and the
//!   length-3 candidate sieve.
//! * [`dataset`]: tables and figure data as text, CSV, JSON or b-files.
//! * [`cli`]: the `gadic` command line.

pub mod cayley;
pub mod cli;
pub mod config;
pub mod dataset;
pub mod error;
pub mod gadic;
pub mod plength;
pub mod prime;

pub use error::{Error, Result};
