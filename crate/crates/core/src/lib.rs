//! Exact enumeration of pattern-avoiding parking functions.
//!
//! Every closed form in this crate is paired with a brute-force counter so
//! the two can be checked against each other:
//!
//! * [`combinatorics`]: big-integer counts, binomials, Bareiss determinants,
//!   compositions and partitions.
//! * [`patterns`]: words, permutations, standardization and containment.
//! * [`parking`]: the parking process, parking functions and their labeled
//!   Dyck paths.
//! * [`tableaux`]: hook lengths, hook-content evaluation, Kostka numbers, RSK.
//! * [`lattice_paths`]: Dyck paths by ascent composition, the
//!   nonintersecting-path bijection, and the Rothe boundary of 132-avoiders.
//! * [`sylvester`]: binary search tree insertion and the (#-)Sylvester
//!   congruences.
//! * [`closed_forms`]: the enumeration formulas.
//! * [`asymptotics`]: growth-rate limits and their exact consequences.
//! * [`verify`]: invariant suites shared by the CLI.

pub mod asymptotics;
pub mod closed_forms;
pub mod combinatorics;
mod error;
pub mod lattice_paths;
pub mod oracle;
pub mod parking;
pub mod patterns;
pub mod sylvester;
pub mod tableaux;
pub mod verify;

pub use combinatorics::{BigCount, Composition, IntegerMatrix, Partition, WeakComposition};
pub use error::{Error, Result};
pub use patterns::{Permutation, Word};
