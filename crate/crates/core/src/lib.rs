//! Quantum color-coding under a random permutation channel.
//!
//! `N` objects are labelled with `d`-level quantum systems and sent through a
//! channel that applies an unknown uniformly random permutation. This crate
//! computes the best achievable probability of recovering the permutation,
//! both exactly (by summing over all partitions of `N`) and by Monte Carlo
//! over random Young diagrams, and checks the underlying measurement
//! construction by dense matrix simulation at small sizes.
//!
//! - [`young`]: partitions, hook lengths, irrep dimensions and multiplicities,
//!   characters, RSK sampling.
//! - [`coding`]: exact quantum optimum, classical optimum, counting bound.
//! - [`asymptotics`]: threshold sweeps, tail-bound scans, Monte Carlo estimators.
//! - [`qsim`]: permutation operators, covariant POVMs, pretty-good measurement.
//! - [`report`]: CSV and JSON serialization of the above.

pub mod asymptotics;
pub mod coding;
pub mod error;
pub mod numeric;
pub mod qsim;
pub mod report;
pub mod young;

pub use error::{Error, Result};
