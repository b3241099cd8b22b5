//! Seeded verification battery for the determinant and quasideterminant
//! theory, plus the independent oracles it checks against.
//!
//! Every suite draws its instances from a [`rand_chacha::ChaCha8Rng`]
//! seeded from one battery seed, so a rerun with the same seed reproduces
//! the identical report byte for byte.

pub mod gen;
pub mod oracles;
pub mod report;
pub mod suites;

pub use report::{BatteryReport, Scale, SuiteReport};
pub use suites::run_all;
