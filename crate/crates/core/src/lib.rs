//! Exact spectra of diagrams of finite 3-transposition groups.
//!
//! The crate evaluates closed-form spectra for every central type, checks them
//! against strongly regular graph identities, rebuilds the base diagrams from
//! forms over GF(2), GF(3) and GF(4), and classifies minimal eigenvalues.

pub mod catalog;
pub mod cli;
pub mod eigclass;
pub mod graph;
pub mod lifts;
pub mod numbers;
pub mod oracle;
pub mod spectrum;
pub mod srg;

pub use catalog::{CentralType, Family, Sign};
pub use graph::BitMatrix;
pub use numbers::Rational;
pub use spectrum::Spectrum;
pub use srg::ExtendedParams;
