//! Prime graph complements of groups whose composition factors are cyclic
//! or one fixed PSL(2,q): exact graph algorithms, analytic spectra,
//! fixed-point arithmetic, small-graph catalogs, decision procedures and
//! constructive witnesses, each checked against brute-force oracles.

pub mod arith;
pub mod catalog;
pub mod chars;
pub mod classify;
pub mod error;
pub mod groupkit;
pub mod smallgraph;
pub mod spectra;
pub mod witness;

pub use error::{Error, Result};
