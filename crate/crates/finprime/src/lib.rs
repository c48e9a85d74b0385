//! Primality of DFAs that recognize finite languages.
//!
//! The crate decides whether a DFA can be written as an intersection (or
//! union, or union of intersections) of strictly smaller DFAs, builds the
//! decompositions and primality witnesses that certify each verdict, and
//! checks everything against brute-force oracles. It also generates the
//! reduction gadgets whose minimality or primality encodes graph
//! reachability and DFA emptiness.

pub mod automaton;
pub mod classifier;
pub mod error;
pub mod factories;
pub mod gadgets;
pub mod oracle;
pub mod primality;
pub mod sampling;

pub use automaton::{Dfa, LongestWord, ProductMode, Word};
pub use classifier::LinearProfile;
pub use error::{Error, Result};
pub use primality::{Branch, Decomposition, DecompositionMode, Factor, PrimalityVerdict, Status};
