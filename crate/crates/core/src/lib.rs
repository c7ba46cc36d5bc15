//! Searches for rainbow induced paths in vertex-coloured graphs, executable
//! versions of the constructions used to prove their existence, and
//! exhaustive checkers for conjectures about them on small graphs.
//!
//! Module map:
//! - [`graph`], [`invariants`], [`paths`]: graphs, colourings, exact χ/ω/girth,
//!   rainbow and induced path/hole searches.
//! - [`generators`]: Mycielski iterates, shift graphs of triples, standard families.
//! - [`machinery`]: colour orientations, gradings, the grading-lemma witness,
//!   `A(z)`/`B(Q)` sets and the constant recursion.
//! - [`lab`]: colour-partition enumeration and conjecture/claim verification.

pub mod bitset;
pub mod budget;
pub mod error;
pub mod generators;
pub mod graph;
pub mod invariants;
pub mod lab;
pub mod machinery;
pub mod paths;

pub use bitset::BitSet;
pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{is_proper, is_rainbow, ColourPartition, Colouring, Graph};
pub use paths::{HoleWitness, PathWitness};
