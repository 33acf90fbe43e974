//! Van Kampen diagram machinery and a word-problem pipeline for Artin groups
//! whose defining graph contains no edge labelled 3.
//!
//! The crate is organised around a small number of layers:
//!
//! * [`graph`] / [`word`] / [`presentation`] — labelled defining graphs,
//!   free-group words with their length statistics, Artin relators and the
//!   small-cancellation checkers.
//! * [`diagram`] — planar and spherical combinatorial maps (rotation systems)
//!   realising van Kampen and Howie diagrams, with validation, serialization
//!   and DOT export.
//! * [`analysis`] / [`bands`] — Greendlinger regions, layer decompositions,
//!   bands and band-bundles.
//! * [`moves`] — diamond moves, prism spheres, I-moves and region transfer.
//! * [`quotient`] — the coarse diagram, the Howie contraction and the
//!   bigon-collapsed quotient, together with the skeleton maps between them.
//! * [`solver`] — the decision pipeline (piling, dihedral normal forms,
//!   brute-force oracles, bounded diagram search) and the area estimator.

pub mod analysis;
pub mod bands;
pub mod diagram;
pub mod experiment;
pub mod families;
pub mod graph;
pub mod moves;
pub mod presentation;
pub mod quotient;
pub mod solver;
pub mod word;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid graph: {0}")]
    Graph(String),
    #[error("invalid word: {0}")]
    Word(String),
    #[error("invalid diagram: {0}")]
    Diagram(String),
    #[error("move not applicable: {0}")]
    NotApplicable(String),
    #[error("adequacy violation: {0}")]
    Adequacy(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
