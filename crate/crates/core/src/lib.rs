//! Exact and certified bounds for the majority problem on graphs.

pub mod adversary;
pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod generate;
pub mod graph;
pub mod nondet;
pub mod solver;
pub mod state;
pub mod strategy;
pub mod suite;
pub mod weighted;

pub use error::{Error, Result};
pub use graph::{edge, Color, Coloring, Edge, Graph};
pub use state::{Answer, Component, Outcome, QueryState};
pub use weighted::{solve_weighted, WeightVector, WeightedSolver};
