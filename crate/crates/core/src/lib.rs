pub mod blowup;
pub mod canonical;
pub mod cli;
pub mod counting;
pub mod error;
pub mod graph;
pub mod grid;
pub mod ledger;
pub mod limit;
pub mod qp;
pub mod rational;
pub mod search;

pub use error::{Error, Result};
pub use graph::SmallGraph;
pub use rational::Rational;
