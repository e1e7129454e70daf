pub mod cli;
pub mod coords;
pub mod cosets;
pub mod cube;
pub mod error;
pub mod pruning;
pub mod setgraph;
pub mod twophase;

pub use error::{Error, Result};
