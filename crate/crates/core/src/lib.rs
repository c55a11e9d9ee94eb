pub mod error;
pub mod lattice;
pub mod residue;
pub mod toric;

pub use error::{Error, Result};
pub mod degeneration;
pub mod report;
pub mod clemens;
pub mod builtin;
pub mod cli;
