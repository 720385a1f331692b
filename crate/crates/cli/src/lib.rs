//! Front end for `hawking-cv`: single points, sweeps, figure grids and
//! critical masses, written as CSV or JSON.

pub mod app;
pub mod config;
pub mod error;
pub mod figures;
pub mod output;
pub mod sweep;

pub use error::{CliError, Result};
