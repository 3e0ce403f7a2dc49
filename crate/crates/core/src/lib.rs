pub mod cli;
pub mod error;
pub mod field;
pub mod io;
pub mod lab;
pub mod matrix;
pub mod path;
pub mod spectral;

pub use error::{Error, Result};
