pub mod algebra;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod massey;
pub mod model;
pub mod rings;
pub mod verify;

pub use error::{Error, Result};
