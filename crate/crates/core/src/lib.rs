pub mod altspace;
pub mod bilinear;
pub mod cli;
pub mod error;
pub mod gf;
pub mod graph;
pub mod group;
pub mod limits;

pub use error::{Error, Result};
pub use limits::Limits;
