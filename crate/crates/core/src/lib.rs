pub mod cli;
pub mod ensemble;
pub mod error;
pub mod grid;
pub mod kernels;
pub mod noise;
pub mod problem;
pub mod quad;
pub mod spectral;
pub mod stability;
pub mod solver;
pub mod specfun;

pub use error::{Error, Result};
