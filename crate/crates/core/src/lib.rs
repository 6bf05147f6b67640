pub mod cli;
pub mod em_elast;
pub mod error;
pub mod micropolar;
pub mod model;
pub mod poly;
pub mod quadrature;
pub mod quasicrystal;
pub mod report;
pub mod rund;
pub mod symmetry;
pub mod tensor;
pub mod variational;

pub use error::{Error, Result};
