//! Exact representation theory of Dynkin and Euclidean quivers over the rationals.

pub mod analysis;
pub mod decompose_a;
pub mod decompose_d;
pub mod error;
pub mod format;
pub mod knit;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod sample;

pub use error::{Error, Result};
