//! Gallai and transitive colorings of matroids and oriented matroids.

pub mod algebra;
pub mod bijections;
pub mod coloring;
pub mod enumeration;
pub mod error;
pub mod input;
pub mod matroid;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod report;
pub mod set;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
