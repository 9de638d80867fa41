//! Exact and numeric Laplacian eigenvalue distributions of small graphs.

pub mod enumeration;
pub mod cli;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod report;
pub mod spectra;
pub mod theorems;

pub use error::{Error, Graph6Error, Result};
pub use graph::{Gadget, Girth, Graph};
