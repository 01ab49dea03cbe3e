//! Exact symbolic workbench for quantum Grassmannians, their straightening
//! laws, quantum Richardson quotients and toric degenerations.

pub mod acceptance;
pub mod classical;
pub mod degeneration;
pub mod error;
pub mod grassmann;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod qmatrix;
pub mod report;
pub mod richardson;
pub mod scalars;
pub mod toric;

pub use error::{Error, Result};
pub use scalars::{QScalar, Specialization};
