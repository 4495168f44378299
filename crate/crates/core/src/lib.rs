//! Exact tools for Hilbert functions, Macaulay bounds, artinian Gorenstein
//! algebras and the defect of nodal hypersurfaces.

pub mod casework;
pub mod cli;
pub mod error;
pub mod gorenstein;
pub mod ideals;
pub mod io;
pub mod macaulay;
pub mod nodal;
pub mod poly;
pub mod random;

pub use error::{Error, Result};
