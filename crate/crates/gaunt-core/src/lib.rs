//! Directed chain complexes with atomic bases and their homotopy posets.
//!
//! The crate builds the standard shapes (orientals, cubes, disks, Gray
//! tensors, suspensions, wedges), enumerates their oriented cells, and
//! computes the ordered homotopy invariants, truncations, fibers and
//! complicial nerves exposed through the `gaunt` CLI.

pub mod acceptance;
pub mod cells;
pub mod chain;
pub mod complex;
pub mod error;
pub mod fiber;
pub mod homotopy;
pub mod mapping;
pub mod poset;
pub mod shapes;
pub mod strat;
pub mod truncation;

pub use chain::{Chain, Coeff};
pub use complex::{Complex, Diagnostics};
pub use error::{Error, Result};
pub use mapping::AdcMap;
