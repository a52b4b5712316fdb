//! Exact Kronecker coefficients `g((m^t), (n-d, 1^d), ν)` counted by
//! colored Yamanouchi tableaux, an independent character-sum oracle, and
//! checks of the row-insertion stability of these coefficients.

pub mod blasiak;
pub mod cli;
pub mod conversion;
pub mod error;
pub mod fixtures;
pub mod oracle;
pub mod partitions;
pub mod stability;
pub mod tableaux;

pub use error::{Error, Result};
pub use partitions::{Composition, Partition};
pub use tableaux::{ColoredLetter, ColoredTableau, Order};
