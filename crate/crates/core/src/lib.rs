pub mod cli;
pub mod cone;
pub mod enumeration;
pub mod error;
mod linalg;
pub mod oracle;
pub mod paths;
pub mod quasipoly;
pub mod semigroup;
pub mod verify;

pub use cone::{ConeModel, EdgeSet, SigmaLocus};
pub use enumeration::{ClassFilter, CountTable, Enumerator};
pub use error::{Error, Result};
pub use semigroup::{GapSet, Semigroup};
