pub mod chow;
pub mod cremona;
pub mod error;
pub mod fm;
pub mod lattice;
pub mod matrix;
pub mod moduli;
pub mod properties;
pub mod verify;

pub use error::{Error, Result};
