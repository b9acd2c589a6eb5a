//! The 0-rook monoid `R_n^0`: rook vectors, the right action, R-codes,
//! the right weak order, stellar quotients and representation theory.

pub mod action;
pub mod error;
pub mod order;
pub mod rcode;
pub mod reptheory;
pub mod rookcore;
pub mod stellar;
pub mod verify;

pub use error::{Error, Result};
pub use rookcore::RookVector;
