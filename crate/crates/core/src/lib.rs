//! Exact computer algebra over Q for distractions, stable ideals and
//! generic initial ideals.

pub mod checks;
pub mod distraction;
pub mod error;
pub mod gin;
pub mod groebner;
pub mod monomial;
pub mod numeric;
pub mod points;
pub mod polyring;

pub use error::{Error, Result};
