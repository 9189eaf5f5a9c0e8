//! Groebner bases, normal forms, initial ideals, intersections and
//! saturations for ideals of Q[x1..xn].

mod engine;
mod ideal;

pub use ideal::{PolyIdeal, SaturationMode};
