//! Distraction matrices and the distraction operator `D_L`.

mod matrix;
mod radical;

pub use matrix::{
    random_invertible, DistractionKind, DistractionMatrix, GENERIC_BOUND, GENERIC_REDRAWS,
};
pub use radical::{
    all_radirred_primes, is_radical_for, radical_certificate, radirred_forms, radirred_primes,
};
