//! Monomial ideals: minimal generators, stability, closures, decomposition,
//! Hilbert functions and Eliahou-Kervaire Betti numbers.

mod betti;
mod decomposition;
mod hilbert;
mod ideal;
mod principal;
mod probe;
mod stability;

pub use betti::{ek_betti, ek_pairs, BettiTable};
pub use decomposition::{intersect_all, irreducible_decomposition};
pub use hilbert::{binomial, hilbert, monomial_count, HilbertVector};
pub use ideal::{minimalize, MonomialIdeal};
pub use principal::{
    check_special_parts, principal_formulas, special_gin, special_stable_ideal, SpecialPart,
};
pub use probe::{borel_probe, random_unipotent};
pub use stability::{
    closure, moves, stability_flags, stability_flags_exhaustive, stable_closure,
    strongly_stable_closure, ClosureMode, StabilityFlags,
};
