//! Generic initial ideals by random changes of coordinates, and hyperplane
//! sections.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::distraction::random_invertible;
use crate::error::{Error, Result};
use crate::groebner::PolyIdeal;
use crate::monomial::{stability_flags, MonomialIdeal};
use crate::polyring::{substitute_variable, LinearForm, OrderKind, OrderingSpec};

/// Coefficient bound for random coordinate changes and linear forms.
pub const COEFF_BOUND: i64 = 1000;
pub const DEFAULT_TRIALS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GinResult {
    /// Majority value over the trials.
    pub ideal: MonomialIdeal,
    pub trials_used: usize,
    /// True iff every trial produced the same ideal.
    pub agreed: bool,
    pub seeds: Vec<u64>,
    /// Set when the majority value is not strongly stable.
    pub warning: Option<String>,
}

/// Seed of trial `k` derived from the caller's seed.
pub fn trial_seed(seed: u64, k: usize) -> u64 {
    seed.wrapping_mul(1_000_003).wrapping_add(k as u64)
}

/// `in_ord(g(I))` for the random `g` drawn from `seed`.
pub fn initial_after_random_change(ideal: &PolyIdeal, ord: &OrderingSpec, seed: u64) -> MonomialIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = random_invertible(ideal.num_vars(), COEFF_BOUND, &mut rng);
    ideal
        .apply_linear_change(&g)
        .expect("random matrix is invertible")
        .initial_ideal(ord)
}

/// `gin_ord(I)` as the majority of `trials` independent random coordinate
/// changes. Trials run on separate threads; results are merged in seed
/// order, so the outcome depends only on the arguments.
pub fn gin(ideal: &PolyIdeal, ord: &OrderingSpec, trials: usize, rng_seed: u64) -> Result<GinResult> {
    if trials < 2 {
        return Err(Error::Precondition(format!("gin needs at least 2 trials, got {trials}")));
    }
    if ideal.is_zero() {
        return Err(Error::Precondition("gin of the zero ideal".into()));
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous("gin input".into()));
    }
    if ord.num_vars() != ideal.num_vars() {
        return Err(Error::Dimension("ordering and ideal in different rings".into()));
    }
    let seeds: Vec<u64> = (0..trials).map(|k| trial_seed(rng_seed, k)).collect();
    let results: Vec<MonomialIdeal> = std::thread::scope(|s| {
        let handles: Vec<_> = seeds
            .iter()
            .map(|&sd| s.spawn(move || initial_after_random_change(ideal, ord, sd)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("gin trial panicked")).collect()
    });
    let (best, count) = results
        .iter()
        .map(|r| (r, results.iter().filter(|s| *s == r).count()))
        .max_by_key(|&(_, c)| c)
        .expect("at least one trial");
    if 2 * count <= trials {
        return Err(Error::AmbiguousGin { trials });
    }
    let ideal = best.clone();
    let warning = suspicious(&ideal, ord);
    Ok(GinResult {
        ideal,
        trials_used: trials,
        agreed: count == trials,
        seeds,
        warning,
    })
}

fn suspicious(ideal: &MonomialIdeal, ord: &OrderingSpec) -> Option<String> {
    if stability_flags(ideal).is_strongly_stable {
        return None;
    }
    let note = match ord.kind() {
        OrderKind::Matrix(_) if !ord.is_degrevlex() => {
            " (matrix ordering: variables may not be ordered x1 > ... > xn)"
        }
        _ => "",
    };
    Some(format!("gin result {ideal} is not strongly stable{note}"))
}

/// The `h`-hyperplane section `I_h`, in the ring without `x_i`.
pub fn hyperplane_section(ideal: &PolyIdeal, h: &LinearForm, i: usize) -> Result<PolyIdeal> {
    let gens = ideal
        .gens()
        .iter()
        .map(|g| substitute_variable(g, i, h))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyIdeal::new(ideal.num_vars() - 1, gens))
}

/// A linear form with all coefficients nonzero, drawn uniformly from
/// `[-1000, 1000]`.
pub fn random_linear_form(n: usize, rng_seed: u64) -> LinearForm {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let coeffs: Vec<i64> = (0..n)
        .map(|_| loop {
            let c = rng.gen_range(-COEFF_BOUND..=COEFF_BOUND);
            if c != 0 {
                break c;
            }
        })
        .collect();
    LinearForm::from_i64(&coeffs)
}
