use serde::{Deserialize, Serialize};

use super::MonomialIdeal;
use crate::polyring::PowerProduct;

/// `HF_{P/I}(0..=d_max)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertVector {
    pub values: Vec<u64>,
    pub d_max: u32,
}

/// Number of power products of degree `d` in `n` variables.
pub fn monomial_count(n: usize, d: u32) -> u64 {
    if n == 0 {
        return u64::from(d == 0);
    }
    binomial((n - 1) as u64 + u64::from(d), u64::from(d))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Counts standard power products degree by degree.
pub fn hilbert(ideal: &MonomialIdeal, d_max: u32) -> HilbertVector {
    let n = ideal.num_vars();
    let values = (0..=d_max)
        .map(|d| {
            PowerProduct::all_of_degree(n, d)
                .iter()
                .filter(|t| !ideal.contains(t))
                .count() as u64
        })
        .collect();
    HilbertVector { values, d_max }
}
