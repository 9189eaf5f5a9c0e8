use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::hilbert::{binomial, monomial_count, HilbertVector};
use super::stability::stability_flags;
use super::MonomialIdeal;
use crate::error::{Error, Result};

/// Graded Betti numbers `beta_{i,j}` of an ideal, keyed by `(i, j)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, u32), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: u32, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    /// Coefficients of the numerator `K(t)` of the Hilbert series of `P/I`,
    /// `HS(t) = K(t) / (1 - t)^n`, indexed by degree.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
        let mut k = vec![0i64; top + 1];
        k[0] = 1;
        for (&(i, j), &b) in &self.entries {
            let sign = if i % 2 == 0 { -1 } else { 1 };
            k[j as usize] += sign * b as i64;
        }
        k
    }

    /// `HF_{P/I}(0..=d_max)` recovered from the Betti numbers.
    pub fn hilbert_function(&self, n: usize, d_max: u32) -> HilbertVector {
        let k = self.hilbert_numerator();
        let values = (0..=d_max)
            .map(|d| {
                let v: i64 = k
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j as u32 <= d)
                    .map(|(j, &c)| c * monomial_count(n, d - j as u32) as i64)
                    .sum();
                v as u64
            })
            .collect();
        HilbertVector { values, d_max }
    }
}

/// Eliahou-Kervaire Betti numbers: a minimal generator `u` of degree `d`
/// contributes `binomial(m(u) - 1, i)` to `beta_{i, d + i}`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let mut table = BettiTable::default();
    if ideal.is_unit() {
        table.add(0, 0, 1);
        return Ok(table);
    }
    if !stability_flags(ideal).is_stable {
        return Err(Error::NotStable);
    }
    for u in ideal.gens() {
        let m = u.max_index() as u64;
        let d = u.degree();
        for i in 0..m {
            table.add(i as usize, d + i as u32, binomial(m - 1, i));
        }
    }
    Ok(table)
}

/// The multiset `{(m(u), deg(u))}` over minimal generators, sorted.
pub fn ek_pairs(ideal: &MonomialIdeal) -> Vec<(usize, u32)> {
    let mut v: Vec<(usize, u32)> = ideal
        .gens()
        .iter()
        .map(|u| (u.max_index(), u.degree()))
        .collect();
    v.sort_unstable();
    v
}
