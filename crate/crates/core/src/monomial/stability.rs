//! Stable and strongly stable ideals: predicates and closures.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::MonomialIdeal;
use crate::polyring::PowerProduct;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClosureMode {
    /// Special elementary moves `x_i * t / x_m(t)`.
    Stable,
    /// All elementary moves `x_i * t / x_j`, `i <= j`.
    StronglyStable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityFlags {
    pub is_stable: bool,
    pub is_strongly_stable: bool,
}

/// Power products obtained from `t` by one move of the given kind.
pub fn moves(t: &PowerProduct, mode: ClosureMode) -> Vec<PowerProduct> {
    let mut out = Vec::new();
    match mode {
        ClosureMode::Stable => {
            let m = t.max_index();
            if m == 0 {
                return out;
            }
            let base = t.over_var(m - 1).unwrap();
            for i in 0..m - 1 {
                out.push(base.times_var(i));
            }
        }
        ClosureMode::StronglyStable => {
            for j in t.support() {
                let base = t.over_var(j).unwrap();
                for i in 0..j {
                    out.push(base.times_var(i));
                }
            }
        }
    }
    out
}

/// Checks both stability conditions on the minimal generators only.
///
/// This suffices: if `u = t*s` with `t` a generator, a move on `u` either
/// moves a variable of `t` (giving a move of `t` times `s`) or a variable of
/// `s` (giving `t` times a power product). For special moves, `x_m(u)`
/// dividing `t` forces `m(t) = m(u)`.
pub fn stability_flags(ideal: &MonomialIdeal) -> StabilityFlags {
    let check = |mode| {
        ideal
            .gens()
            .iter()
            .all(|t| moves(t, mode).iter().all(|s| ideal.contains(s)))
    };
    StabilityFlags {
        is_stable: check(ClosureMode::Stable),
        is_strongly_stable: check(ClosureMode::StronglyStable),
    }
}

/// Slow oracle: checks the move condition on every power product of the
/// ideal up to degree `bound`.
pub fn stability_flags_exhaustive(ideal: &MonomialIdeal, bound: u32) -> StabilityFlags {
    let check = |mode| {
        (0..=bound).all(|d| {
            ideal
                .monomials_in_degree(d)
                .iter()
                .all(|t| moves(t, mode).iter().all(|s| ideal.contains(s)))
        })
    };
    StabilityFlags {
        is_stable: check(ClosureMode::Stable),
        is_strongly_stable: check(ClosureMode::StronglyStable),
    }
}

/// The smallest (strongly) stable ideal containing `seeds`.
///
/// Breadth-first closure of the seeds under moves; the ideal generated by
/// the reached power products is closed because its minimal generators are.
pub fn closure(n: usize, seeds: &[PowerProduct], mode: ClosureMode) -> MonomialIdeal {
    let mut seen: HashSet<PowerProduct> = HashSet::new();
    let mut queue: VecDeque<PowerProduct> = VecDeque::new();
    for s in seeds {
        if seen.insert(s.clone()) {
            queue.push_back(s.clone());
        }
    }
    while let Some(t) = queue.pop_front() {
        for s in moves(&t, mode) {
            if seen.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    MonomialIdeal::new(n, seen.into_iter().collect())
}

pub fn stable_closure(n: usize, seeds: &[PowerProduct]) -> MonomialIdeal {
    closure(n, seeds, ClosureMode::Stable)
}

pub fn strongly_stable_closure(n: usize, seeds: &[PowerProduct]) -> MonomialIdeal {
    closure(n, seeds, ClosureMode::StronglyStable)
}
