use std::fmt;

use serde::{Deserialize, Serialize};

use crate::polyring::{default_names, OrderingSpec, PowerProduct};

/// A monomial ideal, stored as its minimal generators.
///
/// Generators are pairwise non-dividing and sorted descending by degrevlex,
/// so structural equality is ideal equality. The zero ideal has no
/// generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<PowerProduct>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` and sorts them canonically.
    pub fn new(n: usize, gens: Vec<PowerProduct>) -> Self {
        assert!(gens.iter().all(|g| g.num_vars() == n), "generator in wrong ring");
        MonomialIdeal {
            n,
            gens: minimalize(gens),
        }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![PowerProduct::one(n)],
        }
    }

    /// `(x_1, ..., x_j)^c`, with `j` counted 1-based.
    pub fn segment_power(n: usize, j: usize, c: u32) -> Self {
        let gens = PowerProduct::all_of_degree(j, c)
            .into_iter()
            .map(|t| t.extend(n - j))
            .collect();
        Self::new(n, gens)
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[PowerProduct] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(PowerProduct::is_one)
    }

    pub fn contains(&self, t: &PowerProduct) -> bool {
        self.gens.iter().any(|g| g.divides(t))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(PowerProduct::degree).max().unwrap_or(0)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(self.n, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        Self::new(self.n, gens)
    }

    pub fn times(&self, t: &PowerProduct) -> MonomialIdeal {
        Self::new(self.n, self.gens.iter().map(|g| g.mul(t)).collect())
    }

    /// `I ∩ J`, generated by the pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Self::new(self.n, gens)
    }

    /// `I : t`.
    pub fn colon(&self, t: &PowerProduct) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| g.div(&g.gcd(t)).unwrap())
            .collect();
        Self::new(self.n, gens)
    }

    /// `I : x_i^inf`: drop `x_i` from every generator.
    pub fn saturate_by_var(&self, i: usize) -> MonomialIdeal {
        Self::new(self.n, self.gens.iter().map(|g| g.with_exponent(i, 0)).collect())
    }

    /// The saturation `I : (x1..xn)^inf`, as the intersection of the
    /// single-variable saturations. For strongly stable `I` this equals
    /// `I : x_n^inf`.
    pub fn saturate(&self) -> MonomialIdeal {
        if self.is_zero() || self.is_unit() {
            return self.clone();
        }
        let mut acc: Option<MonomialIdeal> = None;
        for i in 0..self.n {
            let s = self.saturate_by_var(i);
            if s.is_unit() {
                continue;
            }
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s),
            });
        }
        acc.unwrap_or_else(|| MonomialIdeal::unit(self.n))
    }

    pub fn is_saturated(&self) -> bool {
        self.saturate() == *self
    }

    /// Image under `x_i -> 0`, as an ideal in the remaining variables.
    pub fn set_var_zero(&self, i: usize) -> MonomialIdeal {
        Self::new(
            self.n - 1,
            self.gens
                .iter()
                .filter(|g| g.exponent(i) == 0)
                .map(|g| g.remove_var(i))
                .collect(),
        )
    }

    /// The extension of `I` to a ring with `extra` more trailing variables.
    pub fn extend(&self, extra: usize) -> MonomialIdeal {
        MonomialIdeal {
            n: self.n + extra,
            gens: self.gens.iter().map(|g| g.extend(extra)).collect(),
        }
    }

    /// True if `I` contains a pure power of every variable.
    pub fn is_zero_dimensional(&self) -> bool {
        (0..self.n).all(|i| {
            self.gens
                .iter()
                .any(|g| g.exponent(i) > 0 && g.support() == [i])
        }) || self.is_unit()
    }

    /// gcd of the minimal generators.
    pub fn gens_gcd(&self) -> Option<PowerProduct> {
        let mut it = self.gens.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, g| acc.gcd(g)))
    }

    /// True if every generator is a pure power of a variable.
    pub fn is_irreducible(&self) -> bool {
        !self.is_unit() && self.gens.iter().all(|g| g.support().len() == 1)
    }

    /// Power products of degree `d` lying in `I`.
    pub fn monomials_in_degree(&self, d: u32) -> Vec<PowerProduct> {
        PowerProduct::all_of_degree(self.n, d)
            .into_iter()
            .filter(|t| self.contains(t))
            .collect()
    }

    /// Generators sorted descending by `ord`.
    pub fn sorted_gens(&self, ord: &OrderingSpec) -> Vec<PowerProduct> {
        let mut g = self.gens.clone();
        g.sort_by(|a, b| ord.compare(b, a));
        g
    }

    pub fn display_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.display_with(names)).collect();
        format!("({})", parts.join(", "))
    }
}

/// Removes every power product divisible by another one and sorts the rest
/// descending by degrevlex.
pub fn minimalize(mut gens: Vec<PowerProduct>) -> Vec<PowerProduct> {
    gens.sort_by_key(PowerProduct::degree);
    gens.dedup();
    let mut kept: Vec<PowerProduct> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    if let Some(n) = kept.first().map(PowerProduct::num_vars) {
        let ord = OrderingSpec::degrevlex(n);
        kept.sort_by(|a, b| ord.compare(b, a));
    }
    kept
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.n)))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
