use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

pub(crate) type Exponents = SmallVec<[u16; 8]>;

/// A power product `x1^a1 * ... * xn^an`, stored as its exponent vector.
///
/// Variables are addressed with 0-based indices. The derived `Ord` is the
/// lexicographic order on exponent vectors; it is only used for canonical
/// storage, never as a term ordering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PowerProduct {
    exps: Exponents,
}

impl PowerProduct {
    pub fn new(exps: &[u16]) -> Self {
        PowerProduct {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn from_u32(exps: &[u32]) -> Self {
        PowerProduct {
            exps: exps
                .iter()
                .map(|&e| u16::try_from(e).expect("exponent exceeds u16"))
                .collect(),
        }
    }

    /// The power product 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        PowerProduct {
            exps: SmallVec::from_elem(0, n),
        }
    }

    /// The variable `x_i` (0-based) in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        let mut t = Self::one(n);
        t.exps[i] = 1;
        t
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// The maximum index `m(t)`, 1-based: the largest `i` with `x_i | t`.
    /// `m(1) = 0`.
    pub fn max_index(&self) -> usize {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map_or(0, |p| p + 1)
    }

    pub fn divides(&self, other: &PowerProduct) -> bool {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &PowerProduct) -> PowerProduct {
        PowerProduct {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &PowerProduct) -> Option<PowerProduct> {
        if !other.divides(self) {
            return None;
        }
        Some(PowerProduct {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &PowerProduct) -> PowerProduct {
        PowerProduct {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &PowerProduct) -> PowerProduct {
        PowerProduct {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &PowerProduct) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Multiplies by `x_i`.
    pub fn times_var(&self, i: usize) -> PowerProduct {
        let mut t = self.clone();
        t.exps[i] += 1;
        t
    }

    /// Divides by `x_i` if possible.
    pub fn over_var(&self, i: usize) -> Option<PowerProduct> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut t = self.clone();
        t.exps[i] -= 1;
        Some(t)
    }

    pub fn with_exponent(&self, i: usize, e: u16) -> PowerProduct {
        let mut t = self.clone();
        t.exps[i] = e;
        t
    }

    /// Appends `extra` variables with exponent 0.
    pub fn extend(&self, extra: usize) -> PowerProduct {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat_n(0, extra));
        PowerProduct { exps }
    }

    /// Drops the coordinate of variable `i`.
    pub fn remove_var(&self, i: usize) -> PowerProduct {
        let mut exps = self.exps.clone();
        exps.remove(i);
        PowerProduct { exps }
    }

    /// Keeps the first `k` coordinates.
    pub fn truncate(&self, k: usize) -> PowerProduct {
        PowerProduct {
            exps: self.exps[..k].iter().copied().collect(),
        }
    }

    /// The support: indices of variables dividing `self`.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&i| self.exps[i] > 0).collect()
    }

    /// All power products of degree `d` in `n` variables, in lex-descending
    /// order of exponent vectors.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<PowerProduct> {
        fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<PowerProduct>) {
            let n = cur.len();
            if i == n - 1 {
                cur[i] = left as u16;
                out.push(PowerProduct::new(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(PowerProduct::one(0));
            }
            return out;
        }
        rec(0, d, &mut vec![0; n], &mut out);
        out
    }

    /// Formats with the given variable names; `1` for the empty product.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }
}

/// Default variable names `x1..xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl fmt::Debug for PowerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.num_vars())))
    }
}

impl fmt::Display for PowerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&default_names(self.num_vars())))
    }
}
