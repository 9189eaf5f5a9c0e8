use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::ordering::OrderingSpec;
use super::power_product::{default_names, PowerProduct};
use crate::error::{Error, Result};
use crate::numeric::{QMatrix, Rational};

/// Sparse polynomial over Q in a fixed number of variables.
///
/// Terms are kept in a map keyed by power product; zero coefficients are
/// never stored. Sorting by a term ordering happens on demand.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<PowerProduct, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::term(c, PowerProduct::one(n))
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn term(c: Rational, t: PowerProduct) -> Self {
        let n = t.num_vars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(t, c);
        }
        Polynomial { n, terms }
    }

    pub fn monomial(t: PowerProduct) -> Self {
        Self::term(Rational::one(), t)
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(PowerProduct::var(n, i))
    }

    /// Builds a polynomial from (coefficient, power product) pairs, summing
    /// repeated power products.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Rational, PowerProduct)>) -> Self {
        let mut p = Self::zero(n);
        for (c, t) in terms {
            assert_eq!(t.num_vars(), n, "power product in wrong ring");
            p.add_term(c, t);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&PowerProduct, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, t: &PowerProduct) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, c: Rational, t: PowerProduct) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Terms sorted descending by `ord`.
    pub fn sorted_terms(&self, ord: &OrderingSpec) -> Vec<(PowerProduct, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(t, c)| (t.clone(), c.clone())).collect();
        v.sort_by(|a, b| ord.compare(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, ord: &OrderingSpec) -> Option<(PowerProduct, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.compare(a.0, b.0))
            .map(|(t, c)| (t.clone(), c.clone()))
    }

    pub fn leading_power_product(&self, ord: &OrderingSpec) -> Option<PowerProduct> {
        self.leading_term(ord).map(|(t, _)| t)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(PowerProduct::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(PowerProduct::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(PowerProduct::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(t, a)| (t.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &Rational, t: &PowerProduct) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(s, a)| (s.mul(t), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, ord: &OrderingSpec) -> Polynomial {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by `g`, `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        assert!(!g.is_zero(), "division by zero polynomial");
        let ord = OrderingSpec::degrevlex(self.n);
        let (lt, lc) = g.leading_term(&ord)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.n);
        while let Some((t, c)) = rem.leading_term(&ord) {
            let m = t.div(&lt)?;
            let q = &c / &lc;
            rem = &rem - &g.mul_term(&q, &m);
            quot.add_term(q, m);
        }
        Some(quot)
    }

    /// Evaluates at a point with rational coordinates.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.n);
        let mut sum = Rational::zero();
        for (t, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in t.exponents().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            sum += v;
        }
        sum
    }

    /// Replaces every variable `x_j` with `images[j]`, a polynomial in a ring
    /// with `target_n` variables.
    pub fn substitute(&self, images: &[Polynomial], target_n: usize) -> Polynomial {
        assert_eq!(images.len(), self.n);
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target_n), p.clone()])
            .collect();
        let mut out = Polynomial::zero(target_n);
        for (t, c) in &self.terms {
            let mut prod = Polynomial::constant(target_n, c.clone());
            for (j, &e) in t.exponents().iter().enumerate() {
                let e = usize::from(e);
                while powers[j].len() <= e {
                    let next = &powers[j][powers[j].len() - 1] * &images[j];
                    powers[j].push(next);
                }
                if e > 0 {
                    prod = &prod * &powers[j][e];
                }
            }
            out = &out + &prod;
        }
        out
    }

    /// Applies the linear change of coordinates `x_j -> sum_i g[i][j] x_i`.
    pub fn apply_linear_change(&self, g: &QMatrix) -> Result<Polynomial> {
        if g.rows() != self.n || !g.is_square() {
            return Err(Error::Dimension(format!(
                "need a {0}x{0} matrix, got {1}x{2}",
                self.n,
                g.rows(),
                g.cols()
            )));
        }
        if g.determinant()?.is_zero() {
            return Err(Error::InvalidTransform("singular matrix".into()));
        }
        Ok(self.apply_linear_change_unchecked(g))
    }

    pub(crate) fn apply_linear_change_unchecked(&self, g: &QMatrix) -> Polynomial {
        let images: Vec<Polynomial> = (0..self.n)
            .map(|j| {
                Polynomial::from_terms(
                    self.n,
                    (0..self.n).map(|i| (g[(i, j)].clone(), PowerProduct::var(self.n, i))),
                )
            })
            .collect();
        self.substitute(&images, self.n)
    }

    /// Appends `extra` variables that do not occur.
    pub fn extend(&self, extra: usize) -> Polynomial {
        Polynomial {
            n: self.n + extra,
            terms: self.terms.iter().map(|(t, c)| (t.extend(extra), c.clone())).collect(),
        }
    }

    /// Sets `x_i = 0` and drops the variable.
    pub fn set_var_zero(&self, i: usize) -> Polynomial {
        Polynomial {
            n: self.n - 1,
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| t.exponent(i) == 0)
                .map(|(t, c)| (t.remove_var(i), c.clone()))
                .collect(),
        }
    }

    /// Drops the trailing variables; every term must avoid them.
    pub fn restrict_to_first(&self, k: usize) -> Option<Polynomial> {
        if self.terms.keys().any(|t| t.exponents()[k..].iter().any(|&e| e > 0)) {
            return None;
        }
        Some(Polynomial {
            n: k,
            terms: self.terms.iter().map(|(t, c)| (t.truncate(k), c.clone())).collect(),
        })
    }

    /// Canonical printing: terms sorted descending by `ord`.
    pub fn display_with(&self, names: &[String], ord: &OrderingSpec) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (t, c)) in self.sorted_terms(ord).iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if t.is_one() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&t.display_with(names));
            }
        }
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.display_with(&default_names(self.n), &OrderingSpec::degrevlex(self.n))
        )
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "ring mismatch");
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(c.clone(), t.clone());
        }
        out
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "ring mismatch");
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(-c.clone(), t.clone());
        }
        out
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "ring mismatch");
        let mut out = Polynomial::zero(self.n);
        for (s, a) in &self.terms {
            for (t, b) in &rhs.terms {
                out.add_term(a * b, s.mul(t));
            }
        }
        out
    }
}
