use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::power_product::PowerProduct;
use crate::error::{Error, Result};
use crate::numeric::QMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    /// `Ord(V)`: compare `V * log(t)` lexicographically.
    Matrix(Vec<Vec<i64>>),
}

/// A term ordering on power products in `n` variables, with
/// `x1 > x2 > ... > xn` for the named kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderingSpec {
    kind: OrderKind,
    n: usize,
}

impl OrderingSpec {
    pub fn lex(n: usize) -> Self {
        OrderingSpec {
            kind: OrderKind::Lex,
            n,
        }
    }

    pub fn degrevlex(n: usize) -> Self {
        OrderingSpec {
            kind: OrderKind::DegRevLex,
            n,
        }
    }

    /// Matrix ordering. The matrix must have `n` columns, rank `n`, and the
    /// first nonzero entry of every column must be positive.
    pub fn matrix(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidOrdering("matrix rows must be nonempty and of equal length".into()));
        }
        let q = QMatrix::from_i64_rows(&rows)?;
        if q.rank() != n {
            return Err(Error::InvalidOrdering(format!("matrix has rank {} < {}", q.rank(), n)));
        }
        for j in 0..n {
            match rows.iter().map(|r| r[j]).find(|&v| v != 0) {
                Some(v) if v > 0 => {}
                _ => {
                    return Err(Error::InvalidOrdering(format!(
                        "first nonzero entry of column {} is not positive",
                        j + 1
                    )))
                }
            }
        }
        Ok(OrderingSpec {
            kind: OrderKind::Matrix(rows),
            n,
        })
    }

    /// Degree reverse lexicographic ordering in which `x_last` plays the
    /// role of the smallest variable. The remaining variables keep their
    /// relative order.
    pub fn degrevlex_with_last(n: usize, last: usize) -> Self {
        let neg = |i: usize| {
            let mut r = vec![0; n];
            r[i] = -1;
            r
        };
        let mut rows = vec![vec![1; n], neg(last)];
        rows.extend((0..n).rev().filter(|&i| i != last).map(neg));
        rows.truncate(n);
        Self::matrix(rows).expect("degrevlex variant is admissible")
    }

    /// Elimination ordering on `n + k` variables: the trailing `k` variables
    /// form a block that is larger than everything else, degrevlex inside
    /// each block.
    pub fn eliminate_trailing(n: usize, k: usize) -> Self {
        let total = n + k;
        let mut rows = Vec::with_capacity(total);
        let mut block_row = vec![0; total];
        for v in &mut block_row[n..] {
            *v = 1;
        }
        rows.push(block_row);
        for i in (n + 1..total).rev() {
            let mut r = vec![0; total];
            r[i] = -1;
            rows.push(r);
        }
        let mut deg = vec![0; total];
        for v in &mut deg[..n] {
            *v = 1;
        }
        rows.push(deg);
        for i in (1..n).rev() {
            let mut r = vec![0; total];
            r[i] = -1;
            rows.push(r);
        }
        Self::matrix(rows).expect("elimination ordering is admissible")
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_degrevlex(&self) -> bool {
        self.kind == OrderKind::DegRevLex
    }

    /// Compares two power products. Panics on dimension mismatch; use
    /// [`OrderingSpec::try_compare`] for a checked version.
    pub fn compare(&self, a: &PowerProduct, b: &PowerProduct) -> Ordering {
        debug_assert_eq!(a.num_vars(), self.n);
        debug_assert_eq!(b.num_vars(), self.n);
        let (ea, eb) = (a.exponents(), b.exponents());
        match &self.kind {
            OrderKind::Lex => ea.cmp(eb),
            OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for i in (0..self.n).rev() {
                    if ea[i] != eb[i] {
                        return eb[i].cmp(&ea[i]);
                    }
                }
                Ordering::Equal
            }),
            OrderKind::Matrix(rows) => {
                for row in rows {
                    let mut wa = 0i64;
                    let mut wb = 0i64;
                    for j in 0..self.n {
                        wa += row[j] * i64::from(ea[j]);
                        wb += row[j] * i64::from(eb[j]);
                    }
                    if wa != wb {
                        return wa.cmp(&wb);
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn try_compare(&self, a: &PowerProduct, b: &PowerProduct) -> Result<Ordering> {
        if a.num_vars() != self.n || b.num_vars() != self.n {
            return Err(Error::Dimension(format!(
                "ordering on {} variables, power products on {} and {}",
                self.n,
                a.num_vars(),
                b.num_vars()
            )));
        }
        Ok(self.compare(a, b))
    }

    /// The restriction of this ordering to power products not involving
    /// `x_i` (0-based), as an ordering on the remaining `n - 1` variables.
    pub fn restrict(&self, i: usize) -> OrderingSpec {
        assert!(i < self.n, "variable index out of range");
        match &self.kind {
            OrderKind::Lex => OrderingSpec::lex(self.n - 1),
            OrderKind::DegRevLex => OrderingSpec::degrevlex(self.n - 1),
            OrderKind::Matrix(rows) => {
                // Rows that are zero or dependent on earlier rows never break
                // a tie the earlier rows left, so they can be dropped.
                let mut kept: Vec<Vec<i64>> = Vec::new();
                for row in rows {
                    let mut r = row.clone();
                    r.remove(i);
                    let mut trial = kept.clone();
                    trial.push(r.clone());
                    let q = QMatrix::from_i64_rows(&trial).expect("rectangular");
                    if q.rank() == trial.len() {
                        kept.push(r);
                    }
                }
                OrderingSpec::matrix(kept).expect("restriction of a term ordering is a term ordering")
            }
        }
    }

    /// Bounded decision procedure for "x_i-DegRev type" (0-based `i`):
    /// degree compatible on all power products of degree `<= bound`, and
    /// within each degree a smaller `x_i` exponent means a larger term.
    pub fn is_xi_degrev_type(&self, i: usize, bound: u32) -> bool {
        let mut all: Vec<PowerProduct> = (0..=bound)
            .flat_map(|d| PowerProduct::all_of_degree(self.n, d))
            .collect();
        all.sort_by(|a, b| self.compare(a, b));
        all.windows(2).all(|w| {
            let (lo, hi) = (&w[0], &w[1]);
            if lo.degree() != hi.degree() {
                lo.degree() < hi.degree()
            } else {
                lo.exponent(i) >= hi.exponent(i)
            }
        })
    }

    /// True if the ordering is degree compatible on power products of degree
    /// up to `bound`.
    pub fn is_degree_compatible(&self, bound: u32) -> bool {
        let mut all: Vec<PowerProduct> = (0..=bound)
            .flat_map(|d| PowerProduct::all_of_degree(self.n, d))
            .collect();
        all.sort_by(|a, b| self.compare(a, b));
        all.windows(2).all(|w| w[0].degree() <= w[1].degree())
    }

    /// True if both orderings compare every pair of power products of degree
    /// `<= bound` the same way.
    pub fn agrees_with(&self, other: &OrderingSpec, bound: u32) -> bool {
        if self.n != other.n {
            return false;
        }
        let all: Vec<PowerProduct> = (0..=bound)
            .flat_map(|d| PowerProduct::all_of_degree(self.n, d))
            .collect();
        all.iter()
            .all(|a| all.iter().all(|b| self.compare(a, b) == other.compare(a, b)))
    }
}
