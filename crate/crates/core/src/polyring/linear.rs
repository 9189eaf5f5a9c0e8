use std::fmt;

use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use super::power_product::{default_names, PowerProduct};
use crate::error::{Error, Result};
use crate::numeric::{QMatrix, Rational};
use crate::polyring::OrderingSpec;

/// A linear form `c1*x1 + ... + cn*xn`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        LinearForm { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        LinearForm {
            coeffs: coeffs.iter().map(|&c| crate::numeric::rat(c)).collect(),
        }
    }

    /// The coordinate form `x_i`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[i] = Rational::one();
        LinearForm { coeffs }
    }

    pub fn num_vars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.coeffs.len();
        Polynomial::from_terms(
            n,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (c.clone(), PowerProduct::var(n, i))),
        )
    }

    /// Image under `x_j -> sum_i g[i][j] x_i`.
    pub fn transform(&self, g: &QMatrix) -> LinearForm {
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, slot) in out.iter_mut().enumerate() {
                *slot += c * &g[(i, j)];
            }
        }
        LinearForm { coeffs: out }
    }

    /// Keeps the first `k` coefficients, i.e. the image modulo
    /// `(x_{k+1}, ..., x_n)`.
    pub fn truncate(&self, k: usize) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs[..k].to_vec(),
        }
    }

    pub fn extend(&self, extra: usize) -> LinearForm {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat_n(Rational::zero(), extra));
        LinearForm { coeffs }
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.coeffs.len();
        write!(
            f,
            "{}",
            self.to_polynomial()
                .display_with(&default_names(n), &OrderingSpec::degrevlex(n))
        )
    }
}

/// The substitution `x_i -> -(1/h_i) * sum_{j != i} h_j x_j`, landing in the
/// ring without `x_i`. The result generates the `h`-hyperplane section.
pub fn substitute_variable(f: &Polynomial, i: usize, h: &LinearForm) -> Result<Polynomial> {
    let n = f.num_vars();
    if h.num_vars() != n || i >= n {
        return Err(Error::Dimension(format!(
            "form in {} variables, polynomial in {}, index {}",
            h.num_vars(),
            n,
            i
        )));
    }
    let hi = h.coeff(i);
    if hi.is_zero() {
        return Err(Error::InvalidSection(format!("coefficient of x{} is zero", i + 1)));
    }
    let target = n - 1;
    let factor = -hi.recip();
    let images: Vec<Polynomial> = (0..n)
        .map(|j| {
            if j == i {
                Polynomial::from_terms(
                    target,
                    (0..n).filter(|&k| k != i).map(|k| {
                        let pos = if k < i { k } else { k - 1 };
                        (&factor * h.coeff(k), PowerProduct::var(target, pos))
                    }),
                )
            } else {
                let pos = if j < i { j } else { j - 1 };
                Polynomial::var(target, pos)
            }
        })
        .collect();
    Ok(f.substitute(&images, target))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn substitution_examples() {
        let h = LinearForm::from_i64(&[1, 1]);
        let f = &x(2, 1) * &x(2, 1);
        assert_eq!(substitute_variable(&f, 1, &h).unwrap(), &x(1, 0) * &x(1, 0));
        assert_eq!(substitute_variable(&x(2, 0), 1, &h).unwrap(), x(1, 0));
        let g = &(&x(2, 0) * &x(2, 1)) + &f;
        assert!(substitute_variable(&g, 1, &h).unwrap().is_zero());
        let bad = LinearForm::from_i64(&[1, 0]);
        assert!(matches!(
            substitute_variable(&f, 1, &bad),
            Err(Error::InvalidSection(_))
        ));
    }

    #[test]
    fn form_maps_to_zero() {
        let h = LinearForm::from_i64(&[3, -2, 5]);
        for i in 0..3 {
            assert!(substitute_variable(&h.to_polynomial(), i, &h).unwrap().is_zero());
        }
    }
}
