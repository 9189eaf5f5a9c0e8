use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::engine;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::polyring::{OrderingSpec, Polynomial, PowerProduct};

/// How to saturate an ideal.
#[derive(Clone, Debug)]
pub enum SaturationMode {
    /// `I : f^inf`.
    ByPoly(Polynomial),
    /// `I : (x1, ..., xn)^inf`.
    ByMaximal,
}

/// An ideal of `Q[x1..xn]` given by generators.
///
/// Reduced Groebner bases are cached per ordering. The cache sits behind a
/// mutex, so shared references may be used from several threads; the
/// generators are never mutated.
pub struct PolyIdeal {
    n: usize,
    gens: Vec<Polynomial>,
    homogeneous: bool,
    cache: Mutex<HashMap<OrderingSpec, Arc<Vec<Polynomial>>>>,
}

impl Clone for PolyIdeal {
    fn clone(&self) -> Self {
        PolyIdeal {
            n: self.n,
            gens: self.gens.clone(),
            homogeneous: self.homogeneous,
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Debug for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("PolyIdeal").field(&self.gens).finish()
    }
}

impl PolyIdeal {
    /// The ideal generated by `gens` in `n` variables. Zero generators are
    /// dropped.
    pub fn new(n: usize, gens: Vec<Polynomial>) -> Self {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        assert!(gens.iter().all(|g| g.num_vars() == n), "generator in wrong ring");
        let homogeneous = gens.iter().all(Polynomial::is_homogeneous);
        PolyIdeal {
            n,
            gens,
            homogeneous,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Like [`PolyIdeal::new`] but rejects non-homogeneous generators.
    pub fn homogeneous(n: usize, gens: Vec<Polynomial>) -> Result<Self> {
        let ideal = Self::new(n, gens);
        if !ideal.homogeneous {
            return Err(Error::NotHomogeneous(
                "every generator must be homogeneous".into(),
            ));
        }
        Ok(ideal)
    }

    pub fn from_monomial(ideal: &MonomialIdeal) -> Self {
        Self::new(
            ideal.num_vars(),
            ideal.gens().iter().cloned().map(Polynomial::monomial).collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        Self::new(n, Vec::new())
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// The reduced Groebner basis for `ord`: monic, sorted descending by
    /// leading power product.
    pub fn reduced_gb(&self, ord: &OrderingSpec) -> Arc<Vec<Polynomial>> {
        assert_eq!(ord.num_vars(), self.n, "ordering in wrong ring");
        if let Some(gb) = self.cache.lock().unwrap().get(ord) {
            return Arc::clone(gb);
        }
        let gb = Arc::new(engine::reduced_groebner_basis(self.n, &self.gens, ord));
        self.cache
            .lock()
            .unwrap()
            .entry(ord.clone())
            .or_insert_with(|| Arc::clone(&gb));
        gb
    }

    pub fn normal_form(&self, f: &Polynomial, ord: &OrderingSpec) -> Polynomial {
        let gb = self.reduced_gb(ord);
        engine::normal_form(f, &gb, ord)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f, &OrderingSpec::degrevlex(self.n)).is_zero()
    }

    pub fn contains_ideal(&self, other: &PolyIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        self.contains(&Polynomial::one(self.n))
    }

    pub fn initial_ideal(&self, ord: &OrderingSpec) -> MonomialIdeal {
        let gb = self.reduced_gb(ord);
        MonomialIdeal::new(
            self.n,
            gb.iter()
                .map(|g| g.leading_power_product(ord).unwrap())
                .collect(),
        )
    }

    /// Equality of ideals, by comparing reduced Groebner bases.
    pub fn equals(&self, other: &PolyIdeal, ord: &OrderingSpec) -> bool {
        assert_eq!(self.n, other.n, "ring mismatch");
        let (a, b) = (self.reduced_gb(ord), other.reduced_gb(ord));
        a == b
    }

    pub fn sum(&self, other: &PolyIdeal) -> PolyIdeal {
        assert_eq!(self.n, other.n, "ring mismatch");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        PolyIdeal::new(self.n, gens)
    }

    /// The ideal generated by `f * g` over generators `g`.
    pub fn scale_by(&self, f: &Polynomial) -> PolyIdeal {
        PolyIdeal::new(self.n, self.gens.iter().map(|g| f * g).collect())
    }

    pub fn apply_linear_change(&self, g: &crate::numeric::QMatrix) -> Result<PolyIdeal> {
        let gens = self
            .gens
            .iter()
            .map(|f| f.apply_linear_change(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyIdeal::new(self.n, gens))
    }

    /// `I ∩ J` via `t*I + (1 - t)*J`, eliminating the auxiliary `t`.
    pub fn intersect(&self, other: &PolyIdeal) -> PolyIdeal {
        assert_eq!(self.n, other.n, "ring mismatch");
        let n = self.n;
        if self.is_zero() || other.is_zero() {
            return PolyIdeal::zero(n);
        }
        let t = Polynomial::var(n + 1, n);
        let one_minus_t = &Polynomial::one(n + 1) - &t;
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|f| &f.extend(1) * &t).collect();
        gens.extend(other.gens.iter().map(|g| &g.extend(1) * &one_minus_t));
        eliminate_trailing(n, 1, gens)
    }

    /// `I : f^inf` by the Rabinowitsch trick: `I + (1 - t*f)`, then
    /// eliminate `t`.
    pub fn saturate_by(&self, f: &Polynomial) -> PolyIdeal {
        let n = self.n;
        assert!(!f.is_zero(), "saturation by the zero polynomial");
        let t = Polynomial::var(n + 1, n);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.extend(1)).collect();
        gens.push(&Polynomial::one(n + 1) - &(&t * &f.extend(1)));
        eliminate_trailing(n, 1, gens)
    }

    /// `I : x_i^inf`. For homogeneous `I` this divides the elements of a
    /// Groebner basis for a degrevlex ordering with `x_i` smallest by their
    /// largest power of `x_i`; otherwise it falls back to the Rabinowitsch
    /// trick.
    pub fn saturate_by_var(&self, i: usize) -> PolyIdeal {
        if !self.homogeneous {
            return self.saturate_by(&Polynomial::var(self.n, i));
        }
        let ord = OrderingSpec::degrevlex_with_last(self.n, i);
        let gb = self.reduced_gb(&ord);
        let gens = gb
            .iter()
            .map(|g| {
                let k = g.terms().map(|(t, _)| t.exponent(i)).min().unwrap_or(0);
                if k == 0 {
                    g.clone()
                } else {
                    let mut m = PowerProduct::one(self.n);
                    m = m.with_exponent(i, k);
                    Polynomial::from_terms(
                        self.n,
                        g.terms().map(|(t, c)| (c.clone(), t.div(&m).unwrap())),
                    )
                }
            })
            .collect();
        PolyIdeal::new(self.n, gens)
    }

    /// Saturation. `ByMaximal` intersects the single-variable saturations
    /// `I : x_i^inf`: every power product of degree `n*k` is divisible by
    /// some `x_i^k`, so `I : M^inf` equals that intersection.
    pub fn saturate(&self, mode: &SaturationMode) -> PolyIdeal {
        match mode {
            SaturationMode::ByPoly(f) => self.saturate_by(f),
            SaturationMode::ByMaximal => {
                if self.is_zero() {
                    return self.clone();
                }
                let mut acc = self.saturate_by_var(0);
                for i in 1..self.n {
                    if acc.is_unit() {
                        acc = self.saturate_by_var(i);
                        continue;
                    }
                    let next = self.saturate_by_var(i);
                    acc = if next.is_unit() { acc } else { acc.intersect(&next) };
                }
                acc.minimal_form()
            }
        }
    }

    /// True if `I` equals its saturation (for homogeneous proper `I` this is
    /// `depth(P/I) > 0`).
    pub fn is_saturated(&self) -> bool {
        let sat = self.saturate(&SaturationMode::ByMaximal);
        self.equals(&sat, &OrderingSpec::degrevlex(self.n))
    }

    /// Same ideal, generated by its reduced degrevlex Groebner basis.
    pub fn minimal_form(&self) -> PolyIdeal {
        let ord = OrderingSpec::degrevlex(self.n);
        let gb = self.reduced_gb(&ord);
        let out = PolyIdeal::new(self.n, gb.as_ref().clone());
        out.cache.lock().unwrap().insert(ord, gb);
        out
    }
}

/// Ideal of the trailing-variable-free elements of the ideal generated by
/// `gens` in `n + k` variables, as an ideal in `n` variables.
fn eliminate_trailing(n: usize, k: usize, gens: Vec<Polynomial>) -> PolyIdeal {
    let ord = OrderingSpec::eliminate_trailing(n, k);
    let gb = engine::reduced_groebner_basis(n + k, &gens, &ord);
    let kept: Vec<Polynomial> = gb.iter().filter_map(|g| g.restrict_to_first(n)).collect();
    PolyIdeal::new(n, kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn mono(exps: &[u16]) -> Polynomial {
        Polynomial::monomial(PowerProduct::new(exps))
    }

    #[test]
    fn gb_examples() {
        let drl = OrderingSpec::degrevlex(2);
        let i = PolyIdeal::new(2, vec![x(2, 0)]);
        assert_eq!(*i.reduced_gb(&drl), vec![x(2, 0)]);
        let j = PolyIdeal::new(2, vec![&x(2, 0) + &x(2, 1), x(2, 1)]);
        assert_eq!(*j.reduced_gb(&drl), vec![x(2, 0), x(2, 1)]);
        let k = PolyIdeal::new(2, vec![&mono(&[2, 0]) - &mono(&[0, 2]), mono(&[1, 1])]);
        let init = k.initial_ideal(&drl);
        assert_eq!(
            init,
            MonomialIdeal::new(2, vec![
                PowerProduct::new(&[2, 0]),
                PowerProduct::new(&[1, 1]),
                PowerProduct::new(&[0, 3]),
            ])
        );
        assert!(k.normal_form(&mono(&[0, 3]), &drl).is_zero());
        assert_eq!(k.normal_form(&mono(&[2, 0]), &drl), mono(&[0, 2]));
        assert_eq!(k.normal_form(&Polynomial::one(2), &drl), Polynomial::one(2));
    }

    #[test]
    fn equality_examples() {
        let drl = OrderingSpec::degrevlex(2);
        let a = PolyIdeal::new(2, vec![x(2, 0), x(2, 1)]);
        let b = PolyIdeal::new(2, vec![x(2, 1), &x(2, 0) + &x(2, 1)]);
        assert!(a.equals(&b, &drl));
        let c = PolyIdeal::new(2, vec![mono(&[2, 0])]);
        let d = PolyIdeal::new(2, vec![x(2, 0)]);
        assert!(!c.equals(&d, &drl));
    }

    #[test]
    fn intersection_examples() {
        let drl2 = OrderingSpec::degrevlex(2);
        let a = PolyIdeal::new(2, vec![x(2, 0)]);
        let b = PolyIdeal::new(2, vec![x(2, 1)]);
        assert!(a.intersect(&b).equals(&PolyIdeal::new(2, vec![mono(&[1, 1])]), &drl2));

        let c = PolyIdeal::new(2, vec![mono(&[2, 0]), mono(&[0, 2])]);
        let expect = PolyIdeal::new(2, vec![mono(&[2, 0]), mono(&[1, 2])]);
        assert!(c.intersect(&a).equals(&expect, &drl2));

        // (x, y^2) ∩ (x, y, z)^2 = (x^2, xy, y^2, xz)
        let drl3 = OrderingSpec::degrevlex(3);
        let p = PolyIdeal::new(3, vec![mono(&[1, 0, 0]), mono(&[0, 2, 0])]);
        let sq: Vec<Polynomial> = PowerProduct::all_of_degree(3, 2).into_iter().map(Polynomial::monomial).collect();
        let q = PolyIdeal::new(3, sq);
        let expect = PolyIdeal::new(3, vec![mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[0, 2, 0]), mono(&[1, 0, 1])]);
        assert!(p.intersect(&q).equals(&expect, &drl3));
    }

    #[test]
    fn saturation_examples() {
        let drl2 = OrderingSpec::degrevlex(2);
        let i = PolyIdeal::new(2, vec![mono(&[1, 1])]);
        let s = i.saturate(&SaturationMode::ByPoly(x(2, 0)));
        assert!(s.equals(&PolyIdeal::new(2, vec![x(2, 1)]), &drl2));

        let drl3 = OrderingSpec::degrevlex(3);
        let j = PolyIdeal::new(3, vec![mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[0, 2, 0]), mono(&[1, 0, 1])]);
        let sat = j.saturate(&SaturationMode::ByMaximal);
        assert!(sat.equals(&PolyIdeal::new(3, vec![mono(&[1, 0, 0]), mono(&[0, 2, 0])]), &drl3));
        assert!(!j.is_saturated());

        // a prime that is not maximal is already saturated
        let prime = PolyIdeal::new(3, vec![&x(3, 0) - &x(3, 1)]);
        assert!(prime.saturate(&SaturationMode::ByMaximal).equals(&prime, &drl3));
        // non-homogeneous input takes the Rabinowitsch route
        let nh = PolyIdeal::new(2, vec![&mono(&[1, 1]) + &Polynomial::constant(2, rat(0))]);
        assert!(nh.saturate_by_var(0).equals(&PolyIdeal::new(2, vec![x(2, 1)]), &drl2));
    }

    #[test]
    fn unit_ideal() {
        let i = PolyIdeal::new(2, vec![&x(2, 0) - &Polynomial::one(2), x(2, 0)]);
        assert!(i.is_unit());
        assert_eq!(*i.reduced_gb(&OrderingSpec::lex(2)), vec![Polynomial::one(2)]);
    }
}
