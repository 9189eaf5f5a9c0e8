use std::collections::HashSet;

use super::DistractionMatrix;
use crate::error::{Error, Result};
use crate::groebner::PolyIdeal;
use crate::monomial::{irreducible_decomposition, MonomialIdeal};
use crate::numeric::QMatrix;
use crate::polyring::{LinearForm, OrderingSpec};

/// `(i_r, a_r)` for the pure powers `x_{i_r}^{a_r}` generating `comp`.
fn pure_powers(comp: &MonomialIdeal) -> Vec<(usize, usize)> {
    comp.gens()
        .iter()
        .map(|g| {
            let i = g.support()[0];
            (i, usize::from(g.exponent(i)))
        })
        .collect()
}

/// All tuples `(s_1, ..., s_h)` with `1 <= s_r <= a_r`.
fn exponent_box(bounds: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &a in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=a).map(move |s| {
                    let mut p = prefix.clone();
                    p.push(s);
                    p
                })
            })
            .collect();
    }
    out
}

fn selected_forms(l: &DistractionMatrix, powers: &[(usize, usize)], s: &[usize]) -> Vec<LinearForm> {
    powers
        .iter()
        .zip(s)
        .map(|(&(i, _), &j)| l.entry(i, j).clone())
        .collect()
}

fn span_key(forms: &[LinearForm], n: usize) -> QMatrix {
    if forms.is_empty() {
        return QMatrix::zeros(0, n);
    }
    let rows = forms.iter().map(|f| f.coeffs().to_vec()).collect();
    QMatrix::from_rows(rows).expect("forms share a ring").row_space_key()
}

fn radical_for_component(l: &DistractionMatrix, comp: &MonomialIdeal) -> bool {
    let powers = pure_powers(comp);
    let bounds: Vec<usize> = powers.iter().map(|&(_, a)| a).collect();
    let mut seen = HashSet::new();
    exponent_box(&bounds).iter().all(|s| {
        let key = span_key(&selected_forms(l, &powers, s), l.num_vars());
        seen.insert(key)
    })
}

/// True if, for every irreducible component `(x_{i_1}^{a_1}, ...)` of `I`,
/// the spans of `L_{i_1 s_1}, ..., L_{i_h s_h}` over the exponent box are
/// pairwise distinct.
pub fn is_radical_for(l: &DistractionMatrix, ideal: &MonomialIdeal) -> bool {
    irreducible_decomposition(ideal)
        .iter()
        .all(|c| radical_for_component(l, c))
}

/// The tuples `(L_{i_1 s_1}, ..., L_{i_h s_h})` over the exponent box of an
/// irreducible `I` with fewer than `n` generators, for `L` radical for `I`.
pub fn radirred_forms(l: &DistractionMatrix, comp: &MonomialIdeal) -> Result<Vec<Vec<LinearForm>>> {
    let n = l.num_vars();
    if comp.num_vars() != n {
        return Err(Error::Dimension("ideal and matrix in different rings".into()));
    }
    if !comp.is_irreducible() || comp.is_zero() {
        return Err(Error::Precondition("ideal is not a nonzero irreducible ideal".into()));
    }
    if comp.gens().len() >= n {
        return Err(Error::Precondition("component must have fewer than n generators".into()));
    }
    if !radical_for_component(l, comp) {
        return Err(Error::Precondition("matrix is not radical for the ideal".into()));
    }
    let powers = pure_powers(comp);
    let bounds: Vec<usize> = powers.iter().map(|&(_, a)| a).collect();
    Ok(exponent_box(&bounds)
        .iter()
        .map(|s| selected_forms(l, &powers, s))
        .collect())
}

/// The linear primes `(L_{i_1 s_1}, ..., L_{i_h s_h})` whose intersection is
/// `D_L(I)` for an irreducible `I` with fewer than `n` generators.
pub fn radirred_primes(l: &DistractionMatrix, comp: &MonomialIdeal) -> Result<Vec<PolyIdeal>> {
    let n = l.num_vars();
    Ok(radirred_forms(l, comp)?
        .iter()
        .map(|forms| PolyIdeal::new(n, forms.iter().map(LinearForm::to_polynomial).collect()))
        .collect())
}

/// Distinct linear primes over all components of `I`, deduplicated by their
/// reduced Groebner bases.
pub fn all_radirred_primes(l: &DistractionMatrix, ideal: &MonomialIdeal) -> Result<Vec<PolyIdeal>> {
    let ord = OrderingSpec::degrevlex(l.num_vars());
    let mut out: Vec<PolyIdeal> = Vec::new();
    let mut keys = HashSet::new();
    for comp in irreducible_decomposition(ideal) {
        for p in radirred_primes(l, &comp)? {
            if keys.insert((*p.reduced_gb(&ord)).clone()) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// `D_L(I)` rebuilt as an intersection of linear primes; equality with
/// `D_L(I)` certifies that the distraction is radical.
pub fn radical_certificate(l: &DistractionMatrix, ideal: &MonomialIdeal) -> Result<PolyIdeal> {
    let primes = all_radirred_primes(l, ideal)?;
    let mut it = primes.into_iter();
    let first = it
        .next()
        .ok_or_else(|| Error::Precondition("ideal has no proper components".into()))?;
    Ok(it.fold(first, |acc, p| acc.intersect(&p)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::PowerProduct;

    fn ideal(n: usize, gens: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| PowerProduct::new(e)).collect())
    }

    #[test]
    fn known_radical_verdicts() {
        let i = ideal(3, &[&[2, 2, 0], &[2, 0, 2], &[0, 2, 2]]);
        let generic = DistractionMatrix::generic(3, 2, 3).unwrap();
        assert!(is_radical_for(&generic, &i));
        let classic = DistractionMatrix::classic(3, 2).unwrap();
        assert!(!is_radical_for(&classic, &i));
        let id = DistractionMatrix::identical(3, 2).unwrap();
        assert!(!is_radical_for(&id, &ideal(3, &[&[2, 0, 0]])));
        assert!(is_radical_for(&id, &ideal(3, &[&[1, 0, 0], &[0, 1, 0]])));
    }

    #[test]
    fn primes_of_a_pure_power() {
        let l = DistractionMatrix::classic(2, 3).unwrap();
        let p = radirred_primes(&l, &ideal(2, &[&[2, 0]])).unwrap();
        let ord = OrderingSpec::degrevlex(2);
        let want = [
            PolyIdeal::new(2, vec![LinearForm::from_i64(&[1, 0]).to_polynomial()]),
            PolyIdeal::new(2, vec![LinearForm::from_i64(&[1, -1]).to_polynomial()]),
        ];
        assert_eq!(p.len(), 2);
        assert!(p.iter().zip(&want).all(|(a, b)| a.equals(b, &ord)));
        assert_eq!(radirred_primes(&l, &ideal(2, &[&[1, 0]])).unwrap().len(), 1);
    }

    #[test]
    fn certificate_matches_distraction() {
        let l = DistractionMatrix::classic(3, 3).unwrap();
        let i = ideal(3, &[&[2, 0, 0], &[0, 1, 0]]);
        let cert = radical_certificate(&l, &i).unwrap();
        assert!(cert.equals(&l.distract_ideal(&i), &OrderingSpec::degrevlex(3)));
    }
}
