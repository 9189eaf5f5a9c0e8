use super::MonomialIdeal;
use crate::polyring::PowerProduct;

/// Irredundant decomposition of `I` into ideals generated by pure powers.
///
/// Splits on a generator `t = x_i^a * v` with `v != 1` into `I + (x_i^a)` and
/// `I + (v)`, recursing until every generator is a pure power, then drops
/// duplicates and components containing another component. The zero ideal
/// is returned as its own single component; the unit ideal has none.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Vec<MonomialIdeal> {
    if ideal.is_unit() {
        return Vec::new();
    }
    if ideal.is_zero() {
        return vec![ideal.clone()];
    }
    let mut found = Vec::new();
    split(ideal.clone(), &mut found);
    prune(found)
}

fn split(ideal: MonomialIdeal, out: &mut Vec<MonomialIdeal>) {
    let n = ideal.num_vars();
    let mixed = ideal.gens().iter().find(|g| g.support().len() > 1).cloned();
    let Some(t) = mixed else {
        out.push(ideal);
        return;
    };
    let i = t.support()[0];
    let u = PowerProduct::one(n).with_exponent(i, t.exponent(i));
    let v = t.with_exponent(i, 0);
    for part in [u, v] {
        let next = ideal.sum(&MonomialIdeal::new(n, vec![part]));
        split(next, out);
    }
}

fn prune(mut comps: Vec<MonomialIdeal>) -> Vec<MonomialIdeal> {
    comps.sort_by_key(|c| (c.gens().len(), c.gens().to_vec()));
    comps.dedup();
    let mut kept: Vec<MonomialIdeal> = Vec::new();
    for (k, c) in comps.iter().enumerate() {
        let redundant = comps
            .iter()
            .enumerate()
            .any(|(j, d)| j != k && c.contains_ideal(d));
        if !redundant {
            kept.push(c.clone());
        }
    }
    kept
}

/// Intersection of a list of monomial ideals; `None` for the empty list.
pub fn intersect_all(ideals: &[MonomialIdeal]) -> Option<MonomialIdeal> {
    let (first, rest) = ideals.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, c| acc.intersect(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| PowerProduct::new(e)).collect())
    }

    fn as_set(mut v: Vec<MonomialIdeal>) -> Vec<MonomialIdeal> {
        v.sort_by_key(|c| c.gens().to_vec());
        v
    }

    #[test]
    fn worked_decomposition() {
        let i = ideal(3, &[&[2, 2, 0], &[2, 0, 2], &[0, 2, 2]]);
        let got = as_set(irreducible_decomposition(&i));
        let want = as_set(vec![
            ideal(3, &[&[2, 0, 0], &[0, 2, 0]]),
            ideal(3, &[&[2, 0, 0], &[0, 0, 2]]),
            ideal(3, &[&[0, 2, 0], &[0, 0, 2]]),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn small_decompositions() {
        let p = ideal(2, &[&[3, 0]]);
        assert_eq!(irreducible_decomposition(&p), vec![p.clone()]);

        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let got = as_set(irreducible_decomposition(&i));
        let want = as_set(vec![ideal(2, &[&[1, 0]]), ideal(2, &[&[2, 0], &[0, 1]])]);
        assert_eq!(got, want);
        assert_eq!(intersect_all(&got).unwrap(), i);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(irreducible_decomposition(&MonomialIdeal::unit(2)).is_empty());
        let z = MonomialIdeal::zero(2);
        assert_eq!(irreducible_decomposition(&z), vec![z]);
    }
}
