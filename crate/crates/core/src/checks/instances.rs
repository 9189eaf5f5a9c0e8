//! Seeded generators for random test instances.

use rand::Rng;

use crate::monomial::{stable_closure, strongly_stable_closure, MonomialIdeal, SpecialPart};
use crate::numeric::rat;
use crate::polyring::{Polynomial, PowerProduct};

pub fn random_power_product(rng: &mut impl Rng, n: usize, min_deg: u32, max_deg: u32) -> PowerProduct {
    let d = rng.gen_range(min_deg..=max_deg);
    let mut exps = vec![0u16; n];
    for _ in 0..d {
        exps[rng.gen_range(0..n)] += 1;
    }
    PowerProduct::new(&exps)
}

fn seeds(rng: &mut impl Rng, n: usize, max_deg: u32) -> Vec<PowerProduct> {
    let count = rng.gen_range(1..=3);
    (0..count)
        .map(|_| random_power_product(rng, n, 1, max_deg))
        .collect()
}

/// Strongly stable closure of 1 to 3 random power products.
pub fn random_strongly_stable(rng: &mut impl Rng, n: usize, max_deg: u32) -> MonomialIdeal {
    let s = seeds(rng, n, max_deg);
    strongly_stable_closure(n, &s)
}

/// Stable closure of 1 to 3 random power products.
pub fn random_stable(rng: &mut impl Rng, n: usize, max_deg: u32) -> MonomialIdeal {
    let s = seeds(rng, n, max_deg);
    stable_closure(n, &s)
}

/// Ideal generated by 1 to `max_gens` random power products.
pub fn random_monomial_ideal(rng: &mut impl Rng, n: usize, max_deg: u32, max_gens: usize) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| random_power_product(rng, n, 1, max_deg))
        .collect();
    MonomialIdeal::new(n, gens)
}

/// Zero-dimensional strongly stable ideal: a random strongly stable ideal
/// plus a power of the last variable.
pub fn random_zero_dim_strongly_stable(rng: &mut impl Rng, n: usize, max_deg: u32) -> MonomialIdeal {
    let mut s = seeds(rng, n, max_deg);
    let e = rng.gen_range(1..=max_deg) as u16;
    s.push(PowerProduct::one(n).with_exponent(n - 1, e));
    strongly_stable_closure(n, &s)
}

/// A homogeneous form of degree `d` with up to `max_terms` terms and small
/// nonzero integer coefficients.
pub fn random_form(rng: &mut impl Rng, n: usize, d: u32, max_terms: usize) -> Polynomial {
    loop {
        let terms = rng.gen_range(1..=max_terms);
        let f = Polynomial::from_terms(
            n,
            (0..terms).map(|_| {
                let c = loop {
                    let c = rng.gen_range(-9i64..=9);
                    if c != 0 {
                        break c;
                    }
                };
                (rat(c), random_power_product(rng, n, d, d))
            }),
        );
        if !f.is_zero() {
            return f;
        }
    }
}

/// 1 to 3 random forms of degree at most `max_deg`.
pub fn random_homogeneous_gens(rng: &mut impl Rng, n: usize, max_deg: u32) -> Vec<Polynomial> {
    let count = rng.gen_range(1..=3);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            random_form(rng, n, d, 3)
        })
        .collect()
}

/// Parts `(t_j, alpha_j)` satisfying `t_1 = 1`, `m(t_j) < j`,
/// `t_j | t_{j+1}` and non-decreasing `deg t_j + alpha_j`.
pub fn random_special_parts(rng: &mut impl Rng, n: usize) -> Vec<SpecialPart> {
    let r = rng.gen_range(1..=n);
    let mut parts = vec![SpecialPart {
        t: PowerProduct::one(n),
        alpha: rng.gen_range(1..=3),
    }];
    for j in 1..r {
        let prev = &parts[j - 1];
        let mut t = prev.t.clone();
        for _ in 0..rng.gen_range(0..=2) {
            t = t.times_var(rng.gen_range(0..j));
        }
        let floor = (prev.t.degree() + prev.alpha).saturating_sub(t.degree());
        let alpha = floor + rng.gen_range(0..=1);
        parts.push(SpecialPart { t, alpha });
    }
    parts
}
