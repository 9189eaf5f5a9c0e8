//! Paper examples plus seeded random instances for each statement.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::instances::{
    random_form, random_homogeneous_gens, random_power_product, random_special_parts,
    random_strongly_stable, random_zero_dim_strongly_stable,
};
use super::report::{with_retry, CheckReport};
use super::theorems::{
    build_radical_witness, check_counterexample, check_counterexample_part1, check_gcd_corollary,
    check_gindl, check_ginspecstab, check_hyperplane_theorem, check_main_theorem, check_sumprinc,
};
use crate::distraction::{random_invertible, DistractionMatrix};
use crate::gin::COEFF_BOUND;
use crate::groebner::PolyIdeal;
use crate::monomial::{strongly_stable_closure, MonomialIdeal};
use crate::points::{points_from_ideal, verify_points};
use crate::polyring::{LinearForm, OrderingSpec, PowerProduct};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatementId {
    Main,
    Gindl,
    Hyperplane,
    Sumprinc,
    Counterexample,
    Gcd,
    Radical,
    Points,
    All,
}

impl StatementId {
    pub const EACH: [StatementId; 8] = [
        StatementId::Main,
        StatementId::Gindl,
        StatementId::Hyperplane,
        StatementId::Sumprinc,
        StatementId::Counterexample,
        StatementId::Gcd,
        StatementId::Radical,
        StatementId::Points,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatementId::Main => "main",
            StatementId::Gindl => "gindl",
            StatementId::Hyperplane => "hyperplane",
            StatementId::Sumprinc => "sumprinc",
            StatementId::Counterexample => "counterexample",
            StatementId::Gcd => "gcd",
            StatementId::Radical => "radical",
            StatementId::Points => "points",
            StatementId::All => "all",
        }
    }
}

impl FromStr for StatementId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        StatementId::EACH
            .iter()
            .chain(&[StatementId::All])
            .find(|id| id.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown statement id `{s}`"))
    }
}

fn mono(n: usize, gens: &[&[u16]]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|e| PowerProduct::new(e)).collect())
}

/// `(x^5, x^4 y, x^4 z, x^3 y^2, x^2 y^3)` in `K[x, y, z, w]`.
pub fn intro_ideal() -> MonomialIdeal {
    mono(4, &[&[5, 0, 0, 0], &[4, 1, 0, 0], &[4, 0, 1, 0], &[3, 2, 0, 0], &[2, 3, 0, 0]])
}

/// The weight matrix `W` of the intro session.
pub fn intro_ordering() -> OrderingSpec {
    OrderingSpec::matrix(vec![vec![1, 1, 1, 1], vec![0, 0, 0, -1], vec![1, 0, 0, 0], vec![0, 1, 0, 0]])
        .expect("W is admissible")
}

/// Tail index large enough for every exponent of `I`.
fn tail_for(ideal: &MonomialIdeal) -> usize {
    let e = ideal
        .gens()
        .iter()
        .flat_map(|t| t.exponents().iter().copied())
        .max()
        .unwrap_or(0);
    usize::from(e) + 1
}

/// Runs the checks for `id` on the fixed worked instances plus `instances` random
/// ones. Inconclusive gins are retried once with a fresh seed.
pub fn run(id: StatementId, instances: usize, seed: u64) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    match id {
        StatementId::All => {
            for each in StatementId::EACH {
                out.extend(run(each, instances, seed));
            }
        }
        StatementId::Main => {
            let i = mono(2, &[&[2, 0], &[1, 1], &[0, 2]]);
            out.push(check_main_theorem(&i, &DistractionMatrix::generic(2, 3, seed).unwrap()));
            let t = strongly_stable_closure(3, &[PowerProduct::new(&[1, 2, 1])]);
            let g = random_invertible(3, COEFF_BOUND, &mut rng);
            let gl = DistractionMatrix::classic(3, tail_for(&t)).unwrap().transform(&g).unwrap();
            out.push(check_main_theorem(&t, &gl));
            for k in 0..instances {
                let n = rng.gen_range(2..=4);
                let i = random_strongly_stable(&mut rng, n, 5);
                let big_n = tail_for(&i);
                let l = if k % 2 == 0 {
                    let g = random_invertible(n, COEFF_BOUND, &mut rng);
                    DistractionMatrix::classic(n, big_n).unwrap().transform(&g).unwrap()
                } else {
                    DistractionMatrix::generic(n, big_n, rng.gen()).unwrap()
                };
                out.push(check_main_theorem(&i, &l));
            }
        }
        StatementId::Gindl => {
            let i = intro_ideal();
            let classic = DistractionMatrix::classic(4, 6).unwrap();
            out.push(with_retry(seed, |s| check_gindl(&i, &classic, s)));
            let id = DistractionMatrix::identical(4, 6).unwrap();
            out.push(with_retry(seed, |s| check_gindl(&i, &id, s)));
            for k in 0..instances {
                let n = rng.gen_range(2..=4);
                let i = random_strongly_stable(&mut rng, n, 5);
                let big_n = tail_for(&i);
                let l = if k % 2 == 0 {
                    DistractionMatrix::classic(n, big_n).unwrap()
                } else {
                    DistractionMatrix::generic(n, big_n, rng.gen()).unwrap()
                };
                let s = rng.gen();
                out.push(with_retry(s, |s| check_gindl(&i, &l, s)));
            }
        }
        StatementId::Hyperplane => {
            let d = DistractionMatrix::classic(4, 6).unwrap().distract_ideal(&intro_ideal());
            out.push(with_retry(seed, |s| check_hyperplane_theorem(&d, &intro_ordering(), 3, s)));
            out.push(with_retry(seed, |s| check_hyperplane_theorem(&d, &OrderingSpec::degrevlex(4), 3, s)));
            for _ in 0..instances {
                let n = rng.gen_range(2..=4);
                let i = PolyIdeal::new(n, random_homogeneous_gens(&mut rng, n, 4));
                let s = rng.gen();
                out.push(with_retry(s, |s| check_hyperplane_theorem(&i, &OrderingSpec::degrevlex(n), n - 1, s)));
            }
        }
        StatementId::Sumprinc => {
            let l = DistractionMatrix::classic(2, 3).unwrap();
            out.push(with_retry(seed, |s| check_sumprinc(&PowerProduct::new(&[1, 1]), &l, s)));
            for k in 0..instances {
                let n = rng.gen_range(2..=4);
                let s = rng.gen();
                if k % 2 == 0 {
                    let t = random_power_product(&mut rng, n, 1, 4);
                    let l = DistractionMatrix::classic(n, t.degree() as usize + 1).unwrap();
                    out.push(with_retry(s, |s| check_sumprinc(&t, &l, s)));
                } else {
                    let parts = random_special_parts(&mut rng, n);
                    let l = DistractionMatrix::generic(n, 6, rng.gen()).unwrap();
                    out.push(with_retry(s, |s| check_ginspecstab(n, &parts, &l, s)));
                }
            }
        }
        StatementId::Counterexample => {
            out.push(with_retry(seed, check_counterexample_part1));
            out.push(with_retry(seed, check_counterexample));
        }
        StatementId::Gcd => {
            let j = mono(3, &[&[1, 0, 0], &[0, 1, 0]]);
            let f = LinearForm::from_i64(&[1, 1, 1]).to_polynomial();
            let l = DistractionMatrix::classic(3, 2).unwrap();
            out.push(with_retry(seed, |s| check_gcd_corollary(&j, 1, &f, &l, s)));
            for _ in 0..instances {
                let n = rng.gen_range(2..=3);
                let j = random_strongly_stable(&mut rng, n, 3);
                let a = rng.gen_range(0..=2);
                let f = if a == 0 {
                    crate::polyring::Polynomial::one(n)
                } else {
                    random_form(&mut rng, n, a, 3)
                };
                let l = DistractionMatrix::classic(n, tail_for(&j)).unwrap();
                let s = rng.gen();
                out.push(with_retry(s, |s| check_gcd_corollary(&j, a, &f, &l, s)));
            }
        }
        StatementId::Radical => {
            let fixed = PolyIdeal::from_monomial(&mono(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0], &[1, 0, 1]]));
            out.push(radical_report(&fixed, true, seed));
            for _ in 0..instances {
                let n = rng.gen_range(2..=3);
                let i = random_strongly_stable(&mut rng, n, 3);
                out.push(radical_report(&PolyIdeal::from_monomial(&i), true, rng.gen()));
            }
        }
        StatementId::Points => {
            let i = MonomialIdeal::segment_power(2, 2, 2);
            out.push(points_report(&i, &DistractionMatrix::classic(3, 3).unwrap(), seed));
            for _ in 0..instances {
                let n = rng.gen_range(1..=3);
                let i = random_zero_dim_strongly_stable(&mut rng, n, 3);
                let l = DistractionMatrix::classic(n + 1, tail_for(&i)).unwrap();
                out.push(points_report(&i, &l, rng.gen()));
            }
        }
    }
    out
}

fn radical_report(ideal: &PolyIdeal, want_saturated: bool, seed: u64) -> CheckReport {
    match build_radical_witness(ideal, want_saturated, seed) {
        Ok((_, r)) => r,
        Err(e) => CheckReport::fail("radical", format!("I = {:?}", ideal.gens()), json!({"error": e.to_string()}), vec![seed]),
    }
}

fn points_report(ideal: &MonomialIdeal, l: &DistractionMatrix, seed: u64) -> CheckReport {
    match points_from_ideal(ideal, l) {
        Ok(set) => with_retry(seed, |s| verify_points(&set, s)),
        Err(e) => CheckReport::fail("points", format!("I = {ideal}"), json!({"error": e.to_string()}), vec![seed]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_parse() {
        for id in StatementId::EACH {
            assert_eq!(id.name().parse::<StatementId>().unwrap(), id);
        }
        assert_eq!("all".parse::<StatementId>().unwrap(), StatementId::All);
        assert!("nope".parse::<StatementId>().is_err());
    }
}
