use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::MonomialIdeal;
use crate::groebner::PolyIdeal;
use crate::numeric::{rat, QMatrix};
use crate::polyring::OrderingSpec;

const PROBE_BOUND: i64 = 10;

/// Random upper-triangular matrix with unit diagonal and entries in
/// `[-10, 10]` above it.
pub fn random_unipotent(n: usize, rng: &mut impl Rng) -> QMatrix {
    let mut g = QMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            g[(i, j)] = rat(rng.gen_range(-PROBE_BOUND..=PROBE_BOUND));
        }
    }
    g
}

/// Probabilistic Borel-fixedness test: `g(I) == I` for `trials` random
/// upper-triangular `g`. A `false` answer is certain.
pub fn borel_probe(ideal: &MonomialIdeal, trials: usize, rng_seed: u64) -> bool {
    let n = ideal.num_vars();
    let poly = PolyIdeal::from_monomial(ideal);
    let ord = OrderingSpec::degrevlex(n);
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    (0..trials.max(1)).all(|_| {
        let g = random_unipotent(n, &mut rng);
        let moved = poly
            .apply_linear_change(&g)
            .expect("unipotent matrices are invertible");
        moved.equals(&poly, &ord)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::PowerProduct;

    fn ideal(n: usize, gens: &[&[u16]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|e| PowerProduct::new(e)).collect())
    }

    #[test]
    fn examples() {
        assert!(borel_probe(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]), 3, 1));
        assert!(!borel_probe(&ideal(2, &[&[0, 1]]), 3, 1));
        assert!(borel_probe(&ideal(3, &[&[3, 0, 0]]), 3, 1));
    }
}
