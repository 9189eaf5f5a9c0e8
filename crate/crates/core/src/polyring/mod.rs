//! Power products, term orderings, sparse polynomials over Q and linear
//! substitutions.

mod linear;
mod ordering;
mod polynomial;
mod power_product;

pub use linear::{substitute_variable, LinearForm};
pub use ordering::{OrderKind, OrderingSpec};
pub use polynomial::Polynomial;
pub use power_product::{default_names, PowerProduct};


#[cfg(test)]
mod props {
    use super::*;
    use crate::numeric::{rat, QMatrix};
    use proptest::prelude::*;

    fn poly(n: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((-4i64..5, proptest::collection::vec(0u16..3, n)), 0..5)
            .prop_map(move |ts| {
                Polynomial::from_terms(n, ts.into_iter().map(|(c, e)| (rat(c), PowerProduct::new(&e))))
            })
    }

    fn invertible(n: usize) -> impl Strategy<Value = QMatrix> {
        proptest::collection::vec(-3i64..4, n * n).prop_filter_map("singular", move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(n).map(<[i64]>::to_vec).collect();
            let m = QMatrix::from_i64_rows(&rows).unwrap();
            (m.rank() == n).then_some(m)
        })
    }

    proptest! {
        #[test]
        fn linear_change_round_trip(f in poly(3), g in invertible(3)) {
            let there = f.apply_linear_change(&g).unwrap();
            let back = there.apply_linear_change(&g.inverse().unwrap()).unwrap();
            prop_assert_eq!(back, f);
        }

        #[test]
        fn linear_change_is_ring_map(f in poly(2), h in poly(2), g in invertible(2)) {
            let gf = f.apply_linear_change(&g).unwrap();
            let gh = h.apply_linear_change(&g).unwrap();
            prop_assert_eq!((&f + &h).apply_linear_change(&g).unwrap(), &gf + &gh);
            prop_assert_eq!((&f * &h).apply_linear_change(&g).unwrap(), &gf * &gh);
        }
    }
}
