use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::PolyIdeal;
use crate::monomial::MonomialIdeal;
use crate::numeric::{rat, QMatrix, Rational};
use crate::polyring::{LinearForm, Polynomial, PowerProduct};

/// Coefficient bound for generic matrices.
pub const GENERIC_BOUND: i64 = 1000;
/// Number of draws before generic construction gives up.
pub const GENERIC_REDRAWS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DistractionKind {
    Identical,
    Classic,
    Generic { seed: u64 },
    Custom,
}

/// An `N`-distraction matrix: row `i` holds `L_{i,1}, ..., L_{i,N}` and
/// `L_{i,j} = L_{i,N}` for `j > N`.
///
/// Every selection of one entry per row spans the linear forms; this is
/// checked on construction for all `N^n` selections, which covers every
/// column index since the tail is constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistractionMatrix {
    n: usize,
    big_n: usize,
    rows: Vec<Vec<LinearForm>>,
    kind: DistractionKind,
}

impl DistractionMatrix {
    pub fn identical(n: usize, big_n: usize) -> Result<Self> {
        check_shape(n, big_n)?;
        let rows = (0..n).map(|i| vec![LinearForm::var(n, i); big_n]).collect();
        Ok(DistractionMatrix { n, big_n, rows, kind: DistractionKind::Identical })
    }

    /// `L_ij = x_i - (j-1) x_n` for `i < n`, `j < N`; `L_nj = x_n`;
    /// `L_ij = x_i` for `j >= N`. Distractions of power products in the
    /// first `n-1` variables are square-free when `N` exceeds every exponent.
    pub fn classic(n: usize, big_n: usize) -> Result<Self> {
        check_shape(n, big_n)?;
        let rows = (0..n)
            .map(|i| {
                (1..=big_n)
                    .map(|j| {
                        let mut c = vec![0i64; n];
                        c[i] = 1;
                        if i + 1 < n && j < big_n {
                            c[n - 1] = -(j as i64 - 1);
                        }
                        LinearForm::from_i64(&c)
                    })
                    .collect()
            })
            .collect();
        Ok(DistractionMatrix { n, big_n, rows, kind: DistractionKind::Classic })
    }

    /// Uniform integer coefficients in `[-1000, 1000]`, redrawn until the
    /// matrix is sufficiently generic.
    pub fn generic(n: usize, big_n: usize, seed: u64) -> Result<Self> {
        check_shape(n, big_n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..GENERIC_REDRAWS {
            let rows: Vec<Vec<LinearForm>> = (0..n)
                .map(|_| {
                    (0..big_n)
                        .map(|_| {
                            let c: Vec<i64> = (0..n)
                                .map(|_| rng.gen_range(-GENERIC_BOUND..=GENERIC_BOUND))
                                .collect();
                            LinearForm::from_i64(&c)
                        })
                        .collect()
                })
                .collect();
            let m = DistractionMatrix { n, big_n, rows, kind: DistractionKind::Generic { seed } };
            if m.is_sufficiently_generic() {
                return Ok(m);
            }
        }
        Err(Error::Construction(format!(
            "no valid generic matrix after {GENERIC_REDRAWS} draws"
        )))
    }

    /// A matrix from explicit rows `L_{i,1..N}`, validated.
    pub fn custom(rows: Vec<Vec<LinearForm>>) -> Result<Self> {
        let n = rows.len();
        let big_n = rows.first().map_or(0, Vec::len);
        check_shape(n, big_n)?;
        if rows.iter().any(|r| r.len() != big_n) {
            return Err(Error::Construction("rows of unequal length".into()));
        }
        if rows.iter().flatten().any(|l| l.num_vars() != n) {
            return Err(Error::Construction("form in wrong ring".into()));
        }
        let m = DistractionMatrix { n, big_n, rows, kind: DistractionKind::Custom };
        if !m.spans_everywhere() {
            return Err(Error::Construction("some selection does not span P_1".into()));
        }
        Ok(m)
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn tail_index(&self) -> usize {
        self.big_n
    }

    pub fn kind(&self) -> DistractionKind {
        self.kind
    }

    /// `L_{i,j}` with 0-based row `i` and 1-based column `j`.
    pub fn entry(&self, i: usize, j: usize) -> &LinearForm {
        let col = j.clamp(1, self.big_n) - 1;
        &self.rows[i][col]
    }

    pub fn rows(&self) -> &[Vec<LinearForm>] {
        &self.rows
    }

    /// Coefficient matrix of `(L_{1,j_1}, ..., L_{n,j_n})`, one form per row.
    fn selection(&self, cols: &[usize]) -> QMatrix {
        let rows = cols
            .iter()
            .enumerate()
            .map(|(i, &j)| self.entry(i, j).coeffs().to_vec())
            .collect();
        QMatrix::from_rows(rows).expect("selection is rectangular")
    }

    fn selections(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let total = self.big_n.pow(self.n as u32);
        (0..total).map(move |mut code| {
            (0..self.n)
                .map(|_| {
                    let j = code % self.big_n + 1;
                    code /= self.big_n;
                    j
                })
                .collect()
        })
    }

    fn spans_everywhere(&self) -> bool {
        self.selections()
            .all(|cols| self.selection(&cols).rank() == self.n)
    }

    /// True if every selection has all leading principal minors nonzero,
    /// i.e. `<L_{1,j_1}, ..., L_{k,j_k}, x_{k+1}, ..., x_n> = P_1` for all `k`.
    pub fn is_sufficiently_generic(&self) -> bool {
        self.selections().all(|cols| {
            self.selection(&cols)
                .principal_minors_all_nonzero()
                .expect("selection is square")
        })
    }

    /// `g * L`: `g` applied to every entry.
    pub fn transform(&self, g: &QMatrix) -> Result<Self> {
        if g.rows() != self.n || !g.is_square() {
            return Err(Error::Dimension(format!(
                "{}x{} matrix on {} variables",
                g.rows(),
                g.cols(),
                self.n
            )));
        }
        if g.determinant()?.is_zero() {
            return Err(Error::InvalidTransform("singular matrix".into()));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|l| l.transform(g)).collect())
            .collect();
        DistractionMatrix::custom(rows)
    }

    /// The image of `L` modulo `(x_m, ..., x_n)`, as a matrix over the first
    /// `m - 1` variables (`m` is 1-based).
    pub fn restrict(&self, m: usize) -> Result<Self> {
        if m < 2 || m > self.n {
            return Err(Error::Dimension(format!("restriction index {m} outside 2..={}", self.n)));
        }
        let k = m - 1;
        if self.kind == DistractionKind::Identical {
            return Self::identical(k, self.big_n);
        }
        let rows: Vec<Vec<LinearForm>> = self.rows[..k]
            .iter()
            .map(|r| r.iter().map(|l| l.truncate(k)).collect())
            .collect();
        let identity = rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().all(|l| *l == LinearForm::var(k, i)));
        if identity {
            return Self::identical(k, self.big_n);
        }
        DistractionMatrix::custom(rows)
    }

    /// `D_L(t) = prod_i prod_{j=1}^{a_i} L_{i,j}`.
    pub fn distract_term(&self, t: &PowerProduct) -> Polynomial {
        assert_eq!(t.num_vars(), self.n, "power product in wrong ring");
        if self.kind == DistractionKind::Identical {
            return Polynomial::monomial(t.clone());
        }
        let mut out = Polynomial::one(self.n);
        for i in 0..self.n {
            for j in 1..=usize::from(t.exponent(i)) {
                out = &out * &self.entry(i, j).to_polynomial();
            }
        }
        out
    }

    /// `D_L(I)`, generated by the distractions of the minimal generators.
    pub fn distract_ideal(&self, ideal: &MonomialIdeal) -> PolyIdeal {
        let gens = ideal.gens().iter().map(|t| self.distract_term(t)).collect();
        PolyIdeal::new(self.n, gens)
    }
}

fn check_shape(n: usize, big_n: usize) -> Result<()> {
    if n == 0 || big_n == 0 {
        return Err(Error::Construction(format!("need n >= 1 and N >= 1, got n = {n}, N = {big_n}")));
    }
    Ok(())
}

/// Uniform random integer matrix in `[-bound, bound]`, redrawn until
/// invertible.
pub fn random_invertible(n: usize, bound: i64, rng: &mut impl Rng) -> QMatrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| rat(rng.gen_range(-bound..=bound))).collect())
            .collect();
        let g = QMatrix::from_rows(rows).expect("square");
        if g.rank() == n {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::OrderingSpec;

    fn pp(e: &[u16]) -> PowerProduct {
        PowerProduct::new(e)
    }

    #[test]
    fn classic_entries() {
        let l = DistractionMatrix::classic(4, 6).unwrap();
        let want: Vec<LinearForm> = (0..5).map(|j| LinearForm::from_i64(&[1, 0, 0, -j])).collect();
        let got: Vec<LinearForm> = (1..=5).map(|j| l.entry(0, j).clone()).collect();
        assert_eq!(got, want);
        assert_eq!(*l.entry(0, 6), LinearForm::var(4, 0));
        assert_eq!(*l.entry(0, 60), LinearForm::var(4, 0));
        assert_eq!(*l.entry(3, 3), LinearForm::var(4, 3));
    }

    #[test]
    fn distract_term_examples() {
        let id = DistractionMatrix::identical(3, 4).unwrap();
        assert_eq!(id.distract_term(&pp(&[2, 1, 0])), Polynomial::monomial(pp(&[2, 1, 0])));

        let l = DistractionMatrix::classic(4, 6).unwrap();
        let lin = |c: &[i64]| LinearForm::from_i64(c).to_polynomial();
        let x5 = [0, 1, 2, 3, 4]
            .iter()
            .fold(Polynomial::one(4), |acc, &j| &acc * &lin(&[1, 0, 0, -j]));
        assert_eq!(l.distract_term(&pp(&[5, 0, 0, 0])), x5);
        let x3y2 = [0, 1, 2]
            .iter()
            .fold(Polynomial::one(4), |acc, &j| &acc * &lin(&[1, 0, 0, -j]));
        let x3y2 = &(&x3y2 * &lin(&[0, 1, 0, 0])) * &lin(&[0, 1, 0, -1]);
        assert_eq!(l.distract_term(&pp(&[3, 2, 0, 0])), x3y2);
        assert_eq!(l.distract_term(&pp(&[0, 0, 0, 0])), Polynomial::one(4));
    }

    #[test]
    fn classic_is_not_multiplicative() {
        let l = DistractionMatrix::classic(2, 3).unwrap();
        let x1 = pp(&[1, 0]);
        let lhs = l.distract_term(&x1.mul(&x1));
        let rhs = &l.distract_term(&x1) * &l.distract_term(&x1);
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn genericity() {
        assert!(DistractionMatrix::identical(3, 3).unwrap().is_sufficiently_generic());
        // classic in two variables: every selection is [[1, -k], [0, 1]]
        assert!(DistractionMatrix::classic(2, 3).unwrap().is_sufficiently_generic());
        let g = DistractionMatrix::generic(3, 3, 5).unwrap();
        assert!(g.is_sufficiently_generic());
        assert_eq!(g, DistractionMatrix::generic(3, 3, 5).unwrap());
    }

    #[test]
    fn custom_rejects_degenerate_rows() {
        let rows = vec![
            vec![LinearForm::from_i64(&[1, 0]), LinearForm::from_i64(&[1, 1])],
            vec![LinearForm::from_i64(&[0, 1]), LinearForm::from_i64(&[1, 1])],
        ];
        assert!(matches!(DistractionMatrix::custom(rows), Err(Error::Construction(_))));
    }

    #[test]
    fn transform_round_trip_and_operator_identity() {
        let l = DistractionMatrix::classic(2, 3).unwrap();
        let g = QMatrix::from_i64_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
        let gl = l.transform(&g).unwrap();
        let back = gl.transform(&g.inverse().unwrap()).unwrap();
        assert_eq!(back.rows(), l.rows());
        assert_eq!(
            l.transform(&QMatrix::identity(2)).unwrap().rows(),
            l.rows()
        );
        let t = pp(&[2, 0]);
        assert_eq!(
            l.distract_term(&t).apply_linear_change(&g).unwrap(),
            gl.distract_term(&t)
        );
        let singular = QMatrix::from_i64_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(l.transform(&singular).is_err());
    }

    #[test]
    fn restriction() {
        let l = DistractionMatrix::classic(4, 6).unwrap();
        let r = l.restrict(4).unwrap();
        assert_eq!(r.kind(), DistractionKind::Identical);
        assert_eq!(r.num_vars(), 3);
        let g = DistractionMatrix::generic(3, 3, 11).unwrap();
        assert!(g.restrict(3).unwrap().is_sufficiently_generic());
    }

    #[test]
    fn distracted_ideal_hilbert_function() {
        let i = MonomialIdeal::new(
            4,
            [[5, 0, 0, 0], [4, 1, 0, 0], [4, 0, 1, 0], [3, 2, 0, 0], [2, 3, 0, 0]]
                .iter()
                .map(|e| pp(e))
                .collect(),
        );
        let l = DistractionMatrix::classic(4, 6).unwrap();
        let d = l.distract_ideal(&i);
        let init = d.initial_ideal(&OrderingSpec::degrevlex(4));
        assert_eq!(
            crate::monomial::hilbert(&init, 6),
            crate::monomial::hilbert(&i, 6)
        );
    }
}
