//! Finite sets of rational projective points whose degrevlex gin is a given
//! strongly stable ideal.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};
use serde_json::json;

use crate::checks::CheckReport;
use crate::distraction::{is_radical_for, radirred_forms, DistractionMatrix};
use crate::error::{Error, Result};
use crate::gin::{gin, DEFAULT_TRIALS};
use crate::groebner::PolyIdeal;
use crate::monomial::{hilbert, irreducible_decomposition, stability_flags, MonomialIdeal};
use crate::numeric::{QMatrix, Rational};
use crate::polyring::OrderingSpec;

/// A point of projective space, scaled so its first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    coords: Vec<Rational>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let Some(lead) = coords.iter().find(|c| !c.is_zero()).cloned() else {
            return Err(Error::Degenerate("all coordinates are zero".into()));
        };
        let coords = if lead.is_one() {
            coords
        } else {
            coords.iter().map(|c| c / &lead).collect()
        };
        Ok(ProjectivePoint { coords })
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Comma-separated rationals.
    pub fn to_export_line(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        parts.join(",")
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        parts.serialize(s)
    }
}

#[derive(Clone, Debug)]
pub struct PointSet {
    /// Sorted, pairwise distinct.
    pub points: Vec<ProjectivePoint>,
    /// `D_L(I P')` in `n + 1` variables.
    pub defining_ideal: PolyIdeal,
    /// `I P'`, the extension of `I` by a trailing variable.
    pub extended: MonomialIdeal,
}

/// Points cut out by `D_L(I P')`, where `I` is a zero-dimensional strongly
/// stable ideal in `n` variables and `L` lives in `n + 1` variables.
///
/// Each irreducible component of `I P'` distracts to an intersection of
/// linear primes of height `n`; each prime is the kernel line of its
/// coefficient matrix.
pub fn points_from_ideal(ideal: &MonomialIdeal, l: &DistractionMatrix) -> Result<PointSet> {
    let n = ideal.num_vars();
    if l.num_vars() != n + 1 {
        return Err(Error::Dimension(format!(
            "matrix has {} variables, need {}",
            l.num_vars(),
            n + 1
        )));
    }
    if ideal.is_unit() || !ideal.is_zero_dimensional() {
        return Err(Error::Precondition("I must be proper and zero-dimensional".into()));
    }
    if !stability_flags(ideal).is_strongly_stable {
        return Err(Error::Precondition("I must be strongly stable".into()));
    }
    let extended = ideal.extend(1);
    if !is_radical_for(l, &extended) {
        return Err(Error::Precondition("L is not radical for I".into()));
    }
    let mut points = BTreeSet::new();
    for comp in irreducible_decomposition(&extended) {
        for forms in radirred_forms(l, &comp)? {
            let rows = forms.iter().map(|f| f.coeffs().to_vec()).collect();
            let kernel = QMatrix::from_rows(rows)?.kernel();
            if kernel.len() != 1 {
                return Err(Error::Degenerate(format!("kernel of dimension {}", kernel.len())));
            }
            points.insert(ProjectivePoint::new(kernel.into_iter().next().unwrap())?);
        }
    }
    Ok(PointSet {
        points: points.into_iter().collect(),
        defining_ideal: l.distract_ideal(&extended),
        extended,
    })
}

/// Checks that every generator vanishes at every point, that the number of
/// points is the eventual Hilbert function value, and that the degrevlex
/// gin of the defining ideal is `I P'`.
pub fn verify_points(set: &PointSet, seed: u64) -> CheckReport {
    const ID: &str = "points";
    let n1 = set.extended.num_vars();
    let inst = format!("I = {}, {} points", set.extended, set.points.len());
    for g in set.defining_ideal.gens() {
        for p in &set.points {
            let v = g.evaluate(p.coords());
            if !v.is_zero() {
                let w = json!({"generator": g.to_string(), "point": format!("{p:?}"), "value": v.to_string()});
                return CheckReport::fail(ID, inst, w, vec![seed]);
            }
        }
    }
    let drl = OrderingSpec::degrevlex(n1);
    let d = set.extended.max_degree() + 1;
    let init = set.defining_ideal.initial_ideal(&drl);
    let hf = hilbert(&init, d).values[d as usize] as usize;
    if hf != set.points.len() {
        let w = json!({"points": set.points.len(), "hilbert_value": hf, "degree": d});
        return CheckReport::fail(ID, inst, w, vec![seed]);
    }
    match gin(&set.defining_ideal, &drl, DEFAULT_TRIALS, seed) {
        Ok(r) if r.agreed => {
            let w = json!({"expected": set.extended.to_string(), "actual": r.ideal.to_string()});
            CheckReport::verdict(ID, inst, r.ideal == set.extended, w, r.seeds)
        }
        Ok(r) => CheckReport::inconclusive(ID, inst, json!({"reason": "gin trials disagreed"}), r.seeds),
        Err(e) => CheckReport::inconclusive(ID, inst, json!({"reason": e.to_string()}), vec![seed]),
    }
}
