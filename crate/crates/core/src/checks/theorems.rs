use serde_json::{json, Value};

use super::report::CheckReport;
use crate::distraction::{is_radical_for, radical_certificate, DistractionMatrix};
use crate::error::{Error, Result};
use crate::gin::{gin, hyperplane_section, random_linear_form, GinResult, DEFAULT_TRIALS};
use crate::groebner::PolyIdeal;
use crate::monomial::{
    principal_formulas, special_gin, special_stable_ideal, stability_flags, stable_closure,
    MonomialIdeal, SpecialPart,
};
use crate::polyring::{OrderingSpec, Polynomial, PowerProduct};

/// Degree bound for the bounded x_i-DegRev-type test.
pub const DEGREV_BOUND: u32 = 6;

/// Unanimous gin, or a witness explaining why the value is not usable.
fn unanimous_gin(ideal: &PolyIdeal, ord: &OrderingSpec, seed: u64, seeds: &mut Vec<u64>) -> std::result::Result<GinResult, Value> {
    match gin(ideal, ord, DEFAULT_TRIALS, seed) {
        Ok(r) => {
            seeds.extend(&r.seeds);
            if r.agreed {
                Ok(r)
            } else {
                Err(json!({"reason": "gin trials disagreed", "majority": r.ideal.to_string()}))
            }
        }
        Err(Error::AmbiguousGin { trials }) => {
            Err(json!({"reason": format!("no majority among {trials} gin trials")}))
        }
        Err(e) => Err(json!({"reason": e.to_string()})),
    }
}

fn mismatch(expected: &MonomialIdeal, actual: &MonomialIdeal) -> Value {
    json!({"expected": expected.to_string(), "actual": actual.to_string()})
}

fn describe(l: &DistractionMatrix) -> String {
    format!("{:?} N={}", l.kind(), l.tail_index())
}

/// `in_drl(D_L(I)) = I` for strongly stable `I` and sufficiently generic `L`.
///
/// Inputs outside the hypotheses are reported as skipped; for a stable but
/// not strongly stable `I` the witness records whether equality happened to
/// hold.
pub fn check_main_theorem(ideal: &MonomialIdeal, l: &DistractionMatrix) -> CheckReport {
    const ID: &str = "main";
    let inst = format!("I = {ideal}, L = {}", describe(l));
    let n = ideal.num_vars();
    if l.num_vars() != n {
        return CheckReport::skipped(ID, inst, json!({"reason": "matrix and ideal in different rings"}), vec![]);
    }
    if !l.is_sufficiently_generic() {
        return CheckReport::skipped(ID, inst, json!({"reason": "L is not sufficiently generic"}), vec![]);
    }
    let init = l.distract_ideal(ideal).initial_ideal(&OrderingSpec::degrevlex(n));
    let flags = stability_flags(ideal);
    if !flags.is_strongly_stable {
        return CheckReport::skipped(
            ID,
            inst,
            json!({
                "reason": "I is not strongly stable",
                "is_stable": flags.is_stable,
                "in_drl": init.to_string(),
                "equal": init == *ideal,
            }),
            vec![],
        );
    }
    CheckReport::verdict(ID, inst, init == *ideal, mismatch(ideal, &init), vec![])
}

/// `gin_drl(D_L(I)) = I` for strongly stable `I` and any distraction `L`.
pub fn check_gindl(ideal: &MonomialIdeal, l: &DistractionMatrix, seed: u64) -> CheckReport {
    const ID: &str = "gindl";
    let inst = format!("I = {ideal}, L = {}", describe(l));
    if !stability_flags(ideal).is_strongly_stable {
        return CheckReport::skipped(ID, inst, json!({"reason": "I is not strongly stable"}), vec![seed]);
    }
    let n = ideal.num_vars();
    let mut seeds = vec![];
    match unanimous_gin(&l.distract_ideal(ideal), &OrderingSpec::degrevlex(n), seed, &mut seeds) {
        Ok(r) => CheckReport::verdict(ID, inst, r.ideal == *ideal, mismatch(ideal, &r.ideal), seeds),
        Err(w) => CheckReport::inconclusive(ID, inst, w, seeds),
    }
}

/// `gin_{ord restricted}(I_h) = (gin_ord(I))_{x_i}` for a random `h` and an
/// ordering of `x_i`-DegRev type; `i` is 0-based.
pub fn check_hyperplane_theorem(ideal: &PolyIdeal, ord: &OrderingSpec, i: usize, seed: u64) -> CheckReport {
    const ID: &str = "hyperplane";
    let n = ideal.num_vars();
    let inst = format!("I = {:?}, ord = {:?}, i = {}", ideal.gens(), ord.kind(), i + 1);
    if n < 2 || i >= n {
        return CheckReport::skipped(ID, inst, json!({"reason": "need n >= 2 and a valid index"}), vec![seed]);
    }
    if !ideal.is_homogeneous() || ideal.is_zero() {
        return CheckReport::skipped(ID, inst, json!({"reason": "I must be nonzero homogeneous"}), vec![seed]);
    }
    if !ord.is_xi_degrev_type(i, DEGREV_BOUND) {
        return CheckReport::skipped(ID, inst, json!({"reason": "ordering is not of x_i-DegRev type"}), vec![seed]);
    }
    let h = random_linear_form(n, seed);
    let section = hyperplane_section(ideal, &h, i).expect("random form has nonzero coefficients");
    let mut seeds = vec![seed];
    let lhs = if section.is_zero() {
        Ok(None)
    } else {
        unanimous_gin(&section, &ord.restrict(i), seed.wrapping_add(1), &mut seeds).map(Some)
    };
    let rhs = unanimous_gin(ideal, ord, seed.wrapping_add(2), &mut seeds);
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            let left = l.map_or_else(|| MonomialIdeal::zero(n - 1), |g| g.ideal);
            let right = r.ideal.set_var_zero(i);
            let w = json!({
                "h": format!("{h:?}"),
                "gin_of_section": left.to_string(),
                "section_of_gin": right.to_string(),
            });
            CheckReport::verdict(ID, inst, left == right, w, seeds)
        }
        (Err(w), _) | (_, Err(w)) => CheckReport::inconclusive(ID, inst, w, seeds),
    }
}

/// For `I = Stable(t)`: `gin_drl(I)` and `gin_lex(I)` equal the closed form
/// `sum_j x1^b_j (x1..xj)^c_j`, and `gin_drl(D_L(I)) = gin_drl(I)`.
pub fn check_sumprinc(t: &PowerProduct, l: &DistractionMatrix, seed: u64) -> CheckReport {
    const ID: &str = "sumprinc";
    let n = t.num_vars();
    let inst = format!("t = {t}, L = {}", describe(l));
    let Ok((stable, closed)) = principal_formulas(t) else {
        return CheckReport::skipped(ID, inst, json!({"reason": "t = 1"}), vec![seed]);
    };
    let ideal = stable_closure(n, &[t.clone()]);
    if ideal != stable {
        return CheckReport::fail(ID, inst, json!({"closure": ideal.to_string(), "formula": stable.to_string()}), vec![]);
    }
    check_gin_closed_form(ID, inst, &ideal, &closed, l, seed)
}

/// The same statements for `I = sum_j t_j (x1..xj)^alpha_j` under the
/// special hypotheses, with closed form `sum_j x1^deg(t_j) (x1..xj)^alpha_j`.
pub fn check_ginspecstab(n: usize, parts: &[SpecialPart], l: &DistractionMatrix, seed: u64) -> CheckReport {
    const ID: &str = "sumprinc";
    let desc: Vec<String> = parts.iter().map(|p| format!("({}, {})", p.t, p.alpha)).collect();
    let inst = format!("parts = [{}], L = {}", desc.join(", "), describe(l));
    let (ideal, closed) = match (special_stable_ideal(n, parts), special_gin(n, parts)) {
        (Ok(i), Ok(c)) => (i, c),
        (Err(e), _) | (_, Err(e)) => {
            return CheckReport::skipped(ID, inst, json!({"reason": e.to_string()}), vec![seed]);
        }
    };
    check_gin_closed_form(ID, inst, &ideal, &closed, l, seed)
}

fn check_gin_closed_form(
    id: &str,
    inst: String,
    ideal: &MonomialIdeal,
    closed: &MonomialIdeal,
    l: &DistractionMatrix,
    seed: u64,
) -> CheckReport {
    let n = ideal.num_vars();
    let poly = PolyIdeal::from_monomial(ideal);
    let drl = OrderingSpec::degrevlex(n);
    let mut seeds = vec![];
    let results = (
        unanimous_gin(&poly, &drl, seed, &mut seeds),
        unanimous_gin(&poly, &OrderingSpec::lex(n), seed.wrapping_add(1), &mut seeds),
        unanimous_gin(&l.distract_ideal(ideal), &drl, seed.wrapping_add(2), &mut seeds),
    );
    match results {
        (Ok(g_drl), Ok(g_lex), Ok(g_dist)) => {
            let ok = g_drl.ideal == *closed && g_lex.ideal == *closed && g_dist.ideal == g_drl.ideal;
            let w = json!({
                "closed_form": closed.to_string(),
                "gin_drl": g_drl.ideal.to_string(),
                "gin_lex": g_lex.ideal.to_string(),
                "gin_drl_distracted": g_dist.ideal.to_string(),
            });
            CheckReport::verdict(id, inst, ok, w, seeds)
        }
        (Err(w), _, _) | (_, Err(w), _) | (_, _, Err(w)) => CheckReport::inconclusive(id, inst, w, seeds),
    }
}

fn pps(n: usize, list: &[&[u16]]) -> MonomialIdeal {
    MonomialIdeal::new(n, list.iter().map(|e| PowerProduct::new(e)).collect())
}

/// The fourteen generators of `Stable({x2^3, x3^2 x4^2})`.
pub fn counterexample_ideal() -> MonomialIdeal {
    pps(4, &[
        &[3, 0, 0, 0], &[2, 1, 0, 0], &[1, 2, 0, 0], &[0, 3, 0, 0],
        &[2, 0, 2, 0], &[1, 1, 2, 0], &[1, 0, 3, 0], &[1, 0, 2, 1],
        &[0, 2, 2, 0], &[0, 1, 3, 0], &[0, 1, 2, 1], &[0, 0, 4, 0],
        &[0, 0, 3, 1], &[0, 0, 2, 2],
    ])
}

const SHARED_GIN_GENS: [[u16; 4]; 13] = [
    [3, 0, 0, 0], [2, 1, 0, 0], [1, 2, 0, 0], [0, 3, 0, 0],
    [2, 0, 2, 0], [2, 0, 1, 1], [2, 0, 0, 2],
    [1, 1, 2, 0], [1, 1, 1, 1], [1, 0, 3, 0],
    [0, 2, 2, 0], [0, 1, 3, 0], [0, 0, 4, 0],
];
const GIN_ONLY: [u16; 4] = [1, 0, 2, 1];
const DISTRACTED_ONLY: [u16; 4] = [0, 2, 1, 1];

fn shared_plus(extra: [u16; 4]) -> MonomialIdeal {
    let mut gens: Vec<PowerProduct> = SHARED_GIN_GENS.iter().map(|e| PowerProduct::new(e)).collect();
    gens.push(PowerProduct::new(&extra));
    MonomialIdeal::new(4, gens)
}

/// The displayed `gin_drl(I)` for the counterexample ideal.
pub fn counterexample_gin() -> MonomialIdeal {
    shared_plus(GIN_ONLY)
}

/// The displayed `gin_drl(D_L(I))` for a generic `L`.
pub fn counterexample_gin_distracted() -> MonomialIdeal {
    shared_plus(DISTRACTED_ONLY)
}

/// `gin_drl(D_L(I)) != gin_drl(I)` for the stable ideal
/// `I = Stable({x2^3, x3^2 x4^2})` and a generic `L`: the two gins differ
/// exactly in `x1 x3^2 x4` versus `x2^2 x3 x4`.
pub fn check_counterexample(seed: u64) -> CheckReport {
    const ID: &str = "counterexample";
    let closure = stable_closure(4, &[PowerProduct::new(&[0, 3, 0, 0]), PowerProduct::new(&[0, 0, 2, 2])]);
    let inst = "I = Stable({x2^3, x3^2*x4^2}), generic L N=5".to_string();
    let expected = counterexample_ideal();
    if closure != expected {
        return CheckReport::fail(ID, inst, mismatch(&expected, &closure), vec![seed]);
    }
    let l = match DistractionMatrix::generic(4, 5, seed) {
        Ok(l) => l,
        Err(e) => return CheckReport::skipped(ID, inst, json!({"reason": e.to_string()}), vec![seed]),
    };
    let drl = OrderingSpec::degrevlex(4);
    let mut seeds = vec![seed];
    let plain = unanimous_gin(&PolyIdeal::from_monomial(&closure), &drl, seed.wrapping_add(1), &mut seeds);
    let dist = unanimous_gin(&l.distract_ideal(&closure), &drl, seed.wrapping_add(2), &mut seeds);
    match (plain, dist) {
        (Ok(a), Ok(b)) => {
            let (ga, gb) = (a.ideal, b.ideal);
            let only_a = PowerProduct::new(&GIN_ONLY);
            let only_b = PowerProduct::new(&DISTRACTED_ONLY);
            let sharp = ga.gens().contains(&only_a)
                && !ga.contains(&only_b)
                && gb.gens().contains(&only_b)
                && !gb.contains(&only_a);
            let ok = sharp && ga == counterexample_gin() && gb == counterexample_gin_distracted();
            let w = json!({
                "gin_drl": ga.to_string(),
                "gin_drl_distracted": gb.to_string(),
                "expected_gin_drl": counterexample_gin().to_string(),
                "expected_gin_drl_distracted": counterexample_gin_distracted().to_string(),
            });
            CheckReport::verdict(ID, inst, ok, w, seeds)
        }
        (Err(w), _) | (_, Err(w)) => CheckReport::inconclusive(ID, inst, w, seeds),
    }
}

/// The displayed gins of `Stable({x1 x2, x2 x3 x4})` for drl and lex.
pub fn check_counterexample_part1(seed: u64) -> CheckReport {
    const ID: &str = "counterexample";
    let inst = "I = Stable({x1*x2, x2*x3*x4})".to_string();
    let closure = stable_closure(4, &[PowerProduct::new(&[1, 1, 0, 0]), PowerProduct::new(&[0, 1, 1, 1])]);
    let expected = pps(4, &[&[2, 0, 0, 0], &[1, 1, 0, 0], &[0, 3, 0, 0], &[0, 2, 1, 0], &[0, 1, 2, 0], &[0, 1, 1, 1]]);
    if closure != expected {
        return CheckReport::fail(ID, inst, mismatch(&expected, &closure), vec![seed]);
    }
    let want_drl = pps(4, &[&[2, 0, 0, 0], &[1, 1, 0, 0], &[0, 3, 0, 0], &[0, 2, 1, 0], &[1, 0, 2, 0], &[0, 2, 0, 1]]);
    let want_lex = pps(4, &[&[2, 0, 0, 0], &[1, 1, 0, 0], &[0, 3, 0, 0], &[0, 2, 1, 0], &[1, 0, 2, 0], &[1, 0, 1, 1]]);
    let poly = PolyIdeal::from_monomial(&closure);
    let mut seeds = vec![];
    let drl = unanimous_gin(&poly, &OrderingSpec::degrevlex(4), seed, &mut seeds);
    let lex = unanimous_gin(&poly, &OrderingSpec::lex(4), seed.wrapping_add(1), &mut seeds);
    match (drl, lex) {
        (Ok(a), Ok(b)) => {
            let w = json!({
                "gin_drl": a.ideal.to_string(),
                "gin_lex": b.ideal.to_string(),
                "expected_gin_drl": want_drl.to_string(),
                "expected_gin_lex": want_lex.to_string(),
            });
            CheckReport::verdict(ID, inst, a.ideal == want_drl && b.ideal == want_lex, w, seeds)
        }
        (Err(w), _) | (_, Err(w)) => CheckReport::inconclusive(ID, inst, w, seeds),
    }
}

/// `gin_drl(F * D_L(J)) = x1^a J` for strongly stable `J` and a nonzero form
/// `F` of degree `a`.
pub fn check_gcd_corollary(j: &MonomialIdeal, a: u32, f: &Polynomial, l: &DistractionMatrix, seed: u64) -> CheckReport {
    const ID: &str = "gcd";
    let n = j.num_vars();
    let inst = format!("J = {j}, a = {a}, F = {f}, L = {}", describe(l));
    if !stability_flags(j).is_strongly_stable {
        return CheckReport::skipped(ID, inst, json!({"reason": "J is not strongly stable"}), vec![seed]);
    }
    if f.is_zero() || !f.is_homogeneous() || f.degree() != Some(a) {
        return CheckReport::skipped(ID, inst, json!({"reason": "F must be a nonzero form of degree a"}), vec![seed]);
    }
    let gens = l.distract_ideal(j).gens().iter().map(|g| f * g).collect();
    let ideal = PolyIdeal::new(n, gens);
    let expected = j.times(&PowerProduct::one(n).with_exponent(0, a as u16));
    let mut seeds = vec![];
    match unanimous_gin(&ideal, &OrderingSpec::degrevlex(n), seed, &mut seeds) {
        Ok(r) => CheckReport::verdict(ID, inst, r.ideal == expected, mismatch(&expected, &r.ideal), seeds),
        Err(w) => CheckReport::inconclusive(ID, inst, w, seeds),
    }
}

/// Number of fresh generic matrices tried before radical construction fails.
const RADICAL_RESEEDS: u64 = 8;

/// A radical ideal `J = D_L(G)` with `G = gin_drl(I)`, or `G = Sat(gin_drl(I))`
/// when `want_saturated`. The report checks `gin_drl(J) = G` and certifies
/// radicality by rebuilding `J` as an intersection of linear primes.
pub fn build_radical_witness(ideal: &PolyIdeal, want_saturated: bool, seed: u64) -> Result<(PolyIdeal, CheckReport)> {
    const ID: &str = "radical";
    let n = ideal.num_vars();
    let inst = format!("I = {:?}, saturated = {want_saturated}", ideal.gens());
    if !want_saturated && !ideal.is_saturated() {
        return Err(Error::Precondition("depth(P/I) = 0: I is not saturated".into()));
    }
    let drl = OrderingSpec::degrevlex(n);
    let mut seeds = vec![];
    let g = match unanimous_gin(ideal, &drl, seed, &mut seeds) {
        Ok(r) => r.ideal,
        Err(w) => {
            let r = gin(ideal, &drl, DEFAULT_TRIALS, seed)?;
            let report = CheckReport::inconclusive(ID, inst, w, seeds);
            return Ok((PolyIdeal::from_monomial(&r.ideal), report));
        }
    };
    let target = if want_saturated { g.saturate() } else { g };
    if target.is_unit() {
        let report = CheckReport::pass(ID, inst, seeds);
        return Ok((PolyIdeal::new(n, vec![Polynomial::one(n)]), report));
    }
    let big_n = target
        .gens()
        .iter()
        .flat_map(|t| t.exponents().iter().copied())
        .max()
        .map_or(1, |e| usize::from(e).max(1));
    let l = (0..RADICAL_RESEEDS)
        .filter_map(|k| DistractionMatrix::generic(n, big_n, seed.wrapping_add(100 + k)).ok())
        .find(|l| is_radical_for(l, &target))
        .ok_or_else(|| Error::Construction("no generic matrix radical for the ideal".into()))?;
    if let crate::distraction::DistractionKind::Generic { seed: s } = l.kind() {
        seeds.push(s);
    }
    let j = l.distract_ideal(&target);
    let cert = radical_certificate(&l, &target)?;
    let certified = cert.equals(&j, &drl);
    let report = match unanimous_gin(&j, &drl, seed.wrapping_add(1), &mut seeds) {
        Ok(r) => {
            let w = json!({
                "target": target.to_string(),
                "gin_of_witness": r.ideal.to_string(),
                "radical_certified": certified,
            });
            CheckReport::verdict(ID, inst, r.ideal == target && certified, w, seeds)
        }
        Err(w) => CheckReport::inconclusive(ID, inst, w, seeds),
    };
    Ok((j, report))
}
