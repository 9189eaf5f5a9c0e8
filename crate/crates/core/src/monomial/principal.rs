//! Closed forms for principal stable ideals and for sums
//! `t_1 (x1..x1)^a_1 + ... + t_r (x1..xr)^a_r`.

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::polyring::PowerProduct;

/// `(Stable(t), gin(Stable(t)))` in closed form.
///
/// With `c_j = a_j + ... + a_n` and `b_j = a_1 + ... + a_{j-1}`:
/// `Stable(t) = sum_j x1^a1 ... x_{j-1}^a_{j-1} (x1..xj)^c_j` and
/// `gin(Stable(t)) = sum_j x1^b_j (x1..xj)^c_j`.
pub fn principal_formulas(t: &PowerProduct) -> Result<(MonomialIdeal, MonomialIdeal)> {
    if t.is_one() {
        return Err(Error::Degenerate("principal formulas need t != 1".into()));
    }
    let n = t.num_vars();
    let a = t.exponents();
    let mut stable = Vec::new();
    let mut gin = Vec::new();
    for j in 1..=n {
        let c: u32 = a[j - 1..].iter().map(|&e| u32::from(e)).sum();
        let b: u32 = a[..j - 1].iter().map(|&e| u32::from(e)).sum();
        let prefix = t.truncate(j - 1).extend(n - j + 1);
        let x1b = PowerProduct::one(n).with_exponent(0, b as u16);
        for s in MonomialIdeal::segment_power(n, j, c).gens() {
            stable.push(prefix.mul(s));
            gin.push(x1b.mul(s));
        }
    }
    Ok((MonomialIdeal::new(n, stable), MonomialIdeal::new(n, gin)))
}

/// One summand `t_j (x1..xj)^alpha_j`; `j` is implied by position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialPart {
    pub t: PowerProduct,
    pub alpha: u32,
}

/// Checks the hypotheses on `(t_j, alpha_j)`: `t_1 = 1`, `m(t_j) < j`,
/// `t_j | t_{j+1}` and `deg t_j + alpha_j <= deg t_{j+1} + alpha_{j+1}`.
pub fn check_special_parts(n: usize, parts: &[SpecialPart]) -> Result<()> {
    let bad = |msg: String| Err(Error::Precondition(msg));
    if parts.is_empty() || parts.len() > n {
        return bad(format!("need 1..={n} parts, got {}", parts.len()));
    }
    if parts.iter().any(|p| p.t.num_vars() != n) {
        return bad("part in wrong ring".into());
    }
    if !parts[0].t.is_one() {
        return bad("t_1 must be 1".into());
    }
    for (k, p) in parts.iter().enumerate().skip(1) {
        if p.t.max_index() > k {
            return bad(format!("m(t_{}) must be < {}", k + 1, k + 1));
        }
    }
    for w in parts.windows(2) {
        if !w[0].t.divides(&w[1].t) {
            return bad("t_j must divide t_(j+1)".into());
        }
        if w[0].t.degree() + w[0].alpha > w[1].t.degree() + w[1].alpha {
            return bad("deg t_j + alpha_j must be non-decreasing".into());
        }
    }
    Ok(())
}

/// `sum_j t_j (x1..xj)^alpha_j`, after checking the hypotheses.
pub fn special_stable_ideal(n: usize, parts: &[SpecialPart]) -> Result<MonomialIdeal> {
    check_special_parts(n, parts)?;
    let gens = parts
        .iter()
        .enumerate()
        .flat_map(|(k, p)| {
            MonomialIdeal::segment_power(n, k + 1, p.alpha)
                .gens()
                .iter()
                .map(|s| s.mul(&p.t))
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(MonomialIdeal::new(n, gens))
}

/// The gin of a special sum: `sum_j x1^deg(t_j) (x1..xj)^alpha_j`.
pub fn special_gin(n: usize, parts: &[SpecialPart]) -> Result<MonomialIdeal> {
    check_special_parts(n, parts)?;
    let canonical: Vec<SpecialPart> = parts
        .iter()
        .map(|p| SpecialPart {
            t: PowerProduct::one(n).with_exponent(0, p.t.degree() as u16),
            alpha: p.alpha,
        })
        .collect();
    special_stable_ideal(n, &canonical)
}
