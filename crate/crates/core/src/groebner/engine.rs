//! Buchberger's algorithm over Z-primitive polynomials.
//!
//! Polynomials are kept with integer coefficients and divided by their
//! content, which avoids rational denominators during reduction. Pairs are
//! managed with the Gebauer-Moeller update (Buchberger's coprime and chain
//! criteria) and selected by the normal strategy.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::numeric::Rational;
use crate::polyring::{OrderingSpec, Polynomial, PowerProduct};

type Term = (PowerProduct, BigInt);

/// Terms sorted descending, primitive, positive leading coefficient.
#[derive(Clone, Debug)]
pub(crate) struct IntPoly {
    terms: Vec<Term>,
}

impl IntPoly {
    pub(crate) fn from_polynomial(p: &Polynomial, ord: &OrderingSpec) -> IntPoly {
        let sorted = p.sorted_terms(ord);
        let lcm = sorted
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let terms = sorted
            .into_iter()
            .map(|(t, c)| {
                let v = c.numer() * (&lcm / c.denom());
                (t, v)
            })
            .collect();
        let mut out = IntPoly { terms };
        out.make_primitive();
        out
    }

    pub(crate) fn to_monic_polynomial(&self, n: usize) -> Polynomial {
        let lc = Rational::from_integer(self.terms[0].1.clone());
        Polynomial::from_terms(
            n,
            self.terms
                .iter()
                .map(|(t, c)| (Rational::from_integer(c.clone()) / &lc, t.clone())),
        )
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lm(&self) -> &PowerProduct {
        &self.terms[0].0
    }

    fn make_primitive(&mut self) {
        if self.terms.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        let flip = self.terms[0].1.is_negative();
        if !g.is_one() {
            for (_, c) in &mut self.terms {
                *c = &*c / &g;
            }
        }
        if flip {
            for (_, c) in &mut self.terms {
                *c = -&*c;
            }
        }
    }
}

/// `p <- a*p - b*m*g`, where position `k` of `p` carries the power product
/// `m * lm(g)`; positions before `k` are only scaled.
fn reduce_at(p: &mut Vec<Term>, k: usize, g: &IntPoly, m: &PowerProduct, a: &BigInt, b: &BigInt, ord: &OrderingSpec) {
    let scale = !a.is_one();
    let mut out: Vec<Term> = Vec::with_capacity(p.len() + g.terms.len());
    let mut old = std::mem::take(p).into_iter();
    for _ in 0..k {
        let (t, c) = old.next().unwrap();
        out.push((t, if scale { c * a } else { c }));
    }
    let mut left = old.peekable();
    let mut right = g.terms.iter().peekable();
    loop {
        let cmp = match (left.peek(), right.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some((s, _)), Some((t, _))) => ord.compare(s, &t.mul(m)),
        };
        match cmp {
            Ordering::Greater => {
                let (t, c) = left.next().unwrap();
                out.push((t, if scale { c * a } else { c }));
            }
            Ordering::Less => {
                let (t, c) = right.next().unwrap();
                out.push((t.mul(m), -(c * b)));
            }
            Ordering::Equal => {
                let (t, c) = left.next().unwrap();
                let (_, d) = right.next().unwrap();
                let v = if scale { c * a } else { c } - d * b;
                if !v.is_zero() {
                    out.push((t, v));
                }
            }
        }
    }
    *p = out;
}

/// Fully reduces `f` modulo the polynomials of `basis` selected by `active`.
/// The result is primitive (or zero).
fn reduce(f: IntPoly, basis: &[IntPoly], active: &[usize], ord: &OrderingSpec) -> IntPoly {
    let mut p = f.terms;
    let mut k = 0;
    let mut steps = 0usize;
    while k < p.len() {
        let t = &p[k].0;
        let divisor = active
            .iter()
            .map(|&i| &basis[i])
            .find(|g| g.lm().divides(t));
        match divisor {
            None => k += 1,
            Some(g) => {
                let m = t.div(g.lm()).unwrap();
                let c = &p[k].1;
                let lc = &g.terms[0].1;
                let gcd = c.gcd(lc);
                let a = lc / &gcd;
                let b = c / &gcd;
                reduce_at(&mut p, k, g, &m, &a, &b, ord);
                steps += 1;
                if steps % 16 == 0 {
                    let mut tmp = IntPoly { terms: std::mem::take(&mut p) };
                    tmp.make_primitive();
                    p = tmp.terms;
                }
            }
        }
    }
    let mut out = IntPoly { terms: p };
    out.make_primitive();
    out
}

struct Pair {
    i: usize,
    j: usize,
    lcm: PowerProduct,
}

struct Buchberger<'a> {
    ord: &'a OrderingSpec,
    polys: Vec<IntPoly>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Buchberger<'_> {
    fn insert(&mut self, h: IntPoly) {
        let hi = self.polys.len();
        self.polys.push(h);
        let lh = self.polys[hi].lm().clone();

        let mut candidates: Vec<(usize, PowerProduct)> = self
            .active
            .iter()
            .map(|&g| (g, lh.lcm(self.polys[g].lm())))
            .collect();
        let mut kept: Vec<(usize, PowerProduct)> = Vec::new();
        while let Some((g1, l1)) = candidates.pop() {
            let coprime = lh.is_coprime(self.polys[g1].lm());
            if coprime
                || (!candidates.iter().any(|(_, l2)| l2.divides(&l1))
                    && !kept.iter().any(|(_, l2)| l2.divides(&l1)))
            {
                kept.push((g1, l1));
            }
        }
        kept.retain(|(g, _)| !lh.is_coprime(self.polys[*g].lm()));

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && polys[p.i].lm().lcm(&lh) != p.lcm
                && polys[p.j].lm().lcm(&lh) != p.lcm)
        });
        self.pairs
            .extend(kept.into_iter().map(|(g, lcm)| Pair { i: g, j: hi, lcm }));

        self.active.retain(|&g| !lh.divides(polys[g].lm()));
        self.active.push(hi);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ord = self.ord;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&self.pairs[a].lcm, &self.pairs[b].lcm);
                pa.degree()
                    .cmp(&pb.degree())
                    .then_with(|| ord.compare(pa, pb))
            })
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }

    fn s_poly(&self, pair: &Pair) -> IntPoly {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let mf = pair.lcm.div(f.lm()).unwrap();
        let mg = pair.lcm.div(g.lm()).unwrap();
        let (cf, cg) = (&f.terms[0].1, &g.terms[0].1);
        let gcd = cf.gcd(cg);
        let a = cg / &gcd;
        let b = cf / &gcd;
        // S = a*mf*f - b*mg*g, built as reduce_at on mf*f.
        let mut p: Vec<Term> = f.terms.iter().map(|(t, c)| (t.mul(&mf), c.clone())).collect();
        reduce_at(&mut p, 0, g, &mg, &a, &b, self.ord);
        let mut s = IntPoly { terms: p };
        s.make_primitive();
        s
    }

    fn run(&mut self) {
        while let Some(pair) = self.next_pair() {
            let s = self.s_poly(&pair);
            if s.is_zero() {
                continue;
            }
            let h = reduce(s, &self.polys, &self.active, self.ord);
            if h.is_zero() {
                continue;
            }
            if h.lm().is_one() {
                self.polys.push(h);
                self.active = vec![self.polys.len() - 1];
                self.pairs.clear();
                return;
            }
            self.insert(h);
        }
    }
}

/// The reduced Groebner basis of the ideal generated by `gens`, monic,
/// sorted descending by leading power product.
pub(crate) fn reduced_groebner_basis(n: usize, gens: &[Polynomial], ord: &OrderingSpec) -> Vec<Polynomial> {
    let mut input: Vec<IntPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| IntPoly::from_polynomial(g, ord))
        .collect();
    if input.is_empty() {
        return Vec::new();
    }
    input.sort_by(|a, b| {
        a.lm()
            .degree()
            .cmp(&b.lm().degree())
            .then_with(|| ord.compare(a.lm(), b.lm()))
    });
    let mut bb = Buchberger {
        ord,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for f in input {
        let h = reduce(f, &bb.polys, &bb.active, ord);
        if h.is_zero() {
            continue;
        }
        if h.lm().is_one() {
            return vec![Polynomial::one(n)];
        }
        bb.insert(h);
    }
    bb.run();
    let basis = bb.polys;
    let mut active = bb.active;
    if active.len() == 1 && basis[active[0]].lm().is_one() {
        return vec![Polynomial::one(n)];
    }
    // Active leading terms are pairwise non-dividing; reduce tails.
    active.sort_by(|&a, &b| ord.compare(basis[a].lm(), basis[b].lm()));
    let mut reduced: Vec<IntPoly> = Vec::with_capacity(active.len());
    for (pos, &i) in active.iter().enumerate() {
        let others: Vec<usize> = active
            .iter()
            .enumerate()
            .filter(|&(q, _)| q != pos)
            .map(|(_, &j)| j)
            .collect();
        let head = basis[i].terms[0].clone();
        let tail = IntPoly {
            terms: basis[i].terms[1..].to_vec(),
        };
        // Reduce lm*lc + tail; the head is irreducible by the others.
        let mut full = vec![head];
        full.extend(tail.terms);
        reduced.push(reduce(IntPoly { terms: full }, &basis, &others, ord));
    }
    let mut out: Vec<Polynomial> = reduced.iter().map(|p| p.to_monic_polynomial(n)).collect();
    out.sort_by(|a, b| {
        let (la, lb) = (a.leading_power_product(ord).unwrap(), b.leading_power_product(ord).unwrap());
        ord.compare(&lb, &la)
    });
    out
}

/// Normal form of `f` with respect to a (reduced) Groebner basis, as a
/// rational polynomial; zero iff `f` lies in the ideal.
pub(crate) fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &OrderingSpec) -> Polynomial {
    let n = f.num_vars();
    let mut rem = f.clone();
    let mut out = Polynomial::zero(n);
    let leads: Vec<(PowerProduct, Rational)> = basis
        .iter()
        .map(|g| g.leading_term(ord).expect("nonzero basis element"))
        .collect();
    while let Some((t, c)) = rem.leading_term(ord) {
        match leads.iter().position(|(lt, _)| lt.divides(&t)) {
            Some(k) => {
                let m = t.div(&leads[k].0).unwrap();
                let q = &c / &leads[k].1;
                rem = &rem - &basis[k].mul_term(&q, &m);
            }
            None => {
                out.add_term(c.clone(), t.clone());
                rem.add_term(-c, t);
            }
        }
    }
    out
}
