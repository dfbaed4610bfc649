//! Buchberger's algorithm with the product and chain criteria, reduced bases,
//! multivariate division and the combinatorial Krull dimension.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{Coeff, Polynomial};
use crate::ring::{same_ring, Ring, Var};

/// Resource limits. Exceeding one aborts with [`Error::BudgetExceeded`];
/// a truncated basis is never returned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// S-pairs that may be reduced.
    pub max_pairs: usize,
    /// Largest total degree allowed for a basis element.
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_pairs: 50_000,
            max_degree: 64,
        }
    }
}

/// Terms sorted in descending order.
pub(crate) type Terms = Vec<(Monomial, Coeff)>;

pub(crate) fn to_terms(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    t
}

pub(crate) fn from_terms(ring: &Ring, t: Terms) -> Polynomial {
    Polynomial::from_terms(ring, t)
}

fn make_monic(t: &mut Terms) {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            for (_, c) in t.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
}

/// `p - c * shift * g`, all sorted descending.
fn sub_scaled(p: &[(Monomial, Coeff)], c: &Coeff, shift: &Monomial, g: &[(Monomial, Coeff)], order: &MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|(m, gc)| (shift.mul(m), gc * c)).peekable();
    while i < p.len() || gi.peek().is_some() {
        match (p.get(i), gi.peek()) {
            (Some(a), Some(b)) => match order.cmp(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, v) = gi.next().unwrap();
                    out.push((m, -v));
                }
                Ordering::Equal => {
                    let (m, v) = gi.next().unwrap();
                    let s = &a.1 - &v;
                    if !s.is_zero() {
                        out.push((m, s));
                    }
                    i += 1;
                }
            },
            (Some(a), None) => {
                out.push(a.clone());
                i += 1;
            }
            (None, Some(_)) => {
                let (m, v) = gi.next().unwrap();
                out.push((m, -v));
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Full reduction of `p` by `basis` (each element sorted and monic).
pub(crate) fn reduce(p: Terms, basis: &[Terms], order: &MonomialOrder) -> Terms {
    let mut rem = Vec::new();
    let mut cur = p;
    let mut start = 0;
    while start < cur.len() {
        let (m, c) = &cur[start];
        let divisor = basis
            .iter()
            .find(|g| g.first().is_some_and(|(lm, _)| lm.divides(m)));
        match divisor {
            Some(g) => {
                let shift = g[0].0.quotient_of(m).expect("divisible");
                let c = c.clone();
                cur = sub_scaled(&cur[start + 1..], &c, &shift, &g[1..], order);
                start = 0;
            }
            None => {
                rem.push(cur[start].clone());
                start += 1;
            }
        }
    }
    rem
}

fn spoly_terms(f: &Terms, g: &Terms, order: &MonomialOrder) -> Terms {
    let (lf, cf) = &f[0];
    let (lg, cg) = &g[0];
    let l = lf.lcm(lg);
    let sf = lf.quotient_of(&l).unwrap();
    let sg = lg.quotient_of(&l).unwrap();
    let inv_f = cf.inv().unwrap();
    let inv_g = cg.inv().unwrap();
    let left: Terms = f[1..]
        .iter()
        .map(|(m, c)| (sf.mul(m), c * &inv_f))
        .collect();
    sub_scaled(&left, &inv_g, &sg, &g[1..], order)
}

/// A reduced Gröbner basis: monic, auto-reduced, sorted by leading monomial
/// (descending).
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
    sorted: Vec<Terms>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polynomials(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Basis `{1}`.
    pub fn is_unit(&self) -> bool {
        self.sorted.len() == 1 && self.sorted[0][0].0.is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|t| t[0].0.clone()).collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        normal_form(p, self)
    }

    /// Krull dimension of the quotient ring; `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        let all: Vec<usize> = (0..self.ring.nvars()).collect();
        match max_independent_set(&self.leading_monomials(), &all) {
            Some(s) => s.len() as i64,
            None => -1,
        }
    }

    /// A largest set of variables containing the support of no leading
    /// monomial; `None` for the unit ideal.
    pub fn maximal_independent_set(&self) -> Option<Vec<Var>> {
        let all: Vec<usize> = (0..self.ring.nvars()).collect();
        max_independent_set(&self.leading_monomials(), &all)
            .map(|s| s.into_iter().map(Var).collect())
    }
}

/// Exhaustive search over subsets of `candidates`. Leading monomials are
/// only inspected on `candidates`; a monomial whose support lies outside
/// them never blocks. Returns `None` when some monomial is `1`.
pub(crate) fn max_independent_set(lms: &[Monomial], candidates: &[usize]) -> Option<Vec<usize>> {
    if lms.iter().any(Monomial::is_one) {
        return None;
    }
    let k = candidates.len();
    assert!(k < 28, "dimension search over {k} variables is out of range");
    let pos = |i: usize| candidates.iter().position(|&c| c == i);
    // Each blocking monomial as a bitmask over candidate positions.
    let masks: Vec<u32> = lms
        .iter()
        .filter_map(|m| {
            let mut mask = 0u32;
            for i in m.support() {
                mask |= 1 << pos(i)?;
            }
            Some(mask)
        })
        .collect();
    let mut best: (u32, u32) = (0, 0);
    for s in 1u32..(1u32 << k) {
        let size = s.count_ones();
        if size > best.0 && masks.iter().all(|&m| m & !s != 0) {
            best = (size, s);
        }
    }
    Some(
        (0..k)
            .filter(|b| best.1 & (1 << b) != 0)
            .map(|b| candidates[b])
            .collect(),
    )
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    if !same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch);
    }
    if f.is_zero() || g.is_zero() {
        return Ok(Polynomial::zero(f.ring()));
    }
    let s = spoly_terms(&to_terms(f, order), &to_terms(g, order), order);
    Ok(from_terms(f.ring(), s))
}

/// Remainder of multivariate division by a Gröbner basis.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if !same_ring(p.ring(), &gb.ring) {
        return Err(Error::RingMismatch);
    }
    let r = reduce(to_terms(p, &gb.order), &gb.sorted, &gb.order);
    Ok(from_terms(&gb.ring, r))
}

pub fn groebner_basis(
    ring: &Ring,
    generators: &[Polynomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    if !order.fits(ring.nvars()) {
        return Err(Error::OrderMismatch);
    }
    let mut basis: Vec<Terms> = Vec::new();
    for g in generators {
        if !same_ring(g.ring(), ring) {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            continue;
        }
        let mut t = to_terms(g, order);
        make_monic(&mut t);
        basis.push(t);
    }
    if basis.iter().any(|t| t[0].0.is_one()) {
        return Ok(unit_basis(ring, order));
    }

    // (lcm degree, insertion sequence, i, j) gives degree-then-insertion selection.
    let mut queue: BTreeSet<(u32, usize, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut seq = 0usize;
    let mut push_pairs = |basis: &Vec<Terms>,
                          t: usize,
                          queue: &mut BTreeSet<(u32, usize, usize, usize)>,
                          pending: &mut HashSet<(usize, usize)>| {
        for i in 0..t {
            let deg = basis[i][0].0.lcm(&basis[t][0].0).degree();
            queue.insert((deg, seq, i, t));
            pending.insert((i, t));
            seq += 1;
        }
    };
    for t in 0..basis.len() {
        push_pairs(&basis, t, &mut queue, &mut pending);
    }

    let mut processed = 0usize;
    while let Some(entry) = queue.pop_first() {
        let (_, _, i, j) = entry;
        pending.remove(&(i, j));
        let (li, lj) = (&basis[i][0].0, &basis[j][0].0);
        if li.is_coprime(lj) {
            continue;
        }
        let lcm = li.lcm(lj);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::BudgetExceeded(format!(
                "more than {} S-pair reductions",
                budget.max_pairs
            )));
        }
        let s = spoly_terms(&basis[i], &basis[j], order);
        let mut r = reduce(s, &basis, order);
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        if r[0].0.is_one() {
            return Ok(unit_basis(ring, order));
        }
        let deg = r.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        if deg > budget.max_degree {
            return Err(Error::BudgetExceeded(format!(
                "basis element of degree {deg} exceeds {}",
                budget.max_degree
            )));
        }
        basis.push(r);
        let t = basis.len() - 1;
        push_pairs(&basis, t, &mut queue, &mut pending);
    }

    Ok(finish(ring, order, basis))
}

fn unit_basis(ring: &Ring, order: &MonomialOrder) -> GroebnerBasis {
    let one = Polynomial::one(ring);
    GroebnerBasis {
        ring: ring.clone(),
        order: order.clone(),
        sorted: vec![to_terms(&one, order)],
        polys: vec![one],
    }
}

/// Minimalizes and auto-reduces.
fn finish(ring: &Ring, order: &MonomialOrder, mut basis: Vec<Terms>) -> GroebnerBasis {
    basis.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut minimal: Vec<Terms> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h[0].0.divides(&g[0].0)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Terms> = minimal
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, t)| t.clone())
            .collect();
        let mut r = reduce(minimal[k].clone(), &others, order);
        make_monic(&mut r);
        reduced.push(r);
    }
    reduced.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    GroebnerBasis {
        ring: ring.clone(),
        order: order.clone(),
        polys: reduced.iter().map(|t| from_terms(ring, t.clone())).collect(),
        sorted: reduced,
    }
}
