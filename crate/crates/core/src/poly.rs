//! Sparse multivariate polynomials over ℚ(i).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::ring::{same_ring, Conjugation, Ring, Var};
use crate::scalar::GaussianRational;

pub type Coeff = GaussianRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Canonical form: no zero coefficients, one entry per monomial.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Coeff>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Self {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length differs from ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Ring, v: Var) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), v.0, 1), Coeff::one())
    }

    /// Variable by name; panics if absent (use [`crate::ring::RingContext::require`]
    /// for a fallible lookup).
    pub fn named(ring: &Ring, name: &str) -> Self {
        let v = ring
            .var(name)
            .unwrap_or_else(|| panic!("no variable `{name}` in {ring:?}"));
        Self::var(ring, v)
    }

    /// Sums duplicate monomials and drops zeros.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Coeff)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// The value if the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<Coeff> {
        if self.is_zero() {
            return Some(Coeff::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Variables that occur with a positive exponent, in ring order.
    pub fn variables(&self) -> Vec<Var> {
        let mut used = vec![false; self.ring.nvars()];
        for m in self.terms.keys() {
            for i in m.support() {
                used[i] = true;
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, u)| **u)
            .map(|(i, _)| Var(i))
            .collect()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v.0) > 0)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn arith(op: ArithOp, p: &Self, q: &Self) -> Result<Self> {
        match op {
            ArithOp::Add => p.try_add(q),
            ArithOp::Sub => p.try_sub(q),
            ArithOp::Mul => p.try_mul(q),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn try_pow(&self, e: i64) -> Result<Self> {
        let e = u32::try_from(e).map_err(|_| Error::NegativeExponent(e))?;
        Ok(self.pow(e))
    }

    /// Conjugates every coefficient, leaving variables alone.
    pub fn conj_coefficients(&self) -> Self {
        Self {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        }
    }

    /// Complex conjugation at the symbolic level: conjugate coefficients and
    /// swap each paired variable with its partner.
    pub fn bar(&self) -> Result<Self> {
        let n = self.ring.nvars();
        let mut target = Vec::with_capacity(n);
        for v in self.ring.vars() {
            target.push(match self.ring.conjugation(v) {
                Conjugation::Paired(p) => Some(p.0),
                Conjugation::SelfConjugate => Some(v.0),
                Conjugation::Unpaired => None,
            });
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for i in m.support() {
                let t = target[i]
                    .ok_or_else(|| Error::UnpairedVariable(self.ring.name(Var(i)).to_string()))?;
                e[t] = m.exponent(i);
            }
            terms.insert(Monomial::from_exponents(e), c.conj());
        }
        Ok(Self {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// `p == bar(p)`; false when the involution is undefined on `p`.
    pub fn is_real_symmetric(&self) -> bool {
        matches!(self.bar(), Ok(b) if b == *self)
    }

    pub fn diff(&self, v: Var) -> Result<Self> {
        self.ring.check(v)?;
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponent(v.0);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[v.0] -= 1;
            out.add_term(
                Monomial::from_exponents(exps),
                &(c * &Coeff::from(i64::from(e))),
            );
        }
        Ok(out)
    }

    /// Substitution homomorphism inside the same ring.
    pub fn substitute(&self, bindings: &[(Var, Polynomial)]) -> Result<Self> {
        for (v, q) in bindings {
            self.ring.check(*v)?;
            self.check_ring(q)?;
        }
        self.substitute_into(&self.ring.clone(), bindings)
    }

    /// Image in `target`: bound variables are replaced by their bindings
    /// (which must live in `target`), unbound ones map to the same-named
    /// variable of `target`.
    pub fn substitute_into(&self, target: &Ring, bindings: &[(Var, Polynomial)]) -> Result<Self> {
        let n = self.ring.nvars();
        let mut image: Vec<Option<Polynomial>> = vec![None; n];
        for (v, q) in bindings {
            self.ring.check(*v)?;
            if !same_ring(q.ring(), target) {
                return Err(Error::RingMismatch);
            }
            image[v.0] = Some(q.clone());
        }
        let mut renamed: Vec<Option<usize>> = vec![None; n];
        let mut out = Polynomial::zero(target);
        let mut powers: HashMap<(usize, u32), Polynomial> = HashMap::new();
        for (m, c) in &self.terms {
            let mut mono = vec![0u32; target.nvars()];
            let mut factor: Option<Polynomial> = None;
            for i in m.support() {
                let e = m.exponent(i);
                match &image[i] {
                    Some(q) => {
                        let qp = powers.entry((i, e)).or_insert_with(|| q.pow(e)).clone();
                        factor = Some(match factor {
                            Some(f) => &f * &qp,
                            None => qp,
                        });
                    }
                    None => {
                        let t = match renamed[i] {
                            Some(t) => t,
                            None => {
                                let name = self.ring.name(Var(i));
                                let t = target.require(name)?.0;
                                renamed[i] = Some(t);
                                t
                            }
                        };
                        mono[t] += e;
                    }
                }
            }
            let head = Polynomial::monomial(target, Monomial::from_exponents(mono), c.clone());
            let term = match factor {
                Some(f) => &head * &f,
                None => head,
            };
            for (tm, tc) in term.terms {
                out.add_term(tm, &tc);
            }
        }
        Ok(out)
    }

    /// Same polynomial viewed in another ring, matching variables by name.
    pub fn map_into(&self, target: &Ring) -> Result<Self> {
        self.substitute_into(target, &[])
    }

    /// Binds variables to scalars, keeping the ring.
    pub fn specialize(&self, values: &[(Var, Coeff)]) -> Result<Self> {
        let bindings: Vec<(Var, Polynomial)> = values
            .iter()
            .map(|(v, c)| (*v, Polynomial::constant(&self.ring, c.clone())))
            .collect();
        self.substitute(&bindings)
    }

    /// Exact value at a full assignment (`point[i]` is the value of variable `i`).
    pub fn evaluate(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() < self.ring.nvars() {
            let missing = self.ring.name(Var(point.len()));
            return Err(Error::IncompleteAssignment(missing.to_string()));
        }
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in m.support() {
                t = &t * &point[i].pow(m.exponent(i));
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Evaluation where the assignment is given per variable.
    pub fn evaluate_at(&self, values: &[(Var, Coeff)]) -> Result<Coeff> {
        let mut point: Vec<Option<Coeff>> = vec![None; self.ring.nvars()];
        for (v, c) in values {
            self.ring.check(*v)?;
            point[v.0] = Some(c.clone());
        }
        let mut full = Vec::with_capacity(point.len());
        for (i, p) in point.into_iter().enumerate() {
            full.push(p.ok_or_else(|| {
                Error::IncompleteAssignment(self.ring.name(Var(i)).to_string())
            })?);
        }
        self.evaluate(&full)
    }

    /// Groups terms by the exponents of `vars`: returns (monomial in `vars`,
    /// coefficient polynomial in the remaining variables), sorted by monomial.
    pub fn coefficients_in(&self, vars: &[Var]) -> Vec<(Monomial, Polynomial)> {
        let idx: Vec<usize> = vars.iter().map(|v| v.0).collect();
        let mut groups: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = m.restricted(&idx);
            let rest = Monomial::from_exponents(
                m.exponents()
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| if idx.contains(&i) { 0 } else { e })
                    .collect(),
            );
            groups
                .entry(key)
                .or_insert_with(|| Polynomial::zero(&self.ring))
                .add_term(rest, c);
        }
        groups.into_iter().filter(|(_, p)| !p.is_zero()).collect()
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    /// Panics on ring mismatch; see [`Polynomial::try_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::format_polynomial(self))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::RingContext;

    fn p(ring: &Ring, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let r = RingContext::manifold(1);
        let z1 = p(&r, "z1");
        assert!(Polynomial::arith(ArithOp::Add, &z1, &-&z1).unwrap().is_zero());
        assert_eq!(
            Polynomial::arith(ArithOp::Mul, &p(&r, "z1 + zb1"), &p(&r, "z1 - zb1")).unwrap(),
            p(&r, "z1^2 - zb1^2")
        );
        assert_eq!(p(&r, "z1 + 1").pow(2), p(&r, "z1^2 + 2*z1 + 1"));
    }

    #[test]
    fn arithmetic_errors() {
        let r1 = RingContext::manifold(1);
        let r2 = RingContext::manifold(2);
        assert_eq!(
            p(&r1, "z1").try_add(&p(&r2, "z1")).unwrap_err(),
            Error::RingMismatch
        );
        assert_eq!(
            p(&r1, "z1").try_pow(-1).unwrap_err(),
            Error::NegativeExponent(-1)
        );
    }

    #[test]
    fn bar_examples() {
        let r = RingContext::manifold(2);
        assert_eq!(p(&r, "z1").bar().unwrap(), p(&r, "zb1"));
        assert_eq!(p(&r, "I*z1*zb2").bar().unwrap(), p(&r, "-I*z2*zb1"));
        let sphere = p(&r, "z1*zb1 + z2*zb2 - 1");
        assert_eq!(sphere.bar().unwrap(), sphere);
    }

    #[test]
    fn bar_rejects_unpaired() {
        let r = RingContext::plain(&["x"]).unwrap();
        assert_eq!(
            p(&r, "x").bar().unwrap_err(),
            Error::UnpairedVariable("x".into())
        );
        assert!(!p(&r, "x").is_real_symmetric());
        assert!(p(&r, "3").is_real_symmetric());
    }

    #[test]
    fn real_symmetry_examples() {
        let r = RingContext::manifold(2);
        assert!(p(&r, "z1*zb1 + z2*zb2 - 1").is_real_symmetric());
        assert!(!p(&r, "z1").is_real_symmetric());
        assert!(p(&r, "I*(z1 - zb1)").is_real_symmetric());
    }

    #[test]
    fn diff_examples() {
        let r = RingContext::manifold(2);
        let v = |n: &str| r.var(n).unwrap();
        assert_eq!(p(&r, "z1^2*zb1").diff(v("z1")).unwrap(), p(&r, "2*z1*zb1"));
        assert!(p(&r, "z2").diff(v("z1")).unwrap().is_zero());
        assert_eq!(
            p(&r, "z1*zb1 + z2*zb2 - 1").diff(v("zb2")).unwrap(),
            p(&r, "z2")
        );
        assert!(p(&r, "z1").diff(Var(17)).is_err());
    }

    #[test]
    fn substitute_examples() {
        let r = RingContext::manifold(2);
        let zb1 = r.var("zb1").unwrap();
        assert_eq!(
            p(&r, "z1*zb1 - 1")
                .substitute(&[(zb1, Polynomial::one(&r))])
                .unwrap(),
            p(&r, "z1 - 1")
        );
        let pr = RingContext::builder()
            .variable("z2")
            .variable("zb2")
            .variable("a2")
            .build()
            .unwrap();
        let src = p(&pr, "z2 + zb2");
        let zb2 = pr.var("zb2").unwrap();
        assert_eq!(
            src.substitute(&[(zb2, -p(&pr, "a2"))]).unwrap(),
            p(&pr, "z2 - a2")
        );
        assert_eq!(src.substitute(&[]).unwrap(), src);
    }

    #[test]
    fn evaluate_examples() {
        let r = RingContext::manifold(2);
        let sphere = p(&r, "z1*zb1 + z2*zb2 - 1");
        let g = |n, d| Coeff::ratio(n, d);
        assert!(sphere
            .evaluate(&[g(1, 1), g(0, 1), g(1, 1), g(0, 1)])
            .unwrap()
            .is_zero());
        assert_eq!(
            sphere.evaluate(&[g(0, 1), g(0, 1), g(0, 1), g(0, 1)]).unwrap(),
            Coeff::from(-1)
        );
        assert!(sphere
            .evaluate(&[g(3, 5), g(4, 5), g(3, 5), g(4, 5)])
            .unwrap()
            .is_zero());
        assert_eq!(
            sphere.evaluate(&[g(1, 1)]).unwrap_err(),
            Error::IncompleteAssignment("z2".into())
        );
    }

    #[test]
    fn coefficients_in_groups_by_block() {
        let r = RingContext::plain(&["w1", "w2", "z1"]).unwrap();
        let f = p(&r, "2*z1*w1 - z1 + 3*w1 + w2");
        let v = |n: &str| r.var(n).unwrap();
        let groups = f.coefficients_in(&[v("w1"), v("w2")]);
        let find = |e: &[u32]| {
            groups
                .iter()
                .find(|(m, _)| m.exponents() == e)
                .map(|(_, c)| c.clone())
                .unwrap()
        };
        assert_eq!(find(&[1, 0, 0]), p(&r, "2*z1 + 3"));
        assert_eq!(find(&[0, 1, 0]), p(&r, "1"));
        assert_eq!(find(&[0, 0, 0]), p(&r, "-z1"));
    }
}
