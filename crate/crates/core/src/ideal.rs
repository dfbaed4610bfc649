use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, Budget, GroebnerBasis};
use crate::order::{BaseOrder, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{same_ring, Ring, Var};

/// Generators plus a lazily computed, write-once Gröbner basis.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    budget: Budget,
    basis: OnceLock<GroebnerBasis>,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{:?}", self.generator_strings())
    }
}

impl Ideal {
    /// Zero generators are dropped. Fails on ring mismatch.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>, order: MonomialOrder) -> Result<Self> {
        if !order.fits(ring.nvars()) {
            return Err(Error::OrderMismatch);
        }
        for g in &generators {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Self {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            order,
            budget: Budget::default(),
            basis: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Ring, order: MonomialOrder) -> Self {
        Self::new(ring, Vec::new(), order).expect("empty generator list")
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self.basis = OnceLock::new();
        self
    }

    /// Same generators under another order (cache dropped).
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        Ok(Self::new(&self.ring, self.generators.clone(), order)?.with_budget(self.budget))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }

    pub fn groebner_basis(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.basis.get() {
            return Ok(gb);
        }
        let gb = groebner_basis(&self.ring, &self.generators, &self.order, &self.budget)?;
        // A concurrent writer computed the same basis; either copy is fine.
        let _ = self.basis.set(gb);
        Ok(self.basis.get().expect("basis just stored"))
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.groebner_basis()?.normal_form(p)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mutual containment.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_trivial(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.is_unit())
    }

    /// Krull dimension of the quotient; `-1` for the unit ideal.
    pub fn dimension(&self) -> Result<i64> {
        Ok(self.groebner_basis()?.dimension())
    }

    pub fn is_zero_dimensional(&self) -> Result<bool> {
        Ok(self.dimension()? == 0)
    }

    pub fn maximal_independent_set(&self) -> Result<Option<Vec<Var>>> {
        Ok(self.groebner_basis()?.maximal_independent_set())
    }

    /// `I ∩ k[remaining variables]`, returned in the sub-ring on the kept
    /// variables (ring order preserved) with the base order of `self`.
    pub fn eliminate(&self, eliminate: &[Var]) -> Result<Ideal> {
        for v in eliminate {
            self.ring.check(*v)?;
        }
        let base = self.order.base();
        let keep: Vec<Var> = self.ring.vars().filter(|v| !eliminate.contains(v)).collect();
        let (sub, _) = self.ring.restrict(&keep);
        let sub_order = MonomialOrder::from(base);
        if eliminate.is_empty() {
            let gens = self
                .generators
                .iter()
                .map(|g| g.map_into(&sub))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Ideal::new(&sub, gens, sub_order)?.with_budget(self.budget));
        }
        let order = MonomialOrder::elimination(self.ring.nvars(), eliminate, base)?;
        let gb = groebner_basis(&self.ring, &self.generators, &order, &self.budget)?;
        let gens = gb
            .polynomials()
            .iter()
            .filter(|g| eliminate.iter().all(|v| !g.involves(*v)))
            .map(|g| g.map_into(&sub))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&sub, gens, sub_order)?.with_budget(self.budget))
    }

    /// Sum of ideals.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ok(Ideal::new(&self.ring, gens, self.order.clone())?.with_budget(self.budget))
    }

    /// Adds generators.
    pub fn extended(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        Ok(Ideal::new(&self.ring, gens, self.order.clone())?.with_budget(self.budget))
    }

    /// The ideal viewed in another ring (variables matched by name).
    pub fn map_into(&self, target: &Ring, order: MonomialOrder) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.map_into(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(target, gens, order)?.with_budget(self.budget))
    }
}

/// Convenience for an ideal over the default (grevlex) order.
pub fn ideal(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal> {
    Ideal::new(ring, generators, MonomialOrder::from(BaseOrder::GrevLex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::RingContext;

    fn p(r: &Ring, s: &str) -> Polynomial {
        parse_polynomial(r, s).unwrap()
    }

    fn id(r: &Ring, gens: &[&str]) -> Ideal {
        ideal(r, gens.iter().map(|s| p(r, s)).collect()).unwrap()
    }

    #[test]
    fn membership_wrappers() {
        let r = RingContext::plain(&["x", "y"]).unwrap();
        let x = id(&r, &["x"]);
        assert!(x.contains(&p(&r, "x*y")).unwrap());
        assert!(x.contains_ideal(&id(&r, &["x^2"])).unwrap());
        assert!(!id(&r, &["x^2"]).contains_ideal(&x).unwrap());
        assert!(id(&r, &["x^2 - 1", "y"]).is_zero_dimensional().unwrap());
        assert!(id(&r, &["x", "x - 1"]).is_trivial().unwrap());
        assert!(!x.is_trivial().unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = RingContext::plain(&["x", "y", "z"]).unwrap();
        let cubic = id(&r, &["y - x^2", "z - x^3"]);
        let e = cubic.eliminate(&[Var(0)]).unwrap();
        assert_eq!(e.ring().names(), &["y", "z"]);
        let expected = id(e.ring(), &["y^3 - z^2"]);
        assert!(e.same_ideal(&expected).unwrap());
        let same = cubic.eliminate(&[]).unwrap();
        assert!(same.same_ideal(&cubic.map_into(same.ring(), MonomialOrder::GrevLex).unwrap()).unwrap());
        let r2 = RingContext::plain(&["x", "y"]).unwrap();
        let line = id(&r2, &["x"]).eliminate(&[Var(0)]).unwrap();
        assert!(line.generators().is_empty());
        assert_eq!(line.dimension().unwrap(), 1);
    }

    #[test]
    fn dimension_of_twisted_cubic() {
        let r = RingContext::plain(&["x", "y", "z"]).unwrap();
        assert_eq!(id(&r, &["y - x^2", "z - x^3"]).dimension().unwrap(), 1);
    }

    #[test]
    fn cache_is_reused() {
        let r = RingContext::plain(&["x", "y"]).unwrap();
        let i = id(&r, &["x^2 - y", "x*y - 1"]);
        let a = i.groebner_basis().unwrap() as *const _;
        let b = i.groebner_basis().unwrap() as *const _;
        assert_eq!(a, b);
    }

    #[test]
    fn ring_mismatch() {
        let r = RingContext::plain(&["x"]).unwrap();
        let s = RingContext::plain(&["y"]).unwrap();
        assert_eq!(
            Ideal::new(&r, vec![p(&s, "y")], MonomialOrder::Lex).unwrap_err(),
            Error::RingMismatch
        );
    }
}
