//! Gröbner computations over the rational-function field `K = ℚ(i)(params)`.
//!
//! A reduced basis for a block order with the main variables in front is a
//! Gröbner basis of the extended ideal in `K[main]`. Reduction over `K` is
//! done fraction-free: the remainder is returned as `numerator / denominator`
//! with the denominator a product of leading coefficients. Every result
//! carries the list of parameter polynomials whose non-vanishing keeps a
//! specialization of the basis a Gröbner basis.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, max_independent_set, Budget, GroebnerBasis};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::order::{BaseOrder, MonomialOrder};
use crate::poly::{Coeff, Polynomial};
use crate::ring::{same_ring, Ring, Var};

/// One basis element seen over `K`: leading monomial in the main variables
/// and its coefficient, a polynomial in the parameters.
#[derive(Clone, Debug)]
struct KElement {
    poly: Polynomial,
    lead: Monomial,
    lead_coeff: Polynomial,
}

#[derive(Clone, Debug)]
pub struct ParametricBasis {
    ring: Ring,
    main: Vec<Var>,
    params: Vec<Var>,
    full: GroebnerBasis,
    elements: Vec<KElement>,
    validity: Vec<Polynomial>,
    trivial: bool,
}

fn main_part(m: &Monomial, main: &[usize]) -> Monomial {
    m.restricted(main)
}

/// Scales so the leading coefficient under grevlex is 1.
fn normalize(p: &Polynomial) -> Polynomial {
    p.monic(&MonomialOrder::GrevLex)
}

impl ParametricBasis {
    /// `main` lists the main variables in priority order (first = largest);
    /// every ring variable outside `main` and `params` must be unused.
    pub fn new(
        ring: &Ring,
        generators: &[Polynomial],
        main: &[Var],
        params: &[Var],
        inner: BaseOrder,
        budget: &Budget,
    ) -> Result<Self> {
        for v in main.iter().chain(params) {
            ring.check(*v)?;
        }
        if main.iter().any(|v| params.contains(v)) {
            return Err(Error::InvalidInput(
                "main and parameter variables overlap".into(),
            ));
        }
        let mut back: Vec<Var> = params.to_vec();
        for v in ring.vars() {
            if !main.contains(&v) && !params.contains(&v) {
                if generators.iter().any(|g| g.involves(v)) {
                    return Err(Error::InvalidInput(format!(
                        "variable `{}` is neither main nor parameter",
                        ring.name(v)
                    )));
                }
                back.push(v);
            }
        }
        if generators.iter().all(Polynomial::is_zero) {
            return Err(Error::ZeroGenerators);
        }
        let order = MonomialOrder::block(ring.nvars(), main, &back, inner, inner)?;
        let full = groebner_basis(ring, generators, &order, budget)?;

        let main_idx: Vec<usize> = main.iter().map(|v| v.0).collect();
        let mut elements: Vec<KElement> = full
            .polynomials()
            .iter()
            .map(|g| {
                let (lm, _) = g.leading_term(&order).expect("nonzero basis element");
                let lead = main_part(lm, &main_idx);
                let lead_coeff = lead_coefficient(g, &lead, &main_idx);
                KElement {
                    poly: g.clone(),
                    lead,
                    lead_coeff,
                }
            })
            .collect();

        let mut validity: Vec<Polynomial> = Vec::new();
        for e in &elements {
            let c = if e.lead.is_one() { &e.poly } else { &e.lead_coeff };
            if !c.is_constant() {
                let c = normalize(c);
                if !validity.contains(&c) {
                    validity.push(c);
                }
            }
        }
        let trivial = elements.iter().any(|e| e.lead.is_one());

        // Keep a minimal basis over K.
        elements.sort_by(|a, b| order.cmp(&a.lead, &b.lead));
        let mut minimal: Vec<KElement> = Vec::new();
        for e in elements {
            if !minimal.iter().any(|k| k.lead.divides(&e.lead)) {
                minimal.push(e);
            }
        }
        Ok(Self {
            ring: ring.clone(),
            main: main.to_vec(),
            params: params.to_vec(),
            full,
            elements: minimal,
            validity,
            trivial,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn main(&self) -> &[Var] {
        &self.main
    }

    pub fn params(&self) -> &[Var] {
        &self.params
    }

    /// The reduced basis over ℚ(i) for the block order.
    pub fn block_basis(&self) -> &GroebnerBasis {
        &self.full
    }

    /// A Gröbner basis of the extended ideal over `K` (polynomial representatives).
    pub fn elements(&self) -> Vec<&Polynomial> {
        self.elements.iter().map(|e| &e.poly).collect()
    }

    /// Leading monomials over `K` (supported on the main variables).
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|e| e.lead.clone()).collect()
    }

    pub fn validity(&self) -> &[Polynomial] {
        &self.validity
    }

    /// The extended ideal is the unit ideal over `K`.
    pub fn is_trivial(&self) -> bool {
        self.trivial
    }

    /// Krull dimension of `K[main] / I·K[main]`; `-1` if trivial.
    pub fn dimension(&self) -> i64 {
        let main_idx: Vec<usize> = self.main.iter().map(|v| v.0).collect();
        match max_independent_set(&self.leading_monomials(), &main_idx) {
            Some(s) => s.len() as i64,
            None => -1,
        }
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<ParametricRemainder> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        for v in p.variables() {
            if !self.main.contains(&v) && !self.params.contains(&v) {
                return Err(Error::InvalidInput(format!(
                    "variable `{}` is neither main nor parameter",
                    self.ring.name(v)
                )));
            }
        }
        let order = self.full.order();
        let main_idx: Vec<usize> = self.main.iter().map(|v| v.0).collect();
        let mut cur = p.clone();
        let mut denominator = Polynomial::one(&self.ring);
        if self.trivial {
            cur = Polynomial::zero(&self.ring);
        }
        loop {
            let groups = group_by_main(&cur, &main_idx);
            // Largest reducible main monomial.
            let target = groups
                .iter()
                .rev()
                .filter_map(|(m, c)| {
                    self.elements
                        .iter()
                        .find(|e| e.lead.divides(m))
                        .map(|e| (m.clone(), c.clone(), e))
                })
                .max_by(|a, b| order.cmp(&a.0, &b.0));
            let Some((m, c, e)) = target else { break };
            let shift = e.lead.quotient_of(&m).expect("divisible");
            let shifted = &e.poly * &Polynomial::monomial(&self.ring, shift, Coeff::from(1));
            match e.lead_coeff.as_constant() {
                Some(lc) => {
                    let factor = c.scale(&lc.inv().expect("nonzero"));
                    cur = &cur - &(&factor * &shifted);
                }
                None => {
                    cur = &(&e.lead_coeff * &cur) - &(&c * &shifted);
                    denominator = &denominator * &e.lead_coeff;
                }
            }
        }
        // Normalize so the denominator's leading coefficient is 1.
        let (_, lc) = denominator
            .leading_term(&MonomialOrder::GrevLex)
            .expect("nonzero denominator");
        let inv = lc.inv().expect("nonzero");
        Ok(ParametricRemainder {
            ring: self.ring.clone(),
            main: self.main.clone(),
            params: self.params.clone(),
            numerator: cur.scale(&inv),
            denominator: denominator.scale(&inv),
            validity: self.validity.clone(),
            generically_trivial: self.trivial,
        })
    }
}

fn lead_coefficient(g: &Polynomial, lead: &Monomial, main_idx: &[usize]) -> Polynomial {
    let ring = g.ring();
    Polynomial::from_terms(
        ring,
        g.terms()
            .filter(|(m, _)| &main_part(m, main_idx) == lead)
            .map(|(m, c)| (strip(m, main_idx), c.clone())),
    )
}

fn strip(m: &Monomial, idx: &[usize]) -> Monomial {
    Monomial::from_exponents(
        m.exponents()
            .iter()
            .enumerate()
            .map(|(i, &e)| if idx.contains(&i) { 0 } else { e })
            .collect(),
    )
}

fn group_by_main(p: &Polynomial, main_idx: &[usize]) -> BTreeMap<Monomial, Polynomial> {
    let mut groups: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
    for (m, c) in p.terms() {
        groups
            .entry(main_part(m, main_idx))
            .or_insert_with(|| Polynomial::zero(p.ring()))
            .add_term(strip(m, main_idx), c);
    }
    groups.retain(|_, c| !c.is_zero());
    groups
}

/// `numerator / denominator` with rational-function coefficients in the
/// parameters; valid wherever the denominator and every validity
/// polynomial are nonzero.
#[derive(Clone, Debug)]
pub struct ParametricRemainder {
    ring: Ring,
    main: Vec<Var>,
    params: Vec<Var>,
    numerator: Polynomial,
    denominator: Polynomial,
    validity: Vec<Polynomial>,
    generically_trivial: bool,
}

impl ParametricRemainder {
    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn validity(&self) -> &[Polynomial] {
        &self.validity
    }

    /// Parameter polynomials to avoid: the denominator (`1` when none was
    /// introduced) followed by the basis validity list.
    pub fn denominators(&self) -> Vec<Polynomial> {
        let mut out = vec![self.denominator.clone()];
        for v in &self.validity {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn generically_trivial(&self) -> bool {
        self.generically_trivial
    }

    /// Numerator coefficients per main monomial (parameter polynomials),
    /// sorted by main monomial.
    pub fn coefficients(&self) -> Vec<(Monomial, Polynomial)> {
        self.numerator.coefficients_in(&self.main)
    }

    /// The rational coefficient of main monomial `m` as (numerator, denominator).
    pub fn coefficient(&self, m: &Monomial) -> (Polynomial, Polynomial) {
        let num = self
            .coefficients()
            .into_iter()
            .find(|(k, _)| k == m)
            .map(|(_, c)| c)
            .unwrap_or_else(|| Polynomial::zero(&self.ring));
        (num, self.denominator.clone())
    }

    /// Specializes the parameters; `None` when the point lies on the
    /// excluded locus.
    pub fn specialize(&self, values: &[(Var, Coeff)]) -> Result<Option<Polynomial>> {
        for v in &self.params {
            if !values.iter().any(|(w, _)| w == v) {
                return Err(Error::IncompleteAssignment(self.ring.name(*v).to_string()));
            }
        }
        let den = self.denominator.specialize(values)?;
        let den = den.as_constant().expect("denominator only involves parameters");
        if den.is_zero() {
            return Ok(None);
        }
        for v in &self.validity {
            if v.specialize(values)?.as_constant().is_some_and(|c| c.is_zero()) {
                return Ok(None);
            }
        }
        let num = self.numerator.specialize(values)?;
        Ok(Some(num.scale(&den.inv().expect("nonzero"))))
    }
}

/// One-shot reduction of `p` modulo `⟨gens⟩` over `ℚ(i)(params)[main]`.
pub fn parametric_normal_form(
    p: &Polynomial,
    gens: &[Polynomial],
    main: &[Var],
    params: &[Var],
    inner: BaseOrder,
    budget: &Budget,
) -> Result<ParametricRemainder> {
    ParametricBasis::new(p.ring(), gens, main, params, inner, budget)?.reduce(p)
}

/// Result of intersecting a family of varieties over a generic graph.
#[derive(Clone, Debug)]
pub struct FamilyLocus {
    /// Ideal in the sub-ring on the non-fibre variables.
    pub ideal: Ideal,
    /// Parameter polynomials off whose zero set the locus is valid.
    pub validity: Vec<Polynomial>,
}

/// For a family `A ⊂ U × U′` given by `family` (a generic graph over a block
/// of the fibre variables `fibre = u′`) and `G ⊂ U′ × V` given by
/// `members`, computes `{(u, v) : v ∈ G_{u′} for all u′ ∈ A_u}` by reducing
/// each member generator modulo `A` over `ℚ(i)(u, v)` and requiring every
/// fibre-monomial coefficient to vanish.
pub fn family_intersection_locus(
    ring: &Ring,
    family: &[Polynomial],
    fibre: &[Var],
    members: &[Polynomial],
    inner: BaseOrder,
    budget: &Budget,
) -> Result<FamilyLocus> {
    let rest: Vec<Var> = ring.vars().filter(|v| !fibre.contains(v)).collect();
    let (sub, _) = ring.restrict(&rest);
    let mut gens = Vec::new();
    let mut validity = Vec::new();
    let mut push_coefficients = |numerator: &Polynomial| -> Result<()> {
        for (_, c) in numerator.coefficients_in(fibre) {
            gens.push(c.map_into(&sub)?);
        }
        Ok(())
    };
    if family.iter().all(Polynomial::is_zero) {
        for g in members {
            push_coefficients(g)?;
        }
    } else {
        let basis = ParametricBasis::new(ring, family, fibre, &rest, inner, budget)?;
        check_graph(&basis)?;
        for g in members {
            let r = basis.reduce(g)?;
            push_coefficients(r.numerator())?;
        }
        for v in basis.validity() {
            validity.push(v.map_into(&sub)?);
        }
    }
    Ok(FamilyLocus {
        ideal: Ideal::new(&sub, gens, MonomialOrder::from(inner))?.with_budget(*budget),
        validity,
    })
}

fn check_graph(basis: &ParametricBasis) -> Result<()> {
    if basis.is_trivial() {
        return Err(Error::NonGraphFamily(
            "the family is generically empty".into(),
        ));
    }
    for lm in basis.leading_monomials() {
        if lm.degree() != 1 {
            let names: Vec<String> = lm
                .support()
                .map(|i| basis.ring().name(Var(i)).to_string())
                .collect();
            return Err(Error::NonGraphFamily(format!(
                "leading monomial in {} has degree {}",
                names.join(", "),
                lm.degree()
            )));
        }
    }
    Ok(())
}

/// Generic fibre dimension of `V(gens)` over the constraint variety
/// `V(constraints) ⊂ params-space`, computed over `ℚ(i)(T)` for a
/// transcendence basis `T` of the constraint variety.
#[derive(Clone, Debug)]
pub struct GenericFibre {
    pub dimension: i64,
    /// Parameters treated as independent transcendentals.
    pub transcendence_basis: Vec<Var>,
    pub validity: Vec<Polynomial>,
}

pub fn generic_fibre_dimension(
    ring: &Ring,
    gens: &[Polynomial],
    fibre: &[Var],
    params: &[Var],
    constraints: &[Polynomial],
    inner: BaseOrder,
    budget: &Budget,
) -> Result<GenericFibre> {
    let transcendence_basis = if constraints.iter().all(Polynomial::is_zero) {
        params.to_vec()
    } else {
        let (sub, _) = ring.restrict(params);
        let p: Vec<Polynomial> = constraints
            .iter()
            .map(|c| c.map_into(&sub))
            .collect::<Result<_>>()?;
        let ideal = Ideal::new(&sub, p, MonomialOrder::from(inner))?.with_budget(*budget);
        let mis = ideal.maximal_independent_set()?.ok_or_else(|| {
            Error::InvalidInput("the constraint set is empty".into())
        })?;
        mis.iter()
            .map(|v| ring.require(sub.name(*v)))
            .collect::<Result<Vec<_>>>()?
    };
    let mut main = fibre.to_vec();
    main.extend(params.iter().filter(|v| !transcendence_basis.contains(v)));
    let mut all = gens.to_vec();
    all.extend(constraints.iter().cloned());
    if all.iter().all(Polynomial::is_zero) {
        return Ok(GenericFibre {
            dimension: fibre.len() as i64,
            transcendence_basis,
            validity: Vec::new(),
        });
    }
    let basis = ParametricBasis::new(ring, &all, &main, &transcendence_basis, inner, budget)?;
    Ok(GenericFibre {
        dimension: basis.dimension(),
        transcendence_basis,
        validity: basis.validity().to_vec(),
    })
}
