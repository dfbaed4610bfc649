//! Validated defining data of a real-algebraic submanifold
//! `M = {z ∈ ℂⁿ : p_1(z, z̄) = … = p_d(z, z̄) = 0}` and its complexification.

use std::fmt;

use itertools::Itertools;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::ideal::Ideal;
use crate::order::BaseOrder;
use crate::parse::parse_polynomial;
use crate::poly::{Coeff, Polynomial};
use crate::ring::{same_ring, Ring, RingContext, Var};

/// An exact point of `ℂⁿ` with Gaussian-rational coordinates.
pub type Point = Vec<Coeff>;

/// Which invariant a rejected manifold violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    NoEquations,
    TooManyEquations { d: usize, n: usize },
    NotRealSymmetric { index: usize, polynomial: String },
    RankDeficient { generic_rank: usize, d: usize },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::NoEquations => write!(f, "no defining polynomials"),
            Rejection::TooManyEquations { d, n } => {
                write!(f, "{d} equations exceed the real dimension {} of the ambient space", 2 * n)
            }
            Rejection::NotRealSymmetric { index, polynomial } => {
                write!(f, "polynomial #{} `{polynomial}` is not real-valued", index + 1)
            }
            Rejection::RankDeficient { generic_rank, d } => {
                write!(f, "generic rank {generic_rank} of the Jacobian is below d = {d}")
            }
        }
    }
}

impl std::error::Error for Rejection {}

#[derive(Clone, Debug)]
pub struct RealAlgebraicSubmanifold {
    name: String,
    n: usize,
    ring: Ring,
    defining: Vec<Polynomial>,
    budget: Budget,
    inner: BaseOrder,
}

impl RealAlgebraicSubmanifold {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of defining equations.
    pub fn d(&self) -> usize {
        self.defining.len()
    }

    pub fn real_dim(&self) -> usize {
        2 * self.n - self.d()
    }

    /// The `z1..zn, zb1..zbn` ring.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn defining(&self) -> &[Polynomial] {
        &self.defining
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn inner_order(&self) -> BaseOrder {
        self.inner
    }

    /// Same manifold with other computation settings.
    pub fn with_settings(mut self, inner: BaseOrder, budget: Budget) -> Self {
        self.inner = inner;
        self.budget = budget;
        self
    }

    /// `(z, conj z)` as a full assignment of the manifold ring.
    pub fn assignment(&self, z: &[Coeff]) -> Result<Vec<Coeff>> {
        if z.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "point has {} coordinates, expected {}",
                z.len(),
                self.n
            )));
        }
        Ok(z.iter().cloned().chain(z.iter().map(Coeff::conj)).collect())
    }

    /// Values `p_i(z, z̄)`.
    pub fn residuals(&self, z: &[Coeff]) -> Result<Vec<Coeff>> {
        let full = self.assignment(z)?;
        self.defining.iter().map(|p| p.evaluate(&full)).collect()
    }

    pub fn contains(&self, z: &[Coeff]) -> Result<bool> {
        Ok(self.residuals(z)?.iter().all(Zero::is_zero))
    }

    /// Fails with [`Error::NotOnManifold`] unless `z ∈ M` exactly.
    pub fn require_point(&self, z: &[Coeff]) -> Result<()> {
        if self.contains(z)? {
            Ok(())
        } else {
            Err(Error::NotOnManifold(format!(
                "{} does not satisfy the equations of {}",
                format_point(z),
                self.name
            )))
        }
    }

    /// The ideal `⟨p_1, …, p_d⟩` in `z, zb` with `zb` read as independent.
    pub fn ideal(&self) -> Result<Ideal> {
        Ok(
            Ideal::new(&self.ring, self.defining.clone(), self.inner.into())?
                .with_budget(self.budget),
        )
    }

    pub fn complexify(&self) -> Result<Complexification> {
        Complexification::new(self)
    }

    /// `Q_w = {z : p(z, w̄) = 0}` for an exact point `w`, in the `z1..zn` ring.
    pub fn segre_variety(&self, w: &[Coeff]) -> Result<SegreVariety> {
        if w.len() != self.n {
            return Err(Error::InvalidInput(format!(
                "point has {} coordinates, expected {}",
                w.len(),
                self.n
            )));
        }
        let names: Vec<String> = (1..=self.n).map(|j| format!("z{j}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let zring = RingContext::plain(&refs)?;
        let bindings: Vec<(Var, Polynomial)> = (0..self.n)
            .map(|j| {
                (
                    Var(self.n + j),
                    Polynomial::constant(&zring, w[j].conj()),
                )
            })
            .collect();
        let gens = self
            .defining
            .iter()
            .map(|p| p.substitute_into(&zring, &bindings))
            .collect::<Result<Vec<_>>>()?;
        Ok(SegreVariety {
            point: w.to_vec(),
            ideal: Ideal::new(&zring, gens, self.inner.into())?.with_budget(self.budget),
        })
    }
}

/// Checks the defining data and builds the manifold.
pub fn validate(name: &str, n: usize, defining: Vec<Polynomial>) -> Result<RealAlgebraicSubmanifold> {
    validate_with(name, n, defining, BaseOrder::GrevLex, Budget::default())
}

pub fn validate_with(
    name: &str,
    n: usize,
    defining: Vec<Polynomial>,
    inner: BaseOrder,
    budget: Budget,
) -> Result<RealAlgebraicSubmanifold> {
    let ring = RingContext::manifold(n);
    for p in &defining {
        if !same_ring(p.ring(), &ring) {
            return Err(Error::RingMismatch);
        }
    }
    let d = defining.len();
    if d == 0 {
        return Err(Rejection::NoEquations.into());
    }
    if d > 2 * n {
        return Err(Rejection::TooManyEquations { d, n }.into());
    }
    for (index, p) in defining.iter().enumerate() {
        if !p.is_real_symmetric() {
            return Err(Rejection::NotRealSymmetric {
                index,
                polynomial: p.to_string(),
            }
            .into());
        }
    }
    let m = RealAlgebraicSubmanifold {
        name: name.to_string(),
        n,
        ring,
        defining,
        budget,
        inner,
    };
    let ideal = m.ideal()?;
    let vars: Vec<Var> = m.ring.vars().collect();
    let jac = jacobian(&m.defining, &vars)?;
    if first_nonzero_minor(&jac, d, &ideal)?.is_none() {
        let generic_rank = generic_rank(&jac, &ideal)?;
        return Err(Rejection::RankDeficient { generic_rank, d }.into());
    }
    Ok(m)
}

/// Parses the polynomials in the `z1..zn, zb1..zbn` ring and validates.
pub fn from_strings(name: &str, n: usize, polys: &[&str]) -> Result<RealAlgebraicSubmanifold> {
    let ring = RingContext::manifold(n);
    let defining = polys
        .iter()
        .map(|s| parse_polynomial(&ring, s))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    validate(name, n, defining)
}

/// `ℳ = {(w̄, z) : p_i(z, w̄) = 0}` in the ring `wb1..wbn, z1..zn`.
#[derive(Clone, Debug)]
pub struct Complexification {
    ring: Ring,
    ideal: Ideal,
}

impl Complexification {
    fn new(m: &RealAlgebraicSubmanifold) -> Result<Self> {
        let n = m.n();
        let wb: Vec<String> = (1..=n).map(|j| format!("wb{j}")).collect();
        let z: Vec<String> = (1..=n).map(|j| format!("z{j}")).collect();
        let ring = RingContext::builder().conjugate_blocks(&wb, &z).build()?;
        let bindings: Vec<(Var, Polynomial)> = (0..n)
            .map(|j| (Var(n + j), Polynomial::var(&ring, Var(j))))
            .collect();
        let gens = m
            .defining()
            .iter()
            .map(|p| p.substitute_into(&ring, &bindings))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ideal: Ideal::new(&ring, gens, m.inner_order().into())?.with_budget(m.budget()),
            ring,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn generators(&self) -> &[Polynomial] {
        self.ideal.generators()
    }

    /// `(w̄, z)` as a full assignment.
    pub fn assignment(&self, wbar: &[Coeff], z: &[Coeff]) -> Vec<Coeff> {
        wbar.iter().chain(z).cloned().collect()
    }

    /// Whether `(w̄, z) ∈ V(ℳ)`.
    pub fn contains(&self, wbar: &[Coeff], z: &[Coeff]) -> Result<bool> {
        let full = self.assignment(wbar, z);
        for g in self.generators() {
            if !g.evaluate(&full)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The ideal `bar(ℳ)`.
    pub fn conjugate(&self) -> Result<Ideal> {
        let gens = self
            .generators()
            .iter()
            .map(Polynomial::bar)
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.ring, gens, self.ideal.order().clone())?.with_budget(self.ideal.budget()))
    }
}

#[derive(Clone, Debug)]
pub struct SegreVariety {
    pub point: Point,
    pub ideal: Ideal,
}

impl SegreVariety {
    pub fn contains(&self, z: &[Coeff]) -> Result<bool> {
        for g in self.ideal.generators() {
            if !g.evaluate(z)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn format_point(z: &[Coeff]) -> String {
    format!("({})", z.iter().map(|c| c.to_string()).join(", "))
}

pub(crate) fn jacobian(polys: &[Polynomial], vars: &[Var]) -> Result<Vec<Vec<Polynomial>>> {
    polys
        .iter()
        .map(|p| vars.iter().map(|v| p.diff(*v)).collect())
        .collect()
}

/// Laplace expansion along the first row.
pub(crate) fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    match m.len() {
        0 => unreachable!("empty matrix"),
        1 => m[0][0].clone(),
        k => {
            let mut acc = Polynomial::zero(m[0][0].ring());
            for col in 0..k {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][col] * &determinant(&minor);
                acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// A `size × size` minor (rows, columns, value) with nonzero normal form
/// modulo `ideal`, searched in lexicographic order of index sets.
pub(crate) type Minor = (Vec<usize>, Vec<usize>, Polynomial);

pub(crate) fn first_nonzero_minor(
    jac: &[Vec<Polynomial>],
    size: usize,
    ideal: &Ideal,
) -> Result<Option<Minor>> {
    let nrows = jac.len();
    let ncols = jac.first().map_or(0, Vec::len);
    if size == 0 || size > nrows || size > ncols {
        return Ok(None);
    }
    for rows in (0..nrows).combinations(size) {
        for cols in (0..ncols).combinations(size) {
            let sub: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| jac[r][c].clone()).collect())
                .collect();
            let det = determinant(&sub);
            if det.is_zero() {
                continue;
            }
            if !ideal.contains(&det)? {
                return Ok(Some((rows, cols, det)));
            }
        }
    }
    Ok(None)
}

fn generic_rank(jac: &[Vec<Polynomial>], ideal: &Ideal) -> Result<usize> {
    let max = jac.len().min(jac.first().map_or(0, Vec::len));
    for r in (1..=max).rev() {
        if first_nonzero_minor(jac, r, ideal)?.is_some() {
            return Ok(r);
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_scalar;

    fn pt(s: &[&str]) -> Point {
        s.iter().map(|c| parse_scalar(c).unwrap()).collect()
    }

    #[test]
    fn sphere_validates() {
        let m = from_strings("sphere", 2, &["z1*zb1 + z2*zb2 - 1"]).unwrap();
        assert_eq!(m.real_dim(), 3);
        assert!(m.contains(&pt(&["3/5", "4/5"])).unwrap());
        assert!(!m.contains(&pt(&["0", "0"])).unwrap());
    }

    #[test]
    fn rejections() {
        assert_eq!(
            from_strings("bad", 2, &["z1"]).unwrap_err(),
            Error::Rejected(Rejection::NotRealSymmetric {
                index: 0,
                polynomial: "z1".into()
            })
        );
        assert_eq!(
            from_strings("dup", 2, &["z1*zb1 + z2*zb2 - 1", "2*z1*zb1 + 2*z2*zb2 - 2"]).unwrap_err(),
            Error::Rejected(Rejection::RankDeficient { generic_rank: 1, d: 2 })
        );
        let five = ["z1 + zb1"; 5];
        assert_eq!(
            from_strings("many", 2, &five).unwrap_err(),
            Error::Rejected(Rejection::TooManyEquations { d: 5, n: 2 })
        );
        assert_eq!(
            from_strings("none", 2, &[]).unwrap_err(),
            Error::Rejected(Rejection::NoEquations)
        );
    }

    #[test]
    fn complexification_relabels() {
        let m = from_strings("heisenberg", 2, &["2*z1*zb1 - z2 - zb2"]).unwrap();
        let c = m.complexify().unwrap();
        assert_eq!(c.ring().names(), &["wb1", "wb2", "z1", "z2"]);
        assert_eq!(c.generators()[0].to_string(), "2*wb1*z1 - wb2 - z2");
        let s = from_strings("sphere", 2, &["z1*zb1 + z2*zb2 - 1"]).unwrap();
        let c = s.complexify().unwrap();
        let p = pt(&["3/5", "4/5"]);
        let pbar: Point = p.iter().map(Coeff::conj).collect();
        assert!(c.contains(&pbar, &p).unwrap());
    }

    #[test]
    fn segre_varieties() {
        let s = from_strings("sphere", 2, &["z1*zb1 + z2*zb2 - 1"]).unwrap();
        let q = s.segre_variety(&pt(&["1", "0"])).unwrap();
        assert_eq!(q.ideal.generator_strings(), vec!["z1 - 1"]);
        let h = from_strings("heisenberg", 2, &["2*z1*zb1 - z2 - zb2"]).unwrap();
        let q = h.segre_variety(&pt(&["0", "0"])).unwrap();
        assert_eq!(q.ideal.generator_strings(), vec!["-z2"]);
        let p = pt(&["1", "1 + I"]);
        assert!(h.segre_variety(&p).unwrap().contains(&p).unwrap());
    }

    #[test]
    fn determinant_of_small_matrices() {
        let r = RingContext::plain(&["x", "y"]).unwrap();
        let p = |s: &str| parse_polynomial(&r, s).unwrap();
        let m = vec![vec![p("x"), p("y")], vec![p("1"), p("x")]];
        assert_eq!(determinant(&m), p("x^2 - y"));
    }
}
