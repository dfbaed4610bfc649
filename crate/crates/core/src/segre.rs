//! Iterated complexifications and Segre sets.
//!
//! Block `ξ_i` has variables `x{i}_1..x{i}_n`. Blocks alternate between
//! conjugate type (playing the role of `w̄`) and holomorphic type. A link
//! between a conjugate block `ξ_{i-1}` and `ξ_i` is `p(ξ_i, ξ_{i-1}) = 0`;
//! a link leaving a holomorphic block is `bar(p)(ξ_{i-1}, ξ_i) = 0`.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::manifold::RealAlgebraicSubmanifold;
use crate::poly::{Coeff, Polynomial};
use crate::ring::{Ring, RingContext, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// `ξ_0` is of conjugate type, as in `(ξ_0, ξ_1) ∈ ℳ`.
    Standard,
    /// `ξ_0` is of holomorphic type.
    Opposite,
}

#[derive(Clone, Debug)]
pub struct IteratedComplexification {
    m: usize,
    n: usize,
    parity: Parity,
    ring: Ring,
    ideal: Ideal,
}

pub fn block_name(block: usize, j: usize) -> String {
    format!("x{block}_{j}")
}

impl IteratedComplexification {
    pub fn new(manifold: &RealAlgebraicSubmanifold, m: usize) -> Result<Self> {
        Self::with_parity(manifold, m, Parity::Standard)
    }

    pub fn with_parity(manifold: &RealAlgebraicSubmanifold, m: usize, parity: Parity) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidInput("iterated complexification needs m ≥ 1".into()));
        }
        let n = manifold.n();
        let mut b = RingContext::builder();
        for i in 0..=m {
            for j in 1..=n {
                b.self_conjugate(&block_name(i, j));
            }
        }
        let ring = b.build()?;
        let block = |i: usize| -> Vec<Polynomial> {
            (0..n).map(|j| Polynomial::var(&ring, Var(i * n + j))).collect()
        };
        let conjugate_type = |i: usize| i.is_multiple_of(2) == (parity == Parity::Standard);
        let mut gens = Vec::new();
        for i in 1..=m {
            let (holo, anti, flip) = if conjugate_type(i - 1) {
                (block(i), block(i - 1), false)
            } else {
                (block(i - 1), block(i), true)
            };
            let bindings: Vec<(Var, Polynomial)> = (0..n)
                .map(|j| (Var(j), holo[j].clone()))
                .chain((0..n).map(|j| (Var(n + j), anti[j].clone())))
                .collect();
            for p in manifold.defining() {
                let q = if flip { p.bar()? } else { p.clone() };
                gens.push(q.substitute_into(&ring, &bindings)?);
            }
        }
        let ideal = Ideal::new(&ring, gens, manifold.inner_order().into())?
            .with_budget(manifold.budget());
        Ok(Self {
            m,
            n,
            parity,
            ring,
            ideal,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn block(&self, i: usize) -> Vec<Var> {
        (0..self.n).map(|j| Var(i * self.n + j)).collect()
    }

    /// `ℳ^m` with `ξ_0` fixed to `values`, in the ring of `ξ_1..ξ_m`.
    pub fn fiber(&self, values: &[Coeff]) -> Result<Ideal> {
        if values.len() != self.n {
            return Err(Error::InvalidInput("base value has the wrong length".into()));
        }
        let keep: Vec<Var> = (1..=self.m).flat_map(|i| self.block(i)).collect();
        let (sub, _) = self.ring.restrict(&keep);
        let bindings: Vec<(Var, Polynomial)> = self
            .block(0)
            .into_iter()
            .zip(values)
            .map(|(v, c)| (v, Polynomial::constant(&sub, c.clone())))
            .collect();
        let gens = self
            .ideal
            .generators()
            .iter()
            .map(|g| g.substitute_into(&sub, &bindings))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&sub, gens, self.ideal.order().base().into())?.with_budget(self.ideal.budget()))
    }
}

/// Dimension of the Zariski closure of the `s`-th Segre set at `p ∈ M`:
/// fix `ξ_0 = p̄`, eliminate `ξ_1..ξ_{s-1}` and measure the `ξ_s` block.
pub fn segre_set_dimension(manifold: &RealAlgebraicSubmanifold, p: &[Coeff], s: usize) -> Result<i64> {
    manifold.require_point(p)?;
    let it = IteratedComplexification::new(manifold, s)?;
    let pbar: Vec<Coeff> = p.iter().map(Coeff::conj).collect();
    let fiber = it.fiber(&pbar)?;
    let n = manifold.n();
    let middle: Vec<Var> = (0..(s - 1) * n).map(Var).collect();
    fiber.eliminate(&middle)?.dimension()
}
