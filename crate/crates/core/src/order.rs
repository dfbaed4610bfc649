//! Monomial orders: lex, graded reverse lex, and two-block elimination orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::Var;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum BaseOrder {
    Lex,
    #[default]
    GrevLex,
}

/// Compares the front block first; ties are broken on the back block.
/// Inside a block, variables rank in the listed order (first = largest).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockOrder {
    front: Vec<usize>,
    back: Vec<usize>,
    front_order: BaseOrder,
    back_order: BaseOrder,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block(BlockOrder),
}

impl From<BaseOrder> for MonomialOrder {
    fn from(b: BaseOrder) -> Self {
        match b {
            BaseOrder::Lex => MonomialOrder::Lex,
            BaseOrder::GrevLex => MonomialOrder::GrevLex,
        }
    }
}

impl MonomialOrder {
    /// Block order over a ring with `nvars` variables; `front` and `back`
    /// must partition the variables.
    pub fn block(
        nvars: usize,
        front: &[Var],
        back: &[Var],
        front_order: BaseOrder,
        back_order: BaseOrder,
    ) -> Result<Self> {
        let mut seen = vec![false; nvars];
        for v in front.iter().chain(back) {
            if v.0 >= nvars || seen[v.0] {
                return Err(Error::OrderMismatch);
            }
            seen[v.0] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::OrderMismatch);
        }
        Ok(MonomialOrder::Block(BlockOrder {
            front: front.iter().map(|v| v.0).collect(),
            back: back.iter().map(|v| v.0).collect(),
            front_order,
            back_order,
        }))
    }

    /// Elimination order for `eliminate`: those variables form the front
    /// block, the rest keep ring order in the back block.
    pub fn elimination(nvars: usize, eliminate: &[Var], inner: BaseOrder) -> Result<Self> {
        let back: Vec<Var> = (0..nvars)
            .map(Var)
            .filter(|v| !eliminate.contains(v))
            .collect();
        Self::block(nvars, eliminate, &back, inner, inner)
    }

    /// Whether this order can be used on a ring with `nvars` variables.
    pub fn fits(&self, nvars: usize) -> bool {
        match self {
            MonomialOrder::Block(b) => b.front.len() + b.back.len() == nvars,
            _ => true,
        }
    }

    /// The inner order used for a block (or the order itself when unblocked).
    pub fn base(&self) -> BaseOrder {
        match self {
            MonomialOrder::Lex => BaseOrder::Lex,
            MonomialOrder::GrevLex => BaseOrder::GrevLex,
            MonomialOrder::Block(b) => b.back_order,
        }
    }

    pub fn front_block(&self) -> Option<&[usize]> {
        match self {
            MonomialOrder::Block(b) => Some(&b.front),
            _ => None,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => lex(0..a.len(), a, b),
            MonomialOrder::GrevLex => grevlex_full(a, b),
            MonomialOrder::Block(bo) => cmp_base(bo.front_order, &bo.front, a, b)
                .then_with(|| cmp_base(bo.back_order, &bo.back, a, b)),
        }
    }
}

fn cmp_base(order: BaseOrder, idx: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    match order {
        BaseOrder::Lex => lex(idx.iter().copied(), a, b),
        BaseOrder::GrevLex => grevlex(idx, a, b),
    }
}

fn lex(idx: impl Iterator<Item = usize>, a: &[u32], b: &[u32]) -> Ordering {
    for i in idx {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn grevlex_full(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

fn grevlex(idx: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = idx.iter().map(|&i| a[i]).sum();
    let db: u32 = idx.iter().map(|&i| b[i]).sum();
    da.cmp(&db).then_with(|| {
        for &i in idx.iter().rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn lex_vs_grevlex() {
        // x*z^2 vs y^2 in k[x,y,z]
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 2, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::GrevLex.cmp(&a, &b), Ordering::Greater);
        // x*z vs y^2: same degree, grevlex prefers y^2 (smaller power of z)
        let c = m(&[1, 0, 1]);
        assert_eq!(MonomialOrder::GrevLex.cmp(&c, &b), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&c, &b), Ordering::Greater);
    }

    #[test]
    fn elimination_order_puts_front_block_first() {
        let o = MonomialOrder::elimination(3, &[Var(1)], BaseOrder::GrevLex).unwrap();
        // y beats x^5 z^5
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[5, 0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn block_priority_follows_listing() {
        let o = MonomialOrder::block(2, &[Var(1), Var(0)], &[], BaseOrder::Lex, BaseOrder::Lex)
            .unwrap();
        assert_eq!(o.cmp(&m(&[0, 1]), &m(&[3, 0])), Ordering::Greater);
    }

    #[test]
    fn block_must_partition() {
        assert!(MonomialOrder::block(3, &[Var(0)], &[Var(1)], BaseOrder::Lex, BaseOrder::Lex)
            .is_err());
    }
}
