//! Polynomial ring contexts: named variables plus the conjugation pairing
//! that drives the bar-involution.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Index of a variable inside its ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub usize);

impl Var {
    pub fn index(self) -> usize {
        self.0
    }
}

/// How the bar-involution acts on a variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conjugation {
    /// Swapped with the given partner (`z_j ↔ zb_j`).
    Paired(Var),
    /// Fixed by the involution; only coefficients are conjugated.
    SelfConjugate,
    /// No action declared; the involution is undefined on it.
    Unpaired,
}

pub type Ring = Arc<RingContext>;

/// Ordered variable names with a stored conjugation involution on indices.
#[derive(Clone)]
pub struct RingContext {
    names: Vec<String>,
    conj: Vec<Conjugation>,
    lookup: HashMap<String, usize>,
}

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.conj == other.conj
    }
}

impl Eq for RingContext {}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", self.names)
    }
}

impl RingContext {
    pub fn builder() -> RingBuilder {
        RingBuilder::default()
    }

    /// `z1..zn, zb1..zbn` with `zj ↔ zbj`.
    pub fn manifold(n: usize) -> Ring {
        let mut b = Self::builder();
        let holo: Vec<String> = (1..=n).map(|j| format!("z{j}")).collect();
        let anti: Vec<String> = (1..=n).map(|j| format!("zb{j}")).collect();
        b.conjugate_blocks(&holo, &anti);
        b.build().expect("manifold ring names are distinct")
    }

    /// A ring of unpaired variables, e.g. `["x", "y", "z"]`.
    pub fn plain(names: &[&str]) -> Result<Ring> {
        let mut b = Self::builder();
        for n in names {
            b.variable(n);
        }
        b.build()
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var(&self, name: &str) -> Option<Var> {
        self.lookup.get(name).map(|&i| Var(i))
    }

    /// Like [`RingContext::var`] but with an error naming the variable.
    pub fn require(&self, name: &str) -> Result<Var> {
        self.var(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> {
        (0..self.names.len()).map(Var)
    }

    pub fn conjugation(&self, v: Var) -> Conjugation {
        self.conj[v.0]
    }

    pub fn check(&self, v: Var) -> Result<()> {
        if v.0 < self.names.len() {
            Ok(())
        } else {
            Err(Error::UnknownVariable(format!("#{}", v.0)))
        }
    }

    /// Sub-ring on `keep` (in the given order). Pairings whose partner is
    /// dropped become `Unpaired`. Returns the new ring and, for each old
    /// index, its new index if kept.
    pub fn restrict(&self, keep: &[Var]) -> (Ring, Vec<Option<usize>>) {
        let mut map = vec![None; self.nvars()];
        for (new, v) in keep.iter().enumerate() {
            map[v.0] = Some(new);
        }
        let mut names = Vec::with_capacity(keep.len());
        let mut conj = Vec::with_capacity(keep.len());
        for v in keep {
            names.push(self.names[v.0].clone());
            conj.push(match self.conj[v.0] {
                Conjugation::Paired(p) => match map[p.0] {
                    Some(np) => Conjugation::Paired(Var(np)),
                    None => Conjugation::Unpaired,
                },
                other => other,
            });
        }
        let lookup = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        (Arc::new(RingContext { names, conj, lookup }), map)
    }
}

pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Default)]
pub struct RingBuilder {
    names: Vec<String>,
    partner: Vec<Option<String>>,
    self_conj: Vec<bool>,
}

impl RingBuilder {
    pub fn variable(&mut self, name: &str) -> &mut Self {
        self.names.push(name.to_string());
        self.partner.push(None);
        self.self_conj.push(false);
        self
    }

    pub fn self_conjugate(&mut self, name: &str) -> &mut Self {
        self.names.push(name.to_string());
        self.partner.push(None);
        self.self_conj.push(true);
        self
    }

    /// Appends `holo` then `anti`, pairing `holo[j] ↔ anti[j]`.
    pub fn conjugate_blocks<S: AsRef<str>>(&mut self, holo: &[S], anti: &[S]) -> &mut Self {
        assert_eq!(holo.len(), anti.len(), "conjugate blocks differ in length");
        for (h, a) in holo.iter().zip(anti) {
            self.names.push(h.as_ref().to_string());
            self.partner.push(Some(a.as_ref().to_string()));
            self.self_conj.push(false);
        }
        for (h, a) in holo.iter().zip(anti) {
            self.names.push(a.as_ref().to_string());
            self.partner.push(Some(h.as_ref().to_string()));
            self.self_conj.push(false);
        }
        self
    }

    pub fn build(&self) -> Result<Ring> {
        let mut lookup = HashMap::new();
        for (i, n) in self.names.iter().enumerate() {
            if lookup.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        let mut conj = Vec::with_capacity(self.names.len());
        for (i, p) in self.partner.iter().enumerate() {
            let c = match p {
                Some(pn) => {
                    let j = *lookup
                        .get(pn)
                        .ok_or_else(|| Error::InvalidPairing(self.names[i].clone()))?;
                    if j == i || self.partner[j].as_deref() != Some(self.names[i].as_str()) {
                        return Err(Error::InvalidPairing(self.names[i].clone()));
                    }
                    Conjugation::Paired(Var(j))
                }
                None if self.self_conj[i] => Conjugation::SelfConjugate,
                None => Conjugation::Unpaired,
            };
            conj.push(c);
        }
        Ok(Arc::new(RingContext {
            names: self.names.clone(),
            conj,
            lookup,
        }))
    }
}
