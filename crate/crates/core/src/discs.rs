//! Detection of complex-analytic discs in a real-algebraic submanifold.
//!
//! With `k = ⌊dim_ℝ M / 2⌋` and `r = (p_1, …, p_d)`:
//!
//! * `A = {(a, w̄) : r(a_1, w̄) = … = r(a_k, w̄) = 0}`
//! * `B = {(a, z) : r(z, ·)` vanishes on `A_a}`
//! * `C = {(a, z) ∈ B : (a, z̄) ∈ A}`
//!
//! `M` contains no nonconstant disc iff `dim C_a = 0` for all `a`. Vanishing
//! on `A_a` is tested as ideal membership, not radical membership.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::manifold::{Point, RealAlgebraicSubmanifold};
use crate::order::{BaseOrder, MonomialOrder};
use crate::parametric::{generic_fibre_dimension, ParametricBasis};
use crate::parse::parse_scalar;
use crate::poly::{Coeff, Polynomial};
use crate::ring::{Ring, RingContext, Var};

pub const SEMANTICS: &str = "vanishing on A_a is certified by ideal membership, not radical membership";

pub fn disc_k(m: &RealAlgebraicSubmanifold) -> usize {
    m.real_dim() / 2
}

/// Ring `wb1..wbn, z1..zn, a{i}_{j}.., ab{i}_{j}..` with `z ↔ wb`, `a ↔ ab`.
#[derive(Clone, Debug)]
pub struct DiscRing {
    pub ring: Ring,
    pub n: usize,
    pub k: usize,
    pub wb: Vec<Var>,
    pub z: Vec<Var>,
    pub a: Vec<Vec<Var>>,
    pub ab: Vec<Vec<Var>>,
}

impl DiscRing {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let wb: Vec<String> = (1..=n).map(|j| format!("wb{j}")).collect();
        let z: Vec<String> = (1..=n).map(|j| format!("z{j}")).collect();
        let mut a = Vec::new();
        let mut ab = Vec::new();
        for i in 1..=k {
            for j in 1..=n {
                a.push(format!("a{i}_{j}"));
                ab.push(format!("ab{i}_{j}"));
            }
        }
        let ring = RingContext::builder()
            .conjugate_blocks(&wb, &z)
            .conjugate_blocks(&a, &ab)
            .build()?;
        let block = |start: usize| -> Vec<Var> { (start..start + n).map(Var).collect() };
        Ok(Self {
            n,
            k,
            wb: block(0),
            z: block(n),
            a: (0..k).map(|i| block(2 * n + i * n)).collect(),
            ab: (0..k).map(|i| block(2 * n + k * n + i * n)).collect(),
            ring,
        })
    }

    /// Main variables of the reduction: `wb_n > … > wb_1`.
    fn wb_priority(&self) -> Vec<Var> {
        self.wb.iter().rev().copied().collect()
    }

    fn params(&self) -> Vec<Var> {
        self.a.iter().chain(&self.ab).flatten().copied().collect()
    }

    /// `p` with `z ← holo` and `zb ← anti`.
    fn instantiate(&self, p: &Polynomial, holo: &[Var], anti: &[Var]) -> Result<Polynomial> {
        let n = self.n;
        let bindings: Vec<(Var, Polynomial)> = (0..n)
            .map(|j| (Var(j), Polynomial::var(&self.ring, holo[j])))
            .chain((0..n).map(|j| (Var(n + j), Polynomial::var(&self.ring, anti[j]))))
            .collect();
        p.substitute_into(&self.ring, &bindings)
    }
}

fn z_ring(n: usize) -> Ring {
    let names: Vec<String> = (1..=n).map(|j| format!("z{j}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    RingContext::plain(&refs).expect("distinct names")
}

/// `A` over `(a, w̄)`: the `d·k` polynomials `p_j(a_i, w̄)`.
pub fn build_family_a(m: &RealAlgebraicSubmanifold) -> Result<(DiscRing, Ideal)> {
    let dr = DiscRing::new(m.n(), disc_k(m))?;
    let mut gens = Vec::new();
    for i in 0..dr.k {
        for p in m.defining() {
            gens.push(dr.instantiate(p, &dr.a[i], &dr.wb)?);
        }
    }
    let ideal = Ideal::new(&dr.ring, gens, m.inner_order().into())?.with_budget(m.budget());
    Ok((dr, ideal))
}

/// Ideals of `A_a`, `B_a`, `C_a` at a fixed tuple; `B_a`, `C_a` live in `z1..zn`.
#[derive(Clone, Debug)]
pub struct FixedLoci {
    pub a: Ideal,
    pub b: Ideal,
    pub c: Ideal,
}

fn check_tuple(m: &RealAlgebraicSubmanifold, tuple: &[Point]) -> Result<()> {
    let k = disc_k(m);
    if tuple.len() != k {
        return Err(Error::InvalidInput(format!(
            "sample tuple has {} points, expected k = {k}",
            tuple.len()
        )));
    }
    for p in tuple {
        m.require_point(p)?;
    }
    Ok(())
}

pub fn fixed_loci(m: &RealAlgebraicSubmanifold, tuple: &[Point]) -> Result<FixedLoci> {
    check_tuple(m, tuple)?;
    let n = m.n();
    let wb: Vec<String> = (1..=n).map(|j| format!("wb{j}")).collect();
    let zn: Vec<String> = (1..=n).map(|j| format!("z{j}")).collect();
    let ring = RingContext::builder().conjugate_blocks(&wb, &zn).build()?;
    let wbv: Vec<Var> = (0..n).map(Var).collect();
    let zv: Vec<Var> = (n..2 * n).map(Var).collect();
    let var = |v: Var| Polynomial::var(&ring, v);
    let konst = |c: &Coeff| Polynomial::constant(&ring, c.clone());

    let mut a_gens = Vec::new();
    for point in tuple {
        let bindings: Vec<(Var, Polynomial)> = (0..n)
            .map(|j| (Var(j), konst(&point[j])))
            .chain((0..n).map(|j| (Var(n + j), var(wbv[j]))))
            .collect();
        for p in m.defining() {
            a_gens.push(p.substitute_into(&ring, &bindings)?);
        }
    }
    let priority: Vec<Var> = wbv.iter().rev().copied().collect();
    let order = MonomialOrder::block(2 * n, &priority, &zv, m.inner_order(), m.inner_order())?;
    let a_ideal = Ideal::new(&ring, a_gens, order)?.with_budget(m.budget());

    let zr = z_ring(n);
    let r_bindings: Vec<(Var, Polynomial)> = (0..n)
        .map(|j| (Var(j), var(zv[j])))
        .chain((0..n).map(|j| (Var(n + j), var(wbv[j]))))
        .collect();
    let mut b_gens = Vec::new();
    for p in m.defining() {
        let r = p.substitute_into(&ring, &r_bindings)?;
        let rem = a_ideal.normal_form(&r)?;
        for (_, c) in rem.coefficients_in(&wbv) {
            b_gens.push(c.map_into(&zr)?);
        }
    }
    let inner: MonomialOrder = m.inner_order().into();
    let b = Ideal::new(&zr, b_gens, inner.clone())?.with_budget(m.budget());

    let mut c_gens = b.generators().to_vec();
    for point in tuple {
        let bindings: Vec<(Var, Polynomial)> = (0..n)
            .map(|j| (Var(n + j), Polynomial::constant(&zr, point[j].conj())))
            .collect();
        for p in m.defining() {
            let g = p.bar()?.substitute_into(&zr, &bindings)?;
            if !c_gens.contains(&g) {
                c_gens.push(g);
            }
        }
    }
    let c = Ideal::new(&zr, c_gens, inner)?.with_budget(m.budget());
    Ok(FixedLoci { a: a_ideal, b, c })
}

/// `B` and `C` over `(a, ā, z)` with `a` generic on `M^k`.
#[derive(Clone, Debug)]
pub struct ParametricLoci {
    pub ring: DiscRing,
    pub a: Ideal,
    pub b: Ideal,
    pub c: Ideal,
    /// `p_j(a_i, ā_i)`: the tuple lies on `M`.
    pub constraints: Vec<Polynomial>,
    /// Nonconstant parameter polynomials that must not vanish.
    pub denominators: Vec<Polynomial>,
}

pub fn parametric_loci(m: &RealAlgebraicSubmanifold) -> Result<ParametricLoci> {
    let (dr, a) = build_family_a(m)?;
    if dr.k == 0 {
        return Err(Error::InvalidInput("real dimension below 2: no disc family".into()));
    }
    let mut params: Vec<Var> = dr.a.iter().flatten().copied().collect();
    params.extend(&dr.z);
    let basis = ParametricBasis::new(
        &dr.ring,
        a.generators(),
        &dr.wb_priority(),
        &params,
        m.inner_order(),
        &m.budget(),
    )?;
    let mut b_gens = Vec::new();
    let mut denominators: Vec<Polynomial> = Vec::new();
    for p in m.defining() {
        let r = dr.instantiate(p, &dr.z, &dr.wb)?;
        let rem = basis.reduce(&r)?;
        for (_, c) in rem.coefficients() {
            b_gens.push(c);
        }
        for d in rem.denominators() {
            if !d.is_constant() && !denominators.contains(&d) {
                denominators.push(d);
            }
        }
    }
    let mut constraints = Vec::new();
    for i in 0..dr.k {
        for p in m.defining() {
            constraints.push(dr.instantiate(p, &dr.a[i], &dr.ab[i])?);
        }
    }
    let order: MonomialOrder = m.inner_order().into();
    let on_m = Ideal::new(&dr.ring, constraints.clone(), order.clone())?.with_budget(m.budget());
    for d in &denominators {
        if on_m.contains(d)? {
            return Err(Error::DegenerateDenominator(d.to_string()));
        }
    }
    let b = Ideal::new(&dr.ring, b_gens, order.clone())?.with_budget(m.budget());
    let mut c_gens = b.generators().to_vec();
    for i in 0..dr.k {
        for p in m.defining() {
            c_gens.push(dr.instantiate(&p.bar()?, &dr.z, &dr.ab[i])?);
        }
    }
    let c = Ideal::new(&dr.ring, c_gens, order)?.with_budget(m.budget());
    Ok(ParametricLoci {
        ring: dr,
        a,
        b,
        c,
        constraints,
        denominators,
    })
}

impl ParametricLoci {
    fn bindings(&self, tuple: &[Point], target: &Ring) -> Vec<(Var, Polynomial)> {
        let mut out = Vec::new();
        for (i, point) in tuple.iter().enumerate() {
            for (j, c) in point.iter().enumerate() {
                out.push((self.ring.a[i][j], Polynomial::constant(target, c.clone())));
                out.push((self.ring.ab[i][j], Polynomial::constant(target, c.conj())));
            }
        }
        out
    }

    fn assignment(&self, tuple: &[Point]) -> Vec<(Var, Coeff)> {
        let mut out = Vec::new();
        for (i, point) in tuple.iter().enumerate() {
            for (j, c) in point.iter().enumerate() {
                out.push((self.ring.a[i][j], c.clone()));
                out.push((self.ring.ab[i][j], c.conj()));
            }
        }
        out
    }

    /// Whether some denominator vanishes at the tuple.
    pub fn excluded(&self, tuple: &[Point]) -> Result<bool> {
        let values = self.assignment(tuple);
        for d in &self.denominators {
            if d.specialize(&values)?.is_zero() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn specialize(&self, ideal: &Ideal, tuple: &[Point]) -> Result<Ideal> {
        let zr = z_ring(self.ring.n);
        let bindings = self.bindings(tuple, &zr);
        let gens = ideal
            .generators()
            .iter()
            .map(|g| g.substitute_into(&zr, &bindings))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&zr, gens, ideal.order().base().into())?.with_budget(ideal.budget()))
    }

    /// `B` at a tuple, in `z1..zn`.
    pub fn specialize_b(&self, tuple: &[Point]) -> Result<Ideal> {
        self.specialize(&self.b, tuple)
    }

    pub fn specialize_c(&self, tuple: &[Point]) -> Result<Ideal> {
        self.specialize(&self.c, tuple)
    }

    /// Dimension of `C_a` for generic `a ∈ M^k`.
    pub fn generic_dimension(&self, inner: BaseOrder) -> Result<GenericDiscResult> {
        let params = self.ring.params();
        let fibre = generic_fibre_dimension(
            &self.ring.ring,
            self.c.generators(),
            &self.ring.z,
            &params,
            &self.constraints,
            inner,
            &self.c.budget(),
        )?;
        let mut denominators: Vec<String> = self.denominators.iter().map(|d| d.to_string()).collect();
        for v in &fibre.validity {
            let s = v.to_string();
            if !denominators.contains(&s) {
                denominators.push(s);
            }
        }
        Ok(GenericDiscResult {
            dimension: fibre.dimension,
            transcendence_basis: fibre
                .transcendence_basis
                .iter()
                .map(|v| self.ring.ring.name(*v).to_string())
                .collect(),
            b_ideal: self.b.generator_strings(),
            c_ideal: self.c.generator_strings(),
            constraints: self.constraints.iter().map(|c| c.to_string()).collect(),
            denominators,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericDiscResult {
    pub dimension: i64,
    /// Parameters treated as independent indeterminates.
    pub transcendence_basis: Vec<String>,
    pub b_ideal: Vec<String>,
    pub c_ideal: Vec<String>,
    pub constraints: Vec<String>,
    /// The result is valid where none of these vanish.
    pub denominators: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ContainmentStatus {
    Passed,
    Failed,
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentReport {
    pub status: ContainmentStatus,
    /// Exact points of `V(C_a)` that were tested.
    pub points: Vec<Point>,
    pub failure: Option<Point>,
}

fn grid() -> Vec<Coeff> {
    [
        "0", "1", "-1", "I", "-I", "2", "-2", "1/2", "-1/2", "1+I", "1-I", "-1+I", "-1-I", "2*I",
        "-2*I",
    ]
    .iter()
    .map(|s| parse_scalar(s).expect("grid literal"))
    .collect()
}

/// Exact points of `V(ideal)` (at most `limit`) by back-substitution in a
/// lex basis: linear factors are solved exactly, other univariate
/// constraints are tried on a small grid, unconstrained variables are free.
pub fn extract_points(ideal: &Ideal, limit: usize) -> Result<Vec<Point>> {
    let lex = ideal.with_order(MonomialOrder::Lex)?;
    let gb = lex.groebner_basis()?;
    if gb.is_unit() || limit == 0 {
        return Ok(Vec::new());
    }
    let nv = ideal.ring().nvars();
    let mut levels: Vec<Vec<Polynomial>> = vec![Vec::new(); nv];
    for g in gb.polynomials() {
        let top = g.variables().into_iter().map(|v| v.0).min().expect("nonconstant");
        levels[top].push(g.clone());
    }
    let grid = grid();
    let mut out = Vec::new();
    let mut values: Vec<Option<Coeff>> = vec![None; nv];
    descend(nv, &levels, &grid, &mut values, limit, &mut out)?;
    Ok(out)
}

fn descend(
    level: usize,
    levels: &[Vec<Polynomial>],
    grid: &[Coeff],
    values: &mut Vec<Option<Coeff>>,
    limit: usize,
    out: &mut Vec<Point>,
) -> Result<()> {
    if out.len() >= limit {
        return Ok(());
    }
    if level == 0 {
        out.push(values.iter().map(|v| v.clone().expect("assigned")).collect());
        return Ok(());
    }
    let var = level - 1;
    let known: Vec<(Var, Coeff)> = values
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.clone().map(|c| (Var(i), c)))
        .collect();
    let univariate: Vec<Polynomial> = levels[var]
        .iter()
        .map(|g| g.specialize(&known))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    let mut candidates: Vec<Coeff> = Vec::new();
    if univariate.is_empty() {
        candidates.extend(grid.iter().take(limit.max(1) + 2).cloned());
    } else {
        if univariate.iter().any(Polynomial::is_constant) {
            return Ok(());
        }
        for g in &univariate {
            if g.total_degree() == Some(1) {
                // a·x + b
                let x = Var(var);
                let a = g.diff(x)?.as_constant().expect("linear");
                let b = g.specialize(&[(x, Coeff::zero())])?.as_constant().expect("linear");
                candidates.push(-(&b / &a));
            }
        }
        candidates.extend(grid.iter().cloned());
        let mut roots = Vec::new();
        for c in candidates {
            if roots.contains(&c) {
                continue;
            }
            let mut ok = true;
            for g in &univariate {
                if !g.specialize(&[(Var(var), c.clone())])?.is_zero() {
                    ok = false;
                    break;
                }
            }
            if ok {
                roots.push(c);
            }
        }
        candidates = roots;
    }
    for c in candidates {
        values[var] = Some(c);
        descend(var, levels, grid, values, limit, out)?;
        values[var] = None;
        if out.len() >= limit {
            break;
        }
    }
    Ok(())
}

/// Samples exact points of `V(C_a)` and checks each lies on `M`.
pub fn containment_check(m: &RealAlgebraicSubmanifold, c: &Ideal, limit: usize) -> Result<ContainmentReport> {
    let points = extract_points(c, limit)?;
    if points.is_empty() {
        return Ok(ContainmentReport {
            status: ContainmentStatus::Unchecked,
            points,
            failure: None,
        });
    }
    for p in &points {
        if !m.contains(p)? {
            return Ok(ContainmentReport {
                status: ContainmentStatus::Failed,
                failure: Some(p.clone()),
                points,
            });
        }
    }
    Ok(ContainmentReport {
        status: ContainmentStatus::Passed,
        points,
        failure: None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TupleResult {
    pub tuple: Vec<Point>,
    pub a_ideal: Vec<String>,
    pub b_ideal: Vec<String>,
    pub c_ideal: Vec<String>,
    pub dimension: i64,
    /// Run for positive-dimensional `C_a`.
    pub containment: Option<ContainmentReport>,
}

pub fn evaluate_tuple(m: &RealAlgebraicSubmanifold, tuple: &[Point], sample_budget: usize) -> Result<TupleResult> {
    let loci = fixed_loci(m, tuple)?;
    let dimension = loci.c.dimension()?;
    let containment = if dimension >= 1 {
        Some(containment_check(m, &loci.c, sample_budget)?)
    } else {
        None
    };
    Ok(TupleResult {
        tuple: tuple.to_vec(),
        a_ideal: loci.a.generator_strings(),
        b_ideal: loci.b.generator_strings(),
        c_ideal: loci.c.generator_strings(),
        dimension,
        containment,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscVerdict {
    DiscsFound,
    DiscFreeGeneric,
    DiscFreeSampled,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscWitness {
    /// `"tuple N"` (1-based) or `"generic"`.
    pub source: String,
    pub c_ideal: Vec<String>,
    pub dimension: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscReport {
    pub manifold: String,
    pub k: usize,
    pub tuples: Vec<TupleResult>,
    pub generic: Option<GenericDiscResult>,
    pub verdict: DiscVerdict,
    pub witness: Option<DiscWitness>,
    pub semantics: String,
    pub caveats: Vec<String>,
}

/// Settings of a disc search.
#[derive(Clone, Debug)]
pub struct DiscSearch {
    pub tuples: Vec<Vec<Point>>,
    /// Also run the parametric computation over generic `a`.
    pub generic: bool,
    /// Points extracted per containment check.
    pub sample_budget: usize,
}

pub fn disc_verdict(m: &RealAlgebraicSubmanifold, search: &DiscSearch) -> Result<DiscReport> {
    let k = disc_k(m);
    let mut caveats = Vec::new();
    if k == 0 {
        caveats.push("real dimension below 2: M carries no disc".into());
        return Ok(DiscReport {
            manifold: m.name().to_string(),
            k,
            tuples: Vec::new(),
            generic: None,
            verdict: DiscVerdict::DiscFreeGeneric,
            witness: None,
            semantics: SEMANTICS.into(),
            caveats,
        });
    }
    if search.tuples.is_empty() && !search.generic {
        return Err(Error::EmptySampleSet);
    }
    for t in &search.tuples {
        check_tuple(m, t)?;
    }
    let tuples: Vec<TupleResult> = search
        .tuples
        .par_iter()
        .map(|t| evaluate_tuple(m, t, search.sample_budget))
        .collect::<Result<_>>()?;

    let generic = if search.generic {
        match parametric_loci(m).and_then(|p| p.generic_dimension(m.inner_order())) {
            Ok(g) => Some(g),
            Err(Error::DegenerateDenominator(d)) => {
                caveats.push(format!(
                    "parametric mode skipped: denominator `{d}` vanishes on all tuples of points of M"
                ));
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };

    let sampled_witness = tuples.iter().enumerate().find(|(_, t)| t.dimension >= 1);
    let (verdict, witness) = if let Some((i, t)) = sampled_witness {
        if let Some(g) = &generic {
            if g.dimension <= 0 {
                caveats.push(format!(
                    "generic dimension {} disagrees with tuple {}; the tuple computation is authoritative",
                    g.dimension,
                    i + 1
                ));
            }
        }
        (
            DiscVerdict::DiscsFound,
            Some(DiscWitness {
                source: format!("tuple {}", i + 1),
                c_ideal: t.c_ideal.clone(),
                dimension: t.dimension,
            }),
        )
    } else if let Some(g) = &generic {
        if g.dimension >= 1 {
            if tuples.is_empty() {
                (
                    DiscVerdict::DiscsFound,
                    Some(DiscWitness {
                        source: "generic".into(),
                        c_ideal: g.c_ideal.clone(),
                        dimension: g.dimension,
                    }),
                )
            } else {
                caveats.push(format!(
                    "generic dimension {} but every sampled C_a is a point",
                    g.dimension
                ));
                (DiscVerdict::Inconclusive, None)
            }
        } else {
            if g.denominators.is_empty() {
                caveats.push("generic result holds for all a on M^k".into());
            } else {
                caveats.push(format!(
                    "generic result holds off the zero set of: {}",
                    g.denominators.join("; ")
                ));
            }
            (DiscVerdict::DiscFreeGeneric, None)
        }
    } else if !tuples.is_empty() {
        caveats.push(format!(
            "only {} sampled tuples were tested; disc-freeness is not certified for all a",
            tuples.len()
        ));
        (DiscVerdict::DiscFreeSampled, None)
    } else {
        (DiscVerdict::Inconclusive, None)
    };
    if tuples
        .iter()
        .filter_map(|t| t.containment.as_ref())
        .any(|c| c.status == ContainmentStatus::Failed)
    {
        caveats.push("a point of some C_a is not on M: the disc witness is unreliable".into());
    }
    Ok(DiscReport {
        manifold: m.name().to_string(),
        k,
        tuples,
        generic,
        verdict,
        witness,
        semantics: SEMANTICS.into(),
        caveats,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition2Status {
    Fails,
    HoldsGeneric,
    NotRefuted,
    Undetermined,
}

impl Condition2Status {
    pub fn from_verdict(v: DiscVerdict) -> Self {
        match v {
            DiscVerdict::DiscsFound => Condition2Status::Fails,
            DiscVerdict::DiscFreeGeneric => Condition2Status::HoldsGeneric,
            DiscVerdict::DiscFreeSampled => Condition2Status::NotRefuted,
            DiscVerdict::Inconclusive => Condition2Status::Undetermined,
        }
    }

    /// Holds generically or better.
    pub fn holds(self) -> bool {
        self == Condition2Status::HoldsGeneric
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition2Report {
    pub status: Condition2Status,
    pub discs: DiscReport,
}

pub fn condition2(m: &RealAlgebraicSubmanifold, search: &DiscSearch) -> Result<Condition2Report> {
    let discs = disc_verdict(m, search)?;
    Ok(Condition2Report {
        status: Condition2Status::from_verdict(discs.verdict),
        discs,
    })
}

/// Tuples for the disc search drawn from exact points of `M`: every point
/// when `k = 1`, otherwise `count` seeded random `k`-tuples.
pub fn sample_tuples(points: &[Point], k: usize, count: usize, seed: u64) -> Vec<Vec<Point>> {
    if points.is_empty() || k == 0 {
        return Vec::new();
    }
    if k == 1 {
        return points.iter().map(|p| vec![p.clone()]).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..k)
                .map(|_| points.choose(&mut rng).expect("nonempty").clone())
                .collect()
        })
        .collect()
}
