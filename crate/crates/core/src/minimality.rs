//! Genericity, Segre-set minimality and the first hypothesis of the
//! algebraicity theorem ("every local holomorphism from M into ℝ is constant").

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::manifold::{first_nonzero_minor, format_point, jacobian, Point, RealAlgebraicSubmanifold};
use crate::poly::Coeff;
use crate::ring::Var;
use crate::segre::segre_set_dimension;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericityReport {
    pub generic: bool,
    /// Holomorphic variables of the first nonvanishing `d × d` minor.
    pub witness_columns: Vec<String>,
    pub witness_minor: Option<String>,
    pub reason: String,
}

/// Some `d × d` minor of `∂p_i(z, w̄)/∂z_j` is nonzero modulo `ℳ`.
pub fn genericity(m: &RealAlgebraicSubmanifold) -> Result<GenericityReport> {
    let (n, d) = (m.n(), m.d());
    if d > n {
        return Ok(GenericityReport {
            generic: false,
            witness_columns: Vec::new(),
            witness_minor: None,
            reason: format!("{d} equations exceed n = {n}"),
        });
    }
    let c = m.complexify()?;
    let z: Vec<Var> = (n..2 * n).map(Var).collect();
    let jac = jacobian(c.generators(), &z)?;
    Ok(match first_nonzero_minor(&jac, d, c.ideal())? {
        Some((_, cols, minor)) => GenericityReport {
            generic: true,
            witness_columns: cols.iter().map(|&j| c.ring().name(z[j]).to_string()).collect(),
            witness_minor: Some(minor.to_string()),
            reason: "a minor of the holomorphic Jacobian is nonzero on the complexification".into(),
        },
        None => GenericityReport {
            generic: false,
            witness_columns: Vec::new(),
            witness_minor: None,
            reason: "every minor of the holomorphic Jacobian vanishes on the complexification".into(),
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Minimality {
    Minimal,
    NotMinimal,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub base_point: Point,
    /// `d_1, d_2, …`: dimensions of the Segre sets at the base point.
    pub dimensions: Vec<i64>,
    pub verdict: Minimality,
    pub generic: bool,
}

pub fn default_cap(n: usize) -> usize {
    2 * n + 1
}

/// Grows Segre sets at `p` until they fill `ℂⁿ` (minimal) or stall
/// below `n` (not minimal); gives up after `cap` steps.
pub fn minimality(m: &RealAlgebraicSubmanifold, p: &[Coeff], cap: usize) -> Result<MinimalityReport> {
    minimality_at(m, p, genericity(m)?.generic, cap)
}

fn minimality_at(m: &RealAlgebraicSubmanifold, p: &[Coeff], generic: bool, cap: usize) -> Result<MinimalityReport> {
    m.require_point(p)?;
    let n = m.n() as i64;
    let mut dimensions: Vec<i64> = Vec::new();
    let mut verdict = Minimality::Inconclusive;
    for s in 1..=cap.max(1) {
        let d = segre_set_dimension(m, p, s)?;
        let stalled = dimensions.last() == Some(&d);
        dimensions.push(d);
        if d == n {
            verdict = Minimality::Minimal;
            break;
        }
        if stalled {
            verdict = Minimality::NotMinimal;
            break;
        }
    }
    Ok(MinimalityReport {
        base_point: p.to_vec(),
        dimensions,
        verdict,
        generic,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition1Status {
    Holds,
    /// Not generic: the Jacobian test fails on all of the complexification.
    Fails,
    /// Generic, but no tested point is minimal.
    FailsAtTestedPoints,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition1Report {
    pub genericity: GenericityReport,
    pub points: Vec<MinimalityReport>,
    pub status: Condition1Status,
    pub caveats: Vec<String>,
}

impl Condition1Report {
    pub fn holds(&self) -> bool {
        self.status == Condition1Status::Holds
    }
}

pub fn condition1(m: &RealAlgebraicSubmanifold, points: &[Point], cap: usize) -> Result<Condition1Report> {
    if points.is_empty() {
        return Err(Error::EmptySampleSet);
    }
    let genericity = genericity(m)?;
    let reports: Vec<MinimalityReport> = points
        .par_iter()
        .map(|p| minimality_at(m, p, genericity.generic, cap))
        .collect::<Result<_>>()?;
    let minimal_at = reports.iter().find(|r| r.verdict == Minimality::Minimal);
    let mut caveats = Vec::new();
    let status = if !genericity.generic {
        Condition1Status::Fails
    } else if let Some(r) = minimal_at {
        caveats.push(format!(
            "minimal at {}; this gives minimality on a dense open subset only if M is connected",
            format_point(&r.base_point)
        ));
        Condition1Status::Holds
    } else {
        caveats.push(format!(
            "no minimal point among {} tested points; failure is not certified away from them",
            reports.len()
        ));
        if reports.iter().any(|r| r.verdict == Minimality::Inconclusive) {
            caveats.push("the minimality cap was reached at some point".into());
        }
        Condition1Status::FailsAtTestedPoints
    };
    Ok(Condition1Report {
        genericity,
        points: reports,
        status,
        caveats,
    })
}
