//! Whether the algebraicity theorem applies to a pair `(M, M′)`: every
//! local holomorphism `M → M′` is algebraic when `M` admits no nonconstant
//! holomorphism into ℝ (generic and minimal) and `M′` contains no disc.

use serde::Serialize;

use crate::discs::{condition2, Condition2Report, Condition2Status, DiscSearch, SEMANTICS};
use crate::error::Result;
use crate::manifold::{Point, RealAlgebraicSubmanifold};
use crate::minimality::{condition1, Condition1Report, Condition1Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremVerdict {
    Applies,
    DoesNotApply,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub source: String,
    pub target: String,
    pub condition1: Condition1Report,
    pub condition2: Condition2Report,
    pub verdict: TheoremVerdict,
    pub reasons: Vec<String>,
    pub caveats: Vec<String>,
}

pub fn theorem(
    m: &RealAlgebraicSubmanifold,
    points: &[Point],
    target: &RealAlgebraicSubmanifold,
    search: &DiscSearch,
    cap: usize,
) -> Result<TheoremReport> {
    let c1 = condition1(m, points, cap)?;
    let c2 = condition2(target, search)?;
    let mut reasons = Vec::new();
    match c1.status {
        Condition1Status::Holds => {}
        Condition1Status::Fails => reasons.push(format!("condition 1 fails: {} is not generic", m.name())),
        Condition1Status::FailsAtTestedPoints => {
            reasons.push(format!("condition 1 fails: {} is not minimal at any tested point", m.name()))
        }
    }
    match c2.status {
        Condition2Status::HoldsGeneric => {}
        Condition2Status::Fails => {
            reasons.push(format!("condition 2 fails: {} contains analytic discs", target.name()))
        }
        Condition2Status::NotRefuted => reasons.push(format!(
            "condition 2 not established: {} is disc-free only at sampled tuples",
            target.name()
        )),
        Condition2Status::Undetermined => {
            reasons.push(format!("condition 2 undetermined for {}", target.name()))
        }
    }
    let verdict = if c1.holds() && c2.status.holds() {
        TheoremVerdict::Applies
    } else if c1.status != Condition1Status::Holds || c2.status == Condition2Status::Fails {
        TheoremVerdict::DoesNotApply
    } else {
        TheoremVerdict::Undetermined
    };
    let mut caveats: Vec<String> = c1.caveats.clone();
    caveats.extend(c2.discs.caveats.iter().cloned());
    caveats.push(SEMANTICS.to_string());
    Ok(TheoremReport {
        source: m.name().to_string(),
        target: target.name().to_string(),
        condition1: c1,
        condition2: c2,
        verdict,
        reasons,
        caveats,
    })
}
