//! Command orchestration and reports: a deterministic JSON document plus a
//! plain-text summary.

use std::fmt::Write as _;

use serde::Serialize;

use crate::discs::{condition2, disc_k, sample_tuples, Condition2Report, DiscSearch};
use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::manifold::{format_point, Point, RealAlgebraicSubmanifold};
use crate::manifold_file::{Location, ManifoldSpec, ParsedSpec};
use crate::minimality::{condition1, default_cap, genericity, Condition1Report, GenericityReport};
use crate::order::BaseOrder;
use crate::theorem::{theorem, TheoremReport};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum DiscMode {
    /// Sampled tuples only.
    Fixed,
    /// Sampled tuples plus the parametric computation.
    #[default]
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub order: BaseOrder,
    pub max_pairs: usize,
    pub max_degree: u32,
    /// Defaults to `2n + 1`.
    pub minimality_cap: Option<usize>,
    pub mode: DiscMode,
    /// Seed for drawing `k`-tuples from base points when `k ≥ 2`.
    pub seed: u64,
    /// Number of drawn tuples when `k ≥ 2`.
    pub samples: usize,
    /// Points extracted per containment check.
    pub containment_points: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        let b = Budget::default();
        Self {
            order: BaseOrder::GrevLex,
            max_pairs: b.max_pairs,
            max_degree: b.max_degree,
            minimality_cap: None,
            mode: DiscMode::Generic,
            seed: 0,
            samples: 20,
            containment_points: 3,
        }
    }
}

impl RunConfig {
    pub fn budget(&self) -> Budget {
        Budget {
            max_pairs: self.max_pairs,
            max_degree: self.max_degree,
        }
    }

    pub fn cap(&self, n: usize) -> usize {
        self.minimality_cap.unwrap_or_else(|| default_cap(n))
    }

    pub fn check(&self) -> Result<()> {
        if self.max_pairs == 0 || self.max_degree == 0 || self.minimality_cap == Some(0) {
            return Err(Error::InvalidInput("budgets must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationSection {
    pub name: String,
    pub valid: bool,
    pub n: usize,
    pub d: usize,
    pub real_dim: Option<usize>,
    pub rejection: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegreSection {
    pub point: Point,
    pub on_manifold: bool,
    pub ideal: Vec<String>,
    /// `w ∈ Q_w`; holds whenever `w ∈ M`.
    pub contains_point: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: RunConfig,
    pub inputs: Vec<ManifoldSpec>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub validation: Vec<ValidationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genericity: Option<GenericityReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub segre: Vec<SegreSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition1: Option<Condition1Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition2: Option<Condition2Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremReport>,
    pub caveats: Vec<String>,
}

impl Report {
    fn new(command: &str, config: &RunConfig, inputs: Vec<ManifoldSpec>) -> Self {
        Self {
            tool: "crcheck".into(),
            version: VERSION.into(),
            command: command.into(),
            config: config.clone(),
            inputs,
            validation: Vec::new(),
            genericity: None,
            segre: Vec::new(),
            condition1: None,
            condition2: None,
            theorem: None,
            caveats: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn located(name: &str, (loc, err): (Location, Error)) -> Error {
    match err {
        Error::BudgetExceeded(_) => err,
        _ => Error::InvalidInput(format!("{name}: {loc}: {err}")),
    }
}

fn parse(spec: &ManifoldSpec) -> Result<ParsedSpec> {
    spec.parse().map_err(|e| located(&spec.name, e))
}

/// Parses, validates and checks all points of a document.
pub fn load(spec: &ManifoldSpec, config: &RunConfig) -> Result<(ParsedSpec, RealAlgebraicSubmanifold)> {
    config.check()?;
    let parsed = parse(spec)?;
    let m = parsed
        .validate(config.order, config.budget())
        .map_err(|e| match e {
            Error::BudgetExceeded(_) => e,
            _ => Error::InvalidInput(format!("{}: {e}", spec.name)),
        })?;
    parsed.check_points(&m).map_err(|e| located(&spec.name, e))?;
    Ok((parsed, m))
}

/// A rejected manifold is reported, not raised.
pub fn cmd_validate(spec: &ManifoldSpec, config: &RunConfig) -> Result<Report> {
    config.check()?;
    let parsed = parse(spec)?;
    let mut report = Report::new("validate", config, vec![parsed.canonical()]);
    let d = parsed.polynomials.len();
    let section = match parsed.validate(config.order, config.budget()) {
        Ok(m) => {
            parsed.check_points(&m).map_err(|e| located(&spec.name, e))?;
            ValidationSection {
                name: parsed.name.clone(),
                valid: true,
                n: parsed.n,
                d,
                real_dim: Some(m.real_dim()),
                rejection: None,
            }
        }
        Err(Error::Rejected(r)) => ValidationSection {
            name: parsed.name.clone(),
            valid: false,
            n: parsed.n,
            d,
            real_dim: None,
            rejection: Some(r.to_string()),
        },
        Err(e) => return Err(e),
    };
    report.validation.push(section);
    Ok(report)
}

pub fn cmd_genericity(spec: &ManifoldSpec, config: &RunConfig) -> Result<Report> {
    let (parsed, m) = load(spec, config)?;
    let mut report = Report::new("genericity", config, vec![parsed.canonical()]);
    report.genericity = Some(genericity(&m)?);
    Ok(report)
}

fn points_or_base(parsed: &ParsedSpec, points: &[Point]) -> Result<Vec<Point>> {
    let pts = if points.is_empty() {
        parsed.base_points.clone()
    } else {
        points.to_vec()
    };
    if pts.is_empty() {
        return Err(Error::EmptySampleSet);
    }
    for p in &pts {
        if p.len() != parsed.n {
            return Err(Error::InvalidInput(format!(
                "point {} has {} coordinates, expected {}",
                format_point(p),
                p.len(),
                parsed.n
            )));
        }
    }
    Ok(pts)
}

/// `Q_w` at the given points, or at the base points when none are given.
pub fn cmd_segre(spec: &ManifoldSpec, points: &[Point], config: &RunConfig) -> Result<Report> {
    let (parsed, m) = load(spec, config)?;
    let mut report = Report::new("segre", config, vec![parsed.canonical()]);
    for w in points_or_base(&parsed, points)? {
        let q = m.segre_variety(&w)?;
        report.segre.push(SegreSection {
            on_manifold: m.contains(&w)?,
            ideal: q.ideal.generator_strings(),
            contains_point: q.contains(&w)?,
            point: w,
        });
    }
    Ok(report)
}

pub fn cmd_minimal(spec: &ManifoldSpec, points: &[Point], config: &RunConfig) -> Result<Report> {
    let (parsed, m) = load(spec, config)?;
    let pts = points_or_base(&parsed, points)?;
    let mut report = Report::new("minimal", config, vec![parsed.canonical()]);
    let c1 = condition1(&m, &pts, config.cap(m.n()))?;
    report.caveats = c1.caveats.clone();
    report.condition1 = Some(c1);
    Ok(report)
}

fn disc_search(parsed: &ParsedSpec, m: &RealAlgebraicSubmanifold, config: &RunConfig) -> DiscSearch {
    let tuples = if parsed.sample_tuples.is_empty() {
        sample_tuples(&parsed.base_points, disc_k(m), config.samples, config.seed)
    } else {
        parsed.sample_tuples.clone()
    };
    DiscSearch {
        tuples,
        generic: config.mode == DiscMode::Generic,
        sample_budget: config.containment_points,
    }
}

pub fn cmd_discs(spec: &ManifoldSpec, config: &RunConfig) -> Result<Report> {
    let (parsed, m) = load(spec, config)?;
    let mut report = Report::new("discs", config, vec![parsed.canonical()]);
    let c2 = condition2(&m, &disc_search(&parsed, &m, config))?;
    report.caveats = c2.discs.caveats.clone();
    report.caveats.push(c2.discs.semantics.clone());
    report.condition2 = Some(c2);
    Ok(report)
}

/// Condition 1 for `source` at its base points, condition 2 for `target`.
pub fn cmd_theorem(source: &ManifoldSpec, target: &ManifoldSpec, config: &RunConfig) -> Result<Report> {
    let (ps, m) = load(source, config)?;
    let (pt, mp) = load(target, config)?;
    let mut report = Report::new("theorem", config, vec![ps.canonical(), pt.canonical()]);
    let t = theorem(&m, &ps.base_points, &mp, &disc_search(&pt, &mp, config), config.cap(m.n()))?;
    report.caveats = t.caveats.clone();
    report.theorem = Some(t);
    Ok(report)
}

fn snake(v: &impl Serialize) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn write_condition1(out: &mut String, c1: &Condition1Report) {
    let g = &c1.genericity;
    let _ = writeln!(
        out,
        "genericity: {}{}",
        if g.generic { "generic" } else { "not generic" },
        g.witness_minor
            .as_ref()
            .map(|w| format!(" (minor {w})"))
            .unwrap_or_default()
    );
    for r in &c1.points {
        let _ = writeln!(
            out,
            "  at {}: d = {:?} => {}",
            format_point(&r.base_point),
            r.dimensions,
            snake(&r.verdict)
        );
    }
    let _ = writeln!(out, "condition 1: {}", snake(&c1.status));
}

fn write_condition2(out: &mut String, c2: &Condition2Report) {
    let d = &c2.discs;
    let _ = writeln!(out, "discs in {} (k = {}):", d.manifold, d.k);
    for (i, t) in d.tuples.iter().enumerate() {
        let pts: Vec<String> = t.tuple.iter().map(|p| format_point(p)).collect();
        let _ = write!(out, "  tuple {} {}: dim C_a = {}", i + 1, pts.join(" "), t.dimension);
        if let Some(c) = &t.containment {
            let _ = write!(out, ", containment {}", snake(&c.status));
        }
        let _ = writeln!(out);
    }
    if let Some(g) = &d.generic {
        let _ = writeln!(out, "  generic a: dim C_a = {}", g.dimension);
    }
    let _ = writeln!(out, "verdict: {}", snake(&d.verdict));
    if let Some(w) = &d.witness {
        let _ = writeln!(out, "witness ({}): C_a = <{}>", w.source, w.c_ideal.join(", "));
    }
    let _ = writeln!(out, "condition 2: {}", snake(&c2.status));
}

/// Plain-text rendering of a report.
pub fn summary(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "crcheck {} {}", report.version, report.command);
    for v in &report.validation {
        match &v.rejection {
            None => {
                let _ = writeln!(
                    out,
                    "{}: valid (n = {}, d = {}, real dimension {})",
                    v.name,
                    v.n,
                    v.d,
                    v.real_dim.unwrap_or_default()
                );
            }
            Some(r) => {
                let _ = writeln!(out, "{}: rejected: {r}", v.name);
            }
        }
    }
    if let Some(g) = &report.genericity {
        let _ = writeln!(
            out,
            "{}: {}",
            if g.generic { "generic" } else { "not generic" },
            g.reason
        );
        if let Some(w) = &g.witness_minor {
            let _ = writeln!(out, "witness minor in {}: {w}", g.witness_columns.join(", "));
        }
    }
    for s in &report.segre {
        let _ = writeln!(out, "Q_w at {}: <{}>", format_point(&s.point), s.ideal.join(", "));
    }
    if let Some(c1) = &report.condition1 {
        write_condition1(&mut out, c1);
    }
    if let Some(c2) = &report.condition2 {
        write_condition2(&mut out, c2);
    }
    if let Some(t) = &report.theorem {
        let _ = writeln!(out, "source {}:", t.source);
        write_condition1(&mut out, &t.condition1);
        let _ = writeln!(out, "target {}:", t.target);
        write_condition2(&mut out, &t.condition2);
        let _ = writeln!(out, "theorem: {}", snake(&t.verdict));
        for r in &t.reasons {
            let _ = writeln!(out, "  {r}");
        }
    }
    if !report.caveats.is_empty() {
        let _ = writeln!(out, "caveats:");
        for c in &report.caveats {
            let _ = writeln!(out, "  - {c}");
        }
    }
    out
}
