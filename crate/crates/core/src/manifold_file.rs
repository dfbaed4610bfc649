//! TOML manifold documents.
//!
//! ```toml
//! name = "sphere"
//! n = 2
//! polynomials = ["z1*zb1 + z2*zb2 - 1"]
//! base_points = [["1", "0"], ["3/5", "4/5"]]
//! sample_tuples = [[["1", "0"]]]
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::Budget;
use crate::manifold::{validate_with, Point, RealAlgebraicSubmanifold};
use crate::order::BaseOrder;
use crate::parse::{parse_polynomial, parse_scalar, ParseError};
use crate::poly::Polynomial;
use crate::ring::RingContext;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldSpec {
    pub name: String,
    pub n: usize,
    pub polynomials: Vec<String>,
    #[serde(default)]
    pub base_points: Vec<Vec<String>>,
    #[serde(default)]
    pub sample_tuples: Vec<Vec<Vec<String>>>,
}

/// Which entry of a document failed to parse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    Polynomial(usize),
    BasePoint(usize),
    SampleTuple(usize),
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Location::Polynomial(i) => write!(f, "polynomial {}", i + 1),
            Location::BasePoint(i) => write!(f, "base point {}", i + 1),
            Location::SampleTuple(i) => write!(f, "sample tuple {}", i + 1),
        }
    }
}

/// A document whose entries all parsed.
#[derive(Clone, Debug)]
pub struct ParsedSpec {
    pub name: String,
    pub n: usize,
    pub polynomials: Vec<Polynomial>,
    pub base_points: Vec<Point>,
    pub sample_tuples: Vec<Vec<Point>>,
}

impl ManifoldSpec {
    pub fn from_toml(src: &str) -> Result<Self> {
        toml::from_str(src).map_err(|e| Error::InvalidInput(format!("manifold document: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let src = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&src)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("plain data serializes")
    }

    /// Parses every entry; the error names the entry and the byte offset.
    pub fn parse(&self) -> std::result::Result<ParsedSpec, (Location, Error)> {
        if self.n == 0 {
            return Err((Location::Polynomial(0), Error::InvalidInput("n must be positive".into())));
        }
        let ring = RingContext::manifold(self.n);
        let polynomials = self
            .polynomials
            .iter()
            .enumerate()
            .map(|(i, s)| parse_polynomial(&ring, s).map_err(|e| (Location::Polynomial(i), e.into())))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let point = |coords: &[String]| -> std::result::Result<Point, Error> {
            if coords.len() != self.n {
                return Err(Error::InvalidInput(format!(
                    "{} coordinates, expected {}",
                    coords.len(),
                    self.n
                )));
            }
            coords
                .iter()
                .map(|c| parse_scalar(c).map_err(|e: ParseError| e.into()))
                .collect()
        };
        let base_points = self
            .base_points
            .iter()
            .enumerate()
            .map(|(i, p)| point(p).map_err(|e| (Location::BasePoint(i), e)))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        let sample_tuples = self
            .sample_tuples
            .iter()
            .enumerate()
            .map(|(i, t)| {
                t.iter()
                    .map(|p| point(p))
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| (Location::SampleTuple(i), e))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(ParsedSpec {
            name: self.name.clone(),
            n: self.n,
            polynomials,
            base_points,
            sample_tuples,
        })
    }
}

impl ParsedSpec {
    pub fn validate(&self, inner: BaseOrder, budget: Budget) -> Result<RealAlgebraicSubmanifold> {
        validate_with(&self.name, self.n, self.polynomials.clone(), inner, budget)
    }

    /// Every base point and every tuple entry must lie on the manifold.
    pub fn check_points(&self, m: &RealAlgebraicSubmanifold) -> std::result::Result<(), (Location, Error)> {
        for (i, p) in self.base_points.iter().enumerate() {
            m.require_point(p).map_err(|e| (Location::BasePoint(i), e))?;
        }
        for (i, t) in self.sample_tuples.iter().enumerate() {
            for p in t {
                m.require_point(p).map_err(|e| (Location::SampleTuple(i), e))?;
            }
        }
        Ok(())
    }

    /// The document re-serialized from parsed values.
    pub fn canonical(&self) -> ManifoldSpec {
        let pt = |p: &Point| p.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        ManifoldSpec {
            name: self.name.clone(),
            n: self.n,
            polynomials: self.polynomials.iter().map(|p| p.to_string()).collect(),
            base_points: self.base_points.iter().map(pt).collect(),
            sample_tuples: self
                .sample_tuples
                .iter()
                .map(|t| t.iter().map(pt).collect())
                .collect(),
        }
    }
}
