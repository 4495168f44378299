//! JSON documents for ideals, functionals, node configurations and matrices.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gorenstein::DualFunctional;
use crate::ideals::GradedIdeal;
use crate::nodal::{NodeConfig, Point};
use crate::poly::{parse_rational, Cyclo5, Poly, Rational};

/// `{"n_vars": 4, "generators": ["x0^2", "x1*x2 - x3^2"]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDoc {
    pub n_vars: usize,
    pub generators: Vec<String>,
}

/// A rational written as a JSON integer or as a string such as `"-3/4"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Int(i64),
    Text(String),
}

impl RationalText {
    pub fn value(&self) -> Result<Rational> {
        match self {
            RationalText::Int(v) => Ok(Rational::from_integer((*v).into())),
            RationalText::Text(s) => parse_rational(s),
        }
    }

    pub fn of(r: &Rational) -> Self {
        RationalText::Text(r.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionalEntry {
    pub exponents: Vec<u32>,
    pub value: RationalText,
}

/// Values of a functional on degree-`degree` monomials; unlisted monomials map to 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionalDoc {
    pub n_vars: usize,
    pub degree: usize,
    pub coefficients: Vec<FunctionalEntry>,
}

/// A coordinate: a rational, or `[c0, c1, c2, c3]` meaning `c0 + c1 z + c2 z^2 + c3 z^3`, `z^5 = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoordText {
    Rational(RationalText),
    Cyclotomic(Vec<RationalText>),
}

impl CoordText {
    pub fn value(&self) -> Result<Cyclo5> {
        match self {
            CoordText::Rational(r) => Ok(Cyclo5::rational(r.value()?)),
            CoordText::Cyclotomic(v) => {
                if v.len() != 4 {
                    return Err(Error::Document(format!(
                        "cyclotomic coordinate needs 4 rationals, got {}",
                        v.len()
                    )));
                }
                let c: Vec<Rational> = v.iter().map(RationalText::value).collect::<Result<_>>()?;
                Ok(Cyclo5::new([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]))
            }
        }
    }

    pub fn of(c: &Cyclo5) -> Self {
        match c.as_rational() {
            Some(r) => CoordText::Rational(RationalText::of(r)),
            None => CoordText::Cyclotomic(c.coords().iter().map(RationalText::of).collect()),
        }
    }
}

/// `{"d": 3, "F": "...", "points": [[0, 0, 0, 0, 1]]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeConfigDoc {
    pub d: usize,
    #[serde(rename = "F")]
    pub f: String,
    pub points: Vec<Vec<CoordText>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_vars: Option<usize>,
}

/// `{"rows": [[1, "1/2"], [0, 3]]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub rows: Vec<Vec<RationalText>>,
}

/// Reads a file, or takes the argument itself when it starts with `{`.
pub fn load_text(arg: &str) -> Result<String> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(Path::new(arg)).map_err(|e| Error::Document(format!("{arg}: {e}")))
}

fn parse_doc<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
}

impl IdealDoc {
    pub fn parse(text: &str) -> Result<Self> {
        parse_doc(text)
    }

    pub fn polys(&self) -> Result<Vec<Poly>> {
        self.generators.iter().map(|g| Poly::parse(g, self.n_vars)).collect()
    }

    pub fn ideal(&self) -> Result<GradedIdeal> {
        GradedIdeal::new(self.n_vars, self.polys()?)
    }
}

impl FunctionalDoc {
    pub fn parse(text: &str) -> Result<Self> {
        parse_doc(text)
    }

    pub fn functional(&self) -> Result<DualFunctional> {
        let entries: Vec<(Vec<u32>, Rational)> = self
            .coefficients
            .iter()
            .map(|e| Ok((e.exponents.clone(), e.value.value()?)))
            .collect::<Result<_>>()?;
        DualFunctional::from_entries(self.n_vars, self.degree, &entries)
    }

    pub fn of(lambda: &DualFunctional) -> Self {
        FunctionalDoc {
            n_vars: lambda.n_vars(),
            degree: lambda.degree(),
            coefficients: lambda
                .entries()
                .into_iter()
                .map(|(exponents, v)| FunctionalEntry {
                    exponents,
                    value: RationalText::of(&v),
                })
                .collect(),
        }
    }
}

impl NodeConfigDoc {
    pub fn parse(text: &str) -> Result<Self> {
        parse_doc(text)
    }

    pub fn points(&self) -> Result<Vec<Point>> {
        self.points
            .iter()
            .map(|p| p.iter().map(CoordText::value).collect())
            .collect()
    }

    pub fn config(&self) -> Result<NodeConfig> {
        let f = Poly::parse(&self.f, self.n_vars.unwrap_or(5))?;
        let cfg = NodeConfig::new(f, self.points()?)?;
        if cfg.d != self.d {
            return Err(Error::Document(format!("d = {} but F has degree {}", self.d, cfg.d)));
        }
        Ok(cfg)
    }

    pub fn of(cfg: &NodeConfig) -> Self {
        NodeConfigDoc {
            d: cfg.d,
            f: cfg.f.to_string(),
            points: cfg.points.iter().map(|p| p.iter().map(CoordText::of).collect()).collect(),
            n_vars: (cfg.f.n_vars() != 5).then_some(cfg.f.n_vars()),
        }
    }
}

impl MatrixDoc {
    pub fn parse(text: &str) -> Result<Self> {
        parse_doc(text)
    }

    pub fn rows(&self) -> Result<Vec<Vec<Rational>>> {
        let rows: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(RationalText::value).collect())
            .collect::<Result<_>>()?;
        if let Some(first) = rows.first() {
            if rows.iter().any(|r| r.len() != first.len()) {
                return Err(Error::Document("matrix rows have different lengths".into()));
            }
        }
        Ok(rows)
    }
}
