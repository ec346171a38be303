use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::approx::{ConeSeries, Term};
use crate::extremal::{Piece, ReinhardtBody};
use crate::polytope::RationalPolytope;
use crate::rational::{self, Rat};

use super::CliError;

/// A rational given as `"p/q"`, a decimal string, or a JSON number.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RatLit {
    Int(i64),
    Float(f64),
    Text(String),
}

impl RatLit {
    pub fn to_rat(&self) -> crate::Result<Rat> {
        match self {
            RatLit::Int(v) => Ok(rational::int(*v)),
            RatLit::Float(v) => rational::from_f64(*v),
            RatLit::Text(s) => rational::parse_rational(s),
        }
    }
}

pub fn rats(v: &[RatLit]) -> crate::Result<Vec<Rat>> {
    v.iter().map(RatLit::to_rat).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDoc {
    pub dim: usize,
    pub vertices: Vec<Vec<RatLit>>,
}

impl PolytopeDoc {
    pub fn build(&self) -> crate::Result<RationalPolytope> {
        let points = self
            .vertices
            .iter()
            .map(|v| rats(v))
            .collect::<crate::Result<Vec<_>>>()?;
        RationalPolytope::new(self.dim, points)
    }

    pub fn from_polytope(p: &RationalPolytope) -> Self {
        Self {
            dim: p.dim(),
            vertices: p
                .vertices()
                .iter()
                .map(|v| v.iter().map(|c| RatLit::Text(rational::format_rational(c))).collect())
                .collect(),
        }
    }
}

/// `J` is 1-based here, as everywhere in documents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceDoc {
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodyDoc {
    pub dim: usize,
    pub pieces: Vec<PieceDoc>,
}

impl BodyDoc {
    pub fn build(&self) -> Result<ReinhardtBody, CliError> {
        let pieces = self
            .pieces
            .iter()
            .enumerate()
            .map(|(i, p)| {
                Ok(Piece {
                    support: zero_based(&p.j, &format!("body.pieces[{i}].J"))?,
                    points: p.a.clone(),
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        Ok(ReinhardtBody::new(self.dim, pieces)?)
    }
}

pub fn zero_based(j: &[usize], path: &str) -> Result<Vec<usize>, CliError> {
    j.iter()
        .map(|&i| {
            i.checked_sub(1)
                .ok_or_else(|| CliError::schema(path, "indices are 1-based"))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexDoc {
    Cartesian { re: f64, im: f64 },
    Polar {
        #[serde(rename = "mod")]
        modulus: f64,
        arg: f64,
    },
}

impl ComplexDoc {
    pub fn value(self) -> Complex64 {
        match self {
            ComplexDoc::Cartesian { re, im } => Complex64::new(re, im),
            ComplexDoc::Polar { modulus, arg } => Complex64::from_polar(modulus, arg),
        }
    }
}

pub fn complex_vec(v: &[ComplexDoc]) -> Vec<Complex64> {
    v.iter().map(|c| c.value()).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub alpha: Vec<i64>,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometricDoc {
    pub alpha0: Vec<i64>,
    pub c_re: f64,
    #[serde(default)]
    pub c_im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum SeriesDoc {
    Terms(Vec<TermDoc>),
    Geometric(GeometricDoc),
}

impl SeriesDoc {
    pub fn build(&self, s: &RationalPolytope) -> crate::Result<ConeSeries> {
        match self {
            SeriesDoc::Terms(ts) => ConeSeries::from_terms(
                s,
                ts.iter()
                    .map(|t| Term {
                        alpha: t.alpha.clone(),
                        coeff: Complex64::new(t.re, t.im),
                    })
                    .collect(),
            ),
            SeriesDoc::Geometric(g) => {
                ConeSeries::geometric(s, g.alpha0.clone(), Complex64::new(g.c_re, g.c_im))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormDoc {
    #[default]
    Euclidean,
    L1,
}

/// One problem document; each subcommand reads the fields it needs and
/// reports the missing ones by name.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Problem {
    pub polytope: Option<PolytopeDoc>,
    pub body: Option<BodyDoc>,
    pub series: Option<SeriesDoc>,
    /// A single query point.
    pub x: Option<Vec<RatLit>>,
    /// Several query points.
    pub points: Option<Vec<Vec<RatLit>>>,
    #[serde(rename = "J")]
    pub j: Option<Vec<usize>>,
    pub m: Option<u64>,
    pub norm: Option<NormDoc>,
    pub z: Option<Vec<ComplexDoc>>,
    pub w: Option<Vec<ComplexDoc>>,
    pub t: Option<Vec<ComplexDoc>>,
    pub alphas: Option<Vec<Vec<i64>>>,
    pub inner: Option<f64>,
    pub outer: Option<f64>,
    /// `xmin:xmax:steps` per coordinate.
    pub grid: Option<Vec<String>>,
    pub depth: Option<f64>,
    pub count: Option<usize>,
    #[serde(rename = "N")]
    pub n: Option<u64>,
    /// Truncation degrees for the error curve.
    pub n_values: Option<Vec<u64>>,
    pub beta: Option<Vec<i64>>,
    pub x0: Option<Vec<f64>>,
    /// Points of `D` for the convergence hull.
    pub domain: Option<Vec<Vec<f64>>>,
}

pub fn parse_problem(text: &str) -> Result<Problem, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CliError::schema(&path, &e.into_inner().to_string())
    })
}

/// `xmin:xmax:steps` with `steps >= 1` points per axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridAxis {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl GridAxis {
    pub fn parse(text: &str) -> Result<Self, String> {
        let parts: Vec<&str> = text.split(':').collect();
        let [lo, hi, steps] = parts.as_slice() else {
            return Err(format!("grid `{text}` is not xmin:xmax:steps"));
        };
        let min: f64 = lo.trim().parse().map_err(|_| format!("bad xmin in `{text}`"))?;
        let max: f64 = hi.trim().parse().map_err(|_| format!("bad xmax in `{text}`"))?;
        let steps: usize = steps.trim().parse().map_err(|_| format!("bad steps in `{text}`"))?;
        if steps == 0 || !(min.is_finite() && max.is_finite()) || min > max {
            return Err(format!("grid `{text}` needs finite xmin <= xmax and steps >= 1"));
        }
        Ok(Self { min, max, steps })
    }

    pub fn values(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.min];
        }
        let h = (self.max - self.min) / (self.steps - 1) as f64;
        (0..self.steps).map(|i| self.min + h * i as f64).collect()
    }
}

impl std::str::FromStr for GridAxis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}
