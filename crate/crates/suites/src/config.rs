//! Group and deformation-parameter configuration: built-in specs such as
//! `A1@2`, custom generator files and κ specialisations.

use std::path::Path;
use std::sync::Arc;

use pinosp::geometry::{GeometryError, RatMatrix};
use pinosp::groups::{GroupError, DEFAULT_ORDER_CAP};
use pinosp::{
    Algebra, AlgebraError, BaseNumber, GroupSpec, KappaMode, QuadraticSpace, Rational,
    ReflectionGroup,
};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("bad κ value `{0}` (expected p/q, a+bi or `symbolic`)")]
    Kappa(String),
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("malformed group file: {0}")]
    Json(String),
    #[error("bad rational entry `{0}`")]
    Entry(String),
}

/// One algebra together with the labels used in reports.
#[derive(Clone, Debug)]
pub struct Config {
    pub group: String,
    pub ctx: Arc<Algebra>,
}

impl Config {
    /// A built-in spec (`A1@2`) or `custom:<file>`, with κ given as
    /// `symbolic` or a comma-separated list of values.
    pub fn parse(group: &str, kappa: &str) -> Result<Self, ConfigError> {
        let grp = load_group(group)?;
        let mode = parse_kappa(kappa)?;
        Ok(Config {
            group: group.to_string(),
            ctx: Algebra::new(grp, mode)?,
        })
    }

    pub fn symbolic(group: &str) -> Result<Self, ConfigError> {
        Self::parse(group, "symbolic")
    }

    /// The same group with κ specialised to `values`.
    pub fn with_kappa(&self, values: Vec<BaseNumber>) -> Result<Self, ConfigError> {
        let ctx = Algebra::new(self.ctx.group().clone(), KappaMode::Numeric(values))?;
        Ok(Config {
            group: self.group.clone(),
            ctx,
        })
    }

    pub fn kappa_label(&self) -> String {
        self.ctx.kappa_mode().to_string()
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim()
    }
}

pub fn load_group(spec: &str) -> Result<ReflectionGroup, ConfigError> {
    match spec.strip_prefix("custom:") {
        Some(path) => load_custom(Path::new(path)),
        None => Ok(ReflectionGroup::build(spec.parse::<GroupSpec>()?)?),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn rational(&self) -> Result<Rational, ConfigError> {
        match self {
            Entry::Int(n) => Ok(Rational::from(*n)),
            Entry::Text(s) => parse_rational(s).ok_or_else(|| ConfigError::Entry(s.clone())),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CustomGroup {
    #[serde(default)]
    name: Option<String>,
    generators: Vec<Vec<Vec<Entry>>>,
    #[serde(default)]
    gram: Option<Vec<Vec<Entry>>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

fn matrix(rows: &[Vec<Entry>]) -> Result<RatMatrix, ConfigError> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(Entry::rational).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    RatMatrix::from_rows(&rows)
        .ok_or_else(|| ConfigError::Json("matrix rows must form a square".into()))
}

/// A JSON object `{"generators": [...], "gram": [...]?, "labels": [...]?}`
/// with rational entries given as integers or `"p/q"` strings.
pub fn load_custom(path: &Path) -> Result<ReflectionGroup, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    parse_custom(&text, &format!("custom:{}", path.display()))
}

pub fn parse_custom(text: &str, default_name: &str) -> Result<ReflectionGroup, ConfigError> {
    let spec: CustomGroup =
        serde_json::from_str(text).map_err(|e| ConfigError::Json(e.to_string()))?;
    let gens = spec
        .generators
        .iter()
        .map(|g| matrix(g))
        .collect::<Result<Vec<_>, _>>()?;
    let dim = gens
        .first()
        .map(RatMatrix::size)
        .ok_or_else(|| ConfigError::Json("no generators".into()))?;
    let space = match &spec.gram {
        Some(g) => QuadraticSpace::with_gram(matrix(g)?)?,
        None => QuadraticSpace::euclidean(dim)?,
    };
    let name = spec.name.unwrap_or_else(|| default_name.to_string());
    Ok(ReflectionGroup::from_generators(
        name,
        space,
        &gens,
        spec.labels.as_deref(),
        DEFAULT_ORDER_CAP,
    )?)
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let (n, d) = (n.trim().parse::<i64>().ok()?, d.trim().parse::<i64>().ok()?);
            (d != 0).then(|| Rational::new(n, d))
        }
        None => s.parse::<i64>().ok().map(Rational::from),
    }
}

/// `p/q`, `bi`, `a+bi` or `a-bi` with rational `a`, `b`.
pub fn parse_base(s: &str) -> Option<BaseNumber> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = s.strip_suffix('i') else {
        return parse_rational(&s).map(BaseNumber::from_rational);
    };
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .last()
        .map(|(k, _)| k);
    let (re, im) = match split {
        Some(k) => (parse_rational(&body[..k])?, imag(&body[k..])?),
        None => (Rational::from(0), imag(body)?),
    };
    let zero = Rational::from(0);
    Some(BaseNumber::new(re, im, zero, zero))
}

fn imag(s: &str) -> Option<Rational> {
    match s {
        "" | "+" => Some(Rational::from(1)),
        "-" => Some(Rational::from(-1)),
        _ => parse_rational(s.strip_prefix('+').unwrap_or(s)),
    }
}

pub fn parse_kappa(s: &str) -> Result<KappaMode, ConfigError> {
    if s.trim().eq_ignore_ascii_case("symbolic") {
        return Ok(KappaMode::Symbolic);
    }
    s.split(',')
        .map(|v| parse_base(v).ok_or_else(|| ConfigError::Kappa(v.trim().to_string())))
        .collect::<Result<Vec<_>, _>>()
        .map(KappaMode::Numeric)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_values() {
        assert_eq!(
            parse_base("1/2"),
            Some(BaseNumber::from_rational(Rational::new(1, 2)))
        );
        let z = parse_base("1-2i").unwrap();
        assert_eq!(z.components()[0], Rational::from(1));
        assert_eq!(z.components()[1], Rational::from(-2));
        assert_eq!(parse_base("i").unwrap(), BaseNumber::i());
        assert_eq!(
            parse_base("-1/3i").unwrap().components()[1],
            Rational::new(-1, 3)
        );
        assert!(parse_base("x").is_none());
        assert!(matches!(parse_kappa("symbolic"), Ok(KappaMode::Symbolic)));
        assert!(parse_kappa("1,zz").is_err());
    }

    #[test]
    fn builtin_and_custom() {
        let c = Config::parse("B2@2", "1,-1/2").unwrap();
        assert_eq!(c.dim(), 2);
        let g = parse_custom(
            r#"{"generators": [[[-1, 0], [0, 1]], [[0, 1], [1, 0]]]}"#,
            "t",
        )
        .unwrap();
        assert_eq!(g.order(), 8);
        assert!(parse_custom(r#"{"generators": [[[2, 0], [0, 1]]]}"#, "t").is_err());
        assert!(Config::symbolic("Q1@2").is_err());
    }
}
