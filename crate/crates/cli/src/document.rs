//! JSON interchange: algebra documents, exact rationals as strings, and
//! row-major matrices.

use std::str::FromStr;

use bl4kit::{Bl4Presentation, Constants4, Label, Mat4, Matrix, Presentation, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid rational {0:?}: expected an optional sign, digits and an optional \"/\" with a positive integer")]
    Rational(String),
    #[error("invalid document: {0}")]
    Document(String),
    #[error(transparent)]
    Algebra(#[from] bl4kit::Error),
}

/// Parse `[+-]digits[/digits]` with a positive denominator.
pub fn parse_rational(s: &str) -> Result<Rational, InputError> {
    let bad = || InputError::Rational(s.to_owned());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix(['-', '+']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let n = num_bigint::BigInt::from_str(num.trim_start_matches('+')).map_err(|_| bad())?;
    let d = match den {
        None => num_bigint::BigInt::from(1),
        Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => {
            let d = num_bigint::BigInt::from_str(d).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            d
        }
        Some(_) => return Err(bad()),
    };
    Ok(Rational::new(n, d))
}

pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

/// A rational serialized as `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        // integers are accepted as a convenience
        match Value::deserialize(d)? {
            Value::String(s) => parse_rational(&s).map(Q).map_err(serde::de::Error::custom),
            Value::Number(n) if n.is_i64() => Ok(Q(Rational::from_integer(n.as_i64().unwrap().into()))),
            other => Err(serde::de::Error::custom(format!("expected a rational string, got {other}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub v: Q,
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum AlgebraDocument {
    Constants {
        dim: usize,
        entries: Vec<Entry>,
    },
    Presentation {
        x11: Q,
        xi3: Q,
        #[serde(rename = "X")]
        x: [[Q; 2]; 2],
    },
}

/// What a document describes, ready for the library.
#[allow(clippy::large_enum_variant)]
pub enum Algebra {
    Constants(Constants4),
    Presentation(Presentation),
}

impl Algebra {
    pub fn constants(&self) -> Constants4 {
        match self {
            Self::Constants(sc) => sc.clone(),
            Self::Presentation(p) => p.to_structure_constants(),
        }
    }
}

impl AlgebraDocument {
    pub fn to_algebra(&self) -> Result<Algebra, InputError> {
        match self {
            Self::Constants { dim, entries } => {
                if *dim != 4 {
                    return Err(InputError::Document(format!("dim must be 4, got {dim}")));
                }
                if let Some(e) = entries.iter().find(|e| e.i >= e.j || e.j >= 4 || e.k >= 4) {
                    return Err(InputError::Document(format!(
                        "entry ({}, {}, {}) needs i < j < 4 and k < 4",
                        e.i, e.j, e.k
                    )));
                }
                let sc = Constants4::from_products(entries.iter().map(|e| (e.i, e.j, e.k, e.v.0.clone())))?;
                Ok(Algebra::Constants(sc))
            }
            Self::Presentation { x11, xi3, x } => {
                let m =
                    Matrix::from_rows([[x[0][0].0.clone(), x[0][1].0.clone()], [x[1][0].0.clone(), x[1][1].0.clone()]]);
                Ok(Algebra::Presentation(Bl4Presentation::new(x11.0.clone(), xi3.0.clone(), m)?))
            }
        }
    }

    pub fn from_presentation(p: &Presentation) -> Self {
        let x = p.x();
        let e = |r, c| Q(x.get(r, c).clone());
        Self::Presentation {
            x11: Q(p.x11().clone()),
            xi3: Q(p.xi3().clone()),
            x: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    #[cfg(test)]
    pub fn from_constants(sc: &Constants4) -> Self {
        let entries =
            sc.nonzero_entries().iter().map(|(i, j, k, v)| Entry { i: *i, j: *j, k: *k, v: Q(v.clone()) }).collect();
        Self::Constants { dim: 4, entries }
    }
}

/// `{"variant": "D", "lambda": "3/2", "mu": "1/2"}`, parameters only where
/// the variant has them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelDoc {
    pub variant: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<Q>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mu: Option<Q>,
}

impl From<&Label> for LabelDoc {
    fn from(l: &Label) -> Self {
        Self { variant: l.variant().to_owned(), lambda: l.lambda().cloned().map(Q), mu: l.mu().cloned().map(Q) }
    }
}

pub type MatrixDoc = Vec<Vec<Q>>;

pub fn matrix_doc<const R: usize, const C: usize>(m: &Matrix<Rational, R, C>) -> MatrixDoc {
    m.rows().iter().map(|row| row.iter().cloned().map(Q).collect()).collect()
}

pub fn parse_matrix(value: &Value) -> Result<Mat4, InputError> {
    let rows: Vec<Vec<Q>> = serde_json::from_value(value.clone())?;
    if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
        return Err(InputError::Document("matrix must be 4x4".into()));
    }
    Ok(Matrix::from_fn(|r, c| rows[r][c].0.clone()))
}

/// Inline JSON when the argument starts with `{` or `[`, `-` for stdin,
/// otherwise a file path.
pub fn read_json(arg: &str) -> Result<Value, InputError> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_owned()
    } else if arg == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|source| InputError::Io { path: "stdin".into(), source })?
    } else {
        std::fs::read_to_string(arg).map_err(|source| InputError::Io { path: arg.into(), source })?
    };
    Ok(serde_json::from_str(&text)?)
}

pub fn read_document(arg: &str) -> Result<AlgebraDocument, InputError> {
    Ok(serde_json::from_value(read_json(arg)?)?)
}
