//! Input documents: a list of arcs, or landmark points with a radius.

use std::fmt;
use std::str::FromStr;

use arcnerve::circle::{balls, format_rational, parse_rational, ParseRationalError};
use arcnerve::{Angle, Arc, ArcCollection, Rational, Variant};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Nerve,
    Clique,
    Cech,
    Vr,
}

impl ComplexKind {
    pub fn variant(self) -> Variant {
        match self {
            ComplexKind::Nerve | ComplexKind::Cech => Variant::Nerve,
            ComplexKind::Clique | ComplexKind::Vr => Variant::Clique,
        }
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComplexKind::Nerve => "nerve",
            ComplexKind::Clique => "clique",
            ComplexKind::Cech => "cech",
            ComplexKind::Vr => "vr",
        })
    }
}

/// `{start, length}` or `{start, end}`; numbers are exact strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcSpec {
    pub start: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub end: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InputDocument {
    Arcs {
        arcs: Vec<ArcSpec>,
    },
    Points {
        points: Vec<String>,
        radius: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        complex: Option<ComplexKind>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("malformed document: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{field}: {source}")]
    Number {
        field: String,
        #[source]
        source: ParseRationalError,
    },
    #[error("{field}: {reason}")]
    Invalid { field: String, reason: String },
    #[error("input has no arcs or points")]
    Empty,
}

fn number(field: String, s: &str) -> Result<Rational, InputError> {
    parse_rational(s.trim()).map_err(|source| InputError::Number { field, source })
}

/// A parsed document, ready to classify.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub collection: ArcCollection,
    /// The kind the document asks for, if any.
    pub complex: Option<ComplexKind>,
}

impl FromStr for InputDocument {
    type Err = InputError;

    fn from_str(s: &str) -> Result<Self, InputError> {
        Ok(serde_json::from_str(s)?)
    }
}

impl InputDocument {
    pub fn from_arcs(arcs: &ArcCollection) -> Self {
        InputDocument::Arcs {
            arcs: arcs
                .iter()
                .map(|a| ArcSpec {
                    start: format_rational(a.start().value()),
                    length: Some(format_rational(a.length())),
                    end: None,
                })
                .collect(),
        }
    }

    /// Builds the arc collection. A points document uses balls of the given
    /// radius for `cech` and of half the radius for `vr`, so that the clique
    /// complex of their nerve is the Vietoris–Rips complex at that scale.
    /// `radius` and `complex` override the document's own values.
    pub fn parse(
        &self,
        complex: Option<ComplexKind>,
        radius: Option<&Rational>,
    ) -> Result<Parsed, InputError> {
        match self {
            InputDocument::Arcs { arcs } => {
                if arcs.is_empty() {
                    return Err(InputError::Empty);
                }
                let mut out = Vec::with_capacity(arcs.len());
                for (i, spec) in arcs.iter().enumerate() {
                    let start = Angle::new(number(format!("arcs[{i}].start"), &spec.start)?);
                    let arc = match (&spec.length, &spec.end) {
                        (Some(len), None) => {
                            let field = format!("arcs[{i}].length");
                            Arc::new(start, number(field.clone(), len)?).map_err(|e| {
                                InputError::Invalid {
                                    field,
                                    reason: e.to_string(),
                                }
                            })?
                        }
                        (None, Some(end)) => Arc::from_endpoints(
                            start,
                            Angle::new(number(format!("arcs[{i}].end"), end)?),
                        ),
                        _ => {
                            return Err(InputError::Invalid {
                                field: format!("arcs[{i}]"),
                                reason: "give exactly one of length or end".into(),
                            })
                        }
                    };
                    out.push(arc);
                }
                Ok(Parsed {
                    collection: ArcCollection::new(out).map_err(|_| InputError::Empty)?,
                    complex,
                })
            }
            InputDocument::Points {
                points,
                radius: doc_radius,
                complex: doc_complex,
            } => {
                if points.is_empty() {
                    return Err(InputError::Empty);
                }
                let kind = complex.or(*doc_complex).unwrap_or(ComplexKind::Cech);
                let r = match radius {
                    Some(r) => r.clone(),
                    None => number("radius".into(), doc_radius)?,
                };
                let pts = points
                    .iter()
                    .enumerate()
                    .map(|(i, p)| number(format!("points[{i}]"), p).map(Angle::new))
                    .collect::<Result<Vec<_>, _>>()?;
                let ball_radius = match kind {
                    ComplexKind::Vr | ComplexKind::Clique => r / BigInt::from(2),
                    ComplexKind::Cech | ComplexKind::Nerve => r,
                };
                let collection = balls(&pts, &ball_radius).map_err(|e| InputError::Invalid {
                    field: "radius".into(),
                    reason: e.to_string(),
                })?;
                Ok(Parsed {
                    collection,
                    complex: Some(kind),
                })
            }
        }
    }
}
