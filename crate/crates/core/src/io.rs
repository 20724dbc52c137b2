//! JSON documents for curves, patches, check reports and sampled polylines.
//!
//! ```text
//! {"version": 1, "entity": "curve"|"patch"|"report"|"polyline", "payload": {...}}
//! curve     {"degree": n, "points": [[x, y, z], ...]}
//! rational  {"num": [ascending coefficients], "den": [...]}
//! patch     {"c": curve, "d": curve,
//!            "certificate": {"lambda_fn": rational, "m_fn": rational} | null}
//! polyline  {"params": [u, ...], "points": [[x, y, z], ...]}
//! ```

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::bezier::BezierCurve;
use crate::developable::{Certificate, DevelopablePatch};
use crate::geom::Vec3;
use crate::poly::{Polynomial, RationalFunction};
use crate::verify::CheckReport;

pub const VERSION: u64 = 1;

#[derive(Debug, Error, PartialEq)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Syntax(String),
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
}

fn schema(path: impl Into<String>, message: impl ToString) -> DocumentError {
    DocumentError::Schema {
        path: path.into(),
        message: message.to_string(),
    }
}

/// A sampled curve, used for edges of regression that are not polynomial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Polyline {
    pub params: Vec<f64>,
    pub points: Vec<[f64; 3]>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Document {
    Curve(BezierCurve),
    Patch(DevelopablePatch),
    Report(CheckReport),
    Polyline(Polyline),
}

impl Document {
    pub fn entity(&self) -> &'static str {
        match self {
            Document::Curve(_) => "curve",
            Document::Patch(_) => "patch",
            Document::Report(_) => "report",
            Document::Polyline(_) => "polyline",
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveDoc {
    degree: usize,
    points: Vec<[f64; 3]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RationalDoc {
    num: Vec<f64>,
    den: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    lambda_fn: RationalDoc,
    m_fn: RationalDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PatchDoc {
    c: CurveDoc,
    d: CurveDoc,
    #[serde(default)]
    certificate: Option<CertificateDoc>,
}

impl CurveDoc {
    fn from_curve(c: &BezierCurve) -> Self {
        CurveDoc {
            degree: c.degree(),
            points: c.points().iter().map(|p| p.to_array()).collect(),
        }
    }

    fn into_curve(self, path: &str) -> Result<BezierCurve, DocumentError> {
        if self.points.len() != self.degree + 1 {
            return Err(schema(
                format!("{path}.points"),
                format!(
                    "degree {} needs {} points, found {}",
                    self.degree,
                    self.degree + 1,
                    self.points.len()
                ),
            ));
        }
        let pts = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                Vec3::try_new(p[0], p[1], p[2])
                    .map_err(|e| schema(format!("{path}.points[{i}]"), e))
            })
            .collect::<Result<Vec<_>, _>>()?;
        BezierCurve::new(pts).map_err(|e| schema(path, e))
    }
}

impl RationalDoc {
    fn from_rational(r: &RationalFunction) -> Self {
        RationalDoc {
            num: r.num().coeffs().to_vec(),
            den: r.den().coeffs().to_vec(),
        }
    }

    fn into_rational(self, path: &str) -> Result<RationalFunction, DocumentError> {
        let num = Polynomial::try_new(self.num).map_err(|e| schema(format!("{path}.num"), e))?;
        let den = Polynomial::try_new(self.den).map_err(|e| schema(format!("{path}.den"), e))?;
        RationalFunction::new(num, den).map_err(|e| schema(format!("{path}.den"), e))
    }
}

impl PatchDoc {
    fn from_patch(p: &DevelopablePatch) -> Self {
        PatchDoc {
            c: CurveDoc::from_curve(p.c()),
            d: CurveDoc::from_curve(p.d()),
            certificate: p.certificate().map(|k| CertificateDoc {
                lambda_fn: RationalDoc::from_rational(&k.lambda_fn),
                m_fn: RationalDoc::from_rational(&k.m_fn),
            }),
        }
    }

    fn into_patch(self, path: &str) -> Result<DevelopablePatch, DocumentError> {
        let c = self.c.into_curve(&format!("{path}.c"))?;
        let d = self.d.into_curve(&format!("{path}.d"))?;
        let cert = match self.certificate {
            Some(k) => Some(Certificate::new(
                k.lambda_fn
                    .into_rational(&format!("{path}.certificate.lambda_fn"))?,
                k.m_fn.into_rational(&format!("{path}.certificate.m_fn"))?,
            )),
            None => None,
        };
        Ok(DevelopablePatch::new(c, d)
            .map_err(|e| schema(path, e))?
            .with_certificate(cert))
    }
}

fn typed<T: DeserializeOwned>(value: Value, path: &str) -> Result<T, DocumentError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let inner = e.path().to_string();
        let full = if inner == "." || inner.is_empty() {
            path.to_string()
        } else {
            format!("{path}.{inner}")
        };
        schema(full, e.into_inner())
    })
}

pub fn parse_document(text: &str) -> Result<Document, DocumentError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| DocumentError::Syntax(e.to_string()))?;
    let Value::Object(mut obj) = value else {
        return Err(schema("$", "expected an object"));
    };
    match obj.remove("version") {
        Some(Value::Number(n)) if n.as_u64() == Some(VERSION) => {}
        Some(other) => return Err(schema("version", format!("unsupported version {other}"))),
        None => return Err(schema("version", "missing field `version`")),
    }
    let entity = match obj.remove("entity") {
        Some(Value::String(s)) => s,
        Some(_) => return Err(schema("entity", "expected a string")),
        None => return Err(schema("entity", "missing field `entity`")),
    };
    let payload = obj
        .remove("payload")
        .ok_or_else(|| schema("payload", "missing field `payload`"))?;
    if let Some(extra) = obj.keys().next() {
        return Err(schema(extra.clone(), "unknown field"));
    }
    match entity.as_str() {
        "curve" => Ok(Document::Curve(
            typed::<CurveDoc>(payload, "payload")?.into_curve("payload")?,
        )),
        "patch" => Ok(Document::Patch(
            typed::<PatchDoc>(payload, "payload")?.into_patch("payload")?,
        )),
        "report" => Ok(Document::Report(typed(payload, "payload")?)),
        "polyline" => {
            let p: Polyline = typed(payload, "payload")?;
            if p.params.len() != p.points.len() {
                return Err(schema(
                    "payload.points",
                    "params and points differ in length",
                ));
            }
            Ok(Document::Polyline(p))
        }
        other => Err(schema("entity", format!("unknown entity `{other}`"))),
    }
}

pub fn parse_curve(text: &str) -> Result<BezierCurve, DocumentError> {
    match parse_document(text)? {
        Document::Curve(c) => Ok(c),
        other => Err(schema(
            "entity",
            format!("expected curve, found {}", other.entity()),
        )),
    }
}

pub fn parse_patch(text: &str) -> Result<DevelopablePatch, DocumentError> {
    match parse_document(text)? {
        Document::Patch(p) => Ok(p),
        other => Err(schema(
            "entity",
            format!("expected patch, found {}", other.entity()),
        )),
    }
}

/// Pretty-printed JSON. Floats use the shortest representation that reads
/// back to the same value.
pub fn to_json(doc: &Document) -> String {
    #[derive(Serialize)]
    struct Envelope<'a, T: Serialize> {
        version: u64,
        entity: &'a str,
        payload: T,
    }
    fn render<T: Serialize>(entity: &str, payload: T) -> String {
        let env = Envelope {
            version: VERSION,
            entity,
            payload,
        };
        let mut s = serde_json::to_string_pretty(&env).expect("document types serialize");
        s.push('\n');
        s
    }
    match doc {
        Document::Curve(c) => render(doc.entity(), CurveDoc::from_curve(c)),
        Document::Patch(p) => render(doc.entity(), PatchDoc::from_patch(p)),
        Document::Report(r) => render(doc.entity(), r),
        Document::Polyline(p) => render(doc.entity(), p),
    }
}
