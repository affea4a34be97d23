//! JSON encodings shared by the command line and the examples.
//!
//! A complex number is `{"re": r, "im": i}`. On the exact backend `r` and
//! `i` are strings `"p/q"` in lowest terms (the denominator is always
//! written); on the float backend they are JSON numbers. Points are
//! `{"hom": [..]}`, `{"fin": [..]}` or `{"inf": [..]}`, a matrix is
//! `{"m": [[..], ..]}` and a map is `{"A", "B", "C", "D"}`.
//!
//! Decoding is more lenient than encoding: either backend accepts numbers,
//! `"p/q"` and `"p"` strings, and a bare real in place of `{"re", "im"}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::crossratio::{CrossRatioTuple, CrossRatioValue};
use crate::error::{Error, Result};
use crate::geometry1d::Circline;
use crate::lfm::{LinearFractionalMap, ProjectiveMatrix};
use crate::numeric::{Complex64, GaussianRational, Scalar, SquareMatrix};
use crate::projective::{ExtendedPoint, ProjectivePoint};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// A scalar with a JSON form.
pub trait JsonScalar: Scalar {
    fn encode(&self) -> Value;
    fn decode(v: &Value) -> Result<Self>;
}

fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rational(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => {
            let s = s.trim();
            s.parse::<BigRational>()
                .ok()
                .filter(|_| !s.ends_with("/0"))
                .or_else(|| s.parse::<f64>().ok().and_then(BigRational::from_float))
                .ok_or_else(|| parse_err(format!("not a rational: {s:?}")))
        }
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                return Ok(BigRational::from_integer(BigInt::from(i)));
            }
            n.as_f64()
                .and_then(BigRational::from_float)
                .ok_or_else(|| parse_err(format!("not a finite number: {n}")))
        }
        other => Err(parse_err(format!(
            "expected a number or \"p/q\", got {other}"
        ))),
    }
}

/// `(re, im)` parts of a complex value in any accepted spelling.
fn parts(v: &Value) -> Result<(&Value, Option<&Value>)> {
    match v {
        Value::Object(o) => {
            let re = o
                .get("re")
                .ok_or_else(|| parse_err("complex number without \"re\""))?;
            Ok((re, o.get("im")))
        }
        other => Ok((other, None)),
    }
}

impl JsonScalar for GaussianRational {
    fn encode(&self) -> Value {
        json!({"re": rational_string(&self.re), "im": rational_string(&self.im)})
    }

    fn decode(v: &Value) -> Result<Self> {
        let (re, im) = parts(v)?;
        let im = match im {
            Some(im) => parse_rational(im)?,
            None => BigRational::from_integer(0.into()),
        };
        Ok(GaussianRational::new(parse_rational(re)?, im))
    }
}

fn parse_f64(v: &Value) -> Result<f64> {
    match v {
        Value::Number(n) => n
            .as_f64()
            .ok_or_else(|| parse_err(format!("bad number {n}"))),
        Value::String(s) => s
            .trim()
            .parse::<f64>()
            .ok()
            .or_else(|| parse_rational(v).ok().and_then(|r| r.to_f64()))
            .ok_or_else(|| parse_err(format!("not a number: {s:?}"))),
        other => Err(parse_err(format!("expected a number, got {other}"))),
    }
}

impl JsonScalar for Complex64 {
    fn encode(&self) -> Value {
        json!({"re": self.re, "im": self.im})
    }

    fn decode(v: &Value) -> Result<Self> {
        let (re, im) = parts(v)?;
        let im = im.map(parse_f64).transpose()?.unwrap_or(0.0);
        Ok(Complex64::new(parse_f64(re)?, im))
    }
}

pub fn encode_vec<S: JsonScalar>(v: &[S]) -> Value {
    Value::Array(v.iter().map(S::encode).collect())
}

pub fn decode_vec<S: JsonScalar>(v: &Value) -> Result<Vec<S>> {
    v.as_array()
        .ok_or_else(|| parse_err(format!("expected an array, got {v}")))?
        .iter()
        .map(S::decode)
        .collect()
}

/// A point as read from input: homogeneous or affine.
#[derive(Debug, Clone)]
pub enum InputPoint<S> {
    Hom(ProjectivePoint<S>),
    Ext(ExtendedPoint<S>),
}

impl<S: Scalar> PartialEq for InputPoint<S> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (InputPoint::Hom(a), InputPoint::Hom(b)) => a == b,
            (InputPoint::Ext(a), InputPoint::Ext(b)) => a == b,
            _ => false,
        }
    }
}

impl<S: Scalar> InputPoint<S> {
    pub fn dim(&self) -> usize {
        match self {
            InputPoint::Hom(p) => p.dim(),
            InputPoint::Ext(z) => z.dim(),
        }
    }

    pub fn lift(&self) -> ProjectivePoint<S> {
        match self {
            InputPoint::Hom(p) => p.clone(),
            InputPoint::Ext(z) => z.lift(),
        }
    }

    pub fn project(&self) -> ExtendedPoint<S> {
        match self {
            InputPoint::Hom(p) => crate::projective::project(p),
            InputPoint::Ext(z) => z.clone(),
        }
    }
}

pub fn encode_projective<S: JsonScalar>(p: &ProjectivePoint<S>) -> Value {
    json!({"hom": encode_vec(p.coords())})
}

pub fn encode_extended<S: JsonScalar>(z: &ExtendedPoint<S>) -> Value {
    match z {
        ExtendedPoint::Finite(c) => json!({"fin": encode_vec(c)}),
        ExtendedPoint::AtInfinity(d) => json!({"inf": encode_vec(d)}),
    }
}

pub fn encode_input<S: JsonScalar>(p: &InputPoint<S>) -> Value {
    match p {
        InputPoint::Hom(p) => encode_projective(p),
        InputPoint::Ext(z) => encode_extended(z),
    }
}

fn single_key<'a>(v: &'a Value, what: &str) -> Result<(&'a str, &'a Value)> {
    match v
        .as_object()
        .map(|o| o.iter().collect::<Vec<_>>())
        .as_deref()
    {
        Some([(k, v)]) => Ok((k.as_str(), v)),
        _ => Err(parse_err(format!(
            "expected a {what} object with one key, got {v}"
        ))),
    }
}

pub fn decode_point<S: JsonScalar>(v: &Value) -> Result<InputPoint<S>> {
    let (key, body) = single_key(v, "point")?;
    let coords = decode_vec(body)?;
    match key {
        "hom" => ProjectivePoint::new(coords).map(InputPoint::Hom),
        "fin" => ExtendedPoint::finite(coords).map(InputPoint::Ext),
        "inf" => ExtendedPoint::at_infinity(coords).map(InputPoint::Ext),
        other => Err(parse_err(format!("unknown point kind {other:?}"))),
    }
}

/// A list of points: a bare array, or `{"points": [..]}`.
pub fn decode_points<S: JsonScalar>(v: &Value) -> Result<Vec<InputPoint<S>>> {
    let list = match v {
        Value::Object(o) => o
            .get("points")
            .ok_or_else(|| parse_err("missing \"points\""))?,
        other => other,
    };
    list.as_array()
        .ok_or_else(|| parse_err("expected an array of points"))?
        .iter()
        .map(decode_point)
        .collect()
}

pub fn encode_value<S: JsonScalar>(v: &CrossRatioValue<S>) -> Value {
    match v {
        CrossRatioValue::Finite(z) => z.encode(),
        CrossRatioValue::Infinity => Value::String("infinity".into()),
    }
}

pub fn decode_value<S: JsonScalar>(v: &Value) -> Result<CrossRatioValue<S>> {
    match v {
        Value::String(s) if s == "infinity" => Ok(CrossRatioValue::Infinity),
        other => S::decode(other).map(CrossRatioValue::Finite),
    }
}

pub fn encode_tuple<S: JsonScalar>(t: &CrossRatioTuple<S>) -> Value {
    Value::Array(t.components().iter().map(encode_value).collect())
}

fn encode_rows<S: JsonScalar>(m: &SquareMatrix<S>) -> Value {
    Value::Array(m.rows().map(encode_vec).collect())
}

fn decode_rows<S: JsonScalar>(v: &Value) -> Result<SquareMatrix<S>> {
    let rows = v
        .as_array()
        .ok_or_else(|| parse_err("expected an array of rows"))?
        .iter()
        .map(decode_vec)
        .collect::<Result<Vec<_>>>()?;
    SquareMatrix::from_rows(rows)
}

pub fn encode_matrix<S: JsonScalar>(m: &ProjectiveMatrix<S>) -> Value {
    json!({"m": encode_rows(m.inner())})
}

pub fn decode_matrix<S: JsonScalar>(v: &Value) -> Result<ProjectiveMatrix<S>> {
    let m = v
        .get("m")
        .ok_or_else(|| parse_err("matrix without \"m\""))?;
    ProjectiveMatrix::new(decode_rows(m)?)
}

pub fn encode_map<S: JsonScalar>(f: &LinearFractionalMap<S>) -> Value {
    json!({
        "A": encode_rows(f.a()),
        "B": encode_vec(f.b()),
        "C": encode_vec(f.c()),
        "D": f.d().encode(),
    })
}

/// A map in `{"A","B","C","D"}` form, or its matrix as `{"m": ..}`.
pub fn decode_map<S: JsonScalar>(v: &Value) -> Result<LinearFractionalMap<S>> {
    let Some(o) = v.as_object() else {
        return Err(parse_err("expected a map object"));
    };
    if !o.contains_key("A") && o.contains_key("m") {
        return Ok(LinearFractionalMap::from_matrix(&decode_matrix(v)?));
    }
    let get = |k: &str| {
        o.get(k)
            .ok_or_else(|| parse_err(format!("map without {k:?}")))
    };
    LinearFractionalMap::new(
        decode_rows(get("A")?)?,
        decode_vec(get("B")?)?,
        decode_vec(get("C")?)?,
        S::decode(get("D")?)?,
    )
}

pub fn encode_circline<S: JsonScalar>(c: &Circline<S>) -> Value {
    let mut o = Map::new();
    match c {
        Circline::Circle { center, radius_sq } => o.insert(
            "circle".into(),
            json!({"center": center.encode(), "radius_sq": radius_sq.encode()}),
        ),
        Circline::Line { point, direction } => o.insert(
            "line".into(),
            json!({"point": point.encode(), "direction": direction.encode()}),
        ),
    };
    Value::Object(o)
}
