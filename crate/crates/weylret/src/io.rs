//! JSON formats and the compact text forms accepted on the command line.
//!
//! Windows are integer arrays, rationals are `"p/q"` strings (plain integers
//! are accepted on input), tables are maps from window string to window
//! string.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use weylret_core::fan::{ConeQueryResult, Grade, OrbitFan};
use weylret_core::matroid::PhiReport;
use weylret_core::retraction::{Provenance, RetractionTable};
use weylret_core::{
    Factor, GroupDescriptor, Rational, RationalMatrix, SignedPermutation, SubsetM, WeylError,
    WeylType,
};

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("invalid JSON in {what}: {source}")]
    Json {
        what: &'static str,
        source: serde_json::Error,
    },
    #[error("invalid {what}: {detail}")]
    Format { what: &'static str, detail: String },
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

fn format_err(what: &'static str, detail: impl Into<String>) -> ParseError {
    ParseError::Format {
        what,
        detail: detail.into(),
    }
}

/// Reads `arg` as a file when such a file exists, otherwise returns it as
/// inline text.
pub fn inline_or_file(arg: &str) -> Result<String, ParseError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return Ok(arg.to_owned());
    }
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|source| ParseError::Read {
            path: arg.to_owned(),
            source,
        });
    }
    Ok(arg.to_owned())
}

fn json_value(text: &str, what: &'static str) -> Result<Value, ParseError> {
    serde_json::from_str(text).map_err(|source| ParseError::Json { what, source })
}

#[derive(Serialize, Deserialize)]
struct FactorJson {
    #[serde(rename = "type")]
    ty: String,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct DescriptorJson {
    factors: Vec<FactorJson>,
}

fn weyl_type(name: &str) -> Option<WeylType> {
    match name.to_ascii_uppercase().as_str() {
        "A" | "S" => Some(WeylType::A),
        "B" | "C" | "BC" => Some(WeylType::BC),
        "D" => Some(WeylType::D),
        _ => None,
    }
}

/// Parses a group descriptor.
///
/// Besides the JSON form `{"factors":[{"type":"BC","rank":4}]}` (where
/// `rank` counts letters), shorthands are accepted: `A3` is the Lie type
/// `A₃ = S₄`, `S4` is the symmetric group on four letters, `B4`, `C4`, `BC4`
/// and `D4` act on four letters. Factors are joined by `x` or `,`.
pub fn parse_group(arg: &str) -> Result<GroupDescriptor, ParseError> {
    let text = inline_or_file(arg)?;
    let text = text.trim();
    if text.starts_with('{') {
        let d: DescriptorJson = serde_json::from_str(text).map_err(|source| ParseError::Json {
            what: "group descriptor",
            source,
        })?;
        let factors = d
            .factors
            .iter()
            .map(|f| {
                weyl_type(&f.ty)
                    .map(|ty| Factor::new(ty, f.rank))
                    .ok_or_else(|| {
                        format_err("group descriptor", format!("unknown type {:?}", f.ty))
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(GroupDescriptor::new(factors)?);
    }
    let mut factors = Vec::new();
    for part in text.split(['x', ',', '×']) {
        let part = part.trim();
        let split = part
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(|| format_err("group shorthand", format!("{part:?} has no rank")))?;
        let (name, digits) = part.split_at(split);
        let rank: usize = digits
            .parse()
            .map_err(|_| format_err("group shorthand", format!("bad rank in {part:?}")))?;
        let factor = match name.to_ascii_uppercase().as_str() {
            "A" => Factor::new(WeylType::A, rank + 1),
            "S" => Factor::new(WeylType::A, rank),
            other => match weyl_type(other) {
                Some(ty) => Factor::new(ty, rank),
                None => {
                    return Err(format_err(
                        "group shorthand",
                        format!("unknown type {name:?}"),
                    ))
                }
            },
        };
        factors.push(factor);
    }
    Ok(GroupDescriptor::new(factors)?)
}

pub fn group_json(g: &GroupDescriptor) -> Value {
    let factors: Vec<FactorJson> = g
        .factors()
        .iter()
        .map(|f| FactorJson {
            ty: f.ty.name().to_owned(),
            rank: f.rank,
        })
        .collect();
    json!({ "factors": factors })
}

fn window_from_value(v: &Value) -> Result<SignedPermutation, ParseError> {
    let arr = v
        .as_array()
        .ok_or_else(|| format_err("window", format!("expected an integer array, got {v}")))?;
    let mut out = Vec::with_capacity(arr.len());
    for x in arr {
        let a = x
            .as_i64()
            .and_then(|a| i32::try_from(a).ok())
            .ok_or_else(|| format_err("window", format!("{x} is not a small integer")))?;
        out.push(a);
    }
    Ok(SignedPermutation::from(out))
}

/// Parses a window such as `[2,-3,1]`.
pub fn parse_window(text: &str) -> Result<SignedPermutation, ParseError> {
    window_from_value(&json_value(text, "window")?)
}

/// Parses a window and checks that it belongs to `g`.
pub fn parse_element(g: &GroupDescriptor, text: &str) -> Result<SignedPermutation, ParseError> {
    let w = parse_window(text)?;
    g.validate(&w)?;
    Ok(w)
}

/// Parses a subset given inline or as a file: a JSON array of windows.
pub fn parse_set(g: &GroupDescriptor, arg: &str) -> Result<SubsetM, ParseError> {
    let v = json_value(&inline_or_file(arg)?, "set")?;
    let arr = v
        .as_array()
        .ok_or_else(|| format_err("set", "expected an array of windows"))?;
    let windows = arr
        .iter()
        .map(window_from_value)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SubsetM::new(g, windows)?)
}

pub fn window_json(w: &SignedPermutation) -> Value {
    Value::from(w.window().to_vec())
}

pub fn windows_json<'a>(ws: impl IntoIterator<Item = &'a SignedPermutation>) -> Value {
    Value::Array(ws.into_iter().map(window_json).collect())
}

pub fn rational_json(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn vector_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

fn rational_from_value(v: &Value) -> Result<Rational, ParseError> {
    match v {
        Value::String(s) => s
            .trim()
            .parse::<Rational>()
            .map_err(|_| format_err("rational", format!("{s:?}"))),
        Value::Number(n) => n
            .as_i64()
            .map(|x| Rational::from_integer(x.into()))
            .ok_or_else(|| {
                format_err(
                    "rational",
                    format!("{n} is not an integer; use a \"p/q\" string"),
                )
            }),
        other => Err(format_err("rational", format!("{other}"))),
    }
}

/// Parses a vector of rationals, e.g. `["1/2", "-3", 4]`.
pub fn parse_vector(text: &str) -> Result<Vec<Rational>, ParseError> {
    let v = json_value(text, "vector")?;
    v.as_array()
        .ok_or_else(|| format_err("vector", "expected an array"))?
        .iter()
        .map(rational_from_value)
        .collect()
}

/// Parses a matrix given inline or as a file: an array of rows of rationals.
pub fn parse_matrix(arg: &str) -> Result<RationalMatrix, ParseError> {
    let v = json_value(&inline_or_file(arg)?, "matrix")?;
    let rows = v
        .as_array()
        .ok_or_else(|| format_err("matrix", "expected an array of rows"))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| format_err("matrix", "each row must be an array"))?
                .iter()
                .map(rational_from_value)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    if rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(format_err("matrix", "rows have different lengths"));
    }
    Ok(RationalMatrix::from_rows(rows)?)
}

pub fn matrix_json(m: &RationalMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_json(r)).collect())
}

pub fn table_json(t: &RetractionTable) -> Value {
    let map: serde_json::Map<String, Value> = t
        .iter()
        .map(|(u, r)| (u.to_string(), Value::String(r.to_string())))
        .collect();
    Value::Object(map)
}

/// Parses a table given inline or as a file. Keys and values are window
/// strings.
pub fn parse_table(g: &GroupDescriptor, arg: &str) -> Result<RetractionTable, ParseError> {
    let v = json_value(&inline_or_file(arg)?, "table")?;
    let obj = v
        .as_object()
        .ok_or_else(|| format_err("table", "expected an object of window strings"))?;
    let mut entries = BTreeMap::new();
    for (k, val) in obj {
        let r = val
            .as_str()
            .map(|s| parse_element(g, s))
            .unwrap_or_else(|| {
                window_from_value(val).and_then(|w| g.validate(&w).map(|_| w).map_err(Into::into))
            })?;
        entries.insert(parse_element(g, k)?, r);
    }
    Ok(RetractionTable::new(Provenance::Algebraic, entries))
}

pub fn fan_json(fan: &OrbitFan) -> Value {
    let cones: serde_json::Map<String, Value> = fan
        .cones()
        .iter()
        .map(|(y, us)| (y.to_string(), windows_json(us)))
        .collect();
    json!({
        "lineality": fan.lineality().iter().map(|v| vector_json(v)).collect::<Vec<_>>(),
        "cones": cones,
    })
}

pub fn query_json(q: &ConeQueryResult) -> Value {
    let grade = match q.grade {
        Grade::Interior => "Interior",
        Grade::Boundary => "Boundary",
    };
    json!({ "y": window_json(&q.y), "grade": grade })
}

pub fn polytope_json(report: &PhiReport) -> Value {
    json!({
        "base_point": vector_json(&report.base_point),
        "members": windows_json(&report.members),
        "vertices": report.vertices.iter().map(|v| vector_json(v)).collect::<Vec<_>>(),
        "edges": report.edges.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
        "offending_edges": report.offending.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
        "roots_matched": report.is_phi(),
    })
}

/// Compact, deterministic JSON text followed by a newline.
pub fn render(v: &Value, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(v).expect("JSON values always serialize")
    } else {
        serde_json::to_string(v).expect("JSON values always serialize")
    };
    s.push('\n');
    s
}
