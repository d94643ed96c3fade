//! JSON input documents.
//!
//! Polygons are `{"vertices": [[x, y], ...], "name"?: string}`; sequence
//! files have the same shape under the key `"vectors"`. Coordinates must be
//! exact JSON integers (floats are rejected, even when integral) and are
//! capped at |c| ≤ 10⁶ so every downstream i64 computation stays exact.

use std::fmt;

use fano::lattice::LatticeVector;
use serde_json::Value;

pub const COORDINATE_CAP: i64 = 1_000_000;

#[derive(Debug)]
pub enum DocError {
    Syntax { line: usize, column: usize, message: String },
    NotAnObject,
    MissingField { field: &'static str },
    MalformedVertex { index: usize },
    NonIntegerCoordinate { index: usize },
    CoordinateOutOfRange { index: usize },
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocError::Syntax { line, column, message } => {
                write!(f, "JSON syntax error at line {line}, column {column}: {message}")
            }
            DocError::NotAnObject => write!(f, "document is not a JSON object"),
            DocError::MissingField { field } => write!(f, "missing field \"{field}\""),
            DocError::MalformedVertex { index } => {
                write!(f, "entry {index} is not a two-element coordinate array")
            }
            DocError::NonIntegerCoordinate { index } => {
                write!(f, "entry {index} has a non-integer coordinate")
            }
            DocError::CoordinateOutOfRange { index } => {
                write!(f, "entry {index} has a coordinate outside ±{COORDINATE_CAP}")
            }
        }
    }
}

impl std::error::Error for DocError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointListDocument {
    pub name: Option<String>,
    pub points: Vec<LatticeVector>,
}

/// Parse `{"vertices": [[x, y], ...], "name"?: ...}`.
pub fn parse_polygon(text: &str) -> Result<PointListDocument, DocError> {
    parse_point_list(text, "vertices")
}

/// Parse `{"vectors": [[x, y], ...], "name"?: ...}`.
pub fn parse_sequence(text: &str) -> Result<PointListDocument, DocError> {
    parse_point_list(text, "vectors")
}

fn parse_point_list(text: &str, field: &'static str) -> Result<PointListDocument, DocError> {
    let value: Value = serde_json::from_str(text).map_err(|e| DocError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let object = value.as_object().ok_or(DocError::NotAnObject)?;
    let name = object.get("name").and_then(Value::as_str).map(str::to_owned);
    let entries = object
        .get(field)
        .ok_or(DocError::MissingField { field })?
        .as_array()
        .ok_or(DocError::MissingField { field })?;
    let mut points = Vec::with_capacity(entries.len());
    for (index, entry) in entries.iter().enumerate() {
        let pair = entry
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or(DocError::MalformedVertex { index })?;
        let mut coords = [0i64; 2];
        for (slot, raw) in coords.iter_mut().zip(pair) {
            if !raw.is_number() {
                return Err(DocError::MalformedVertex { index });
            }
            *slot = raw
                .as_i64()
                .ok_or(DocError::NonIntegerCoordinate { index })?;
            if slot.abs() > COORDINATE_CAP {
                return Err(DocError::CoordinateOutOfRange { index });
            }
        }
        points.push(LatticeVector::new(coords[0], coords[1]));
    }
    Ok(PointListDocument { name, points })
}

/// Serialize a vertex list as the JSON polygon document format.
pub fn polygon_json(name: &str, vertices: &[LatticeVector]) -> Value {
    serde_json::json!({
        "name": name,
        "vertices": vertices.iter().map(|v| vec![v.x, v.y]).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_hexagon() {
        let doc =
            parse_polygon(r#"{"vertices":[[0,1],[-3,2],[-3,1],[0,-1],[3,-2],[3,-1]]}"#).unwrap();
        assert_eq!(doc.points.len(), 6);
        assert_eq!(doc.points[1], LatticeVector::new(-3, 2));
        assert_eq!(doc.name, None);
    }

    #[test]
    fn rejects_floats_with_index() {
        let err = parse_polygon(r#"{"vertices":[[0.5,1]]}"#).unwrap_err();
        assert!(matches!(err, DocError::NonIntegerCoordinate { index: 0 }));
        let err = parse_polygon(r#"{"vertices":[[0,1],[2.0,1]]}"#).unwrap_err();
        assert!(matches!(err, DocError::NonIntegerCoordinate { index: 1 }));
    }

    #[test]
    fn rejects_missing_and_malformed() {
        assert!(matches!(
            parse_polygon(r#"{"points":[[0,1]]}"#).unwrap_err(),
            DocError::MissingField { field: "vertices" }
        ));
        assert!(matches!(
            parse_polygon(r#"{"vertices":[[0,1,2]]}"#).unwrap_err(),
            DocError::MalformedVertex { index: 0 }
        ));
        assert!(matches!(
            parse_polygon("[1,2]").unwrap_err(),
            DocError::NotAnObject
        ));
        let err = parse_polygon(r#"{"vertices":[[0,1],]}"#).unwrap_err();
        assert!(matches!(err, DocError::Syntax { .. }));
    }

    #[test]
    fn sequence_uses_vectors_key() {
        let doc = parse_sequence(r#"{"vectors":[[1,0],[0,1]],"name":"basis"}"#).unwrap();
        assert_eq!(doc.points.len(), 2);
        assert_eq!(doc.name.as_deref(), Some("basis"));
        assert!(matches!(
            parse_sequence(r#"{"vertices":[[1,0]]}"#).unwrap_err(),
            DocError::MissingField { field: "vectors" }
        ));
    }

    #[test]
    fn round_trips_through_json() {
        let vs = vec![LatticeVector::new(0, 1), LatticeVector::new(-3, 2)];
        let text = polygon_json("x", &vs).to_string();
        let doc = parse_polygon(&text).unwrap();
        assert_eq!(doc.points, vs);
    }
}
