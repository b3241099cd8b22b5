//! Plain-text document formats for matrices and one-sided linear systems.
//!
//! A matrix document (`.qmat`) is a single JSON object:
//!
//! ```json
//! {
//!   "algebra": { "a": "-1", "b": "-1" },
//!   "scalar": "rational",
//!   "matrix": [
//!     ["0,1,0,0", "0,0,1,0"],
//!     ["0,0,1,0", "0,-1,0,0"]
//!   ]
//! }
//! ```
//!
//! Every entry is the textual quaternion `x0,x1,x2,x3` with field elements
//! written as lowest-terms rationals (`p` or `p/q`) or decimal floats when
//! `scalar` is `"float64"`. A system document (`.qsys`) bundles a matrix
//! `A`, a constant column or row `y` and the side of the system:
//!
//! ```json
//! { "A": { …matrix… }, "y": { …matrix… }, "side": "right" }
//! ```
//!
//! Writers emit a canonical form (two-space indentation, fixed key order,
//! trailing newline, lowest-terms rationals), so parsing a canonical
//! document and writing it back is byte-identical.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qmatrix::QMatrix;
use crate::quat::{AlgebraParams, Quaternion};
use crate::scalar::{Scalar, ScalarKind};

#[derive(Debug, Serialize, Deserialize)]
struct AlgebraDoc {
    a: String,
    b: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct MatrixDoc {
    algebra: AlgebraDoc,
    scalar: String,
    matrix: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct SystemDoc {
    #[serde(rename = "A")]
    a: MatrixDoc,
    y: MatrixDoc,
    side: String,
}

/// Which side of the coefficient matrix the unknowns live on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "right" => Ok(Side::Right),
            "left" => Ok(Side::Left),
            other => Err(Error::parse(format!("unknown side {other:?}"))),
        }
    }
}

/// A parsed system document: solve `Ax = y` (right) or `xA = y` (left).
#[derive(Debug, Clone, PartialEq)]
pub struct System {
    pub a: QMatrix,
    pub y: QMatrix,
    pub side: Side,
}

fn matrix_to_doc(m: &QMatrix) -> MatrixDoc {
    let params = m.params();
    MatrixDoc {
        algebra: AlgebraDoc {
            a: params.a().to_string(),
            b: params.b().to_string(),
        },
        scalar: params.kind().as_str().to_string(),
        matrix: (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m[(r, c)].to_string()).collect())
            .collect(),
    }
}

fn matrix_from_doc(doc: &MatrixDoc) -> Result<QMatrix> {
    let kind: ScalarKind = doc.scalar.parse()?;
    let a = Scalar::parse(&doc.algebra.a, kind)?;
    let b = Scalar::parse(&doc.algebra.b, kind)?;
    let params = AlgebraParams::new(a, b)?;
    if doc.matrix.is_empty() || doc.matrix[0].is_empty() {
        return Err(Error::EmptyResult);
    }
    let cols = doc.matrix[0].len();
    if doc.matrix.iter().any(|row| row.len() != cols) {
        return Err(Error::Ragged);
    }
    let mut rows = Vec::with_capacity(doc.matrix.len());
    for row in &doc.matrix {
        let mut out = Vec::with_capacity(cols);
        for cell in row {
            out.push(Quaternion::parse(cell, &params)?);
        }
        rows.push(out);
    }
    QMatrix::from_rows(rows)
}

fn canonical_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable document");
    text.push('\n');
    text
}

/// Serializes a matrix in the canonical document form.
pub fn write_qmat(m: &QMatrix) -> String {
    canonical_json(&matrix_to_doc(m))
}

/// Parses a matrix document.
pub fn parse_qmat(text: &str) -> Result<QMatrix> {
    let doc: MatrixDoc =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("matrix document: {e}")))?;
    matrix_from_doc(&doc)
}

/// Serializes a system in the canonical document form.
pub fn write_qsys(sys: &System) -> String {
    canonical_json(&SystemDoc {
        a: matrix_to_doc(&sys.a),
        y: matrix_to_doc(&sys.y),
        side: sys.side.as_str().to_string(),
    })
}

/// Parses a system document; the two matrices must live in one algebra.
pub fn parse_qsys(text: &str) -> Result<System> {
    let doc: SystemDoc =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("system document: {e}")))?;
    let a = matrix_from_doc(&doc.a)?;
    let y = matrix_from_doc(&doc.y)?;
    if a.params() != y.params() {
        return Err(Error::AlgebraMismatch {
            left: a.params().to_string(),
            right: y.params().to_string(),
        });
    }
    let side = Side::parse(&doc.side)?;
    Ok(System { a, y, side })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamilton() -> AlgebraParams {
        AlgebraParams::rational(-1, -1).unwrap()
    }

    fn sample(h: &AlgebraParams) -> QMatrix {
        QMatrix::from_rows(vec![
            vec![h.i(), h.j()],
            vec![h.j(), -&h.i()],
        ])
        .unwrap()
    }

    #[test]
    fn matrix_round_trip_is_byte_identical() {
        let m = sample(&hamilton());
        let text = write_qmat(&m);
        let parsed = parse_qmat(&text).unwrap();
        assert_eq!(parsed, m);
        assert_eq!(write_qmat(&parsed), text);
    }

    #[test]
    fn system_round_trip_is_byte_identical() {
        let h = hamilton();
        let sys = System {
            a: sample(&h),
            y: QMatrix::from_rows(vec![vec![h.one()], vec![h.k()]]).unwrap(),
            side: Side::Right,
        };
        let text = write_qsys(&sys);
        let parsed = parse_qsys(&text).unwrap();
        assert_eq!(parsed, sys);
        assert_eq!(write_qsys(&parsed), text);
    }

    #[test]
    fn rationals_are_emitted_in_lowest_terms() {
        let h = hamilton();
        let q = Quaternion::parse("2/4,-6/3,0/9,10/5", &h).unwrap();
        let m = QMatrix::from_rows(vec![vec![q]]).unwrap();
        assert!(write_qmat(&m).contains("\"1/2,-2,0,2\""));
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(matches!(parse_qmat("not json"), Err(Error::Parse { .. })));
        // Degenerate algebra.
        let text = r#"{"algebra":{"a":"0","b":"-1"},"scalar":"rational","matrix":[["1,0,0,0"]]}"#;
        assert_eq!(parse_qmat(text).unwrap_err(), Error::DegenerateAlgebra);
        // Ragged rows.
        let text = r#"{"algebra":{"a":"-1","b":"-1"},"scalar":"rational","matrix":[["1,0,0,0","0,0,0,0"],["1,0,0,0"]]}"#;
        assert_eq!(parse_qmat(text).unwrap_err(), Error::Ragged);
        // Wrong component count.
        let text = r#"{"algebra":{"a":"-1","b":"-1"},"scalar":"rational","matrix":[["1,0,0"]]}"#;
        assert!(matches!(parse_qmat(text), Err(Error::Parse { .. })));
        // Decimal in rational mode.
        let text = r#"{"algebra":{"a":"-1","b":"-1"},"scalar":"rational","matrix":[["1.5,0,0,0"]]}"#;
        assert!(matches!(parse_qmat(text), Err(Error::Parse { .. })));
        // Unknown scalar kind.
        let text = r#"{"algebra":{"a":"-1","b":"-1"},"scalar":"decimal","matrix":[["1,0,0,0"]]}"#;
        assert!(matches!(parse_qmat(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn mixed_algebras_in_a_system_are_rejected() {
        let h = hamilton();
        let g = AlgebraParams::rational(2, 5).unwrap();
        let sys = SystemDoc {
            a: matrix_to_doc(&sample(&h)),
            y: matrix_to_doc(&QMatrix::identity(2, &g).unwrap()),
            side: "right".to_string(),
        };
        let text = canonical_json(&sys);
        assert!(matches!(
            parse_qsys(&text),
            Err(Error::AlgebraMismatch { .. })
        ));
    }

    #[test]
    fn float_documents_round_trip() {
        let h = AlgebraParams::float64(-1.0, -1.0).unwrap();
        let m = QMatrix::from_fn(2, 2, &h, |r, c| {
            h.quaternion([
                Scalar::float(0.5 * r as f64),
                Scalar::float(-0.25),
                Scalar::float(c as f64),
                Scalar::float(1e-3),
            ])
            .unwrap()
        })
        .unwrap();
        let text = write_qmat(&m);
        let parsed = parse_qmat(&text).unwrap();
        assert_eq!(parsed, m);
        assert_eq!(write_qmat(&parsed), text);
    }
}
