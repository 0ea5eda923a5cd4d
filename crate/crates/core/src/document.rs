//! JSON documents for algebras: sparse structure constants with rationals
//! as strings (no float literals are ever accepted), plus an optional dense
//! self-map matrix and an optional kind hint.
//!
//! ```json
//! {
//!   "dim": 3,
//!   "basis": ["h", "e", "f"],
//!   "kind": "lie",
//!   "structure": [ {"i": 0, "j": 1, "k": 1, "value": "2"}, ... ],
//!   "alpha": [["1","0","0"], ["0","2","0"], ["0","0","1/2"]]
//! }
//! ```
//!
//! `alpha` is row-major; its column `j` is the image of the j-th basis
//! vector. Omitted structure entries are zero.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::homalg::{FinAlgebra, LinearSelfMap};
use crate::linalg::Matrix;
use crate::rational::Rational;

/// One nonzero structure constant: coefficient of `e_k` in `e_i · e_j`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct StructureEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: Rational,
}

/// Optional hint recording which axiom family the document is meant for.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    Associative,
    Lie,
    LeftSymmetric,
    LieAdmissible,
}

/// On-disk form of an algebra, optionally carrying its twisting map.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AlgebraDocument {
    pub dim: usize,
    pub basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<AlgebraKind>,
    pub structure: Vec<StructureEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Vec<Rational>>>,
}

impl AlgebraDocument {
    pub fn from_algebra(
        a: &FinAlgebra,
        alpha: Option<&LinearSelfMap>,
        kind: Option<AlgebraKind>,
    ) -> Self {
        let structure = a
            .entries()
            .map(|(i, j, k, value)| StructureEntry {
                i,
                j,
                k,
                value: value.clone(),
            })
            .collect();
        let alpha = alpha.map(|m| {
            (0..m.dim())
                .map(|r| (0..m.dim()).map(|c| m.matrix().get(r, c).clone()).collect())
                .collect()
        });
        AlgebraDocument {
            dim: a.dim(),
            basis: a.labels().to_vec(),
            kind,
            structure,
            alpha,
        }
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> Result<String, Error> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Validates the document into in-memory objects.
    pub fn into_algebra(&self) -> Result<(FinAlgebra, Option<LinearSelfMap>), Error> {
        let algebra = FinAlgebra::from_entries(
            self.dim,
            self.basis.clone(),
            self.structure
                .iter()
                .map(|e| (e.i, e.j, e.k, e.value.clone())),
        )?;
        let alpha = match &self.alpha {
            None => None,
            Some(rows) => {
                if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
                    return Err(Error::Document(format!(
                        "alpha must be a {0}×{0} matrix",
                        self.dim
                    )));
                }
                let mat = Matrix::from_rows(rows.clone())?;
                Some(LinearSelfMap::from_matrix(mat)?)
            }
        };
        Ok((algebra, alpha))
    }
}

/// Parses a JSON document into a validated algebra and optional map.
pub fn parse_algebra(text: &str) -> Result<(FinAlgebra, Option<LinearSelfMap>), Error> {
    AlgebraDocument::parse(text)?.into_algebra()
}

/// Plain text format for operator matrices: a `rows cols` header line,
/// then one line per row of `/`-style rationals separated by spaces.
pub fn matrix_to_text(m: &Matrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|r| r.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the plain text matrix format produced by [`matrix_to_text`].
pub fn matrix_from_text(text: &str) -> Result<Matrix, Error> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Document("empty matrix text".into()))?;
    let mut parts = header.split_whitespace();
    let rows: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Document("bad matrix header".into()))?;
    let cols: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Document("bad matrix header".into()))?;
    let mut data = Vec::with_capacity(rows);
    for _ in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| Error::Document("matrix text ends early".into()))?;
        let row: Result<Vec<Rational>, Error> =
            line.split_whitespace().map(|t| t.parse()).collect();
        let row = row?;
        if row.len() != cols {
            return Err(Error::Document(format!(
                "matrix row has {} entries, expected {cols}",
                row.len()
            )));
        }
        data.push(row);
    }
    Matrix::from_rows(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::sl2;

    #[test]
    fn minimal_field_document_round_trips() {
        let text = r#"{
            "dim": 1,
            "basis": ["1"],
            "structure": [{"i": 0, "j": 0, "k": 0, "value": "1"}]
        }"#;
        let (a, alpha) = parse_algebra(text).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(alpha.is_none());
        let doc = AlgebraDocument::from_algebra(&a, None, None);
        let (b, _) = parse_algebra(&doc.to_json().unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sl2_document_matches_builder() {
        let (a, alpha) = sl2(&Rational::integer(2)).unwrap();
        let doc = AlgebraDocument::from_algebra(&a, Some(&alpha), Some(AlgebraKind::Lie));
        let json = doc.to_json().unwrap();
        let (b, beta) = parse_algebra(&json).unwrap();
        assert_eq!(a, b);
        assert_eq!(alpha, beta.unwrap());
        // bracket table survives the round trip
        let h = b.basis_vector(b.label_index("h").unwrap());
        let e = b.basis_vector(b.label_index("e").unwrap());
        let he = b.mul_vec(&h, &e).unwrap();
        assert_eq!(
            he,
            e.iter()
                .map(|c| c * &Rational::integer(2))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn bad_documents_are_rejected() {
        // division by zero in a literal
        let text = r#"{"dim": 1, "basis": ["1"],
                       "structure": [{"i": 0, "j": 0, "k": 0, "value": "1/0"}]}"#;
        assert!(matches!(parse_algebra(text), Err(Error::Json(_))));

        // index out of range
        let text = r#"{"dim": 1, "basis": ["1"],
                       "structure": [{"i": 0, "j": 0, "k": 3, "value": "1"}]}"#;
        assert!(matches!(
            parse_algebra(text),
            Err(Error::IndexOutOfRange { .. })
        ));

        // float literals are not accepted
        let text = r#"{"dim": 1, "basis": ["1"],
                       "structure": [{"i": 0, "j": 0, "k": 0, "value": "0.5"}]}"#;
        assert!(parse_algebra(text).is_err());

        // ragged alpha
        let text = r#"{"dim": 2, "basis": ["a","b"], "structure": [],
                       "alpha": [["1","0"]]}"#;
        assert!(matches!(parse_algebra(text), Err(Error::Document(_))));
    }

    #[test]
    fn matrix_text_round_trip() {
        let m = Matrix::from_rows(vec![
            vec![Rational::frac(1, 2), Rational::integer(0)],
            vec![Rational::integer(-3), Rational::frac(7, 5)],
        ])
        .unwrap();
        let text = matrix_to_text(&m);
        assert_eq!(matrix_from_text(&text).unwrap(), m);
        assert!(matrix_from_text("garbage").is_err());
    }
}
