//! JSON persistence for finite spectral triples (schema version 1).
//!
//! Keys appear in a fixed order: `schema_version`, `dim`, `dirac`,
//! `chirality`, `real_structure_k`, `algebra_gens`, `metadata`. Matrices are
//! lists of rows; each entry is `{"re": "p/q", "im": "p/q"}` with the
//! rational in lowest terms and a positive denominator. Metadata keys are
//! sorted, so serialization is byte-deterministic.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::linalg::{parse_rational, rational_to_string, Antiunitary, ExactMatrix, GaussianRational};
use crate::triple::FiniteSpectralTriple;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IoError {
    #[error("parse error at {location}: {message}")]
    ParseError { location: String, message: String },
    #[error("unsupported schema_version {0} (expected {SCHEMA_VERSION})")]
    UnsupportedVersion(u64),
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
struct EntryDoc {
    re: String,
    im: String,
}

type MatrixDoc = Vec<Vec<EntryDoc>>;

/// On-disk layout of a triple.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
struct TripleDocument {
    schema_version: u64,
    dim: usize,
    dirac: MatrixDoc,
    chirality: Option<MatrixDoc>,
    real_structure_k: MatrixDoc,
    algebra_gens: Vec<MatrixDoc>,
    metadata: BTreeMap<String, String>,
}

fn matrix_doc(m: &ExactMatrix) -> MatrixDoc {
    (0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|e| EntryDoc { re: rational_to_string(&e.re), im: rational_to_string(&e.im) })
                .collect()
        })
        .collect()
}

/// Serializes a triple as pretty-printed JSON followed by a newline.
pub fn serialize_triple(t: &FiniteSpectralTriple) -> Vec<u8> {
    let doc = TripleDocument {
        schema_version: SCHEMA_VERSION,
        dim: t.dim(),
        dirac: matrix_doc(t.dirac()),
        chirality: t.chirality().map(matrix_doc),
        real_structure_k: matrix_doc(t.real_structure().k()),
        algebra_gens: t.algebra_gens().iter().map(matrix_doc).collect(),
        metadata: t.metadata().clone(),
    };
    let mut out = serde_json::to_vec_pretty(&doc).expect("document is always serializable");
    out.push(b'\n');
    out
}

fn parse_matrix(doc: &MatrixDoc, name: &str, dim: usize) -> Result<ExactMatrix, IoError> {
    if doc.len() != dim || doc.iter().any(|row| row.len() != dim) {
        return Err(IoError::InvalidTriple(format!("{name} is not {dim}x{dim}")));
    }
    let mut entries = Vec::with_capacity(dim * dim);
    for (r, row) in doc.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            let part = |s: &str, which: &str| {
                parse_rational(s).map_err(|err| IoError::ParseError {
                    location: format!("{name}[{r}][{c}].{which}"),
                    message: err.to_string(),
                })
            };
            entries.push(GaussianRational::new(part(&e.re, "re")?, part(&e.im, "im")?));
        }
    }
    ExactMatrix::from_entries(dim, dim, entries).map_err(|e| IoError::InvalidTriple(e.to_string()))
}

fn json_error(e: serde_json::Error) -> IoError {
    IoError::ParseError {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    }
}

/// Parses a schema-1 document.
///
/// Only structural invariants are enforced here (shapes, unitary `K`); axiom
/// failures such as a non-hermitian `D` are left for validation to report.
pub fn parse_triple(bytes: &[u8]) -> Result<FiniteSpectralTriple, IoError> {
    let value: serde_json::Value = serde_json::from_slice(bytes).map_err(json_error)?;
    let version = value.get("schema_version").ok_or_else(|| IoError::ParseError {
        location: "schema_version".into(),
        message: "missing field".into(),
    })?;
    match version.as_u64() {
        Some(SCHEMA_VERSION) => {}
        Some(v) => return Err(IoError::UnsupportedVersion(v)),
        None => {
            return Err(IoError::ParseError {
                location: "schema_version".into(),
                message: "expected a non-negative integer".into(),
            })
        }
    }
    let doc: TripleDocument = serde_json::from_value(value).map_err(|e| IoError::ParseError {
        location: "document".into(),
        message: e.to_string(),
    })?;
    if doc.dim == 0 {
        return Err(IoError::InvalidTriple("dim must be positive".into()));
    }

    let dirac = parse_matrix(&doc.dirac, "dirac", doc.dim)?;
    let chirality = doc.chirality.as_ref().map(|m| parse_matrix(m, "chirality", doc.dim)).transpose()?;
    let k = parse_matrix(&doc.real_structure_k, "real_structure_k", doc.dim)?;
    let gens = doc
        .algebra_gens
        .iter()
        .enumerate()
        .map(|(i, m)| parse_matrix(m, &format!("algebra_gens[{i}]"), doc.dim))
        .collect::<Result<Vec<_>, _>>()?;
    let j = Antiunitary::new(k).map_err(|e| IoError::InvalidTriple(format!("real_structure_k: {e}")))?;
    let triple = FiniteSpectralTriple::new(dirac, chirality, j, gens)
        .map_err(|e| IoError::InvalidTriple(e.to_string()))?;
    Ok(triple.with_metadata_map(doc.metadata))
}
