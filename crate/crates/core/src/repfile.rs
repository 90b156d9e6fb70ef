//! JSON serialization of representations.
//!
//! ```json
//! {
//!   "n": 2,
//!   "generators": [
//!     {"name": "E", "role": "raising",  "matrix": [["0", "1"], ["0", "0"]]},
//!     {"name": "F", "role": "lowering", "matrix": [["0", "0"], ["1", "0"]]},
//!     {"name": "H", "role": "cartan",   "matrix": [["1", "0"], ["0", "-1"]]}
//!   ],
//!   "sl2_triples": [["E", "F", "H"]]
//! }
//! ```
//!
//! Matrix entries are strings `"p"` or `"p/q"`, never JSON numbers, and the
//! matrix lists rows. Column `i` is the image of `e_i`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::polyring::{Rational, RationalParseError};
use crate::qlinalg::QMatrix;
use crate::repcore::{Generator, RepSpec, Role, Sl2Triple, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub name: String,
    pub role: Role,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepSpecFile {
    pub n: usize,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default)]
    pub sl2_triples: Vec<[String; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepFileError {
    #[error("malformed representation JSON: {0}")]
    Json(String),
    #[error("generator {generator}: matrix must be {n}x{n}")]
    Shape { generator: String, n: usize },
    #[error("generator {generator}, entry ({row}, {col}): {source}")]
    Entry {
        generator: String,
        row: usize,
        col: usize,
        source: RationalParseError,
    },
    #[error("invalid representation: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

impl RepSpecFile {
    pub fn from_rep(rep: &RepSpec) -> Self {
        RepSpecFile {
            n: rep.dim(),
            generators: rep
                .generators()
                .iter()
                .map(|g| GeneratorEntry {
                    name: g.name.clone(),
                    role: g.role,
                    matrix: g
                        .matrix
                        .to_rows()
                        .iter()
                        .map(|r| r.iter().map(Rational::to_string).collect())
                        .collect(),
                })
                .collect(),
            sl2_triples: rep
                .sl2_triples()
                .iter()
                .map(|t| [t.raising.clone(), t.lowering.clone(), t.cartan.clone()])
                .collect(),
        }
    }

    /// Converts to a validated [`RepSpec`].
    pub fn to_rep(&self) -> Result<RepSpec, RepFileError> {
        let n = self.n;
        let mut generators = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            if g.matrix.len() != n || g.matrix.iter().any(|r| r.len() != n) {
                return Err(RepFileError::Shape {
                    generator: g.name.clone(),
                    n,
                });
            }
            let mut rows = Vec::with_capacity(n);
            for (r, row) in g.matrix.iter().enumerate() {
                let parsed = row
                    .iter()
                    .enumerate()
                    .map(|(c, s)| {
                        s.parse::<Rational>().map_err(|source| RepFileError::Entry {
                            generator: g.name.clone(),
                            row: r,
                            col: c,
                            source,
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(parsed);
            }
            generators.push(Generator {
                name: g.name.clone(),
                role: g.role,
                matrix: QMatrix::from_rows_with_cols(rows, n),
            });
        }
        let triples = self
            .sl2_triples
            .iter()
            .map(|[e, f, h]| Sl2Triple::new(e, f, h))
            .collect();
        let rep = RepSpec::new(n, generators, triples);
        rep.validate().map_err(RepFileError::Invalid)?;
        Ok(rep)
    }
}

/// Parses and validates a representation file.
pub fn parse_rep_json(text: &str) -> Result<RepSpec, RepFileError> {
    let file: RepSpecFile =
        serde_json::from_str(text).map_err(|e| RepFileError::Json(e.to_string()))?;
    file.to_rep()
}

pub fn rep_to_json(rep: &RepSpec) -> String {
    serde_json::to_string_pretty(&RepSpecFile::from_rep(rep)).expect("plain data serializes")
}
