//! JSON flag-code documents.
//!
//! ```json
//! {"n": 4, "q": 2, "type": [1, 2, 3],
//!  "flags": [
//!    [[[1,0,0,0]], [[1,0,0,0],[0,1,0,0]], [[1,0,0,0],[0,1,0,0],[0,0,0,1]]],
//!    [[0,1,0,0],[0,0,1,0],[1,0,0,0]]
//!  ]}
//! ```
//!
//! Each flag is either a list of generator matrices, one per entry of the
//! type vector, or (full type only) a single `(n − 1) × n` matrix whose first
//! `i` rows span the `i`-th subspace. Generators are row-reduced on ingest;
//! the stated type is checked against the reduced dimensions.

use std::fmt::Write as _;

use flagdist::{Flag, FlagCode, FlagPair, Matrix, PrimeField, Subspace, TypeVector};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
pub struct FlagCodeDocument {
    pub n: usize,
    pub q: u64,
    #[serde(rename = "type")]
    pub type_vector: Vec<usize>,
    pub flags: Vec<FlagEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum FlagEntry {
    Subspaces(Vec<Vec<Vec<i64>>>),
    AdaptedBasis(Vec<Vec<i64>>),
}

/// Ingestion failure with a human-readable location.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct DocumentError(pub String);

fn matrix(field: PrimeField, n: usize, rows: &[Vec<i64>], at: &str) -> Result<Matrix, DocumentError> {
    let mut converted = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let mut out = Vec::with_capacity(row.len());
        for (c, &v) in row.iter().enumerate() {
            if v < 0 || v as u64 >= field.order() as u64 {
                return Err(DocumentError(format!(
                    "{at}, row {}, column {}: entry {v} is outside [0, {})",
                    r + 1,
                    c + 1,
                    field.order()
                )));
            }
            out.push(v as u64);
        }
        converted.push(out);
    }
    Matrix::new(field, n, converted).map_err(|e| DocumentError(format!("{at}: {e}")))
}

impl FlagCodeDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError(format!("malformed document: {e}")))
    }

    pub fn into_code(self) -> Result<FlagCode, DocumentError> {
        let field = PrimeField::new(self.q).map_err(|e| DocumentError(format!("field: {e}")))?;
        let tv = TypeVector::new(self.type_vector.clone(), self.n)
            .map_err(|e| DocumentError(format!("type: {e}")))?;
        if self.flags.is_empty() {
            return Err(DocumentError("document contains no flags".into()));
        }
        let mut flags = Vec::with_capacity(self.flags.len());
        for (idx, entry) in self.flags.iter().enumerate() {
            let label = format!("flag {}", idx + 1);
            let flag = match entry {
                FlagEntry::Subspaces(mats) => {
                    if mats.len() != tv.len() {
                        return Err(DocumentError(format!(
                            "{label}: has {} subspaces, type {} needs {}",
                            mats.len(),
                            tv,
                            tv.len()
                        )));
                    }
                    let mut subspaces = Vec::with_capacity(mats.len());
                    for (i, (rows, &t)) in mats.iter().zip(tv.dims()).enumerate() {
                        let at = format!("{label}, subspace {}", i + 1);
                        let s = Subspace::from_matrix(&matrix(field, self.n, rows, &at)?);
                        if s.dim() != t {
                            return Err(DocumentError(format!(
                                "{at}: generators span dimension {}, type requires {t}",
                                s.dim()
                            )));
                        }
                        subspaces.push(s);
                    }
                    Flag::new(tv.clone(), subspaces)
                        .map_err(|e| DocumentError(format!("{label}: {e}")))?
                }
                FlagEntry::AdaptedBasis(rows) => {
                    if !tv.is_full() {
                        return Err(DocumentError(format!(
                            "{label}: adapted-basis form needs the full type, document type is {tv}"
                        )));
                    }
                    let m = matrix(field, self.n, rows, &label)?;
                    if m.rows() != self.n - 1 || m.rank() != self.n - 1 {
                        return Err(DocumentError(format!(
                            "{label}: adapted basis must be {} linearly independent rows",
                            self.n - 1
                        )));
                    }
                    Flag::from_adapted_basis(&m).map_err(|e| DocumentError(format!("{label}: {e}")))?
                }
            };
            flags.push(flag);
        }
        FlagCode::new(flags).map_err(|e| match e {
            flagdist::Error::DuplicateFlag { first, second } => DocumentError(format!(
                "flag {} duplicates flag {}",
                second + 1,
                first + 1
            )),
            other => DocumentError(other.to_string()),
        })
    }
}

fn json_list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn flag_json(flag: &Flag) -> String {
    let mats: Vec<String> = flag
        .subspaces()
        .iter()
        .map(|s| json_list(s.basis().to_rows().into_iter().map(json_list)))
        .collect();
    format!("[{}]", mats.join(", "))
}

/// Renders a realized pair as a two-flag document with a verification block.
pub fn pair_document(pair: &FlagPair, vector: &str, flag_distance: usize, collapses: &[usize]) -> String {
    let tv = pair.first.type_vector();
    let mut out = String::new();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "  \"n\": {},", pair.ambient());
    let _ = writeln!(out, "  \"q\": {},", pair.field().order());
    let _ = writeln!(out, "  \"type\": {},", json_list(tv.dims()));
    let _ = writeln!(out, "  \"flags\": [");
    let _ = writeln!(out, "    {},", flag_json(&pair.first));
    let _ = writeln!(out, "    {}", flag_json(&pair.second));
    let _ = writeln!(out, "  ],");
    let _ = writeln!(out, "  \"verification\": {{");
    let _ = writeln!(out, "    \"distance_vector\": \"{vector}\",");
    let _ = writeln!(out, "    \"flag_distance\": {flag_distance},");
    let _ = writeln!(out, "    \"collapse_points\": {},", json_list(collapses));
    let _ = writeln!(out, "    \"disjoint\": {}", collapses.is_empty());
    let _ = writeln!(out, "  }}");
    let _ = writeln!(out, "}}");
    out
}
