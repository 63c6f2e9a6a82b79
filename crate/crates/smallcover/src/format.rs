//! JSON file schemas. Every file carries a schema version field `v`;
//! structures are serialized with a fixed field order so identical inputs
//! produce identical bytes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charfunc::{BottMatrix, CharFunc, CharFuncError};
use crate::polytope::{PolytopeError, SimplePolytope};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {found}, expected {SCHEMA_VERSION}")]
    BadVersion { found: u32 },
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    CharFunc(#[from] CharFuncError),
    #[error("{0}")]
    BadField(String),
}

/// `{ "v": 1, "dim": n, "num_facets": r, "vertices": [[facet indices]...] }`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeFile {
    pub v: u32,
    pub dim: usize,
    pub num_facets: usize,
    pub vertices: Vec<Vec<usize>>,
}

impl PolytopeFile {
    pub fn from_polytope(p: &SimplePolytope) -> Self {
        Self {
            v: SCHEMA_VERSION,
            dim: p.dim(),
            num_facets: p.num_facets(),
            vertices: p.vertices().to_vec(),
        }
    }

    pub fn into_polytope(self) -> Result<SimplePolytope, FormatError> {
        if self.v != SCHEMA_VERSION {
            return Err(FormatError::BadVersion { found: self.v });
        }
        Ok(SimplePolytope::new(self.dim, self.num_facets, self.vertices)?)
    }
}

/// `{ "v": 1, "t": n, "columns": [[bits per facet]...] }`; bit `i` of a
/// column is the coefficient of the `i`-th basis vector.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CharFuncFile {
    pub v: u32,
    pub t: usize,
    pub columns: Vec<Vec<u8>>,
}

impl CharFuncFile {
    pub fn from_charfunc(l: &CharFunc) -> Self {
        Self {
            v: SCHEMA_VERSION,
            t: l.t(),
            columns: l
                .columns()
                .iter()
                .map(|&c| (0..l.t()).map(|i| (c >> i & 1) as u8).collect())
                .collect(),
        }
    }

    pub fn into_charfunc(self) -> Result<CharFunc, FormatError> {
        if self.v != SCHEMA_VERSION {
            return Err(FormatError::BadVersion { found: self.v });
        }
        let mut cols = Vec::with_capacity(self.columns.len());
        for (j, bits) in self.columns.iter().enumerate() {
            if bits.len() != self.t {
                return Err(FormatError::BadField(format!(
                    "column {j} has {} bits, expected {}",
                    bits.len(),
                    self.t
                )));
            }
            let mut col = 0u64;
            for (i, &b) in bits.iter().enumerate() {
                match b {
                    0 => {}
                    1 => col |= 1 << i,
                    _ => {
                        return Err(FormatError::BadField(format!(
                            "column {j} bit {i} is {b}, expected 0 or 1"
                        )))
                    }
                }
            }
            cols.push(col);
        }
        Ok(CharFunc::new(self.t, cols)?)
    }
}

/// `{ "v": 1, "n": n, "entries": [[0/1; n]; n] }`, strictly upper triangular.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BottMatrixFile {
    pub v: u32,
    pub n: usize,
    pub entries: Vec<Vec<u8>>,
}

impl BottMatrixFile {
    pub fn from_matrix(a: &BottMatrix) -> Self {
        let n = a.n();
        Self {
            v: SCHEMA_VERSION,
            n,
            entries: (0..n)
                .map(|i| (0..n).map(|j| a.entry(i, j) as u8).collect())
                .collect(),
        }
    }

    pub fn into_matrix(self) -> Result<BottMatrix, FormatError> {
        if self.v != SCHEMA_VERSION {
            return Err(FormatError::BadVersion { found: self.v });
        }
        if self.entries.len() != self.n {
            return Err(FormatError::BadField(format!(
                "{} rows for declared size {}",
                self.entries.len(),
                self.n
            )));
        }
        Ok(BottMatrix::new(&self.entries)?)
    }
}

pub fn polytope_from_json(s: &str) -> Result<SimplePolytope, FormatError> {
    serde_json::from_str::<PolytopeFile>(s)?.into_polytope()
}

pub fn polytope_to_json(p: &SimplePolytope) -> String {
    let mut s = serde_json::to_string_pretty(&PolytopeFile::from_polytope(p))
        .expect("serialization of plain data cannot fail");
    s.push('\n');
    s
}

pub fn charfunc_from_json(s: &str) -> Result<CharFunc, FormatError> {
    serde_json::from_str::<CharFuncFile>(s)?.into_charfunc()
}

pub fn charfunc_to_json(l: &CharFunc) -> String {
    let mut s = serde_json::to_string_pretty(&CharFuncFile::from_charfunc(l))
        .expect("serialization of plain data cannot fail");
    s.push('\n');
    s
}

pub fn bott_from_json(s: &str) -> Result<BottMatrix, FormatError> {
    serde_json::from_str::<BottMatrixFile>(s)?.into_matrix()
}

/// Words are plain JSON lists of facet indices.
pub fn word_from_json(s: &str) -> Result<Vec<usize>, FormatError> {
    Ok(serde_json::from_str(s)?)
}

pub fn word_to_json(w: &[usize]) -> String {
    let mut s = serde_json::to_string(w).expect("serialization of plain data cannot fail");
    s.push('\n');
    s
}
