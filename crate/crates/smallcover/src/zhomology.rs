//! The quotient cell complex of a polytope and characteristic data, and its
//! homology over the field of two elements.
//!
//! The complex glues `2^t` copies of the polytope along faces: a cell is a
//! pair of a face `S` (a facet set) and a coset of `Λ_S`, the span of the
//! characteristic columns indexed by `S`. With the identity function this is
//! the real moment-angle manifold; with a valid small-cover function it is
//! the small cover. Boundary maps have coefficient 1 over GF(2) and Betti
//! numbers fall out of two rank computations per dimension.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::charfunc::CharFunc;
use crate::gf2::{BitMatrix, XorBasis};
use crate::polytope::SimplePolytope;

/// Default ceiling on the total number of cells of a built complex.
pub const DEFAULT_CELL_GUARD: usize = 1 << 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("facet set {face:?} spans rank {rank}, expected {expected}; the gluing is not locally standard")]
    RankDefect {
        face: Vec<usize>,
        rank: usize,
        expected: usize,
    },
    #[error("complex needs {cells} cells, over the guard of {guard}")]
    TooLarge { cells: usize, guard: usize },
    #[error("characteristic function has {cols} columns for {r} facets")]
    WrongShape { cols: usize, r: usize },
}

/// One cell: a face index (within its codimension's face list) and the
/// canonical representative of a coset of the face's column span.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub face: usize,
    pub coset: u64,
}

#[derive(Debug)]
pub struct QuotientComplex {
    dim: usize,
    t: usize,
    /// Faces by codimension: `faces[k]` lists sorted facet sets of size `k`.
    faces: Vec<Vec<Vec<usize>>>,
    /// Cells by dimension `d`; the face index points into `faces[n - d]`.
    cells: Vec<Vec<Cell>>,
    /// `boundaries[d - 1]` is the boundary map from dimension `d` to `d - 1`.
    boundaries: Vec<BitMatrix>,
}

impl QuotientComplex {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.len()).collect()
    }

    pub fn cells(&self, d: usize) -> &[Cell] {
        &self.cells[d]
    }

    /// Facet set of the face underlying a cell of dimension `d`.
    pub fn cell_face(&self, d: usize, cell: &Cell) -> &[usize] {
        &self.faces[self.dim - d][cell.face]
    }

    /// Boundary operator from dimension `d` to `d - 1` (requires `d >= 1`).
    pub fn boundary(&self, d: usize) -> &BitMatrix {
        &self.boundaries[d - 1]
    }

    /// JSON dump of cells and boundary incidences for external verification.
    pub fn dump_json(&self) -> serde_json::Value {
        let cells: Vec<Vec<serde_json::Value>> = (0..=self.dim)
            .map(|d| {
                self.cells[d]
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "face": self.cell_face(d, c),
                            "coset": c.coset,
                        })
                    })
                    .collect()
            })
            .collect();
        let boundaries: Vec<Vec<Vec<usize>>> = (1..=self.dim)
            .map(|d| {
                let m = self.boundary(d);
                (0..m.cols())
                    .map(|c| (0..m.rows()).filter(|&r| m.get(r, c)).collect())
                    .collect()
            })
            .collect();
        serde_json::json!({
            "v": 1,
            "t": self.t,
            "cell_counts": self.cell_counts(),
            "cells": cells,
            "boundaries": boundaries,
        })
    }
}

/// Betti numbers over the field of two elements, plus the Euler
/// characteristic (their alternating sum, which always equals the
/// alternating cell-count sum).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    pub b: Vec<usize>,
    pub euler: i64,
}

/// Builds the quotient complex of `(p, lambda)`.
///
/// Every face's column span must have rank equal to the face's codimension
/// (the locally standard condition); identity data and valid small-cover
/// data always satisfy it. `guard` caps the total cell count.
pub fn build_complex(
    p: &SimplePolytope,
    lambda: &CharFunc,
    guard: usize,
) -> Result<QuotientComplex, ComplexError> {
    let n = p.dim();
    let r = p.num_facets();
    let t = lambda.t();
    if lambda.num_columns() != r {
        return Err(ComplexError::WrongShape {
            cols: lambda.num_columns(),
            r,
        });
    }

    // faces and their spans, checking ranks and the cell guard first
    let mut faces: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n + 1);
    let mut spans: Vec<Vec<XorBasis>> = Vec::with_capacity(n + 1);
    let mut total_cells = 0usize;
    for k in 0..=n {
        let level: Vec<Vec<usize>> = p
            .faces_of_dim(n - k)
            .expect("codim in range")
            .into_iter()
            .map(|f| f.facets)
            .collect();
        let mut level_spans = Vec::with_capacity(level.len());
        for face in &level {
            let basis = XorBasis::from_span(face.iter().map(|&i| lambda.column(i)));
            if basis.rank() != k {
                return Err(ComplexError::RankDefect {
                    face: face.clone(),
                    rank: basis.rank(),
                    expected: k,
                });
            }
            total_cells += 1usize << (t - k);
            if total_cells > guard {
                return Err(ComplexError::TooLarge {
                    cells: total_cells,
                    guard,
                });
            }
            level_spans.push(basis);
        }
        faces.push(level);
        spans.push(level_spans);
    }

    // cells by dimension, with an index for boundary targets
    let mut cells: Vec<Vec<Cell>> = vec![Vec::new(); n + 1];
    let mut index: Vec<HashMap<(usize, u64), usize>> = vec![HashMap::new(); n + 1];
    for k in 0..=n {
        let d = n - k;
        for (fi, basis) in spans[k].iter().enumerate() {
            for rep in basis.coset_representatives(t) {
                let id = cells[d].len();
                cells[d].push(Cell {
                    face: fi,
                    coset: rep,
                });
                index[d].insert((fi, rep), id);
            }
        }
    }

    // face extension lists: codim-k face -> indices of codim-(k+1) superfaces
    let mut face_index: Vec<HashMap<&[usize], usize>> = Vec::with_capacity(n + 1);
    for level in &faces {
        let mut m: HashMap<&[usize], usize> = HashMap::new();
        for (fi, f) in level.iter().enumerate() {
            m.insert(f.as_slice(), fi);
        }
        face_index.push(m);
    }
    let mut extensions: Vec<Vec<Vec<usize>>> = Vec::with_capacity(n);
    for k in 0..n {
        let mut level_ext = Vec::with_capacity(faces[k].len());
        for face in &faces[k] {
            let mut ext = Vec::new();
            for j in 0..r {
                if face.binary_search(&j).is_ok() {
                    continue;
                }
                let mut sup = face.clone();
                let pos = sup.binary_search(&j).unwrap_err();
                sup.insert(pos, j);
                if let Some(&fi2) = face_index[k + 1].get(sup.as_slice()) {
                    ext.push(fi2);
                }
            }
            level_ext.push(ext);
        }
        extensions.push(level_ext);
    }

    // boundary incidence lists per dimension
    let mut bnd_lists: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n + 1];
    for d in 1..=n {
        let k = n - d;
        let mut lists = Vec::with_capacity(cells[d].len());
        for cell in &cells[d] {
            let mut targets = Vec::with_capacity(extensions[k][cell.face].len());
            for &fi2 in &extensions[k][cell.face] {
                let rep = spans[k + 1][fi2].reduce(cell.coset);
                targets.push(index[d - 1][&(fi2, rep)] as u32);
            }
            targets.sort_unstable();
            lists.push(targets);
        }
        bnd_lists[d] = lists;
    }

    // verify the composite of consecutive boundary steps vanishes mod 2
    let mut scratch = Vec::new();
    for d in 2..=n {
        for (ci, targets) in bnd_lists[d].iter().enumerate() {
            scratch.clear();
            for &mid in targets {
                scratch.extend_from_slice(&bnd_lists[d - 1][mid as usize]);
            }
            scratch.sort_unstable();
            let mut run = 0usize;
            for w in 0..=scratch.len() {
                if w < scratch.len() && (w == 0 || scratch[w] == scratch[w - 1]) {
                    run += 1;
                } else {
                    assert!(
                        run.is_multiple_of(2),
                        "boundary composite has odd coefficient at cell {ci} of dim {d}"
                    );
                    run = 1;
                }
            }
        }
    }

    let mut boundaries = Vec::with_capacity(n);
    for d in 1..=n {
        let mut m = BitMatrix::zeros(cells[d - 1].len(), cells[d].len());
        for (ci, targets) in bnd_lists[d].iter().enumerate() {
            for &row in targets {
                m.flip(row as usize, ci);
            }
        }
        boundaries.push(m);
    }

    Ok(QuotientComplex {
        dim: n,
        t,
        faces,
        cells,
        boundaries,
    })
}

/// Betti numbers by Gaussian elimination on the boundary operators.
pub fn z2_betti(c: &QuotientComplex) -> BettiVector {
    let n = c.dim;
    let counts = c.cell_counts();
    let mut ranks = vec![0usize; n + 2];
    for d in 1..=n {
        ranks[d] = c.boundary(d).rank();
    }
    let b: Vec<usize> = (0..=n)
        .map(|d| counts[d] - ranks[d] - ranks[d + 1])
        .collect();
    let euler: i64 = b
        .iter()
        .enumerate()
        .map(|(d, &bd)| if d % 2 == 0 { bd as i64 } else { -(bd as i64) })
        .sum();
    let cell_euler: i64 = counts
        .iter()
        .enumerate()
        .map(|(d, &cd)| if d % 2 == 0 { cd as i64 } else { -(cd as i64) })
        .sum();
    assert_eq!(euler, cell_euler, "rank bookkeeping is inconsistent");
    BettiVector { b, euler }
}

/// Closed form of the alternating cell-count sum of the quotient complex on
/// `2^t` copies, without building it: each face of dimension `d` carries
/// `2^(t-n+d)` cells. Requires `t >= n`; intended for desk-scale `t`.
pub fn euler_formula(p: &SimplePolytope, t: usize) -> i64 {
    let n = p.dim();
    assert!(t >= n, "euler_formula needs t >= n");
    assert!(t - n + n < 63, "2^{t} overflows the cell counts");
    let fv = p.f_and_h_vector();
    let mut total: i128 = 0;
    for (d, &fd) in fv.f.iter().enumerate() {
        let term = fd as i128 * (1i128 << (t - n + d));
        total += if d % 2 == 0 { term } else { -term };
    }
    i64::try_from(total).expect("desk-scale cell counts fit i64")
}
