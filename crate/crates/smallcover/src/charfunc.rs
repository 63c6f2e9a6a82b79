//! Characteristic functions over the field of two elements: validation of
//! the per-vertex basis condition, existence and enumeration of small-cover
//! data by backtracking search, and the canonical constructors (the identity
//! function, Bott matrices over cubes, and tower data over products of
//! simplices).

use std::collections::HashSet;

use thiserror::Error;

use crate::gf2::{self, XorBasis};
use crate::nerve;
use crate::polytope::SimplePolytope;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharFuncError {
    #[error("expected {expected_cols} columns of {expected_t} bits, got {cols} columns of {t} bits")]
    WrongShape {
        expected_t: usize,
        expected_cols: usize,
        t: usize,
        cols: usize,
    },
    #[error("column {column} is zero")]
    ZeroColumn { column: usize },
    #[error("instance too large for exhaustive treatment: {0}")]
    TooLarge(String),
    #[error("entry ({row},{col}) is on or below the diagonal")]
    NotUpperTriangular { row: usize, col: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

/// A map from facets to `(Z_2)^t`, stored as one word-packed column per
/// facet; bit `i` of a column is the coefficient of the `i`-th basis vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharFunc {
    t: usize,
    cols: Vec<u64>,
}

impl CharFunc {
    pub fn new(t: usize, cols: Vec<u64>) -> Result<Self, CharFuncError> {
        if t == 0 || t > gf2::MAX_WIDTH {
            return Err(CharFuncError::BadParameter(format!(
                "target rank {t} out of range 1..={}",
                gf2::MAX_WIDTH
            )));
        }
        if t < 64 {
            if let Some(column) = cols.iter().position(|&c| c >> t != 0) {
                return Err(CharFuncError::BadParameter(format!(
                    "column {column} has bits beyond the target rank {t}"
                )));
            }
        }
        Ok(Self { t, cols })
    }

    /// Target rank: the dimension of the value space.
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn num_columns(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, facet: usize) -> u64 {
        self.cols[facet]
    }

    pub fn columns(&self) -> &[u64] {
        &self.cols
    }
}

/// Outcome of the per-vertex nondegeneracy check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CharFuncValidity {
    Valid,
    /// First vertex (in vertex order) whose columns are dependent.
    InvalidAt { vertex: usize },
}

/// The identity characteristic function with `t = r`: facet `i` receives the
/// `i`-th basis vector. Its quotient complex is the real moment-angle
/// manifold.
pub fn lambda0(p: &SimplePolytope) -> Result<CharFunc, CharFuncError> {
    let r = p.num_facets();
    if r > gf2::MAX_WIDTH {
        return Err(CharFuncError::TooLarge(format!(
            "{r} facets exceed the {} supported coordinates",
            gf2::MAX_WIDTH
        )));
    }
    CharFunc::new(r, (0..r).map(|i| 1u64 << i).collect())
}

/// Checks the small-cover condition: `t = n`, all columns nonzero, and the
/// `n` columns at every vertex form a basis of `(Z_2)^n`.
pub fn validate_charfunc(
    p: &SimplePolytope,
    lambda: &CharFunc,
) -> Result<CharFuncValidity, CharFuncError> {
    let n = p.dim();
    let r = p.num_facets();
    if lambda.t != n || lambda.cols.len() != r {
        return Err(CharFuncError::WrongShape {
            expected_t: n,
            expected_cols: r,
            t: lambda.t,
            cols: lambda.cols.len(),
        });
    }
    if let Some(column) = lambda.cols.iter().position(|&c| c == 0) {
        return Err(CharFuncError::ZeroColumn { column });
    }
    for (vertex, v) in p.vertices().iter().enumerate() {
        if !gf2::is_invertible(
            &v.iter().map(|&f| lambda.cols[f]).collect::<Vec<_>>(),
            n,
        ) {
            return Ok(CharFuncValidity::InvalidAt { vertex });
        }
    }
    Ok(CharFuncValidity::Valid)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoSmallCoverReason {
    /// 2-neighborly with at least `2^n` facets: adjacent facets need
    /// distinct nonzero values, and `(Z_2)^n` has only `2^n - 1` of them.
    Pigeonhole,
    SearchExhausted,
}

impl std::fmt::Display for NoSmallCoverReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Pigeonhole => write!(f, "pigeonhole (2-neighborly, r >= 2^n)"),
            Self::SearchExhausted => write!(f, "search exhausted"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmallCoverSearch {
    Exists(CharFunc),
    NoneExists(NoSmallCoverReason),
}

/// Decides whether the polytope admits a small cover.
///
/// After the pigeonhole shortcut, runs a backtracking search over facet
/// assignments in most-constrained-first order with incremental per-vertex
/// rank checks. The first vertex's columns are pinned to the standard basis,
/// which is harmless for existence: validity is invariant under base change
/// of the value space.
pub fn exists_small_cover(p: &SimplePolytope) -> Result<SmallCoverSearch, CharFuncError> {
    let n = p.dim();
    if n > 16 {
        return Err(CharFuncError::TooLarge(format!(
            "existence search over (Z_2)^{n} values is not feasible"
        )));
    }
    let r = p.num_facets();
    if nerve::is_two_neighborly(p) && r >= 1usize << n {
        return Ok(SmallCoverSearch::NoneExists(NoSmallCoverReason::Pigeonhole));
    }
    let mut witness = None;
    search_assignments(p, true, &mut |cols| {
        witness = Some(CharFunc::new(n, cols.to_vec()).expect("search yields valid shape"));
        false
    });
    Ok(match witness {
        Some(lambda) => SmallCoverSearch::Exists(lambda),
        None => SmallCoverSearch::NoneExists(NoSmallCoverReason::SearchExhausted),
    })
}

/// Backtracking over facet assignments. Facet order is dynamic: each step
/// assigns the facet that appears in the most nearly-complete vertices
/// (most-constrained-first), ties broken by index. Values are tried in
/// increasing numeric order, so solutions arrive in a deterministic order.
/// `on_solution` returns whether to continue searching.
fn search_assignments(
    p: &SimplePolytope,
    fix_first_vertex: bool,
    on_solution: &mut dyn FnMut(&[u64]) -> bool,
) {
    let n = p.dim();
    let r = p.num_facets();
    let vertices = p.vertices();
    let mut facet_vertices: Vec<Vec<usize>> = vec![Vec::new(); r];
    for (vi, v) in vertices.iter().enumerate() {
        for &f in v {
            facet_vertices[f].push(vi);
        }
    }
    let mut cols = vec![0u64; r];
    let mut assigned = vec![false; r];
    if fix_first_vertex {
        for (j, &f) in vertices[0].iter().enumerate() {
            cols[f] = 1 << j;
            assigned[f] = true;
        }
    }

    fn vertex_ok(v: &[usize], cols: &[u64], assigned: &[bool]) -> bool {
        let mut basis = XorBasis::new();
        v.iter()
            .filter(|&&f| assigned[f])
            .all(|&f| basis.insert(cols[f]))
    }

    // the pinned columns of the first vertex must themselves pass
    if fix_first_vertex {
        for v in vertices {
            if !vertex_ok(v, &cols, &assigned) {
                return;
            }
        }
    }

    fn recurse(
        p: &SimplePolytope,
        n: usize,
        facet_vertices: &[Vec<usize>],
        cols: &mut Vec<u64>,
        assigned: &mut Vec<bool>,
        on_solution: &mut dyn FnMut(&[u64]) -> bool,
    ) -> bool {
        let r = cols.len();
        let next = (0..r)
            .filter(|&f| !assigned[f])
            .max_by_key(|&f| {
                let score: usize = facet_vertices[f]
                    .iter()
                    .map(|&vi| {
                        p.vertices()[vi]
                            .iter()
                            .filter(|&&g| assigned[g])
                            .count()
                    })
                    .sum();
                (score, std::cmp::Reverse(f))
            });
        let Some(f) = next else {
            return on_solution(cols);
        };
        assigned[f] = true;
        for value in 1..1u64 << n {
            cols[f] = value;
            let ok = facet_vertices[f]
                .iter()
                .all(|&vi| vertex_ok(&p.vertices()[vi], cols, assigned));
            if ok && !recurse(p, n, facet_vertices, cols, assigned, on_solution) {
                assigned[f] = false;
                cols[f] = 0;
                return false;
            }
        }
        assigned[f] = false;
        cols[f] = 0;
        true
    }

    recurse(p, n, &facet_vertices, &mut cols, &mut assigned, on_solution);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitMode {
    /// Count every valid characteristic function.
    Raw,
    /// Count orbits under post-composition by `GL(n, 2)`, reporting each
    /// orbit by its lexicographically least member.
    Gl,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub count: usize,
    pub representatives: Vec<CharFunc>,
}

/// Enumerates all valid characteristic functions, optionally up to base
/// change of the value space. Exhaustive, so guarded to small instances.
pub fn enumerate_charfuncs(
    p: &SimplePolytope,
    mode: OrbitMode,
) -> Result<Enumeration, CharFuncError> {
    let n = p.dim();
    let r = p.num_facets();
    if n > 4 || r > 12 {
        return Err(CharFuncError::TooLarge(format!(
            "enumeration is exhaustive; refusing n = {n} > 4 or r = {r} > 12"
        )));
    }
    let mut all: Vec<Vec<u64>> = Vec::new();
    search_assignments(p, false, &mut |cols| {
        all.push(cols.to_vec());
        true
    });
    all.sort_unstable();
    match mode {
        OrbitMode::Raw => Ok(Enumeration {
            count: all.len(),
            representatives: all
                .into_iter()
                .map(|cols| CharFunc::new(n, cols).expect("search yields valid shape"))
                .collect(),
        }),
        OrbitMode::Gl => {
            let group = gl_matrices(n);
            let mut seen: HashSet<Vec<u64>> = HashSet::new();
            let mut reps = Vec::new();
            for cols in &all {
                if seen.contains(cols) {
                    continue;
                }
                reps.push(CharFunc::new(n, cols.clone()).expect("valid shape"));
                for g in &group {
                    let image: Vec<u64> = cols.iter().map(|&c| apply_gl(g, c)).collect();
                    seen.insert(image);
                }
            }
            Ok(Enumeration {
                count: reps.len(),
                representatives: reps,
            })
        }
    }
}

/// All invertible `n x n` matrices over GF(2), each given by its columns
/// (images of the basis vectors). Exhaustive; `n <= 4` keeps this at 20160.
fn gl_matrices(n: usize) -> Vec<Vec<u64>> {
    assert!(n <= 4, "GL enumeration is exhaustive");
    let size = 1u64 << n;
    let mut result = Vec::new();
    let mut stack: Vec<Vec<u64>> = vec![Vec::new()];
    while let Some(partial) = stack.pop() {
        if partial.len() == n {
            result.push(partial);
            continue;
        }
        let basis = XorBasis::from_span(partial.iter().copied());
        for v in 1..size {
            if !basis.contains(v) {
                let mut next = partial.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    result.sort_unstable();
    result
}

fn apply_gl(g: &[u64], v: u64) -> u64 {
    let mut out = 0;
    for (i, &col) in g.iter().enumerate() {
        if v >> i & 1 == 1 {
            out ^= col;
        }
    }
    out
}

/// Strictly upper-triangular bit matrix encoding a tower of interval bundles
/// over the cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottMatrix {
    n: usize,
    rows: Vec<u64>,
}

impl BottMatrix {
    /// Builds from a dense 0/1 entry matrix; entries on or below the
    /// diagonal must be zero.
    pub fn new(entries: &[Vec<u8>]) -> Result<Self, CharFuncError> {
        let n = entries.len();
        if n == 0 || n > 16 {
            return Err(CharFuncError::BadParameter(
                "Bott matrix needs 1 <= n <= 16".into(),
            ));
        }
        let mut rows = vec![0u64; n];
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(CharFuncError::BadParameter(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &e) in row.iter().enumerate() {
                match e {
                    0 => {}
                    1 if j > i => rows[i] |= 1 << j,
                    1 => return Err(CharFuncError::NotUpperTriangular { row: i, col: j }),
                    _ => {
                        return Err(CharFuncError::BadParameter(format!(
                            "entry ({i},{j}) is {e}, expected 0 or 1"
                        )))
                    }
                }
            }
        }
        Ok(Self { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }
}

/// The small-cover data of a Bott matrix: over the `n`-cube with facet pairs
/// `(j, n + j)`, facet `j` receives the `j`-th basis vector and its opposite
/// receives the same plus the lower-indexed entries of column `j`. The column
/// matrix at every vertex is unitriangular, so the result always validates.
pub fn bott_charfunc(a: &BottMatrix) -> (SimplePolytope, CharFunc) {
    let n = a.n;
    let p = SimplePolytope::cube(n).expect("guarded by BottMatrix::new");
    let mut cols = vec![0u64; 2 * n];
    for j in 0..n {
        cols[j] = 1 << j;
        let mut g = 1u64 << j;
        for i in 0..j {
            if a.entry(i, j) {
                g |= 1 << i;
            }
        }
        cols[n + j] = g;
    }
    let lambda = CharFunc::new(n, cols).expect("columns fit in n bits");
    (p, lambda)
}

/// The canonical characteristic function of the trivial tower over a product
/// of simplices: each simplex block takes the basis vectors of its coordinate
/// block, with the block's last facet receiving their sum.
pub fn generalized_bott_charfunc(
    block_dims: &[usize],
) -> Result<(SimplePolytope, CharFunc), CharFuncError> {
    if block_dims.is_empty() || block_dims.contains(&0) {
        return Err(CharFuncError::BadParameter(
            "need at least one block, all of dimension >= 1".into(),
        ));
    }
    let n: usize = block_dims.iter().sum();
    if n > 16 {
        return Err(CharFuncError::TooLarge(format!(
            "total dimension {n} > 16"
        )));
    }
    let mut polytope: Option<SimplePolytope> = None;
    let mut cols = Vec::with_capacity(n + block_dims.len());
    let mut bit_offset = 0;
    for &d in block_dims {
        let simplex = SimplePolytope::simplex(d).expect("d >= 1");
        polytope = Some(match polytope {
            None => simplex,
            Some(p) => p.product(&simplex).expect("product of valid polytopes"),
        });
        for j in 0..d {
            cols.push(1u64 << (bit_offset + j));
        }
        cols.push(((1u64 << d) - 1) << bit_offset);
        bit_offset += d;
    }
    let lambda = CharFunc::new(n, cols)?;
    Ok((polytope.expect("at least one block"), lambda))
}
