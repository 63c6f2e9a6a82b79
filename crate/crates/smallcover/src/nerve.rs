//! Dual (nerve) complex analysis: facet adjacency, 2-neighborliness,
//! minimal non-faces, flagness, and combinatorial cube recognition.

use std::collections::HashSet;

use itertools::Itertools;

use crate::polytope::SimplePolytope;

/// Symmetric facet-adjacency relation; `(i, j)` holds iff the facets share a
/// codimension-2 face. The diagonal is true by convention.
#[derive(Debug, Clone)]
pub struct AdjacencyGraph {
    r: usize,
    adj: Vec<Vec<bool>>,
}

impl AdjacencyGraph {
    pub fn num_facets(&self) -> usize {
        self.r
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i][j]
    }

    /// True when every pair of facets is adjacent.
    pub fn is_complete(&self) -> bool {
        self.adj.iter().all(|row| row.iter().all(|&x| x))
    }

    /// Facets not adjacent to `i` (excluding `i` itself).
    pub fn non_neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.r).filter(|&j| !self.adj[i][j]).collect()
    }
}

/// A minimal non-face of the dual complex: a facet set that is not a face
/// while every proper subset is.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MinimalNonFace {
    pub facets: Vec<usize>,
}

pub fn adjacency(p: &SimplePolytope) -> AdjacencyGraph {
    let r = p.num_facets();
    let mut adj = vec![vec![false; r]; r];
    for (i, row) in adj.iter_mut().enumerate() {
        row[i] = true;
    }
    for v in p.vertices() {
        for pair in v.iter().combinations(2) {
            adj[*pair[0]][*pair[1]] = true;
            adj[*pair[1]][*pair[0]] = true;
        }
    }
    AdjacencyGraph { r, adj }
}

pub fn is_two_neighborly(p: &SimplePolytope) -> bool {
    adjacency(p).is_complete()
}

/// Complete list of minimal non-faces, in (cardinality, lexicographic) order.
///
/// Enumeration ascends by cardinality `c`, extending each face of cardinality
/// `c - 1` by a facet beyond its maximum; this generates every candidate
/// exactly once, since a minimal non-face minus its maximum is a face. The
/// cap `c <= n + 1` is forced: all proper subsets of a minimal non-face are
/// faces and faces have at most `n` facets.
pub fn minimal_non_faces(p: &SimplePolytope) -> Vec<MinimalNonFace> {
    let n = p.dim();
    let r = p.num_facets();
    // faces grouped by cardinality
    let mut faces: Vec<HashSet<Vec<usize>>> = vec![HashSet::new(); n + 1];
    for v in p.vertices() {
        for c in 1..=n {
            for s in v.iter().copied().combinations(c) {
                faces[c].insert(s);
            }
        }
    }
    let mut result = Vec::new();
    for c in 2..=(n + 1) {
        for base in faces[c - 1].iter() {
            let start = base.last().copied().map_or(0, |m| m + 1);
            for j in start..r {
                let mut s = base.clone();
                s.push(j);
                if c <= n && faces[c].contains(&s) {
                    continue;
                }
                // all proper subsets must be faces; the one missing j is `base`
                let minimal = (0..c - 1).all(|drop| {
                    let sub: Vec<usize> = s
                        .iter()
                        .enumerate()
                        .filter(|&(pos, _)| pos != drop)
                        .map(|(_, &f)| f)
                        .collect();
                    faces[c - 1].contains(&sub)
                });
                if minimal {
                    result.push(MinimalNonFace { facets: s });
                }
            }
        }
    }
    result.sort_by(|a, b| {
        (a.facets.len(), &a.facets).cmp(&(b.facets.len(), &b.facets))
    });
    result
}

/// A polytope is flag when every minimal non-face is a non-adjacent pair.
pub fn is_flag(p: &SimplePolytope) -> bool {
    minimal_non_faces(p).iter().all(|m| m.facets.len() == 2)
}

/// Recognizes the combinatorial `n`-cube.
///
/// Requires `r = 2n` facets admitting a perfect pairing of each facet with
/// its unique non-neighbor, such that every mixed selection of one facet per
/// pair is a vertex — i.e. the dual boundary complex is the boundary of the
/// `n`-dimensional crosspolytope. Fails fast if any facet has a number of
/// non-neighbors other than one.
pub fn is_cube(p: &SimplePolytope) -> bool {
    let n = p.dim();
    let r = p.num_facets();
    if r != 2 * n {
        return false;
    }
    let adj = adjacency(p);
    let mut partner = vec![usize::MAX; r];
    for i in 0..r {
        let non = adj.non_neighbors(i);
        if non.len() != 1 {
            return false;
        }
        partner[i] = non[0];
    }
    for (i, &q) in partner.iter().enumerate() {
        if partner[q] != i {
            return false;
        }
    }
    let pairs: Vec<(usize, usize)> = (0..r)
        .filter(|&i| i < partner[i])
        .map(|i| (i, partner[i]))
        .collect();
    if pairs.len() != n {
        return false;
    }
    for selection in 0..1usize << n {
        let mut chosen: Vec<usize> = pairs
            .iter()
            .enumerate()
            .map(|(b, &(f, g))| if selection >> b & 1 == 0 { f } else { g })
            .collect();
        chosen.sort_unstable();
        if !p.is_face(&chosen) {
            return false;
        }
    }
    true
}
