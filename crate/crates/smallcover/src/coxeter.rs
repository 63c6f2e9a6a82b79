//! The right-angled Coxeter group attached to a simple polytope: one
//! involutive generator per facet, with commuting relations exactly between
//! adjacent facets. Provides the Coxeter matrix and graph, the group
//! classification through graph components, the Gram form with exact
//! rational definiteness, and word-level views of the fundamental groups
//! (abelianization, geodesic normal forms, kernel membership).

use std::collections::{HashSet, VecDeque};

use num::{BigRational, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charfunc::{self, CharFunc, CharFuncValidity};
use crate::gf2;
use crate::nerve::{self, AdjacencyGraph};
use crate::polytope::SimplePolytope;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("word letter {letter} out of range for {r} facets")]
    BadIndex { letter: usize, r: usize },
    #[error("polytope has {r} facets; word-packed vectors support at most {max}")]
    TooManyFacets { r: usize, max: usize },
    #[error("invalid characteristic function: {0}")]
    InvalidCharFunc(String),
}

/// Order of the product of two generators: `1` on the diagonal, `2` for
/// adjacent facets, infinite otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoxeterOrder {
    One,
    Two,
    Infinity,
}

/// The Coxeter matrix together with the components of the Coxeter graph
/// (edges where the order is infinite; all finite off-diagonal orders are 2,
/// so no labeled edges occur).
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    pub r: usize,
    pub matrix: Vec<Vec<CoxeterOrder>>,
    /// Connected components of the Coxeter graph, each sorted, ordered by
    /// their minima.
    pub components: Vec<Vec<usize>>,
}

pub fn coxeter_system(p: &SimplePolytope) -> CoxeterSystem {
    let adj = nerve::adjacency(p);
    let r = p.num_facets();
    let matrix: Vec<Vec<CoxeterOrder>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    if i == j {
                        CoxeterOrder::One
                    } else if adj.is_adjacent(i, j) {
                        CoxeterOrder::Two
                    } else {
                        CoxeterOrder::Infinity
                    }
                })
                .collect()
        })
        .collect();
    let components = graph_components(&adj);
    CoxeterSystem {
        r,
        matrix,
        components,
    }
}

fn graph_components(adj: &AdjacencyGraph) -> Vec<Vec<usize>> {
    let r = adj.num_facets();
    let mut seen = vec![false; r];
    let mut components = Vec::new();
    for start in 0..r {
        if seen[start] {
            continue;
        }
        let mut comp = vec![];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(i) = queue.pop_front() {
            comp.push(i);
            for j in adj.non_neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// Classification of the right-angled Coxeter group by the components of its
/// Coxeter graph. Isolated nodes contribute order-2 factors; 2-node
/// components contribute infinite dihedral factors; any larger component
/// makes the group contain an infinite irreducible non-affine reflection
/// group (the only irreducible affine right-angled group is the infinite
/// dihedral one).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GroupClass {
    /// `(Z_2)^k` with one factor per facet.
    Finite { k: usize },
    /// `(Z_2)^k x (infinite dihedral)^l` with `k + 2l` facets.
    VirtuallyNilpotent { k: usize, l: usize },
    ContainsNonAffine { witness: Vec<usize> },
}

pub fn classify_group(p: &SimplePolytope) -> GroupClass {
    let system = coxeter_system(p);
    if let Some(big) = system.components.iter().find(|c| c.len() >= 3) {
        return GroupClass::ContainsNonAffine {
            witness: big.clone(),
        };
    }
    let k = system.components.iter().filter(|c| c.len() == 1).count();
    let l = system.components.iter().filter(|c| c.len() == 2).count();
    if l == 0 {
        GroupClass::Finite { k }
    } else {
        GroupClass::VirtuallyNilpotent { k, l }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Definiteness {
    PositiveDefinite,
    PositiveSemidefiniteDegenerate,
    Indefinite,
}

/// The Gram matrix of the standard bilinear form of the Coxeter system, with
/// exact rational entries: `1` on the diagonal, `0` for commuting pairs,
/// `-1` for infinite order.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    pub entries: Vec<Vec<BigRational>>,
    pub definiteness: Definiteness,
}

pub fn gram_definiteness(p: &SimplePolytope) -> GramMatrix {
    let system = coxeter_system(p);
    let r = system.r;
    let entries: Vec<Vec<BigRational>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| match system.matrix[i][j] {
                    CoxeterOrder::One => BigRational::from_integer(1.into()),
                    CoxeterOrder::Two => BigRational::zero(),
                    CoxeterOrder::Infinity => BigRational::from_integer((-1).into()),
                })
                .collect()
        })
        .collect();
    let definiteness = definiteness_by_elimination(&entries);
    GramMatrix {
        entries,
        definiteness,
    }
}

/// Symmetric Gaussian elimination with exact pivots: eliminate on positive
/// diagonal entries while any exist; the form is positive definite when all
/// `r` pivots are positive, positive semidefinite (degenerate) when the
/// remainder vanishes identically, and indefinite otherwise.
fn definiteness_by_elimination(entries: &[Vec<BigRational>]) -> Definiteness {
    let r = entries.len();
    let mut a: Vec<Vec<BigRational>> = entries.to_vec();
    let mut active: Vec<usize> = (0..r).collect();
    loop {
        let Some(pos) = active.iter().position(|&i| a[i][i].is_positive()) else {
            if active.is_empty() {
                return Definiteness::PositiveDefinite;
            }
            let all_zero = active
                .iter()
                .all(|&i| active.iter().all(|&j| a[i][j].is_zero()));
            return if all_zero {
                Definiteness::PositiveSemidefiniteDegenerate
            } else {
                Definiteness::Indefinite
            };
        };
        let piv = active.remove(pos);
        let d = a[piv][piv].clone();
        for &i in &active {
            if a[piv][i].is_zero() {
                continue;
            }
            let factor = &a[piv][i] / &d;
            for &j in &active {
                let delta = &factor * &a[piv][j];
                a[i][j] = &a[i][j] - &delta;
            }
        }
    }
}

/// Parity vector of a word in `(Z_2)^r`: bit `i` is the parity of the number
/// of occurrences of generator `i`.
pub fn abelianization(p: &SimplePolytope, word: &[usize]) -> Result<u64, CoxeterError> {
    let r = p.num_facets();
    if r > gf2::MAX_WIDTH {
        return Err(CoxeterError::TooManyFacets {
            r,
            max: gf2::MAX_WIDTH,
        });
    }
    let mut v = 0u64;
    for &letter in word {
        if letter >= r {
            return Err(CoxeterError::BadIndex { letter, r });
        }
        v ^= 1 << letter;
    }
    Ok(v)
}

/// Geodesic normal form by exhaustive rewriting.
///
/// Searches the commutation closure of the word (adjacent letters may swap
/// when their facets are adjacent) for a square `ss` and deletes it,
/// repeating until no deletion is reachable; the result is the
/// lexicographically least word of the final commutation class. Correct by
/// Tits' solution of the word problem; meant for short words.
pub fn normal_form(p: &SimplePolytope, word: &[usize]) -> Result<Vec<usize>, CoxeterError> {
    let r = p.num_facets();
    if let Some(&letter) = word.iter().find(|&&l| l >= r) {
        return Err(CoxeterError::BadIndex { letter, r });
    }
    let adj = nerve::adjacency(p);
    let mut current = word.to_vec();
    'reduce: loop {
        if current.len() < 2 {
            return Ok(current);
        }
        let mut visited: HashSet<Vec<usize>> = HashSet::new();
        let mut queue = VecDeque::new();
        visited.insert(current.clone());
        queue.push_back(current.clone());
        while let Some(w) = queue.pop_front() {
            if let Some(i) = (0..w.len() - 1).find(|&i| w[i] == w[i + 1]) {
                let mut shorter = w;
                shorter.drain(i..=i + 1);
                current = shorter;
                continue 'reduce;
            }
            for i in 0..w.len() - 1 {
                if w[i] != w[i + 1] && adj.is_adjacent(w[i], w[i + 1]) {
                    let mut swapped = w.clone();
                    swapped.swap(i, i + 1);
                    if !visited.contains(&swapped) {
                        visited.insert(swapped.clone());
                        queue.push_back(swapped);
                    }
                }
            }
        }
        return Ok(visited.into_iter().min().expect("class is nonempty"));
    }
}

/// Target kernel for fundamental-group membership of a word.
#[derive(Debug, Clone, Copy)]
pub enum Pi1Target<'a> {
    /// Kernel of the abelianization: the fundamental group of the real
    /// moment-angle manifold.
    MomentAngle,
    /// Kernel of the composite of the abelianization with the linear map
    /// sending the `i`-th basis vector to the `i`-th column: the fundamental
    /// group of the small cover attached to the characteristic function.
    SmallCover(&'a CharFunc),
}

pub fn pi1_membership(
    p: &SimplePolytope,
    word: &[usize],
    target: Pi1Target<'_>,
) -> Result<bool, CoxeterError> {
    let ab = abelianization(p, word)?;
    match target {
        Pi1Target::MomentAngle => Ok(ab == 0),
        Pi1Target::SmallCover(lambda) => {
            match charfunc::validate_charfunc(p, lambda) {
                Ok(CharFuncValidity::Valid) => {}
                Ok(CharFuncValidity::InvalidAt { vertex }) => {
                    return Err(CoxeterError::InvalidCharFunc(format!(
                        "columns at vertex {vertex} are dependent"
                    )))
                }
                Err(e) => return Err(CoxeterError::InvalidCharFunc(e.to_string())),
            }
            let mut image = 0u64;
            for i in 0..p.num_facets() {
                if ab >> i & 1 == 1 {
                    image ^= lambda.column(i);
                }
            }
            Ok(image == 0)
        }
    }
}

/// Structure of the fundamental group of the real moment-angle manifold, as
/// far as the Coxeter graph determines it: trivial exactly in the
/// 2-neighborly case, free abelian of rank `l` when the group is virtually
/// nilpotent with `l` infinite dihedral factors, and not virtually nilpotent
/// otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Pi1RzDescription {
    Trivial,
    FreeAbelian { rank: usize },
    NotVirtuallyNilpotent,
}

pub fn pi1_rz_description(p: &SimplePolytope) -> Pi1RzDescription {
    match classify_group(p) {
        GroupClass::Finite { .. } => Pi1RzDescription::Trivial,
        GroupClass::VirtuallyNilpotent { l, .. } => Pi1RzDescription::FreeAbelian { rank: l },
        GroupClass::ContainsNonAffine { .. } => Pi1RzDescription::NotVirtuallyNilpotent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::SimplePolytope;

    #[test]
    fn coxeter_system_shapes() {
        let s2 = SimplePolytope::simplex(2).unwrap();
        let sys = coxeter_system(&s2);
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j {
                    CoxeterOrder::One
                } else {
                    CoxeterOrder::Two
                };
                assert_eq!(sys.matrix[i][j], expect);
            }
        }
        assert_eq!(sys.components, vec![vec![0], vec![1], vec![2]]);

        let p4 = SimplePolytope::polygon(4).unwrap();
        let sys = coxeter_system(&p4);
        assert_eq!(sys.matrix[0][2], CoxeterOrder::Infinity);
        assert_eq!(sys.matrix[0][1], CoxeterOrder::Two);
        assert_eq!(sys.components, vec![vec![0, 2], vec![1, 3]]);

        // the complement of the adjacency 5-cycle is again a 5-cycle
        let p5 = SimplePolytope::polygon(5).unwrap();
        let sys = coxeter_system(&p5);
        assert_eq!(sys.components.len(), 1);
        assert_eq!(sys.components[0].len(), 5);
        let inf_degree = |i: usize| {
            (0..5)
                .filter(|&j| sys.matrix[i][j] == CoxeterOrder::Infinity)
                .count()
        };
        for i in 0..5 {
            assert_eq!(inf_degree(i), 2);
        }
    }

    #[test]
    fn group_classification() {
        assert_eq!(
            classify_group(&SimplePolytope::simplex(2).unwrap()),
            GroupClass::Finite { k: 3 }
        );
        assert_eq!(
            classify_group(&SimplePolytope::polygon(4).unwrap()),
            GroupClass::VirtuallyNilpotent { k: 0, l: 2 }
        );
        assert_eq!(
            classify_group(&SimplePolytope::polygon(5).unwrap()),
            GroupClass::ContainsNonAffine {
                witness: vec![0, 1, 2, 3, 4]
            }
        );
    }

    #[test]
    fn gram_definiteness_examples() {
        for n in 2..=4 {
            let g = gram_definiteness(&SimplePolytope::simplex(n).unwrap());
            assert_eq!(g.definiteness, Definiteness::PositiveDefinite);
        }
        // the segment's endpoints are non-adjacent: infinite dihedral group
        let g = gram_definiteness(&SimplePolytope::simplex(1).unwrap());
        assert_eq!(
            g.definiteness,
            Definiteness::PositiveSemidefiniteDegenerate
        );
        let g = gram_definiteness(&SimplePolytope::polygon(4).unwrap());
        assert_eq!(
            g.definiteness,
            Definiteness::PositiveSemidefiniteDegenerate
        );
        // block structure on the opposite pairs (0,2) and (1,3)
        let minus_one = BigRational::from_integer((-1).into());
        assert_eq!(g.entries[0][2], minus_one);
        assert_eq!(g.entries[1][3], minus_one);
        assert!(g.entries[0][1].is_zero());
        assert_eq!(g.entries[0][0], BigRational::from_integer(1.into()));
        let g = gram_definiteness(&SimplePolytope::polygon(5).unwrap());
        assert_eq!(g.definiteness, Definiteness::Indefinite);
    }

    #[test]
    fn gram_indefinite_witness_minor() {
        // frozen by hand: the principal minor {0,2,4} of the pentagon Gram
        // matrix is [[1,-1,0],[-1,1,-1],[0,-1,1]] with determinant -1
        let g = gram_definiteness(&SimplePolytope::polygon(5).unwrap());
        let e = &g.entries;
        let idx = [0usize, 2, 4];
        let m: Vec<Vec<BigRational>> = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| e[i][j].clone()).collect())
            .collect();
        let det = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
        assert_eq!(det, BigRational::from_integer((-1).into()));
    }

    #[test]
    fn abelianization_parities() {
        let s2 = SimplePolytope::simplex(2).unwrap();
        assert_eq!(abelianization(&s2, &[0, 1, 0]).unwrap(), 0b010);
        assert_eq!(abelianization(&s2, &[]).unwrap(), 0);
        assert_eq!(abelianization(&s2, &[0, 1, 0, 1]).unwrap(), 0);
        assert!(matches!(
            abelianization(&s2, &[3]),
            Err(CoxeterError::BadIndex { letter: 3, r: 3 })
        ));
        let wide = SimplePolytope::polygon(70).unwrap();
        assert!(matches!(
            abelianization(&wide, &[0]),
            Err(CoxeterError::TooManyFacets { r: 70, .. })
        ));
    }

    #[test]
    fn normal_form_relations() {
        let s2 = SimplePolytope::simplex(2).unwrap();
        assert_eq!(normal_form(&s2, &[0, 0]).unwrap(), Vec::<usize>::new());
        // facets 0,1 adjacent in the triangle: (st)^2 = 1
        assert_eq!(normal_form(&s2, &[0, 1, 0, 1]).unwrap(), Vec::<usize>::new());

        // opposite pair of the square: no relation applies
        let p4 = SimplePolytope::polygon(4).unwrap();
        let w = normal_form(&p4, &[0, 2, 0, 2]).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w, vec![0, 2, 0, 2]);
    }

    #[test]
    fn normal_form_is_idempotent_and_prefers_lex_least() {
        let s2 = SimplePolytope::simplex(2).unwrap();
        // 1 and 0 commute, no square: class {[1,0],[0,1]}, least is [0,1]
        assert_eq!(normal_form(&s2, &[1, 0]).unwrap(), vec![0, 1]);
        let p5 = SimplePolytope::polygon(5).unwrap();
        let w = vec![4, 2, 0, 3, 1, 2];
        let nf = normal_form(&p5, &w).unwrap();
        assert_eq!(normal_form(&p5, &nf).unwrap(), nf);
        assert!(nf.len() <= w.len());
    }

    #[test]
    fn membership_examples() {
        let s2 = SimplePolytope::simplex(2).unwrap();
        assert!(pi1_membership(&s2, &[0, 1, 0, 1], Pi1Target::MomentAngle).unwrap());
        assert!(!pi1_membership(&s2, &[0], Pi1Target::MomentAngle).unwrap());

        // over the triangle with lambda = (e1, e2, e1+e2): the word [0,1,2]
        // abelianizes to e1+e2+e3 which maps to zero, so it lies in the small
        // cover kernel but not the moment-angle kernel
        let lambda = CharFunc::new(2, vec![0b01, 0b10, 0b11]).unwrap();
        assert!(pi1_membership(&s2, &[0, 1, 2], Pi1Target::SmallCover(&lambda)).unwrap());
        assert!(!pi1_membership(&s2, &[0, 1, 2], Pi1Target::MomentAngle).unwrap());
        assert!(!pi1_membership(&s2, &[0], Pi1Target::SmallCover(&lambda)).unwrap());

        let bad = CharFunc::new(2, vec![0b01, 0b10, 0b01]).unwrap();
        assert!(matches!(
            pi1_membership(&s2, &[0], Pi1Target::SmallCover(&bad)),
            Err(CoxeterError::InvalidCharFunc(_))
        ));
    }

    #[test]
    fn pi1_rz_descriptions() {
        assert_eq!(
            pi1_rz_description(&SimplePolytope::simplex(3).unwrap()),
            Pi1RzDescription::Trivial
        );
        assert_eq!(
            pi1_rz_description(&SimplePolytope::polygon(4).unwrap()),
            Pi1RzDescription::FreeAbelian { rank: 2 }
        );
        assert_eq!(
            pi1_rz_description(&SimplePolytope::polygon(5).unwrap()),
            Pi1RzDescription::NotVirtuallyNilpotent
        );
    }
}
