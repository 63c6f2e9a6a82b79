//! Aggregated verdicts for the manifolds attached to a simple polytope:
//! asphericality, simple connectivity, torus and real-Bott recognition,
//! sphere candidacy, small-cover existence, and curvature obstruction
//! reports. All verdicts are combinatorial consequences of the polytope (and
//! optionally a characteristic function); the curvature entries are stated
//! strictly as obstructions or candidacy, never as metric existence.

use serde::Serialize;
use thiserror::Error;

use crate::charfunc::{
    self, CharFunc, CharFuncError, CharFuncValidity, NoSmallCoverReason, SmallCoverSearch,
};
use crate::coxeter::{self, GroupClass, Pi1RzDescription};
use crate::format::CharFuncFile;
use crate::nerve;
use crate::polytope::SimplePolytope;
use crate::zhomology::{self, BettiVector, ComplexError};

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("supplied characteristic function is invalid at vertex {vertex}")]
    InvalidCharFunc { vertex: usize },
    #[error(transparent)]
    CharFunc(#[from] CharFuncError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Debug, Clone, Serialize)]
pub struct PolytopeSummary {
    pub dim: usize,
    pub num_facets: usize,
    pub num_vertices: usize,
    pub f_vector: Vec<u64>,
    pub h_vector: Vec<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CombinatorialFlags {
    pub is_flag: bool,
    pub is_two_neighborly: bool,
    pub is_cube: bool,
    pub is_simplex: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupReport {
    pub class: GroupClass,
    pub pi1_rz: Pi1RzDescription,
}

#[derive(Debug, Clone, Serialize)]
pub struct MomentAngleReport {
    pub aspherical: bool,
    pub simply_connected: bool,
    pub is_torus: bool,
    /// Whether the polytope is a simplex, the only case in which the
    /// manifolds can carry constant positive curvature (sphere and real
    /// projective space).
    pub spherical_candidate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiVector>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SmallCoverExistence {
    Supplied,
    Found,
    NonePigeonhole,
    NoneSearchExhausted,
    /// The existence search was infeasible at this size.
    Unknown,
}

#[derive(Debug, Clone, Serialize)]
pub struct SmallCoverReport {
    /// First Betti number over the field of two elements: facets minus
    /// dimension.
    pub b1: usize,
    pub pi1_finite: bool,
    pub pi1: String,
    pub is_real_bott: bool,
    pub charfunc: CharFuncFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<BettiVector>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TwoFaceOffender {
    pub facets: Vec<usize>,
    pub gon: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct NonnegRicciReport {
    pub requirement: &'static str,
    pub pi1_rz: Pi1RzDescription,
    pub obstructed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionReport {
    /// Positive Ricci curvature forces a finite fundamental group, which
    /// happens exactly over 2-neighborly polytopes.
    pub positive_ricci_obstructed: bool,
    pub positive_ricci_reason: &'static str,
    /// Negative sectional curvature rules out 3- and 4-gonal 2-faces.
    pub negative_curvature_offenders: Vec<TwoFaceOffender>,
    pub nonneg_ricci_pi1_constraint: NonnegRicciReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub v: u32,
    pub polytope: PolytopeSummary,
    pub flags: CombinatorialFlags,
    pub group: GroupReport,
    pub moment_angle: MomentAngleReport,
    pub small_cover_existence: SmallCoverExistence,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub small_cover: Option<SmallCoverReport>,
    pub obstructions: ObstructionReport,
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        let mut s =
            serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        s.push('\n');
        s
    }
}

/// Runs every analysis and assembles the report.
///
/// When no characteristic function is supplied, a small-cover existence
/// search is attempted. With `compute_homology`, Betti vectors of the
/// moment-angle manifold (and the small cover, when one is available) are
/// attached; `cell_guard` caps those complexes.
pub fn classify(
    p: &SimplePolytope,
    lambda: Option<&CharFunc>,
    compute_homology: bool,
    cell_guard: usize,
) -> Result<ClassificationReport, ClassifyError> {
    let n = p.dim();
    let r = p.num_facets();
    let fv = p.f_and_h_vector();
    let is_flag = nerve::is_flag(p);
    let is_two_neighborly = nerve::is_two_neighborly(p);
    let is_cube = nerve::is_cube(p);
    let is_simplex = p.is_simplex();

    let class = coxeter::classify_group(p);
    let pi1_rz = coxeter::pi1_rz_description(p);

    let rz_betti = if compute_homology {
        let l0 = charfunc::lambda0(p)?;
        let complex = zhomology::build_complex(p, &l0, cell_guard)?;
        Some(zhomology::z2_betti(&complex))
    } else {
        None
    };

    let (existence, cover) = match lambda {
        Some(l) => match charfunc::validate_charfunc(p, l)? {
            CharFuncValidity::Valid => (SmallCoverExistence::Supplied, Some(l.clone())),
            CharFuncValidity::InvalidAt { vertex } => {
                return Err(ClassifyError::InvalidCharFunc { vertex })
            }
        },
        None => match charfunc::exists_small_cover(p) {
            Ok(SmallCoverSearch::Exists(l)) => (SmallCoverExistence::Found, Some(l)),
            Ok(SmallCoverSearch::NoneExists(NoSmallCoverReason::Pigeonhole)) => {
                (SmallCoverExistence::NonePigeonhole, None)
            }
            Ok(SmallCoverSearch::NoneExists(NoSmallCoverReason::SearchExhausted)) => {
                (SmallCoverExistence::NoneSearchExhausted, None)
            }
            Err(CharFuncError::TooLarge(_)) => (SmallCoverExistence::Unknown, None),
            Err(e) => return Err(e.into()),
        },
    };

    let small_cover = match cover {
        Some(l) => {
            let betti = if compute_homology {
                let complex = zhomology::build_complex(p, &l, cell_guard)?;
                Some(zhomology::z2_betti(&complex))
            } else {
                None
            };
            Some(SmallCoverReport {
                b1: r - n,
                pi1_finite: is_two_neighborly,
                pi1: if is_two_neighborly {
                    format!("(Z_2)^{}", r - n)
                } else {
                    "infinite".to_string()
                },
                is_real_bott: is_cube,
                charfunc: CharFuncFile::from_charfunc(&l),
                betti,
            })
        }
        None => None,
    };

    let offenders: Vec<TwoFaceOffender> = p
        .two_face_census()
        .into_iter()
        .filter(|&(_, gon)| gon == 3 || gon == 4)
        .map(|(face, gon)| TwoFaceOffender {
            facets: face.facets,
            gon,
        })
        .collect();

    let report = ClassificationReport {
        v: 1,
        polytope: PolytopeSummary {
            dim: n,
            num_facets: r,
            num_vertices: p.num_vertices(),
            f_vector: fv.f,
            h_vector: fv.h,
        },
        flags: CombinatorialFlags {
            is_flag,
            is_two_neighborly,
            is_cube,
            is_simplex,
        },
        group: GroupReport {
            class,
            pi1_rz: pi1_rz.clone(),
        },
        moment_angle: MomentAngleReport {
            aspherical: is_flag,
            simply_connected: is_two_neighborly,
            is_torus: is_cube,
            spherical_candidate: is_simplex,
            betti: rz_betti,
        },
        small_cover_existence: existence,
        small_cover,
        obstructions: ObstructionReport {
            positive_ricci_obstructed: !is_two_neighborly,
            positive_ricci_reason: if is_two_neighborly {
                "not obstructed: every pair of facets is adjacent"
            } else {
                "a metric of positive Ricci curvature forces a finite fundamental group, \
                 which requires every pair of facets to be adjacent"
            },
            negative_curvature_offenders: offenders,
            nonneg_ricci_pi1_constraint: NonnegRicciReport {
                requirement: "pi1 of the moment-angle manifold must be free abelian of rank at most r/2",
                pi1_rz,
                obstructed: matches!(
                    coxeter::pi1_rz_description(p),
                    Pi1RzDescription::NotVirtuallyNilpotent
                ),
            },
        },
    };
    consistency_checks(p, &report);
    Ok(report)
}

/// Internal cross-checks between report fields; these encode proven
/// equivalences, so a violation is an implementation bug.
fn consistency_checks(p: &SimplePolytope, report: &ClassificationReport) {
    let n = report.polytope.dim;
    let r = report.polytope.num_facets;
    let flags = &report.flags;
    if flags.is_cube {
        assert!(flags.is_flag && r == 2 * n, "a cube must be flag with 2n facets");
        assert!(report.moment_angle.aspherical && report.moment_angle.is_torus);
    }
    if flags.is_two_neighborly {
        assert!(!report.obstructions.positive_ricci_obstructed);
        if let Some(betti) = &report.moment_angle.betti {
            assert_eq!(betti.b[1], 0, "2-neighborly forces a simply connected gluing");
        }
    }
    if let Pi1RzDescription::FreeAbelian { rank } = report.group.pi1_rz {
        assert!(rank * 2 <= r, "free abelian rank exceeds r/2");
    }
    if report.moment_angle.aspherical
        && !matches!(report.group.pi1_rz, Pi1RzDescription::NotVirtuallyNilpotent)
    {
        assert!(flags.is_cube, "aspherical with virtually nilpotent group must be a cube");
    }
    if let Some(cover) = &report.small_cover {
        assert_eq!(cover.is_real_bott, flags.is_flag && r <= 2 * n);
        assert_eq!(cover.is_real_bott, flags.is_cube);
        assert_eq!(cover.b1, r - n);
        if let Some(betti) = &cover.betti {
            assert_eq!(betti.b[1], r - n, "cover b1 must equal facet count minus dimension");
        }
    }
    let _ = p;
}

/// Cross-validates the equivalent descriptions of a real-Bott small cover:
/// `flag with at most 2n facets`, `combinatorial cube`, and — when a small
/// cover exists and its complex fits the guard — `aspherical with first
/// Betti number at most n`. These are provably the same condition, so this
/// is a self-test: it returns true when all evaluated routes agree.
pub fn real_bott_equivalence_audit(p: &SimplePolytope, cell_guard: usize) -> bool {
    let n = p.dim();
    let r = p.num_facets();
    let is_flag = nerve::is_flag(p);
    let mut verdicts = vec![is_flag && r <= 2 * n, nerve::is_cube(p)];
    if let Ok(SmallCoverSearch::Exists(l)) = charfunc::exists_small_cover(p) {
        if let Ok(complex) = zhomology::build_complex(p, &l, cell_guard) {
            let betti = zhomology::z2_betti(&complex);
            verdicts.push(is_flag && betti.b[1] <= n);
        }
    }
    verdicts.iter().all(|&v| v == verdicts[0])
}
