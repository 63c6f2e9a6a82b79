//! Decision procedures for the closed manifolds glued over simple convex
//! polytopes: small covers and real moment-angle manifolds.
//!
//! Everything starts from a [`polytope::SimplePolytope`], a validated
//! vertex–facet incidence. From there the crate derives the dual-complex
//! combinatorics ([`nerve`]), the right-angled Coxeter group and the word
//! view of the fundamental groups ([`coxeter`]), characteristic functions
//! over GF(2) ([`charfunc`]), cellular homology of the glued manifolds as an
//! independent oracle ([`zhomology`]), and aggregated verdicts
//! ([`mod@classify`]). The [`cli`] module backs the `smallcover` binary.

pub mod charfunc;
pub mod classify;
pub mod cli;
pub mod coxeter;
pub mod format;
pub mod gf2;
pub mod nerve;
pub mod polytope;
pub mod zhomology;

pub use charfunc::{CharFunc, CharFuncValidity, SmallCoverSearch};
pub use classify::{classify, real_bott_equivalence_audit, ClassificationReport};
pub use polytope::SimplePolytope;
pub use zhomology::{build_complex, z2_betti, BettiVector, QuotientComplex};
