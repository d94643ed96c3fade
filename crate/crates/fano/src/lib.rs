//! Exact-arithmetic toolkit for Fano polygons and two-dimensional lattice
//! cones.
//!
//! The crate computes singularity content of cones and polygons, handles
//! r-modular sequences with their winding-number formula and twelve-point
//! identity, and exhaustively classifies Fano polygons all of whose edge
//! cones are determinant-r R-cones, cross-checking the enumeration against
//! closed-form model families and an arithmetic existence predicate.
//!
//! All arithmetic is exact: `i64` lattice coordinates and `i64` rationals.
//! There is no floating point anywhere.
//!
//! - [`lattice`] — vectors, polygons, winding numbers, canonical forms
//! - [`cones`] — cone normal forms, length/height, T/R classes, content
//! - [`modseq`] — r-modular sequences, duals, the twelve-point identity
//! - [`numthy`] — factorization, congruences, the existence predicate
//! - [`classify`] — enumeration, model families, census and coverage reports

pub mod classify;
pub mod cones;
pub mod lattice;
pub mod modseq;
pub mod numthy;

pub use classify::{
    assemble_census_report, census_rows, check_k2r_rule, coefficient_tuples,
    enumerate_det_r_fanos, family_polygon, verify_family_coverage, verify_homogeneous_census,
    CensusEntry, CensusMismatch, CensusReport, ClassifyError, CoverageReport, FamilyId,
    UniquenessViolation,
};
pub use cones::{
    cqs_isomorphic, family_cone_types, l_reflexive_index, polygon_singularity_content, Cone,
    ConeClass, ConeContent, ConeError, ConeMetrics, ConeTypeDescriptor,
    CyclicQuotientSingularity, SingularityContent,
};
pub use lattice::{
    det2, geometric_winding, is_primitive, segment_lattice_length, FanoPolygon, LatticeError,
    LatticeVector, UnimodularMap,
};
pub use modseq::{
    parallelogram_interior_points, random_sequence, DualSequence, RModularSequence,
    RationalVector, SequenceError,
};
pub use numthy::{
    all_primes_congruent, existence_branch, existence_predicate, factorize, legendre,
    mod_inverse, solve_quadratic_congruence, solve_quadratic_congruence_crt, ExistenceBranch,
    Factorization, NumTheoryError,
};
