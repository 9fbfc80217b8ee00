//! Exact toolkit for generalized Bott manifolds.
//!
//! A generalized Bott manifold is an iterated projectivization of sums of
//! line bundles over projective spaces. Its discrete data is an integer
//! matrix ([`GeneralizedBottMatrix`]); from it this crate builds
//!
//! - the fan (rays, maximal cones, primitive collections and relations) and
//!   the Fano decision through primitive-relation degrees ([`fan`]),
//! - the integral cohomology ring as an exact polynomial quotient with a
//!   confluent normal form, and the Chern classes ([`cohomology`]),
//! - graded ring, `c1`-preserving and variety isomorphism decisions for
//!   two-stage towers, both by brute-force unimodular substitution and by
//!   closed-form invariants ([`iso`]),
//! - enumeration of two-stage Fano towers per dimension and an exhaustive
//!   rigidity sweep over all pairs ([`enumerate`]).

pub mod cohomology;
pub mod enumerate;
pub mod error;
pub mod fan;
pub mod gbm;
pub mod iso;
pub mod poly;

pub use cohomology::{CohomologyRing, DegreeTwoClass, ReductionStrategy};
pub use enumerate::{
    classification_emit, enumerate_fano, verify_rigidity, BoundPolicy, ClassificationEntry,
    ClassificationTable, Counterexample, OutputFormat, RigidityReport,
};
pub use error::{Error, ParseError, Result};
pub use fan::{FanoReport, PrimitiveRelation, RayMatrix};
pub use gbm::{elementary_symmetric, CanonicalForm, GeneralizedBottMatrix, TwoStageSpec};
pub use iso::{
    decide_c1_iso, decide_ring_iso, decide_variety_iso, default_bound, hirzebruch_class,
    product_cohomology_test, ring_iso_search, ring_iso_witnesses, verify_witness, Answer,
    Certificate, IsoVerdict, IsoWitness,
};
pub use poly::{IntPolynomial, Monomial};
