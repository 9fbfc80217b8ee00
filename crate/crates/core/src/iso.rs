//! Isomorphism decisions between two-stage towers.
//!
//! Two routes are kept side by side: a brute-force search over unimodular
//! substitutions on `H^2` (the oracle), and structured decisions built from
//! normalization, the product test and elementary symmetric invariants.
//!
//! A witness matrix `[[alpha, beta], [gamma, delta]]` sends the source
//! generators to `x1 -> alpha*y1 + beta*y2`, `x2 -> gamma*y1 + delta*y2`,
//! where `y1, y2` generate the target ring.

use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::cohomology::{c1_coefficients, CohomologyRing};
use crate::error::{Error, Result};
use crate::fan::spec_is_fano;
use crate::gbm::{elementary_symmetric, elementary_symmetric_all, CanonicalForm, TwoStageSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IsoWitness {
    pub matrix: [[i64; 2]; 2],
    pub c1_preserving: bool,
}

impl IsoWitness {
    pub fn new(matrix: [[i64; 2]; 2], c1_preserving: bool) -> Self {
        Self {
            matrix,
            c1_preserving,
        }
    }

    pub fn identity() -> Self {
        Self::new([[1, 0], [0, 1]], true)
    }

    pub fn determinant(&self) -> i64 {
        let [[a, b], [c, d]] = self.matrix;
        a * d - b * c
    }

    /// Substitution `self` followed by `next`.
    pub fn then(&self, next: &IsoWitness) -> IsoWitness {
        let (m, n) = (self.matrix, next.matrix);
        let mut out = [[0; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (k, cell) in row.iter_mut().enumerate() {
                *cell = m[i][0] * n[0][k] + m[i][1] * n[1][k];
            }
        }
        IsoWitness::new(out, self.c1_preserving && next.c1_preserving)
    }

    /// Image of the linear form `l1*x1 + l2*x2`.
    fn image(&self, lin: &[i64]) -> Vec<i64> {
        let [[a, b], [c, d]] = self.matrix;
        vec![lin[0] * a + lin[1] * c, lin[0] * b + lin[1] * d]
    }
}

impl fmt::Display for IsoWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.matrix;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
            Answer::Unknown => "unknown",
        })
    }
}

/// Why a verdict came out the way it did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    CanonicalFormsEqual(CanonicalForm),
    /// Equal canonical forms, but at least one input is not Fano.
    SufficientOnly(CanonicalForm),
    FiberDimensions {
        source: (usize, usize),
        target: (usize, usize),
    },
    TypeMismatch {
        source: (usize, usize),
        target: (usize, usize),
    },
    /// The non-product side has no `b` with `prod (1 + a_k x) = (1 + b x)^{n2+1}`.
    NotProductCohomology(TwoStageSpec),
    SymmetricFunction {
        k: usize,
        source: BigInt,
        target: BigInt,
    },
    CanonicalFormsDiffer {
        source: CanonicalForm,
        target: CanonicalForm,
    },
    NonFanoInconclusive {
        source: CanonicalForm,
        target: CanonicalForm,
    },
    WitnessFound,
    NoWitnessWithinBound(i64),
    /// Closed-form ring-isomorphism rule for `n2 = 1`.
    FiberOneRule {
        n1: usize,
        a: u64,
        a_tilde: u64,
    },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::CanonicalFormsEqual(cf) => write!(f, "canonical forms equal: {cf}"),
            Certificate::SufficientOnly(cf) => write!(
                f,
                "canonical forms equal: {cf} (sufficient only; inputs not both Fano)"
            ),
            Certificate::FiberDimensions { source, target } => write!(
                f,
                "fiber dimensions differ: {{{},{}}} vs {{{},{}}}",
                source.0, source.1, target.0, target.1
            ),
            Certificate::TypeMismatch { source, target } => write!(
                f,
                "type mismatch: ({},{}) vs ({},{})",
                source.0, source.1, target.0, target.1
            ),
            Certificate::NotProductCohomology(spec) => {
                write!(f, "{spec} fails the product cohomology test")
            }
            Certificate::SymmetricFunction { k, source, target } => {
                write!(f, "e{k}: {source} != {target}")
            }
            Certificate::CanonicalFormsDiffer { source, target } => {
                write!(f, "canonical forms differ: {source} vs {target}")
            }
            Certificate::NonFanoInconclusive { source, target } => write!(
                f,
                "canonical forms differ ({source} vs {target}) but inputs are not both Fano"
            ),
            Certificate::WitnessFound => write!(f, "substitution witness found"),
            Certificate::NoWitnessWithinBound(b) => {
                write!(f, "no witness with entries in [-{b}, {b}]")
            }
            Certificate::FiberOneRule { n1, a, a_tilde } => {
                let rule = if *n1 == 1 { "parity" } else { "equality" };
                write!(f, "n2 = 1 {rule} rule: n1 = {n1}, a = {a}, a~ = {a_tilde}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoVerdict {
    pub answer: Answer,
    pub witness: Option<IsoWitness>,
    pub certificate: Certificate,
}

impl IsoVerdict {
    fn new(answer: Answer, witness: Option<IsoWitness>, certificate: Certificate) -> Self {
        Self {
            answer,
            witness,
            certificate,
        }
    }
}

impl Serialize for IsoWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.matrix.serialize(serializer)
    }
}

impl Serialize for IsoVerdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            answer: Answer,
            witness: Option<[[i64; 2]; 2]>,
            certificate: String,
        }
        Wire {
            answer: self.answer,
            witness: self.witness.map(|w| w.matrix),
            certificate: self.certificate.to_string(),
        }
        .serialize(serializer)
    }
}

fn fiber_multiset(spec: &TwoStageSpec) -> (usize, usize) {
    let (a, b) = (spec.n1(), spec.n2());
    (a.min(b), a.max(b))
}

/// Precomputed data shared by every candidate substitution.
struct SearchContext {
    source_factors: Vec<Vec<Vec<i64>>>,
    target: CohomologyRing,
    source_c1: Vec<i64>,
    target_c1: Vec<i64>,
    comparable: bool,
}

impl SearchContext {
    fn new(source: &TwoStageSpec, target: &TwoStageSpec) -> Self {
        let source_ring = CohomologyRing::new(&source.to_matrix());
        let target_matrix = target.to_matrix();
        Self {
            source_factors: (0..2).map(|i| source_ring.relation_factors(i).to_vec()).collect(),
            source_c1: c1_coefficients(&source.to_matrix()),
            target_c1: c1_coefficients(&target_matrix),
            target: CohomologyRing::new(&target_matrix),
            comparable: fiber_multiset(source) == fiber_multiset(target),
        }
    }

    fn preserves_c1(&self, w: &IsoWitness) -> bool {
        w.image(&self.source_c1) == self.target_c1
    }

    fn relations_vanish(&self, w: &IsoWitness) -> bool {
        self.source_factors.iter().all(|factors| {
            let images: Vec<Vec<i64>> = factors.iter().map(|l| w.image(l)).collect();
            self.target.product_of_linear(&images).is_zero()
        })
    }
}

/// True iff the substitution is unimodular, carries both source relations
/// into the target ideal and, when flagged, sends `c1` to `c1`.
pub fn verify_witness(w: &IsoWitness, source: &TwoStageSpec, target: &TwoStageSpec) -> bool {
    let ctx = SearchContext::new(source, target);
    ctx.comparable
        && w.determinant().abs() == 1
        && (!w.c1_preserving || ctx.preserves_c1(w))
        && ctx.relations_vanish(w)
}

fn scan(
    source: &TwoStageSpec,
    target: &TwoStageSpec,
    bound: i64,
    require_c1: bool,
    mut visit: impl FnMut(IsoWitness) -> ControlFlow<()>,
) {
    let ctx = SearchContext::new(source, target);
    if !ctx.comparable {
        return;
    }
    let range = -bound..=bound;
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                for d in range.clone() {
                    if (a * d - b * c).abs() != 1 {
                        continue;
                    }
                    let mut w = IsoWitness::new([[a, b], [c, d]], false);
                    w.c1_preserving = ctx.preserves_c1(&w);
                    if require_c1 && !w.c1_preserving {
                        continue;
                    }
                    if ctx.relations_vanish(&w) && visit(w).is_break() {
                        return;
                    }
                }
            }
        }
    }
}

/// First valid substitution in row-major lexicographic order over the box
/// `[-bound, bound]^4`.
pub fn ring_iso_search(
    source: &TwoStageSpec,
    target: &TwoStageSpec,
    bound: i64,
    require_c1: bool,
) -> Option<IsoWitness> {
    let mut found = None;
    scan(source, target, bound, require_c1, |w| {
        found = Some(w);
        ControlFlow::Break(())
    });
    found
}

/// Every valid substitution in the box, in search order.
pub fn ring_iso_witnesses(
    source: &TwoStageSpec,
    target: &TwoStageSpec,
    bound: i64,
    require_c1: bool,
) -> Vec<IsoWitness> {
    let mut all = Vec::new();
    scan(source, target, bound, require_c1, |w| {
        all.push(w);
        ControlFlow::Continue(())
    });
    all
}

/// `sum |a| + sum |a~| + 2`.
pub fn default_bound(source: &TwoStageSpec, target: &TwoStageSpec) -> i64 {
    let abs_sum = |s: &TwoStageSpec| s.exponents().iter().map(|a| a.abs()).sum::<i64>();
    abs_sum(source) + abs_sum(target) + 2
}

/// Substitution from a spec to its normalization: `x2 -> y2 + c*y1` where
/// `c` is the minimum of `{0, a_1, ..., a_n2}`.
fn normalization_witness(spec: &TwoStageSpec) -> IsoWitness {
    let c = spec.exponents().iter().copied().min().unwrap_or(0).min(0);
    IsoWitness::new([[1, 0], [c, 1]], true)
}

/// Variety isomorphism realized on cohomology when canonical forms agree.
fn canonical_witness(source: &TwoStageSpec, target: &TwoStageSpec) -> Option<IsoWitness> {
    let to_normal = normalization_witness(source);
    let [[_, _], [c, _]] = normalization_witness(target).matrix;
    let from_normal = IsoWitness::new([[1, 0], [-c, 1]], true);
    let middle = if source.n1() == target.n1() {
        IsoWitness::identity()
    } else {
        IsoWitness::new([[0, 1], [1, 0]], true)
    };
    let w = to_normal.then(&middle).then(&from_normal);
    if verify_witness(&w, source, target) {
        return Some(w);
    }
    ring_iso_search(source, target, default_bound(source, target), true)
}

fn require_fano(spec: &TwoStageSpec) -> Result<()> {
    if spec_is_fano(spec) {
        Ok(())
    } else {
        Err(Error::NotFano(spec.to_string()))
    }
}

/// Structured decision for a `c1`-preserving graded ring isomorphism between
/// two Fano two-stage towers.
///
/// Products are recognised by the product test; two non-products need the
/// same type and then the same elementary symmetric functions of their
/// normalized exponents. The symmetric functions are compared from `e_{n2}`
/// down to `e_1` and the first mismatch is reported.
pub fn decide_c1_iso(source: &TwoStageSpec, target: &TwoStageSpec) -> Result<IsoVerdict> {
    require_fano(source)?;
    require_fano(target)?;
    let (s, t) = (source.normalize(), target.normalize());
    if fiber_multiset(&s) != fiber_multiset(&t) {
        return Ok(IsoVerdict::new(
            Answer::No,
            None,
            Certificate::FiberDimensions {
                source: (s.n1(), s.n2()),
                target: (t.n1(), t.n2()),
            },
        ));
    }
    let is_product = |x: &TwoStageSpec| {
        product_cohomology_test(x)
            .expect("normalized")
            .is_some()
    };
    match (is_product(&s), is_product(&t)) {
        (true, true) => {
            let cf = s.canonical_form();
            return Ok(IsoVerdict::new(
                Answer::Yes,
                canonical_witness(source, target),
                Certificate::CanonicalFormsEqual(cf),
            ));
        }
        (true, false) => {
            return Ok(IsoVerdict::new(
                Answer::No,
                None,
                Certificate::NotProductCohomology(t),
            ))
        }
        (false, true) => {
            return Ok(IsoVerdict::new(
                Answer::No,
                None,
                Certificate::NotProductCohomology(s),
            ))
        }
        (false, false) => {}
    }
    if (s.n1(), s.n2()) != (t.n1(), t.n2()) {
        return Ok(IsoVerdict::new(
            Answer::No,
            None,
            Certificate::TypeMismatch {
                source: (s.n1(), s.n2()),
                target: (t.n1(), t.n2()),
            },
        ));
    }
    let es = elementary_symmetric_all(s.exponents());
    let et = elementary_symmetric_all(t.exponents());
    if let Some(k) = (1..=s.n2()).rev().find(|&k| es[k] != et[k]) {
        return Ok(IsoVerdict::new(
            Answer::No,
            None,
            Certificate::SymmetricFunction {
                k,
                source: es[k].clone(),
                target: et[k].clone(),
            },
        ));
    }
    Ok(IsoVerdict::new(
        Answer::Yes,
        canonical_witness(source, target),
        Certificate::CanonicalFormsEqual(s.canonical_form()),
    ))
}

/// Variety isomorphism by canonical-form equality.
///
/// Exact when both inputs are Fano. Otherwise equal forms still give a
/// "yes" (flagged as sufficient only) and unequal forms give "unknown".
pub fn decide_variety_iso(source: &TwoStageSpec, target: &TwoStageSpec) -> IsoVerdict {
    if fiber_multiset(source) != fiber_multiset(target) {
        return IsoVerdict::new(
            Answer::No,
            None,
            Certificate::FiberDimensions {
                source: (source.n1(), source.n2()),
                target: (target.n1(), target.n2()),
            },
        );
    }
    let fano = spec_is_fano(source) && spec_is_fano(target);
    let (cs, ct) = (source.canonical_form(), target.canonical_form());
    if cs == ct {
        let certificate = if fano {
            Certificate::CanonicalFormsEqual(cs)
        } else {
            Certificate::SufficientOnly(cs)
        };
        return IsoVerdict::new(Answer::Yes, canonical_witness(source, target), certificate);
    }
    if fano {
        IsoVerdict::new(
            Answer::No,
            None,
            Certificate::CanonicalFormsDiffer {
                source: cs,
                target: ct,
            },
        )
    } else {
        IsoVerdict::new(
            Answer::Unknown,
            None,
            Certificate::NonFanoInconclusive {
                source: cs,
                target: ct,
            },
        )
    }
}

/// Graded ring isomorphism (no `c1` condition) by the oracle, with exact
/// negative answers where a closed form is available.
pub fn decide_ring_iso(source: &TwoStageSpec, target: &TwoStageSpec, bound: i64) -> IsoVerdict {
    if fiber_multiset(source) != fiber_multiset(target) {
        return IsoVerdict::new(
            Answer::No,
            None,
            Certificate::FiberDimensions {
                source: (source.n1(), source.n2()),
                target: (target.n1(), target.n2()),
            },
        );
    }
    if let Some(w) = ring_iso_search(source, target, bound, false) {
        return IsoVerdict::new(Answer::Yes, Some(w), Certificate::WitnessFound);
    }
    let (s, t) = (source.normalize(), target.normalize());
    if s.n2() == 1 && t.n2() == 1 && s.n1() == t.n1() {
        let (a, a_tilde) = (s.exponents()[0] as u64, t.exponents()[0] as u64);
        if !hirzebruch_class(a, a_tilde, s.n1()) {
            return IsoVerdict::new(
                Answer::No,
                None,
                Certificate::FiberOneRule {
                    n1: s.n1(),
                    a,
                    a_tilde,
                },
            );
        }
    }
    IsoVerdict::new(Answer::Unknown, None, Certificate::NoWitnessWithinBound(bound))
}

/// Solves `prod (1 + a_k x) = (1 + b x)^{n2+1}` in `Z[x]/<x^{n1+1}>`.
///
/// `b` is read off the linear coefficient, `sum a_k = (n2+1) b`, and then
/// checked against every coefficient up to `x^{n1}`.
pub fn product_cohomology_test(spec: &TwoStageSpec) -> Result<Option<i64>> {
    if !spec.is_normalized() {
        return Err(Error::NotNormalized(spec.to_string()));
    }
    let n2 = spec.n2();
    let sum = spec.exponent_sum();
    let parts = n2 as i64 + 1;
    if sum % parts != 0 {
        return Ok(None);
    }
    let b = sum / parts;
    for r in 1..=spec.n1() {
        let lhs = if r <= n2 {
            elementary_symmetric(spec.exponents(), r)?
        } else {
            BigInt::zero()
        };
        let rhs = if r <= n2 + 1 {
            binomial(n2 + 1, r) * BigInt::from(b).pow(r as u32)
        } else {
            BigInt::zero()
        };
        if lhs != rhs {
            return Ok(None);
        }
    }
    Ok(Some(b))
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Ring-isomorphism rule for types `(n1, 1)` with nonnegative exponents:
/// parity of `a` when `n1 = 1`, equality otherwise.
pub fn hirzebruch_class(a: u64, a_tilde: u64, n1: usize) -> bool {
    if n1 == 1 {
        a % 2 == a_tilde % 2
    } else {
        a == a_tilde
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> TwoStageSpec {
        text.parse().unwrap()
    }

    #[test]
    fn known_substitution_is_a_ring_iso_but_not_c1() {
        let (s, t) = (spec("B(2;1,1)"), spec("B(2;0,1)"));
        let phi = IsoWitness::new([[1, 0], [1, -1]], false);
        assert!(verify_witness(&phi, &s, &t));
        assert!(!verify_witness(&IsoWitness::new(phi.matrix, true), &s, &t));
    }

    #[test]
    fn identity_and_non_unimodular() {
        let s = spec("B(3;1,2)");
        assert!(verify_witness(&IsoWitness::identity(), &s, &s));
        let doubled = IsoWitness::new([[2, 0], [0, 1]], false);
        assert!(!verify_witness(&doubled, &s, &s));
        assert!(!verify_witness(&doubled, &spec("B(1;0)"), &spec("B(1;0)")));
    }

    #[test]
    fn search_examples() {
        let (s, t) = (spec("B(2;1,1)"), spec("B(2;0,1)"));
        let w = ring_iso_search(&s, &t, 5, false).unwrap();
        assert!(verify_witness(&w, &s, &t));
        assert!(ring_iso_search(&s, &t, 5, true).is_none());
        let all = ring_iso_witnesses(&s, &t, 5, false);
        assert!(all.iter().any(|w| w.matrix == [[1, 0], [1, -1]]));
        assert_eq!(all[0], w);

        let f1 = spec("B(1;1)");
        let f3 = spec("B(1;3)");
        assert!(ring_iso_search(&f1, &f3, 6, false).is_some());
        assert!(ring_iso_search(&f1, &spec("B(1;2)"), 6, false).is_none());
        // different fiber multisets never match
        assert!(ring_iso_search(&spec("B(1;0,0)"), &spec("B(2;0,0)"), 3, false).is_none());
    }

    #[test]
    fn c1_decision_examples() {
        let v = decide_c1_iso(&spec("B(2;1,1)"), &spec("B(2;0,1)")).unwrap();
        assert_eq!(v.answer, Answer::No);
        assert_eq!(v.certificate.to_string(), "e2: 1 != 0");

        let v = decide_c1_iso(&spec("B(3;1,2)"), &spec("B(3;2,1)")).unwrap();
        assert_eq!(v.answer, Answer::Yes);
        let w = v.witness.unwrap();
        assert!(verify_witness(&w, &spec("B(3;1,2)"), &spec("B(3;2,1)")));

        let (p13, p31) = (spec("B(1;0,0,0)"), spec("B(3;0)"));
        let v = decide_c1_iso(&p13, &p31).unwrap();
        assert_eq!(v.answer, Answer::Yes);
        assert!(verify_witness(&v.witness.unwrap(), &p13, &p31));
        assert!(ring_iso_search(&p13, &p31, 3, true).is_some());

        assert!(matches!(
            decide_c1_iso(&spec("B(1;2)"), &spec("B(1;0)")),
            Err(Error::NotFano(_))
        ));
    }

    #[test]
    fn c1_decision_product_against_non_product() {
        let v = decide_c1_iso(&spec("B(2;0,0)"), &spec("B(2;0,1)")).unwrap();
        assert_eq!(v.answer, Answer::No);
        assert_eq!(v.certificate, Certificate::NotProductCohomology(spec("B(2;0,1)")));
        let v = decide_c1_iso(&spec("B(1;0,1)"), &spec("B(2;1)")).unwrap();
        assert_eq!(v.answer, Answer::No);
        assert!(matches!(v.certificate, Certificate::TypeMismatch { .. }));
    }

    #[test]
    fn variety_decision_examples() {
        let s = spec("B(2;1,1)");
        assert_eq!(decide_variety_iso(&s, &s).answer, Answer::Yes);
        assert_eq!(decide_variety_iso(&s, &spec("B(2;0,1)")).answer, Answer::No);

        // (-1,0) shifts to (1,1), not (0,1).
        let shifted = spec("B(2;-1,0)");
        let v = decide_variety_iso(&shifted, &s);
        assert_eq!(v.answer, Answer::Yes);
        assert!(verify_witness(&v.witness.unwrap(), &shifted, &s));
        assert_eq!(decide_variety_iso(&shifted, &spec("B(2;0,1)")).answer, Answer::No);

        // outside the Fano range unequal forms are inconclusive
        let v = decide_variety_iso(&spec("B(1;2)"), &spec("B(1;4)"));
        assert_eq!(v.answer, Answer::Unknown);
        let v = decide_variety_iso(&spec("B(1;2)"), &spec("B(1;-2)"));
        assert_eq!(v.answer, Answer::Yes);
        assert!(matches!(v.certificate, Certificate::SufficientOnly(_)));
    }

    #[test]
    fn product_test_examples() {
        let b = |t: &str| product_cohomology_test(&spec(t)).unwrap();
        assert_eq!(b("B(3;0,0,0)"), Some(0));
        assert_eq!(b("B(2;1,1)"), None);
        assert_eq!(b("B(1;1,1,1)"), None);
        assert_eq!(b("B(1;0,0,2)"), None);
        assert_eq!(b("B(1;1,1,1,1)"), None);
        // F_2 over CP^1 has product cohomology: 1 + 2x = (1 + x)^2 mod x^2
        assert_eq!(b("B(1;2)"), Some(1));
        assert!(product_cohomology_test(&spec("B(1;-2)")).is_err());
    }

    #[test]
    fn hirzebruch_examples() {
        assert!(hirzebruch_class(0, 2, 1));
        assert!(!hirzebruch_class(0, 1, 1));
        assert!(!hirzebruch_class(1, 2, 2));
        assert!(hirzebruch_class(3, 3, 2));
    }

    #[test]
    fn ring_decision() {
        let v = decide_ring_iso(&spec("B(2;1,1)"), &spec("B(2;0,1)"), 5);
        assert_eq!(v.answer, Answer::Yes);
        let v = decide_ring_iso(&spec("B(2;1)"), &spec("B(2;2)"), 5);
        assert_eq!(v.answer, Answer::No);
        let v = decide_ring_iso(&spec("B(2;1)"), &spec("B(1;1,0)"), 5);
        assert_eq!(v.answer, Answer::Unknown);
        let v = decide_ring_iso(&spec("B(2;1)"), &spec("B(1;1,0,0)"), 5);
        assert_eq!(v.answer, Answer::No);
    }

    #[test]
    fn verdict_json_shape() {
        let v = decide_c1_iso(&spec("B(2;1,1)"), &spec("B(2;0,1)")).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["answer"], "no");
        assert!(json["witness"].is_null());
        assert_eq!(json["certificate"], "e2: 1 != 0");
        let v = decide_c1_iso(&spec("B(2;1,1)"), &spec("B(2;1,1)")).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["witness"], serde_json::json!([[1, 0], [0, 1]]));
    }
}
