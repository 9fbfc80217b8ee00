//! Integral cohomology of a generalized Bott tower,
//! `Z[x_1..x_m] / <x_1^{n_1+1}, x_i prod_k (x_i - alpha_i^k)>`,
//! with `alpha_i^k = sum_{j<i} a_(i,j)^k x_j`.
//!
//! Under the lexicographic order with `x_1 < x_2 < ... < x_m` the leading
//! monomial of the `i`-th relation is `x_i^{n_i+1}` and the rest of it only
//! involves lower powers of `x_i` and earlier generators. The leading
//! monomials are pairwise coprime, so rewriting `x_i^{n_i+1}` by the tail of
//! its relation is terminating and confluent, and the reduced monomials
//! `prod x_i^{k_i}` with `k_i <= n_i` form a Z-basis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gbm::{GeneralizedBottMatrix, TwoStageSpec};
use crate::poly::{IntPolynomial, Monomial};

/// Which reducible generator to rewrite first when a monomial admits several.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReductionStrategy {
    #[default]
    LowestIndex,
    HighestIndex,
}

#[derive(Debug, Clone)]
pub struct CohomologyRing {
    gbm: GeneralizedBottMatrix,
    /// Relation `i` as a product of linear forms in `x_1..x_m`.
    factors: Vec<Vec<Vec<i64>>>,
    relations: Vec<IntPolynomial>,
    /// `x_i^{n_i+1} - r_i`: the rewrite target of the leading monomial.
    tails: Vec<IntPolynomial>,
}

impl CohomologyRing {
    pub fn new(gbm: &GeneralizedBottMatrix) -> Self {
        let m = gbm.height();
        let unit = |i: usize| {
            let mut v = vec![0; m];
            v[i] = 1;
            v
        };
        let mut factors = Vec::with_capacity(m);
        factors.push(vec![unit(0); gbm.fiber_dims()[0] + 1]);
        for i in 1..m {
            let mut f = vec![unit(i)];
            for k in 0..gbm.fiber_dims()[i] {
                let mut lin = unit(i);
                for (c, a) in lin.iter_mut().zip(alpha(gbm, i, k)) {
                    *c -= a;
                }
                f.push(lin);
            }
            factors.push(f);
        }
        let relations: Vec<IntPolynomial> = factors
            .iter()
            .map(|f| {
                f.iter()
                    .fold(IntPolynomial::one(m), |acc, lin| &acc * &IntPolynomial::linear(lin))
            })
            .collect();
        let tails = relations
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut lead = vec![0; m];
                lead[i] = gbm.fiber_dims()[i] as u32 + 1;
                &IntPolynomial::monomial(Monomial::new(lead), 1) - r
            })
            .collect();
        Self {
            gbm: gbm.clone(),
            factors,
            relations,
            tails,
        }
    }

    pub fn gbm(&self) -> &GeneralizedBottMatrix {
        &self.gbm
    }

    pub fn nvars(&self) -> usize {
        self.gbm.height()
    }

    pub fn relations(&self) -> &[IntPolynomial] {
        &self.relations
    }

    pub fn relation_factors(&self, i: usize) -> &[Vec<i64>] {
        &self.factors[i]
    }

    pub fn normal_form(&self, p: &IntPolynomial) -> IntPolynomial {
        self.normal_form_with(p, ReductionStrategy::default())
    }

    /// Unique representative supported on reduced monomials.
    pub fn normal_form_with(&self, p: &IntPolynomial, strategy: ReductionStrategy) -> IntPolynomial {
        let dims = self.gbm.fiber_dims();
        assert_eq!(p.nvars(), dims.len(), "polynomial lives in another ring");
        // Keyed by reversed exponents, so the largest key is the largest
        // monomial with x_m most significant; every rewrite strictly lowers it.
        let mut pending: BTreeMap<Vec<u32>, BigInt> = p
            .terms()
            .map(|(m, c)| (reversed(m.exponents()), c.clone()))
            .collect();
        let mut reduced: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        while let Some((key, coeff)) = pending.pop_last() {
            if coeff.is_zero() {
                continue;
            }
            let exps = reversed(&key);
            let mut reducible = (0..dims.len()).filter(|&i| exps[i] as usize > dims[i]);
            let var = match strategy {
                ReductionStrategy::LowestIndex => reducible.next(),
                ReductionStrategy::HighestIndex => reducible.next_back(),
            };
            let Some(i) = var else {
                *reduced.entry(Monomial::new(exps)).or_default() += coeff;
                continue;
            };
            let mut quotient = exps;
            quotient[i] -= dims[i] as u32 + 1;
            for (tm, tc) in self.tails[i].terms() {
                let e: Vec<u32> = quotient.iter().zip(tm.exponents()).map(|(a, b)| a + b).collect();
                *pending.entry(reversed(&e)).or_default() += &coeff * tc;
            }
        }
        reduced.retain(|_, c| !c.is_zero());
        IntPolynomial::from_terms(p.nvars(), reduced)
    }

    /// Product in the quotient ring.
    pub fn multiply(&self, p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
        self.normal_form(&(p * q))
    }

    /// Power in the quotient ring, reducing after every factor.
    pub fn pow(&self, p: &IntPolynomial, e: u32) -> IntPolynomial {
        let base = self.normal_form(p);
        let mut acc = self.normal_form(&IntPolynomial::one(self.nvars()));
        for _ in 0..e {
            if acc.is_zero() {
                break;
            }
            acc = self.multiply(&acc, &base);
        }
        acc
    }

    /// Normal form of a product of linear forms, reducing as it goes.
    pub fn product_of_linear(&self, forms: &[Vec<i64>]) -> IntPolynomial {
        let mut acc = IntPolynomial::one(self.nvars());
        for lin in forms {
            acc = self.multiply(&acc, &IntPolynomial::linear(lin));
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// Normal form of `prod (1 + form)`, used for Chern classes.
    fn product_of_affine(&self, forms: &[Vec<i64>]) -> IntPolynomial {
        let one = IntPolynomial::one(self.nvars());
        forms.iter().fold(self.normal_form(&one), |acc, lin| {
            self.multiply(&acc, &(&one + &IntPolynomial::linear(lin)))
        })
    }

    /// First Chern class `sum (n_i+1) x_i - sum_{i>=2} sum_k alpha_i^k`.
    pub fn c1(&self) -> IntPolynomial {
        IntPolynomial::linear(&c1_coefficients(&self.gbm))
    }

    /// Total Chern class
    /// `(1+x_1)^{n_1+1} prod_{i>=2} (1+x_i) prod_k (1 + x_i - alpha_i^k)`
    /// in normal form.
    pub fn total_chern(&self) -> IntPolynomial {
        let forms: Vec<Vec<i64>> = self.factors.iter().flatten().cloned().collect();
        self.product_of_affine(&forms)
    }

    /// The fundamental class monomial `x_1^{n_1} ... x_m^{n_m}`.
    pub fn top_monomial(&self) -> Monomial {
        Monomial::new(self.gbm.fiber_dims().iter().map(|&n| n as u32).collect())
    }

    /// Reduced monomials of the given (even) cohomological degree.
    pub fn additive_basis(&self, cohomological_degree: usize) -> Result<Vec<Monomial>> {
        let top = 2 * self.gbm.dim();
        if !cohomological_degree.is_multiple_of(2) || cohomological_degree > top {
            return Err(Error::CohomologicalDegree {
                degree: cohomological_degree,
                top,
            });
        }
        let mut out = Vec::new();
        let mut exps = Vec::with_capacity(self.nvars());
        basis_rec(self.gbm.fiber_dims(), cohomological_degree / 2, &mut exps, &mut out);
        out.sort_by_cached_key(display_order);
        Ok(out)
    }

    /// All reduced monomials, by degree.
    pub fn full_basis(&self) -> Vec<Monomial> {
        (0..=self.gbm.dim())
            .flat_map(|d| self.additive_basis(2 * d).expect("degree in range"))
            .collect()
    }
}

fn reversed(e: &[u32]) -> Vec<u32> {
    e.iter().rev().copied().collect()
}

fn display_order(m: &Monomial) -> (u32, Vec<(usize, u32)>) {
    let factors = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (i, e))
        .collect();
    (m.degree(), factors)
}

fn basis_rec(dims: &[usize], remaining: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    let i = exps.len();
    if i == dims.len() {
        if remaining == 0 {
            out.push(Monomial::new(exps.clone()));
        }
        return;
    }
    let room: usize = dims[i + 1..].iter().sum();
    for k in 0..=dims[i].min(remaining) {
        if remaining - k > room {
            continue;
        }
        exps.push(k as u32);
        basis_rec(dims, remaining - k, exps, out);
        exps.pop();
    }
}

/// Coefficients of `alpha_i^k` on `x_1..x_m` (zero-based `i >= 1`, `k`).
pub fn alpha(gbm: &GeneralizedBottMatrix, i: usize, k: usize) -> Vec<i64> {
    let mut lin = vec![0; gbm.height()];
    for (j, c) in lin.iter_mut().enumerate().take(i) {
        *c = gbm.block(i, j)[k];
    }
    lin
}

pub(crate) fn c1_coefficients(gbm: &GeneralizedBottMatrix) -> Vec<i64> {
    let m = gbm.height();
    let mut c: Vec<i64> = gbm.fiber_dims().iter().map(|&n| n as i64 + 1).collect();
    for i in 1..m {
        for k in 0..gbm.fiber_dims()[i] {
            for (cj, a) in c.iter_mut().zip(alpha(gbm, i, k)) {
                *cj -= a;
            }
        }
    }
    c
}

pub fn relations(gbm: &GeneralizedBottMatrix) -> Vec<IntPolynomial> {
    CohomologyRing::new(gbm).relations().to_vec()
}

pub fn c1(gbm: &GeneralizedBottMatrix) -> IntPolynomial {
    IntPolynomial::linear(&c1_coefficients(gbm))
}

pub fn total_chern(gbm: &GeneralizedBottMatrix) -> IntPolynomial {
    CohomologyRing::new(gbm).total_chern()
}

/// `p*x1 + q*x2` in `H^2` of a two-stage tower.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeTwoClass {
    pub p: i64,
    pub q: i64,
}

impl DegreeTwoClass {
    pub fn to_polynomial(self) -> IntPolynomial {
        IntPolynomial::linear(&[self.p, self.q])
    }
}

/// Nonzero `y = p x1 + q x2` with `|p|, |q| <= bound` and `y^power = 0`.
pub fn nilpotent_degree2(spec: &TwoStageSpec, power: u32, bound: i64) -> Vec<DegreeTwoClass> {
    let ring = CohomologyRing::new(&spec.to_matrix());
    let mut out = Vec::new();
    for p in -bound..=bound {
        for q in -bound..=bound {
            if p == 0 && q == 0 {
                continue;
            }
            let y = IntPolynomial::linear(&[p, q]);
            if ring.pow(&y, power).is_zero() {
                out.push(DegreeTwoClass { p, q });
            }
        }
    }
    out
}
