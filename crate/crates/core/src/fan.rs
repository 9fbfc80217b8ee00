//! Fan of a generalized Bott tower and the Fano decision by primitive
//! relations.
//!
//! Rays are indexed in the order `e_1^1..e_1^{n_1}, ..., e_m^1..e_m^{n_m},
//! v_1, ..., v_m`. The fan is combinatorially a product of simplices, so
//! cones and primitive collections are produced in closed form rather than
//! extracted from a general fan.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::gbm::{GeneralizedBottMatrix, TwoStageSpec};

/// Ray generators of the fan, one column per ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayMatrix {
    fiber_dims: Vec<usize>,
    columns: Vec<Vec<i64>>,
}

impl RayMatrix {
    pub fn new(gbm: &GeneralizedBottMatrix) -> Self {
        let n = gbm.dim();
        let m = gbm.height();
        let mut columns = Vec::with_capacity(n + m);
        for idx in 0..n {
            let mut e = vec![0; n];
            e[idx] = 1;
            columns.push(e);
        }
        for j in 0..m {
            let mut v = vec![0; n];
            let off = gbm.block_offset(j);
            v[off..off + gbm.fiber_dims()[j]].fill(-1);
            for i in j + 1..m {
                let off = gbm.block_offset(i);
                v[off..off + gbm.fiber_dims()[i]].copy_from_slice(gbm.block(i, j));
            }
            columns.push(v);
        }
        Self {
            fiber_dims: gbm.fiber_dims().to_vec(),
            columns,
        }
    }

    pub fn dim(&self) -> usize {
        self.fiber_dims.iter().sum()
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    /// Index of `e_i^{k+1}` (zero-based stage `i`, zero-based `k`).
    pub fn e_index(&self, i: usize, k: usize) -> usize {
        self.fiber_dims[..i].iter().sum::<usize>() + k
    }

    /// Index of `v_{j+1}`.
    pub fn v_index(&self, j: usize) -> usize {
        self.dim() + j
    }

    pub fn v(&self, j: usize) -> &[i64] {
        &self.columns[self.v_index(j)]
    }

    /// Determinant of the square matrix whose columns are the cone's rays.
    pub fn cone_determinant(&self, cone: &[usize]) -> BigInt {
        let n = self.dim();
        assert_eq!(cone.len(), n, "a maximal cone has n generators");
        let rows = (0..n)
            .map(|r| cone.iter().map(|&c| BigInt::from(self.columns[c][r])).collect())
            .collect();
        determinant(rows)
    }
}

/// Fraction-free (Bareiss) elimination; exact over the integers.
pub fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

pub fn ray_matrix(gbm: &GeneralizedBottMatrix) -> RayMatrix {
    RayMatrix::new(gbm)
}

/// `R_j = {e_j^1, ..., e_j^{n_j}, v_j}` as sorted ray indices, one per stage.
pub fn primitive_collections(gbm: &GeneralizedBottMatrix) -> Vec<Vec<usize>> {
    let rays = RayMatrix::new(gbm);
    (0..gbm.height())
        .map(|j| {
            let mut r: Vec<usize> = (0..gbm.fiber_dims()[j]).map(|k| rays.e_index(j, k)).collect();
            r.push(rays.v_index(j));
            r
        })
        .collect()
}

/// All maximal cones: drop exactly one ray from every primitive collection.
/// Each cone is a sorted list of ray indices.
pub fn maximal_cones(gbm: &GeneralizedBottMatrix) -> Vec<Vec<usize>> {
    let collections = primitive_collections(gbm);
    let mut cones = vec![Vec::new()];
    for collection in &collections {
        let mut next = Vec::with_capacity(cones.len() * collection.len());
        for cone in &cones {
            for dropped in collection {
                let mut c: Vec<usize> = cone.clone();
                c.extend(collection.iter().filter(|&r| r != dropped));
                next.push(c);
            }
        }
        cones = next;
    }
    for cone in &mut cones {
        cone.sort_unstable();
    }
    cones
}

/// `v_j + sum_k e_j^k = sum_{i>j} (lambda_{i,j}^0 v_i + sum_k lambda_{i,j}^k e_i^k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveRelation {
    /// Zero-based stage `j` of the collection.
    pub stage: usize,
    /// `lambdas[i - j - 1]` is `(lambda^0, lambda^1, ..., lambda^{n_i})` for stage `i > j`;
    /// entry 0 is the coefficient of `v_i`.
    pub lambdas: Vec<Vec<i64>>,
    pub degree: i64,
}

impl PrimitiveRelation {
    /// `lambda_{i,j}` for zero-based stage `i > j`.
    pub fn lambda(&self, i: usize) -> &[i64] {
        &self.lambdas[i - self.stage - 1]
    }

    /// `sum_{i>j} sum_k lambda_{i,j}^k`.
    pub fn coefficient_sum(&self) -> i64 {
        self.lambdas.iter().flatten().sum()
    }

    /// True when the collection sums to the zero vector.
    pub fn is_zero_sum(&self) -> bool {
        self.lambdas.iter().flatten().all(|&l| l == 0)
    }

    /// Re-evaluates both sides of the relation on the ray matrix and checks
    /// nonnegativity and the one-unused-generator-per-block condition.
    pub fn holds(&self, gbm: &GeneralizedBottMatrix) -> bool {
        let rays = RayMatrix::new(gbm);
        let j = self.stage;
        let n = rays.dim();
        let mut lhs = rays.v(j).to_vec();
        for k in 0..gbm.fiber_dims()[j] {
            lhs[rays.e_index(j, k)] += 1;
        }
        let mut rhs = vec![0i64; n];
        for (offset, lambda) in self.lambdas.iter().enumerate() {
            let i = j + 1 + offset;
            if lambda.len() != gbm.fiber_dims()[i] + 1
                || lambda.iter().any(|&l| l < 0)
                || lambda.iter().all(|&l| l != 0)
            {
                return false;
            }
            for (r, &val) in rhs.iter_mut().zip(rays.v(i)) {
                *r += lambda[0] * val;
            }
            for (k, &l) in lambda[1..].iter().enumerate() {
                rhs[rays.e_index(i, k)] += l;
            }
        }
        let size = gbm.fiber_dims()[j] as i64 + 1;
        self.lambdas.len() == gbm.height() - j - 1
            && lhs == rhs
            && self.degree == size - self.coefficient_sum()
    }
}

impl fmt::Display for PrimitiveRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = self.stage + 1;
        write!(f, "R{j}: ")?;
        if self.lambdas.is_empty() {
            return write!(f, "sum = 0; degree {}", self.degree);
        }
        let parts: Vec<String> = self
            .lambdas
            .iter()
            .enumerate()
            .map(|(offset, l)| {
                let entries: Vec<String> = l.iter().map(|x| x.to_string()).collect();
                format!("lambda({},{j}) = ({})", j + 1 + offset, entries.join(","))
            })
            .collect();
        write!(f, "{}; degree {}", parts.join(", "), self.degree)
    }
}

/// Solves the primitive relation of `R_j` by an ascending sweep over the
/// later blocks.
///
/// `v_i` only touches blocks `>= i`, so once block `i` is cleared it stays
/// cleared. The smallest `lambda^0` keeping every `lambda^k >= 0` leaves
/// at least one generator per block unused, which pins the solution down.
pub fn primitive_relation(gbm: &GeneralizedBottMatrix, j: usize) -> Result<PrimitiveRelation> {
    let m = gbm.height();
    if j >= m {
        return Err(Error::StageIndex { j: j + 1, m });
    }
    // Residual block-i components of v_j + sum_k e_j^k, for i > j.
    let mut residual: Vec<Vec<i64>> = (j + 1..m).map(|i| gbm.block(i, j).to_vec()).collect();
    let mut lambdas = Vec::with_capacity(m - j - 1);
    for i in j + 1..m {
        let c = &residual[i - j - 1];
        let lambda0 = (-c.iter().copied().min().unwrap_or(0)).max(0);
        let mut lambda = Vec::with_capacity(c.len() + 1);
        lambda.push(lambda0);
        lambda.extend(c.iter().map(|&ck| ck + lambda0));
        for l in i + 1..m {
            for (w, &a) in residual[l - j - 1].iter_mut().zip(gbm.block(l, i)) {
                *w -= lambda0 * a;
            }
        }
        lambdas.push(lambda);
    }
    let size = gbm.fiber_dims()[j] as i64 + 1;
    let degree = size - lambdas.iter().flatten().sum::<i64>();
    let relation = PrimitiveRelation {
        stage: j,
        lambdas,
        degree,
    };
    debug_assert!(relation.holds(gbm));
    Ok(relation)
}

/// Primitive relations of every collection with the Fano verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoReport {
    pub relations: Vec<PrimitiveRelation>,
    pub fano: bool,
}

impl FanoReport {
    pub fn degrees(&self) -> Vec<i64> {
        self.relations.iter().map(|r| r.degree).collect()
    }
}

/// Fano iff every primitive collection has positive degree.
pub fn is_fano(gbm: &GeneralizedBottMatrix) -> FanoReport {
    let relations: Vec<PrimitiveRelation> = (0..gbm.height())
        .map(|j| primitive_relation(gbm, j).expect("stage in range"))
        .collect();
    let fano = relations.iter().all(|r| r.degree > 0);
    FanoReport { relations, fano }
}

/// Closed form for normalized two-stage towers: `sum a_k <= n1`.
pub fn is_fano_two_stage(spec: &TwoStageSpec) -> Result<bool> {
    if !spec.is_normalized() {
        return Err(Error::NotNormalized(spec.to_string()));
    }
    Ok(spec.exponent_sum() <= spec.n1() as i64)
}

/// Fano test for any two-stage spec (normalizing first).
pub fn spec_is_fano(spec: &TwoStageSpec) -> bool {
    is_fano_two_stage(&spec.normalize()).expect("normalized")
}
