//! Reference computations written directly from the definitions, sharing no
//! code paths with the library beyond its input types.
#![allow(dead_code)]

use std::collections::BTreeMap;

use bottfano::{GeneralizedBottMatrix, TwoStageSpec};

/// `e_r` as a sum over all `r`-element subsets.
pub fn subset_sum_e(values: &[i64], r: usize) -> i128 {
    let n = values.len();
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == r)
        .map(|mask| {
            (0..n)
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| values[k] as i128)
                .product::<i128>()
        })
        .sum()
}

/// Coefficients of `prod (1 + b t)` by repeated multiplication.
pub fn expand_linear_product(values: &[i64]) -> Vec<i128> {
    let mut coeffs = vec![1i128];
    for &b in values {
        let mut next = vec![0i128; coeffs.len() + 1];
        for (r, c) in coeffs.iter().enumerate() {
            next[r] += c;
            next[r + 1] += c * b as i128;
        }
        coeffs = next;
    }
    coeffs
}

/// Ray generators in the order `e_1^1..e_m^{n_m}, v_1..v_m`.
pub fn rays(gbm: &GeneralizedBottMatrix) -> Vec<Vec<i64>> {
    let dims = gbm.fiber_dims();
    let n: usize = dims.iter().sum();
    let m = dims.len();
    let mut out: Vec<Vec<i64>> = (0..n)
        .map(|p| {
            let mut e = vec![0; n];
            e[p] = 1;
            e
        })
        .collect();
    for j in 0..m {
        let mut v = vec![0; n];
        let mut offset = 0;
        for i in 0..m {
            for k in 0..dims[i] {
                v[offset + k] = match i.cmp(&j) {
                    std::cmp::Ordering::Less => 0,
                    std::cmp::Ordering::Equal => -1,
                    std::cmp::Ordering::Greater => gbm.block(i, j)[k],
                };
            }
            offset += dims[i];
        }
        out.push(v);
    }
    out
}

/// Ray indices of the collection `{e_j^1..e_j^{n_j}, v_j}`.
pub fn collection(dims: &[usize], j: usize) -> Vec<usize> {
    let offset: usize = dims[..j].iter().sum();
    let n: usize = dims.iter().sum();
    let mut c: Vec<usize> = (offset..offset + dims[j]).collect();
    c.push(n + j);
    c
}

/// Maximal cones: drop one ray from each collection.
pub fn maximal_cones(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut cones = vec![Vec::new()];
    for j in 0..dims.len() {
        let coll = collection(dims, j);
        let mut next = Vec::new();
        for cone in &cones {
            for &skip in &coll {
                let mut c = cone.clone();
                c.extend(coll.iter().copied().filter(|&r| r != skip));
                next.push(c);
            }
        }
        cones = next;
    }
    for c in &mut cones {
        c.sort_unstable();
    }
    cones
}

/// Integer determinant by cofactor expansion along the first row.
pub fn cofactor_det(a: &[Vec<i64>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return a[0][0] as i128;
    }
    let mut total = 0i128;
    for col in 0..n {
        if a[0][col] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let sign = if col % 2 == 0 { 1 } else { -1 };
        total += sign * a[0][col] as i128 * cofactor_det(&minor);
    }
    total
}

/// Solves `sum_c x_c * rays[cone[c]] = target`, accepting only an exact
/// integer solution.
pub fn solve_in_cone(rays: &[Vec<i64>], cone: &[usize], target: &[i64]) -> Option<Vec<i64>> {
    let n = target.len();
    let mut m: Vec<Vec<f64>> = (0..n)
        .map(|row| {
            let mut r: Vec<f64> = cone.iter().map(|&c| rays[c][row] as f64).collect();
            r.push(target[row] as f64);
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).max_by(|&x, &y| m[x][col].abs().total_cmp(&m[y][col].abs()))?;
        if m[pivot][col].abs() < 1e-9 {
            return None;
        }
        m.swap(col, pivot);
        for row in 0..n {
            if row != col {
                let f = m[row][col] / m[col][col];
                for k in col..=n {
                    m[row][k] -= f * m[col][k];
                }
            }
        }
    }
    let x: Vec<i64> = (0..n).map(|i| (m[i][n] / m[i][i]).round() as i64).collect();
    let exact = (0..n).all(|row| {
        cone.iter()
            .zip(&x)
            .map(|(&c, &xi)| rays[c][row] * xi)
            .sum::<i64>()
            == target[row]
    });
    exact.then_some(x)
}

/// Coefficients over all rays of the primitive relation of collection `j`,
/// found by locating the cone that contains the collection sum.
pub fn oracle_relation(gbm: &GeneralizedBottMatrix, j: usize) -> Vec<i64> {
    let dims = gbm.fiber_dims();
    let rays = rays(gbm);
    let n = dims.iter().sum::<usize>();
    let mut target = vec![0i64; n];
    for r in collection(dims, j) {
        for (t, x) in target.iter_mut().zip(&rays[r]) {
            *t += x;
        }
    }
    for cone in maximal_cones(dims) {
        if let Some(x) = solve_in_cone(&rays, &cone, &target) {
            if x.iter().all(|&v| v >= 0) {
                let mut full = vec![0i64; rays.len()];
                for (&c, &v) in cone.iter().zip(&x) {
                    full[c] = v;
                }
                return full;
            }
        }
    }
    panic!("collection sum lies in no maximal cone");
}

pub fn oracle_degrees(gbm: &GeneralizedBottMatrix) -> Vec<i64> {
    let dims = gbm.fiber_dims();
    (0..dims.len())
        .map(|j| dims[j] as i64 + 1 - oracle_relation(gbm, j).iter().sum::<i64>())
        .collect()
}

pub fn oracle_fano(gbm: &GeneralizedBottMatrix) -> bool {
    oracle_degrees(gbm).iter().all(|&d| d > 0)
}

/// `H^*` of a two-stage tower as `Z[x1,x2]/<x1^{n1+1}, x2 prod (x2 - a_k x1)>`,
/// with polynomials stored as `(i, j) -> coeff` for `x1^i x2^j`.
pub struct TwoStageRing {
    n1: usize,
    n2: usize,
    /// `x2^{n2+1} - x2 prod (x2 - a_k x1)`, which has `x2`-degree at most `n2`.
    tail: BTreeMap<(usize, usize), i128>,
}

pub type Dense = BTreeMap<(usize, usize), i128>;

fn add_into(acc: &mut Dense, key: (usize, usize), c: i128) {
    if c == 0 {
        return;
    }
    let e = acc.entry(key).or_insert(0);
    *e += c;
    if *e == 0 {
        acc.remove(&key);
    }
}

pub fn mul(p: &Dense, q: &Dense) -> Dense {
    let mut out = Dense::new();
    for (&(i, j), &c) in p {
        for (&(k, l), &d) in q {
            add_into(&mut out, (i + k, j + l), c * d);
        }
    }
    out
}

pub fn linear(c1: i64, c2: i64) -> Dense {
    let mut p = Dense::new();
    add_into(&mut p, (1, 0), c1 as i128);
    add_into(&mut p, (0, 1), c2 as i128);
    p
}

impl TwoStageRing {
    pub fn new(spec: &TwoStageSpec) -> Self {
        let mut rel = linear(0, 1);
        for &a in spec.exponents() {
            rel = mul(&rel, &linear(-a, 1));
        }
        let mut tail = Dense::new();
        let lead = (0, spec.n2() + 1);
        for (k, c) in rel {
            if k != lead {
                add_into(&mut tail, k, -c);
            } else {
                assert_eq!(c, 1);
            }
        }
        Self {
            n1: spec.n1(),
            n2: spec.n2(),
            tail,
        }
    }

    pub fn reduce(&self, p: &Dense) -> Dense {
        let mut work = p.clone();
        let mut out = Dense::new();
        while let Some((&(i, j), &c)) = work.iter().next_back() {
            work.remove(&(i, j));
            if i > self.n1 {
                continue;
            }
            if j > self.n2 {
                for (&(k, l), &d) in &self.tail {
                    add_into(&mut work, (i + k, j - self.n2 - 1 + l), c * d);
                }
            } else {
                add_into(&mut out, (i, j), c);
            }
        }
        out
    }

    /// Image of the source relations under `x1 -> a y1 + b y2`, `x2 -> c y1 + d y2`
    /// vanish in this ring.
    pub fn accepts(&self, source: &TwoStageSpec, m: [[i64; 2]; 2]) -> bool {
        let x1 = linear(m[0][0], m[0][1]);
        let x2 = linear(m[1][0], m[1][1]);
        let mut r1 = linear(0, 0);
        r1.insert((0, 0), 1);
        for _ in 0..=source.n1() {
            r1 = mul(&r1, &x1);
        }
        let mut r2 = x2.clone();
        for &a in source.exponents() {
            let mut factor = x2.clone();
            for (k, c) in &x1 {
                add_into(&mut factor, *k, -(a as i128) * c);
            }
            r2 = mul(&r2, &factor);
        }
        self.reduce(&r1).is_empty() && self.reduce(&r2).is_empty()
    }
}

/// `c1 = (n1 + 1 - sum a) x1 + (n2 + 1) x2`.
pub fn two_stage_c1(spec: &TwoStageSpec) -> (i64, i64) {
    (
        spec.n1() as i64 + 1 - spec.exponents().iter().sum::<i64>(),
        spec.n2() as i64 + 1,
    )
}

pub fn oracle_witness_valid(m: [[i64; 2]; 2], c1: bool, source: &TwoStageSpec, target: &TwoStageSpec) -> bool {
    if (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() != 1 {
        return false;
    }
    if c1 {
        let (p, q) = two_stage_c1(source);
        let image = (p * m[0][0] + q * m[1][0], p * m[0][1] + q * m[1][1]);
        if image != two_stage_c1(target) {
            return false;
        }
    }
    TwoStageRing::new(target).accepts(source, m)
}

/// Brute-force existence of a witness in `[-bound, bound]^4`.
pub fn oracle_ring_iso(source: &TwoStageSpec, target: &TwoStageSpec, bound: i64, c1: bool) -> bool {
    if source.n1() + source.n2() != target.n1() + target.n2() {
        return false;
    }
    let r = -bound..=bound;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    if oracle_witness_valid([[a, b], [c, d]], c1, source, target) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Nonnegative integer vectors of the given length with sum at most `budget`.
pub fn bounded_vectors(len: usize, budget: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=budget {
        for mut rest in bounded_vectors(len - 1, budget - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
