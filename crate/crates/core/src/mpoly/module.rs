//! Left `D[x_1, …, x_n]`-modules that are finite-dimensional over `D`,
//! presented by commuting matrices acting on row vectors: `x_i·v = v·A_i`.

use serde::{Deserialize, Serialize};

use super::point::{point_ideal, CommutingPoint, LeftIdealGens};
use super::MPoly;
use crate::error::{internal, invalid, Error, Result};
use crate::scalar::linalg::{solve_vectors_over, Side};
use crate::scalar::{centralizer_of_set, CentralizerDesc, Quat};
use crate::upoly::{left_roots, sphere_point_in, RootClass, UPoly};

/// Square matrix over `H_Q`, row-major.
pub type QMatrix = Vec<Vec<Quat>>;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ModulePresentation {
    /// `dim_D` of the module.
    pub m: usize,
    /// `A_1, …, A_n`.
    pub mats: Vec<QMatrix>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum Violation {
    ZeroDimension,
    NoOperators,
    WrongShape {
        matrix: usize,
        rows: usize,
        cols: Vec<usize>,
    },
    NotCommuting {
        first: usize,
        second: usize,
    },
}

/// Every failed requirement of a presentation; empty when it is valid.
/// Matrix indices are 1-based.
pub fn check_presentation(module: &ModulePresentation) -> Vec<Violation> {
    let mut out = Vec::new();
    let m = module.m;
    if m == 0 {
        out.push(Violation::ZeroDimension);
    }
    if module.mats.is_empty() {
        out.push(Violation::NoOperators);
    }
    let mut shaped = true;
    for (idx, a) in module.mats.iter().enumerate() {
        if a.len() != m || a.iter().any(|r| r.len() != m) {
            shaped = false;
            out.push(Violation::WrongShape {
                matrix: idx + 1,
                rows: a.len(),
                cols: a.iter().map(Vec::len).collect(),
            });
        }
    }
    if shaped {
        for (s, a) in module.mats.iter().enumerate() {
            for (t, b) in module.mats.iter().enumerate().skip(s + 1) {
                if mat_mul(a, b) != mat_mul(b, a) {
                    out.push(Violation::NotCommuting {
                        first: s + 1,
                        second: t + 1,
                    });
                }
            }
        }
    }
    out
}

fn require_valid(module: &ModulePresentation) -> Result<()> {
    let v = check_presentation(module);
    if v.is_empty() {
        Ok(())
    } else {
        invalid(format!("invalid module presentation: {v:?}"))
    }
}

pub fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|c| row.iter().zip(b).map(|(x, brow)| x * &brow[c]).sum())
                .collect()
        })
        .collect()
}

/// Row vector times matrix.
pub fn vec_mat(v: &[Quat], a: &QMatrix) -> Vec<Quat> {
    let n = a.first().map_or(0, Vec::len);
    (0..n)
        .map(|c| v.iter().zip(a).map(|(x, row)| x * &row[c]).sum())
        .collect()
}

fn scale_vec(c: &Quat, v: &[Quat]) -> Vec<Quat> {
    v.iter().map(|x| c * x).collect()
}

fn add_vec(a: &[Quat], b: &[Quat]) -> Vec<Quat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn is_zero_vec(v: &[Quat]) -> bool {
    v.iter().all(Quat::is_zero)
}

/// Inverse by Gauss–Jordan elimination; `DivisionByZero` when singular.
pub fn invert_matrix(a: &QMatrix) -> Result<QMatrix> {
    let m = a.len();
    if a.iter().any(|r| r.len() != m) {
        return invalid("only square matrices can be inverted");
    }
    let mut work: Vec<Vec<Quat>> = a
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut ext = row.clone();
            ext.extend((0..m).map(|c| if c == r { Quat::one() } else { Quat::zero() }));
            ext
        })
        .collect();
    for col in 0..m {
        let pivot = (col..m)
            .find(|&r| !work[r][col].is_zero())
            .ok_or(Error::DivisionByZero)?;
        work.swap(col, pivot);
        let inv = work[col][col].inv()?;
        work[col] = scale_vec(&inv, &work[col]);
        for r in 0..m {
            if r != col && !work[r][col].is_zero() {
                let f = -&work[r][col];
                let shifted = scale_vec(&f, &work[col]);
                work[r] = add_vec(&work[r], &shifted);
            }
        }
    }
    Ok(work.into_iter().map(|row| row[m..].to_vec()).collect())
}

/// `Σ q_k·(v·A^k)`, the action of `q(x_i)` on `v`.
fn apply_poly(q: &UPoly, v: &[Quat], a: &QMatrix) -> Vec<Quat> {
    let mut out = vec![Quat::zero(); v.len()];
    let mut power = v.to_vec();
    for (k, c) in q.coeffs().iter().enumerate() {
        if k > 0 {
            power = vec_mat(&power, a);
        }
        out = add_vec(&out, &scale_vec(c, &power));
    }
    out
}

/// `p·v = Σ c_α·(v·A^α)`.
pub fn act(module: &ModulePresentation, p: &MPoly, v: &[Quat]) -> Result<Vec<Quat>> {
    require_valid(module)?;
    if p.nvars() != module.mats.len() || v.len() != module.m {
        return invalid("polynomial, operators and vector sizes disagree");
    }
    let mut out = vec![Quat::zero(); module.m];
    for (e, c) in p.terms() {
        let mut w = v.to_vec();
        for (a, &k) in module.mats.iter().zip(&e.0) {
            for _ in 0..k {
                w = vec_mat(&w, a);
            }
        }
        out = add_vec(&out, &scale_vec(c, &w));
    }
    Ok(out)
}

/// Monic generator of `{q ∈ D[x] : q(x_i)·v = 0}`: the first `n` with
/// `v·A^n` in the left `D`-span of `v, v·A, …, v·A^{n−1}`.
pub fn annihilator_minpoly(module: &ModulePresentation, v: &[Quat], i: usize) -> Result<UPoly> {
    require_valid(module)?;
    if i >= module.mats.len() {
        return invalid(format!("operator index {} out of range", i + 1));
    }
    if v.len() != module.m {
        return invalid(format!(
            "vector of length {} in a module of dimension {}",
            v.len(),
            module.m
        ));
    }
    if is_zero_vec(v) {
        return invalid("the zero vector has no minimal annihilator");
    }
    let a = &module.mats[i];
    let mut powers = vec![v.to_vec()];
    for _ in 1..=module.m {
        let next = vec_mat(powers.last().expect("nonempty"), a);
        if let Some(cs) = solve_vectors_over(&powers, &next, &CentralizerDesc::FullRing, Side::Left)
        {
            let mut coeffs: Vec<Quat> = cs.iter().map(|c| -c).collect();
            coeffs.push(Quat::one());
            return Ok(UPoly::new(coeffs));
        }
        powers.push(next);
    }
    internal(format!("no annihilator of degree ≤ {} found", module.m))
}

/// A common eigenvector: `v ≠ 0` with `v·A_i = a_i·v` for every `i`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EigenTuple {
    pub vector: Vec<Quat>,
    pub point: CommutingPoint,
}

impl EigenTuple {
    pub fn holds_in(&self, module: &ModulePresentation) -> bool {
        !is_zero_vec(&self.vector)
            && module
                .mats
                .iter()
                .zip(self.point.components())
                .all(|(a, ai)| vec_mat(&self.vector, a) == scale_vec(ai, &self.vector))
    }
}

fn left_root_in(p: &UPoly, within: &CentralizerDesc) -> Result<Option<Quat>> {
    for class in left_roots(p)?.classes {
        let found = match class {
            RootClass::Isolated { root } => within.is_member(&root).then_some(root),
            RootClass::Sphere { trace, norm } => sphere_point_in(&trace, &norm, within),
        };
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn eigen_from_seed(module: &ModulePresentation, seed: &[Quat]) -> Result<EigenTuple> {
    let mut v = seed.to_vec();
    let mut point: Vec<Quat> = Vec::with_capacity(module.mats.len());
    for (i, a) in module.mats.iter().enumerate() {
        let p = annihilator_minpoly(module, &v, i)?;
        let within = centralizer_of_set(&point);
        if let Some(c) = p.coeffs().iter().find(|c| !within.is_member(c)) {
            return internal(format!(
                "annihilator {p} of x{} has coefficient {c} outside the centralizer of the earlier coordinates",
                i + 1
            ));
        }
        let Some(root) = left_root_in(&p, &within)? else {
            return Err(Error::RootNotFound {
                poly: p.to_string(),
            });
        };
        let (q, r) = p.divide_left(&UPoly::linear(&root))?;
        if !r.is_zero() {
            return internal(format!("{root} is not a left root of {p}"));
        }
        v = apply_poly(&q, &v, a);
        if is_zero_vec(&v) {
            return internal(format!("cofactor of {p} annihilates the vector"));
        }
        point.push(root);
    }
    let tuple = EigenTuple {
        vector: v,
        point: CommutingPoint::new(point)?,
    };
    if !tuple.holds_in(module) {
        return internal("eigen tuple fails its defining equations");
    }
    Ok(tuple)
}

/// A common eigenvector, refining `seed` one operator at a time.
///
/// When a root cannot be represented, or a structural check fails for this
/// seed, the search restarts from each standard basis vector before giving
/// up. A structural failure is reported in preference to a missing root.
pub fn find_eigen_tuple(module: &ModulePresentation, seed: &[Quat]) -> Result<EigenTuple> {
    require_valid(module)?;
    if seed.len() != module.m || is_zero_vec(seed) {
        return invalid("seed must be a nonzero vector of the module dimension");
    }
    let mut seeds = vec![seed.to_vec()];
    for s in 0..module.m {
        let mut e = vec![Quat::zero(); module.m];
        e[s] = Quat::one();
        if e != seed {
            seeds.push(e);
        }
    }
    let mut not_found = None;
    let mut structural = None;
    for s in &seeds {
        match eigen_from_seed(module, s) {
            Ok(t) => return Ok(t),
            Err(e @ Error::RootNotFound { .. }) => {
                not_found.get_or_insert(e);
            }
            Err(e @ Error::Internal(_)) => {
                structural.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    Err(structural
        .or(not_found)
        .expect("at least one seed was tried"))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum SimplicityReport {
    /// One-dimensional, so simple, and isomorphic to `D[x]` modulo the ideal.
    Simple {
        point: CommutingPoint,
        ideal: LeftIdealGens,
    },
    /// A common eigenvector spans a proper submodule.
    NonSimple { witness: EigenTuple },
    /// No eigenvector could be produced; the root polynomial is reported.
    Inconclusive { poly: String },
}

pub fn verify_simple_1dim(module: &ModulePresentation) -> Result<SimplicityReport> {
    require_valid(module)?;
    if module.m == 1 {
        let point = CommutingPoint::new(module.mats.iter().map(|a| a[0][0].clone()).collect())?;
        let ideal = point_ideal(&point);
        return Ok(SimplicityReport::Simple { point, ideal });
    }
    let mut e1 = vec![Quat::zero(); module.m];
    e1[0] = Quat::one();
    match find_eigen_tuple(module, &e1) {
        Ok(witness) => Ok(SimplicityReport::NonSimple { witness }),
        Err(Error::RootNotFound { poly }) => Ok(SimplicityReport::Inconclusive { poly }),
        Err(e) => Err(e),
    }
}
