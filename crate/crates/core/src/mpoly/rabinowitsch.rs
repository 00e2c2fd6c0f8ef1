//! Bounded search for certificates `f^N = Σ_k Σ_j h_{k,j}·g_j·f^k`,
//! `k = 0..N`, where `f = a·p` and the `g_j` generate a left ideal.

use std::collections::BTreeMap;

use serde::Serialize;

use super::point::LeftIdealGens;
use super::{Exponents, MPoly};
use crate::error::{internal, invalid, Result};
use crate::scalar::linalg::solve;
use crate::scalar::{Quat, Rat};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RabinowitschCertificate {
    #[serde(rename = "N")]
    pub n: usize,
    /// `cofactors[k][j] = h_{k,j}`.
    pub cofactors: Vec<Vec<MPoly>>,
}

impl RabinowitschCertificate {
    /// `Σ_k Σ_j h_{k,j}·g_j·f^k`.
    pub fn combination(&self, ideal: &LeftIdealGens, f: &MPoly) -> MPoly {
        let mut sum = MPoly::zero(f.nvars());
        let mut fk = MPoly::one(f.nvars());
        for row in &self.cofactors {
            for (h, g) in row.iter().zip(ideal.gens()) {
                sum = &sum + &(&(h * g) * &fk);
            }
            fk = &fk * f;
        }
        sum
    }

    pub fn verify(&self, ideal: &LeftIdealGens, p: &MPoly, a: &Quat) -> bool {
        let f = p.left_scale(a);
        self.cofactors.len() == self.n + 1
            && self
                .cofactors
                .iter()
                .all(|row| row.len() == ideal.gens().len())
            && self.combination(ideal, &f) == f.pow(self.n as u32)
    }
}

/// Exponent vectors in `n` variables of total degree at most `d`, ascending.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Exponents> {
    fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if prefix.len() == n {
            out.push(Exponents(prefix.clone()));
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(n, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Cofactors of total degree ≤ `degbound` realizing the identity for this
/// `N`, found by exact linear algebra on monomial coordinates; `None` if
/// no such cofactors exist.
pub fn rabinowitsch_check(
    ideal: &LeftIdealGens,
    p: &MPoly,
    a: &Quat,
    n: usize,
    degbound: u32,
) -> Result<Option<RabinowitschCertificate>> {
    if n == 0 {
        return invalid("N must be at least 1");
    }
    if p.nvars() != ideal.nvars() {
        return invalid(format!(
            "polynomial in {} variables, ideal in {}",
            p.nvars(),
            ideal.nvars()
        ));
    }
    let nv = p.nvars();
    let f = p.left_scale(a);
    let target = f.pow(n as u32);
    let monos = monomials_up_to(nv, degbound);
    let units = [Quat::one(), Quat::i(), Quat::j(), Quat::k()];

    // One column per unit·monomial multiple of each g_j·f^k.
    let mut columns: Vec<MPoly> = Vec::new();
    let mut fk = MPoly::one(nv);
    for _ in 0..=n {
        for g in ideal.gens() {
            let base = g * &fk;
            for mu in &monos {
                for e in &units {
                    columns.push(base.times_term_left(e, mu));
                }
            }
        }
        fk = &fk * &f;
    }

    let mut index: BTreeMap<Exponents, usize> = BTreeMap::new();
    for poly in columns.iter().chain(std::iter::once(&target)) {
        for (e, _) in poly.terms() {
            let len = index.len();
            index.entry(e.clone()).or_insert(len);
        }
    }
    let nrows = 4 * index.len();
    let flatten = |poly: &MPoly| {
        let mut v = vec![Rat::default(); nrows];
        for (e, c) in poly.terms() {
            let r = 4 * index[e];
            for (s, x) in c.coords().into_iter().enumerate() {
                v[r + s] = x;
            }
        }
        v
    };
    let cols: Vec<Vec<Rat>> = columns.iter().map(flatten).collect();
    let rows: Vec<Vec<Rat>> = (0..nrows)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let Some(sol) = solve(&rows, &flatten(&target), cols.len()) else {
        return Ok(None);
    };

    let ngens = ideal.gens().len();
    let mut cofactors = vec![vec![MPoly::zero(nv); ngens]; n + 1];
    let mut idx = 0;
    for row in cofactors.iter_mut() {
        for h in row.iter_mut() {
            for mu in &monos {
                let c = Quat::from_coords([
                    sol[idx].clone(),
                    sol[idx + 1].clone(),
                    sol[idx + 2].clone(),
                    sol[idx + 3].clone(),
                ]);
                idx += 4;
                h.add_term(mu.clone(), c);
            }
        }
    }
    let cert = RabinowitschCertificate { n, cofactors };
    if !cert.verify(ideal, p, a) {
        return internal("certificate from the linear solve does not reconstruct");
    }
    Ok(Some(cert))
}

/// The certificate with the least `N` in `1..=max_n`, if any.
pub fn find_certificate(
    ideal: &LeftIdealGens,
    p: &MPoly,
    a: &Quat,
    max_n: usize,
    degbound: u32,
) -> Result<Option<RabinowitschCertificate>> {
    for n in 1..=max_n {
        if let Some(c) = rabinowitsch_check(ideal, p, a, n, degbound)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x_minus(c: Quat) -> MPoly {
        &MPoly::var(1, 0).unwrap() - &MPoly::constant(1, c)
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_up_to(2, 1).len(), 3);
        assert_eq!(monomials_up_to(3, 2).len(), 10);
        assert_eq!(monomials_up_to(1, 0), vec![Exponents(vec![0])]);
    }

    #[test]
    fn membership_at_n_one() {
        let ideal = LeftIdealGens::new(vec![x_minus(Quat::i())]).unwrap();
        let p = x_minus(Quat::i());
        let cert = rabinowitsch_check(&ideal, &p, &Quat::one(), 1, 0)
            .unwrap()
            .unwrap();
        assert_eq!(cert.n, 1);
        assert!(cert.verify(&ideal, &p, &Quat::one()));
        let found = find_certificate(&ideal, &p, &Quat::one(), 3, 0)
            .unwrap()
            .unwrap();
        assert_eq!(found.n, 1);
    }

    #[test]
    fn nonvanishing_polynomial_has_no_certificate() {
        let ideal = LeftIdealGens::new(vec![x_minus(Quat::i())]).unwrap();
        let p = MPoly::one(1);
        assert_eq!(
            find_certificate(&ideal, &p, &Quat::one(), 3, 2).unwrap(),
            None
        );
    }

    #[test]
    fn rejects_bad_arguments() {
        let ideal = LeftIdealGens::new(vec![x_minus(Quat::i())]).unwrap();
        assert!(rabinowitsch_check(&ideal, &MPoly::one(1), &Quat::one(), 0, 0).is_err());
        assert!(rabinowitsch_check(&ideal, &MPoly::one(2), &Quat::one(), 1, 0).is_err());
    }
}
