use super::UPoly;
use crate::error::{internal, invalid, Result};
use crate::scalar::linalg::nullspace;
use crate::scalar::{Quat, Rat};

/// Monic generator of the left ideal `D[x]p + D[x]q`, by Euclid with right division.
pub fn gcrd(p: &UPoly, q: &UPoly) -> Result<UPoly> {
    if p.is_zero() && q.is_zero() {
        return invalid("gcrd of two zero polynomials");
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let (_, r) = a.divide_right(&b)?;
        a = b;
        b = r;
    }
    a.monic()
}

/// Monic generator of `D[x]p ∩ D[x]q`.
///
/// Searches the smallest `n` for which `u·p = v·q` has a nonzero solution with
/// `deg u ≤ n − deg p`, `deg v ≤ n − deg q`, as a rational linear system in
/// the coordinates of the coefficients of `u` and `v`.
pub fn lclm(p: &UPoly, q: &UPoly) -> Result<UPoly> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return invalid("lclm needs nonzero polynomials");
    };
    let units = [Quat::one(), Quat::i(), Quat::j(), Quat::k()];
    for n in dp.max(dq)..=dp + dq {
        let nu = n - dp + 1;
        let nv = n - dq + 1;
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(4 * (nu + nv));
        let mut push_col = |poly: UPoly| {
            cols.push((0..=n).flat_map(|k| poly.coeff(k).coords()).collect());
        };
        for a in 0..nu {
            for e in &units {
                push_col(&UPoly::monomial(e.clone(), a) * p);
            }
        }
        for b in 0..nv {
            for e in &units {
                push_col(-(&UPoly::monomial(e.clone(), b) * q));
            }
        }
        let nrows = 4 * (n + 1);
        let rows: Vec<Vec<Rat>> = (0..nrows)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        let Some(sol) = nullspace(&rows, cols.len()).into_iter().next() else {
            continue;
        };
        let u = UPoly::new(
            (0..nu)
                .map(|a| {
                    Quat::from_coords([
                        sol[4 * a].clone(),
                        sol[4 * a + 1].clone(),
                        sol[4 * a + 2].clone(),
                        sol[4 * a + 3].clone(),
                    ])
                })
                .collect(),
        );
        let m = &u * p;
        if m.degree() != Some(n) {
            return internal(format!(
                "lclm candidate of degree {:?}, expected {n}",
                m.degree()
            ));
        }
        return m.monic();
    }
    internal("no common left multiple found up to deg p + deg q")
}
