use super::{build_f, build_l};
use crate::error::{internal, invalid, Result};
use crate::scalar::linalg::{rank_over, Side};
use crate::scalar::{centralizer_of_set, Quat};
use crate::upoly::{min_left_poly, min_right_poly};

/// Over any centralizer in `H_Q` every element has left degree at most 2;
/// the cap leaves room for the full ring dimension.
const MAX_DEGREE: usize = 4;

/// Whether `b_1..b_n` are left linearly independent over `C(a)`, decided by
/// `L_n(a, b_1, …, b_n)` being defined and nonzero.
pub fn indep_via_l(a: &Quat, bs: &[Quat]) -> Result<bool> {
    if bs.is_empty() {
        return invalid("independence test needs at least one vector");
    }
    let l = build_l(bs.len())?;
    let mut assignment = Vec::with_capacity(bs.len() + 1);
    assignment.push(a.clone());
    assignment.extend_from_slice(bs);
    Ok(l.eval(&assignment)?.is_defined_nonzero())
}

/// The same question by a rank computation over `Q`.
pub fn indep_oracle(a: &Quat, bs: &[Quat]) -> bool {
    let over = centralizer_of_set(std::slice::from_ref(a));
    let vs: Vec<Vec<Quat>> = bs.iter().map(|b| vec![b.clone()]).collect();
    rank_over(&vs, &over, Side::Left) == bs.len()
}

/// Left degree of `b` over `C(a)`: the least `n` such that `1, b, …, b^n`
/// are dependent, found by a rank computation.
pub fn left_degree_via_oracle(a: &Quat, b: &Quat) -> Result<usize> {
    let mut powers = vec![Quat::one()];
    for n in 1..=MAX_DEGREE {
        powers.push(b.pow(n as u32));
        if !indep_oracle(a, &powers) {
            return Ok(n);
        }
    }
    internal(format!(
        "{b} has left degree above {MAX_DEGREE} over C({a})"
    ))
}

/// Left degree of `b` over `C(a)` from the rational expressions: the first
/// `n` where `F_n(a, b)` is not defined-and-nonzero.
///
/// For `b ≠ 0` that is exactly the first `n` with `F_n(a, b) = 0`. For `b = 0`
/// the degree is 1 while `F_1(a, 0)` is undefined.
pub fn left_degree_via_f(a: &Quat, b: &Quat) -> Result<usize> {
    for n in 1..=MAX_DEGREE {
        let f = build_f(n)?;
        if !f.eval(&[a.clone(), b.clone()])?.is_defined_nonzero() {
            return Ok(n);
        }
    }
    internal(format!("F_n({a}, {b}) nonzero for every n ≤ {MAX_DEGREE}"))
}

pub fn left_degree(a: &Quat, b: &Quat) -> Result<usize> {
    Ok(
        min_left_poly(b, &centralizer_of_set(std::slice::from_ref(a)))?
            .degree()
            .expect("minimal polynomial is monic"),
    )
}

/// Right degree of `a` over `C(b)`.
pub fn right_degree(b: &Quat, a: &Quat) -> Result<usize> {
    Ok(
        min_right_poly(a, &centralizer_of_set(std::slice::from_ref(b)))?
            .degree()
            .expect("minimal polynomial is monic"),
    )
}

/// `(a_0, …, a_{n−1})` with `a^n + a^{n−1}a_{n−1} + ⋯ + a·a_1 + a_0 = 0` and
/// every `a_i` commuting with `b`: the non-leading coefficients of the
/// minimal right polynomial of `a` over `C(b)`. Shows `b` lies in
/// `C(a_0, …, a_{n−1})`.
pub fn closure_witness(a: &Quat, b: &Quat) -> Result<Vec<Quat>> {
    let p = min_right_poly(a, &centralizer_of_set(std::slice::from_ref(b)))?;
    let n = p.degree().expect("minimal polynomial is monic");
    let witness = p.coeffs()[..n].to_vec();
    let value = witness
        .iter()
        .enumerate()
        .map(|(k, c)| &a.pow(k as u32) * c)
        .sum::<Quat>()
        + a.pow(n as u32);
    if !value.is_zero() {
        return internal(format!(
            "closure witness for ({a}, {b}) fails the right evaluation"
        ));
    }
    if let Some(c) = witness.iter().find(|c| !c.commutes_with(b)) {
        return internal(format!(
            "closure witness entry {c} does not commute with {b}"
        ));
    }
    Ok(witness)
}
