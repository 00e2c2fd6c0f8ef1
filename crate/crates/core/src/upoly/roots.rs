//! Right roots via the companion polynomial `p·p̄ ∈ Q[x]`.
//!
//! Every right root `a` of `p` is a root of the companion, so its minimal
//! central polynomial (`x − a` or `x² − tx + n`) is a rational factor of it.
//! For each quadratic factor `g`, the remainder `αx + β` of `p` modulo `g`
//! decides the class: everything in it is a root when `α = β = 0`, only
//! `−α⁻¹β` can be a root when `α ≠ 0`, nothing otherwise.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{factor_over_q, UPoly};
use crate::error::{internal, invalid, Result};
use crate::scalar::rat::{int, isqrt_exact, sqrt_exact};
use crate::scalar::{CentralizerDesc, Quat, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RootClass {
    /// The only root in its conjugacy class.
    Isolated { root: Quat },
    /// Every solution of `a² − trace·a + norm = 0`, with `trace² < 4·norm`.
    Sphere {
        #[serde(serialize_with = "ser_rat")]
        trace: Rat,
        #[serde(serialize_with = "ser_rat")]
        norm: Rat,
    },
}

fn ser_rat<S: serde::Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl RootClass {
    pub fn contains(&self, q: &Quat) -> bool {
        match self {
            RootClass::Isolated { root } => root == q,
            RootClass::Sphere { trace, norm } => {
                !q.is_real() && &(q.re() * int(2)) == trace && &q.norm() == norm
            }
        }
    }

    /// An explicit member, if one exists in `H_Q` and a bounded search finds it.
    pub fn representative(&self) -> Option<Quat> {
        match self {
            RootClass::Isolated { root } => Some(root.clone()),
            RootClass::Sphere { trace, norm } => {
                sphere_point_in(trace, norm, &CentralizerDesc::FullRing)
            }
        }
    }

    /// `x − a` or `x² − trace·x + norm`.
    pub fn central_poly(&self) -> UPoly {
        match self {
            RootClass::Isolated { root } => UPoly::linear(root),
            RootClass::Sphere { trace, norm } => UPoly::from_rats(&[norm.clone(), -trace, int(1)]),
        }
    }

    fn conj(&self) -> RootClass {
        match self {
            RootClass::Isolated { root } => RootClass::Isolated { root: root.conj() },
            sphere => sphere.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootStatus {
    Complete,
    /// The companion polynomial has irreducible rational factors of degree
    /// above two or irrational real roots; roots may exist over a real-closed
    /// base field that `H_Q` cannot represent.
    PossiblyIncomplete,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSet {
    pub classes: Vec<RootClass>,
    pub status: RootStatus,
}

/// Conjugacy classes of right roots (`p(a) = 0`) of a nonconstant `p`.
pub fn right_roots(p: &UPoly) -> Result<RootSet> {
    match p.degree() {
        None | Some(0) => {
            return invalid(format!(
                "root finding needs a nonconstant polynomial, got {p}"
            ))
        }
        _ => {}
    }
    let Some(companion) = p.companion().rational_coeffs() else {
        return internal(format!("companion of {p} is not central"));
    };
    let mut classes = Vec::new();
    let mut status = RootStatus::Complete;
    for f in factor_over_q(&companion) {
        match f.degree() {
            1 => {
                let t = Quat::from_rat(-&f.coeffs[0]);
                if p.eval_left(&t).is_zero() {
                    classes.push(RootClass::Isolated { root: t });
                }
            }
            2 => {
                let n = f.coeffs[0].clone();
                let t = -&f.coeffs[1];
                if (&t * &t - int(4) * &n).is_positive() {
                    status = RootStatus::PossiblyIncomplete;
                    continue;
                }
                let g = UPoly::from_rats(&f.coeffs);
                let (_, r) = p.divide_right(&g)?;
                let (beta, alpha) = (r.coeff(0), r.coeff(1));
                if alpha.is_zero() {
                    if beta.is_zero() {
                        classes.push(RootClass::Sphere { trace: t, norm: n });
                    }
                    continue;
                }
                let a = -(&alpha.inv()? * &beta);
                if p.eval_left(&a).is_zero() && g.eval_left(&a).is_zero() {
                    classes.push(RootClass::Isolated { root: a });
                }
            }
            _ => status = RootStatus::PossiblyIncomplete,
        }
    }
    Ok(RootSet { classes, status })
}

/// Conjugacy classes of left roots (`p_r(a) = 0`): `a` is a left root of `p`
/// exactly when `ā` is a right root of `p̄`.
pub fn left_roots(p: &UPoly) -> Result<RootSet> {
    let r = right_roots(&p.conj_poly())?;
    Ok(RootSet {
        classes: r.classes.iter().map(RootClass::conj).collect(),
        status: r.status,
    })
}

/// A solution of `a² − trace·a + norm = 0` lying in `within`, if one exists
/// there and can be found.
pub fn sphere_point_in(trace: &Rat, norm: &Rat, within: &CentralizerDesc) -> Option<Quat> {
    let half = trace / int(2);
    let m = norm - &half * &half;
    if !m.is_positive() {
        return None;
    }
    let v = match within {
        CentralizerDesc::Center => return None,
        CentralizerDesc::QuadraticField(u) => u.scale(&sqrt_exact(&(&m / u.norm()))?),
        CentralizerDesc::FullRing => pure_with_norm(&m)?,
    };
    Some(&Quat::from_rat(half) + &v)
}

const THREE_SQUARE_BUDGET: u64 = 200_000;

/// Pure quaternion of norm `m > 0` by a bounded search for `m = (X² + Y² + Z²)/W²`.
fn pure_with_norm(m: &Rat) -> Option<Quat> {
    if let Some(s) = sqrt_exact(m) {
        return Some(Quat::i().scale(&s));
    }
    let (a, b) = (m.numer(), m.denom());
    for w in 1..=3u64 {
        let bw = b * BigInt::from(w);
        let target = a * &bw * BigInt::from(w);
        let t = target.to_u64()?;
        if let Some((x, y, z)) = three_squares(t) {
            let d = Rat::from_integer(bw);
            return Some(Quat::new(
                Rat::zero(),
                int(x as i64) / &d,
                int(y as i64) / &d,
                int(z as i64) / &d,
            ));
        }
    }
    None
}

fn three_squares(t: u64) -> Option<(u64, u64, u64)> {
    let mut budget = THREE_SQUARE_BUDGET;
    let mut x = 0u64;
    while x * x <= t {
        let rem = t - x * x;
        let mut y = x;
        while y * y <= rem {
            budget = budget.checked_sub(1)?;
            let zz = rem - y * y;
            if let Some(z) = isqrt_exact(&BigInt::from(zz)) {
                return Some((x, y, z.to_u64()?));
            }
            y += 1;
        }
        x += 1;
    }
    None
}
