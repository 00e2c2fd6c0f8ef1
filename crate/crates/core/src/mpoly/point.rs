use serde::{Deserialize, Serialize};

use super::{Exponents, MPoly};
use crate::error::{internal, invalid, Result};
use crate::scalar::Quat;

/// A tuple `(a_1, …, a_n)` of pairwise commuting quaternions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "PointRepr", into = "PointRepr")]
pub struct CommutingPoint {
    components: Vec<Quat>,
}

#[derive(Serialize, Deserialize)]
struct PointRepr {
    components: Vec<Quat>,
}

impl CommutingPoint {
    pub fn new(components: Vec<Quat>) -> Result<Self> {
        if components.is_empty() {
            return invalid("a point needs at least one coordinate");
        }
        for (s, a) in components.iter().enumerate() {
            for (t, b) in components.iter().enumerate().skip(s + 1) {
                if !a.commutes_with(b) {
                    return invalid(format!(
                        "coordinates {} = {a} and {} = {b} do not commute",
                        s + 1,
                        t + 1
                    ));
                }
            }
        }
        Ok(CommutingPoint { components })
    }

    pub fn components(&self) -> &[Quat] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

impl From<CommutingPoint> for PointRepr {
    fn from(p: CommutingPoint) -> Self {
        PointRepr {
            components: p.components,
        }
    }
}

impl TryFrom<PointRepr> for CommutingPoint {
    type Error = String;
    fn try_from(r: PointRepr) -> std::result::Result<Self, String> {
        CommutingPoint::new(r.components).map_err(|e| e.to_string())
    }
}

/// Generators of a left ideal `Σ D[x]·g_j`, all in the same variables.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LeftIdealGens {
    gens: Vec<MPoly>,
}

impl LeftIdealGens {
    pub fn new(gens: Vec<MPoly>) -> Result<Self> {
        let Some(first) = gens.first() else {
            return invalid("an ideal needs at least one generator");
        };
        let n = first.nvars();
        if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
            return invalid(format!("generator {g} is not in {n} variables"));
        }
        Ok(LeftIdealGens { gens })
    }

    pub fn gens(&self) -> &[MPoly] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.gens[0].nvars()
    }
}

fn check_arity(p: &MPoly, pt: &CommutingPoint) -> Result<()> {
    if p.nvars() != pt.len() {
        return invalid(format!(
            "polynomial in {} variables evaluated at a point with {} coordinates",
            p.nvars(),
            pt.len()
        ));
    }
    Ok(())
}

fn monomial_value<'a>(e: &Exponents, order: impl Iterator<Item = (usize, &'a Quat)>) -> Quat {
    order.fold(Quat::one(), |acc, (i, a)| &acc * &a.pow(e.0[i]))
}

/// `Σ c_α·a^α`. The coordinates commute, so the order of the factors inside
/// `a^α` is immaterial; the value is checked against the reversed order.
pub fn eval_c(p: &MPoly, pt: &CommutingPoint) -> Result<Quat> {
    check_arity(p, pt)?;
    let a = pt.components();
    let mut forward = Quat::zero();
    let mut backward = Quat::zero();
    for (e, c) in p.terms() {
        forward = &forward + &(c * &monomial_value(e, a.iter().enumerate()));
        backward = &backward + &(c * &monomial_value(e, a.iter().enumerate().rev()));
    }
    if forward != backward {
        return internal(format!("evaluation of {p} depends on the factor order"));
    }
    Ok(forward)
}

/// `(r, q_1, …, q_n)` with `p = Σ q_i·(x_i − a_i) + r` and `r = p(a)`.
///
/// Variables are eliminated from the last to the first using
/// `x^e = (Σ_{k<e} x^{e−1−k}·a^k)·(x − a) + a^e`.
pub fn reduce_mod_point(p: &MPoly, pt: &CommutingPoint) -> Result<(Quat, Vec<MPoly>)> {
    check_arity(p, pt)?;
    let n = pt.len();
    let mut current = p.clone();
    let mut quotients = vec![MPoly::zero(n); n];
    for v in (0..n).rev() {
        let a = &pt.components()[v];
        let mut next = MPoly::zero(n);
        for (e, c) in current.terms() {
            let deg = e.0[v];
            if deg == 0 {
                next.add_term(e.clone(), c.clone());
                continue;
            }
            let mut rest = e.clone();
            rest.0[v] = 0;
            for k in 0..deg {
                let mut m = rest.clone();
                m.0[v] = deg - 1 - k;
                quotients[v].add_term(m, c * &a.pow(k));
            }
            next.add_term(rest, c * &a.pow(deg));
        }
        current = next;
    }
    let Some(r) = current.as_constant() else {
        return internal(format!(
            "reduction of {p} left a non-constant remainder {current}"
        ));
    };
    Ok((r, quotients))
}

/// `x_i − a_i` for each coordinate.
pub fn point_ideal(pt: &CommutingPoint) -> LeftIdealGens {
    let n = pt.len();
    let gens = pt
        .components()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let x = MPoly::var(n, i).expect("index within range");
            &x - &MPoly::constant(n, a.clone())
        })
        .collect();
    LeftIdealGens { gens }
}

/// Membership in `Σ D[x]·(x_i − a_i)`, i.e. `p(a) = 0`.
pub fn in_point_ideal(p: &MPoly, pt: &CommutingPoint) -> Result<bool> {
    Ok(reduce_mod_point(p, pt)?.0.is_zero())
}
