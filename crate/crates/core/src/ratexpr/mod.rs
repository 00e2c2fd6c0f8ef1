//! Rational expressions over the prime field `Q`, and the recursively defined
//! expressions `L_n` and `F_n` that detect left linear (in)dependence over
//! `C(a)`.
//!
//! Evaluation is strict: an inverse of zero anywhere makes the whole
//! expression undefined, even if that subexpression is later multiplied by
//! zero.

mod criteria;

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::scalar::{Quat, Rat};

pub use criteria::{
    closure_witness, indep_oracle, indep_via_l, left_degree, left_degree_via_f,
    left_degree_via_oracle, right_degree,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RatExpr {
    Var(usize),
    Const(Rat),
    Add(Arc<RatExpr>, Arc<RatExpr>),
    Sub(Arc<RatExpr>, Arc<RatExpr>),
    Mul(Arc<RatExpr>, Arc<RatExpr>),
    Inv(Arc<RatExpr>),
}

use RatExpr::*;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "value", rename_all = "lowercase")]
pub enum EvalOutcome {
    Defined(Quat),
    Undefined,
}

impl EvalOutcome {
    pub fn is_defined_nonzero(&self) -> bool {
        matches!(self, EvalOutcome::Defined(v) if !v.is_zero())
    }

    pub fn is_defined_zero(&self) -> bool {
        matches!(self, EvalOutcome::Defined(v) if v.is_zero())
    }
}

pub fn var(i: usize) -> Arc<RatExpr> {
    Arc::new(Var(i))
}

pub fn constant(r: Rat) -> Arc<RatExpr> {
    Arc::new(Const(r))
}

pub fn mul(a: &Arc<RatExpr>, b: &Arc<RatExpr>) -> Arc<RatExpr> {
    Arc::new(Mul(a.clone(), b.clone()))
}

pub fn inv(a: &Arc<RatExpr>) -> Arc<RatExpr> {
    Arc::new(Inv(a.clone()))
}

/// `[a, b] = ab − ba`.
pub fn commutator(a: &Arc<RatExpr>, b: &Arc<RatExpr>) -> Arc<RatExpr> {
    Arc::new(Sub(mul(a, b), mul(b, a)))
}

impl RatExpr {
    /// Largest variable index, if any variable occurs.
    pub fn max_var(&self) -> Option<usize> {
        match self {
            Var(i) => Some(*i),
            Const(_) => None,
            Add(a, b) | Sub(a, b) | Mul(a, b) => a.max_var().max(b.max_var()),
            Inv(a) => a.max_var(),
        }
    }

    /// Replaces every `Var(i)` by `sub(i)`.
    pub fn substitute(&self, sub: &dyn Fn(usize) -> Arc<RatExpr>) -> Arc<RatExpr> {
        match self {
            Var(i) => sub(*i),
            Const(_) => Arc::new(self.clone()),
            Add(a, b) => Arc::new(Add(a.substitute(sub), b.substitute(sub))),
            Sub(a, b) => Arc::new(Sub(a.substitute(sub), b.substitute(sub))),
            Mul(a, b) => Arc::new(Mul(a.substitute(sub), b.substitute(sub))),
            Inv(a) => Arc::new(Inv(a.substitute(sub))),
        }
    }

    /// Strict bottom-up evaluation at `x_i = assignment[i]`.
    pub fn eval(&self, assignment: &[Quat]) -> Result<EvalOutcome> {
        if let Some(m) = self.max_var() {
            if m >= assignment.len() {
                return invalid(format!(
                    "expression uses x{m} but only {} values were given",
                    assignment.len()
                ));
            }
        }
        Ok(match self.eval_strict(assignment) {
            Some(v) => EvalOutcome::Defined(v),
            None => EvalOutcome::Undefined,
        })
    }

    fn eval_strict(&self, x: &[Quat]) -> Option<Quat> {
        Some(match self {
            Var(i) => x[*i].clone(),
            Const(r) => Quat::from_rat(r.clone()),
            Add(a, b) => &a.eval_strict(x)? + &b.eval_strict(x)?,
            Sub(a, b) => &a.eval_strict(x)? - &b.eval_strict(x)?,
            Mul(a, b) => &a.eval_strict(x)? * &b.eval_strict(x)?,
            Inv(a) => a.eval_strict(x)?.inv().ok()?,
        })
    }
}

/// Parenthesized prefix form, e.g. `(- (* x0 x1) (* x1 x0))`.
impl fmt::Display for RatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var(i) => write!(f, "x{i}"),
            Const(r) => write!(f, "{r}"),
            Add(a, b) => write!(f, "(+ {a} {b})"),
            Sub(a, b) => write!(f, "(- {a} {b})"),
            Mul(a, b) => write!(f, "(* {a} {b})"),
            Inv(a) => write!(f, "(inv {a})"),
        }
    }
}

/// `L_1(x0, x1) = x1` and
/// `L_{n+1}(x0, …, x_{n+1}) = L_n(x0, [x0, x1·x_{n+1}⁻¹], …, [x0, x_n·x_{n+1}⁻¹])`.
pub fn build_l(n: usize) -> Result<Arc<RatExpr>> {
    if n < 1 {
        return invalid("L_n is defined for n ≥ 1");
    }
    let mut l = var(1);
    for m in 1..n {
        let last_inv = inv(&var(m + 1));
        l = l.substitute(&|k| {
            if k == 0 {
                var(0)
            } else {
                commutator(&var(0), &mul(&var(k), &last_inv))
            }
        });
    }
    Ok(l)
}

/// `F_n(x, y) = L_{n+1}(x, 1, y, …, y^n)` in the variables `x0 = x`, `x1 = y`.
pub fn build_f(n: usize) -> Result<Arc<RatExpr>> {
    if n < 1 {
        return invalid("F_n is defined for n ≥ 1");
    }
    let l = build_l(n + 1)?;
    let y = var(1);
    let mut powers = vec![constant(Rat::from_integer(1.into())), y.clone()];
    for _ in 2..=n {
        let next = mul(powers.last().expect("nonempty"), &y);
        powers.push(next);
    }
    Ok(l.substitute(&|k| {
        if k == 0 {
            var(0)
        } else {
            powers[k - 1].clone()
        }
    }))
}
