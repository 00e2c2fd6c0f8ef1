//! `H_Q[x_1, …, x_n]` with central, commuting variables.

mod module;
mod point;
mod rabinowitsch;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::scalar::Quat;
use crate::upoly::{write_term, UPoly};

pub use module::{
    act, annihilator_minpoly, check_presentation, find_eigen_tuple, invert_matrix, mat_mul,
    vec_mat, verify_simple_1dim, EigenTuple, ModulePresentation, QMatrix, SimplicityReport,
    Violation,
};
pub use point::{
    eval_c, in_point_ideal, point_ideal, reduce_mod_point, CommutingPoint, LeftIdealGens,
};
pub use rabinowitsch::{
    find_certificate, monomials_up_to, rabinowitsch_check, RabinowitschCertificate,
};

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then lexicographically with `x_1` most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponents(pub Vec<u32>);

impl Exponents {
    pub fn zero(n: usize) -> Self {
        Exponents(vec![0; n])
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn plus(&self, o: &Exponents) -> Exponents {
        Exponents(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Exponents {
    fn cmp(&self, o: &Self) -> Ordering {
        self.total().cmp(&o.total()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Sum of `c_α·x^α` with nonzero quaternion coefficients written on the left.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "MPolyRepr", into = "MPolyRepr")]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Quat>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Quat) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(Exponents::zero(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(nvars, Quat::one())
    }

    /// The variable `x_{index+1}` (0-based index).
    pub fn var(nvars: usize, index: usize) -> Result<Self> {
        if index >= nvars {
            return invalid(format!(
                "variable x{} out of range for {nvars} variables",
                index + 1
            ));
        }
        let mut e = Exponents::zero(nvars);
        e.0[index] = 1;
        Ok(MPoly::term(e, Quat::one()))
    }

    /// `c·x^e`.
    pub fn term(e: Exponents, c: Quat) -> Self {
        let mut p = MPoly::zero(e.0.len());
        p.add_term(e, c);
        p
    }

    /// Embeds a univariate polynomial as a polynomial in `x_{index+1}`.
    pub fn from_upoly(p: &UPoly, nvars: usize, index: usize) -> Result<Self> {
        if index >= nvars {
            return invalid(format!(
                "variable x{} out of range for {nvars} variables",
                index + 1
            ));
        }
        let mut out = MPoly::zero(nvars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = Exponents::zero(nvars);
            e.0[index] = k as u32;
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// The univariate polynomial, when `nvars == 1`.
    pub fn to_upoly(&self) -> Option<UPoly> {
        if self.nvars != 1 {
            return None;
        }
        let deg = self
            .terms
            .keys()
            .map(|e| e.0[0] as usize)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![Quat::zero(); deg + 1];
        for (e, c) in &self.terms {
            coeffs[e.0[0] as usize] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Quat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponents) -> Quat {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponents::total).max()
    }

    /// The constant coefficient when the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Quat> {
        match self.terms.len() {
            0 => Some(Quat::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().expect("one term");
                e.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, e: Exponents, c: Quat) {
        debug_assert_eq!(e.0.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `c·p`.
    pub fn left_scale(&self, c: &Quat) -> MPoly {
        self.times_term_left(c, &Exponents::zero(self.nvars))
    }

    /// `(c·x^e)·p`.
    pub fn times_term_left(&self, c: &Quat, e: &Exponents) -> MPoly {
        let mut out = MPoly::zero(self.nvars);
        for (m, d) in &self.terms {
            out.add_term(m.plus(e), c * d);
        }
        out
    }

    fn check_same(&self, o: &MPoly) -> Result<()> {
        if self.nvars != o.nvars {
            return invalid(format!(
                "polynomials in {} and {} variables",
                self.nvars, o.nvars
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &MPoly) -> Result<MPoly> {
        self.check_same(o)?;
        Ok(self + o)
    }

    pub fn checked_sub(&self, o: &MPoly) -> Result<MPoly> {
        self.check_same(o)?;
        Ok(self - o)
    }

    pub fn checked_mul(&self, o: &MPoly) -> Result<MPoly> {
        self.check_same(o)?;
        Ok(self * o)
    }

    pub fn pow(&self, e: u32) -> MPoly {
        (0..e).fold(MPoly::one(self.nvars), |acc, _| &acc * self)
    }

    fn var_name(&self, i: usize) -> String {
        if self.nvars == 1 {
            "x".to_string()
        } else {
            format!("x{}", i + 1)
        }
    }
}

/// Arithmetic operators panic on mismatched variable counts; the `checked_*`
/// methods report it instead.
impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self + &(-o)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                out.add_term(ea.plus(eb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, o: MPoly) -> MPoly {
        &self + &o
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, o: MPoly) -> MPoly {
        &self - &o
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, o: MPoly) -> MPoly {
        &self * &o
    }
}

impl fmt::Display for MPoly {
    /// Highest monomial first, e.g. `x1^2x2 - kx1 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut mono = String::new();
            for (i, &k) in e.0.iter().enumerate() {
                match k {
                    0 => {}
                    1 => mono.push_str(&self.var_name(i)),
                    _ => mono.push_str(&format!("{}^{k}", self.var_name(i))),
                }
            }
            write_term(f, c, &mono, n == 0)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    coeff: Quat,
}

#[derive(Serialize, Deserialize)]
struct MPolyRepr {
    nvars: usize,
    terms: Vec<TermRepr>,
}

impl From<MPoly> for MPolyRepr {
    fn from(p: MPoly) -> Self {
        MPolyRepr {
            nvars: p.nvars,
            terms: p
                .terms
                .into_iter()
                .map(|(e, coeff)| TermRepr { exp: e.0, coeff })
                .collect(),
        }
    }
}

impl TryFrom<MPolyRepr> for MPoly {
    type Error = String;
    fn try_from(r: MPolyRepr) -> std::result::Result<Self, String> {
        let mut p = MPoly::zero(r.nvars);
        for t in r.terms {
            if t.exp.len() != r.nvars {
                return Err(format!(
                    "exponent {:?} does not have {} entries",
                    t.exp, r.nvars
                ));
            }
            p.add_term(Exponents(t.exp), t.coeff);
        }
        Ok(p)
    }
}
