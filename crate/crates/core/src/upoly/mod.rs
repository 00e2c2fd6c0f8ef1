//! `H_Q[x]` with `x` central.
//!
//! Polynomials are written with coefficients on the left, `Σ c_k x^k`.
//! Left evaluation keeps coefficients on the left of the powers of the
//! argument, right evaluation on the right.

mod espace;
mod euclid;
mod factor;
mod minpoly;
mod roots;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Quat, Rat};

pub use espace::{e_space, ESpaceBasis};
pub use euclid::{gcrd, lclm};
pub use factor::{factor_over_q, RationalFactor};
pub use minpoly::{min_left_poly, min_right_poly, wedderburn_lclm};
pub use roots::{left_roots, right_roots, sphere_point_in, RootClass, RootSet, RootStatus};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Quat>", into = "Vec<Quat>")]
pub struct UPoly {
    /// Low to high; no trailing zero.
    coeffs: Vec<Quat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Quat>) -> Self {
        while coeffs.last().is_some_and(Quat::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn one() -> Self {
        UPoly::constant(Quat::one())
    }

    pub fn constant(c: Quat) -> Self {
        UPoly::new(vec![c])
    }

    pub fn x() -> Self {
        UPoly::monomial(Quat::one(), 1)
    }

    /// `c·x^k`.
    pub fn monomial(c: Quat, k: usize) -> Self {
        let mut coeffs = vec![Quat::zero(); k];
        coeffs.push(c);
        UPoly::new(coeffs)
    }

    /// `x − a`.
    pub fn linear(a: &Quat) -> Self {
        UPoly::new(vec![-a, Quat::one()])
    }

    pub fn from_rats(cs: &[Rat]) -> Self {
        UPoly::new(cs.iter().cloned().map(Quat::from_rat).collect())
    }

    pub fn coeffs(&self) -> &[Quat] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Quat {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Quat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(Quat::is_one)
    }

    /// All coefficients central, i.e. the polynomial lies in `Q[x]`.
    pub fn is_central(&self) -> bool {
        self.coeffs.iter().all(Quat::is_real)
    }

    pub fn rational_coeffs(&self) -> Option<Vec<Rat>> {
        self.is_central()
            .then(|| self.coeffs.iter().map(Quat::re).collect())
    }

    /// `c·p`.
    pub fn left_scale(&self, c: &Quat) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|a| c * a).collect())
    }

    /// `p·c`.
    pub fn right_scale(&self, c: &Quat) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `s·p·s⁻¹`, coefficientwise.
    pub fn conjugate_by(&self, s: &Quat) -> Result<UPoly> {
        let si = s.inv()?;
        Ok(UPoly::new(
            self.coeffs.iter().map(|a| &(s * a) * &si).collect(),
        ))
    }

    /// `lead⁻¹·p`, which generates the same left ideal.
    pub fn monic(&self) -> Result<UPoly> {
        let lead = self.lead().ok_or(Error::DivisionByZero)?;
        Ok(self.left_scale(&lead.inv()?))
    }

    /// `p(a) = Σ c_k a^k`.
    pub fn eval_left(&self, a: &Quat) -> Quat {
        self.coeffs
            .iter()
            .rev()
            .fold(Quat::zero(), |acc, c| &(&acc * a) + c)
    }

    /// `p_r(a) = Σ a^k c_k`.
    pub fn eval_right(&self, a: &Quat) -> Quat {
        self.coeffs
            .iter()
            .rev()
            .fold(Quat::zero(), |acc, c| &(a * &acc) + c)
    }

    /// `(q, r)` with `p = q·d + r` and `deg r < deg d`.
    pub fn divide_right(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        self.divide(d, true)
    }

    /// `(q, r)` with `p = d·q + r` and `deg r < deg d`.
    pub fn divide_left(&self, d: &UPoly) -> Result<(UPoly, UPoly)> {
        self.divide(d, false)
    }

    fn divide(&self, d: &UPoly, right: bool) -> Result<(UPoly, UPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.lead().expect("nonzero").inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Quat::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let lc = rem[top].clone();
            if !lc.is_zero() {
                let shift = top - dd;
                let t = if right {
                    &lc * &lead_inv
                } else {
                    &lead_inv * &lc
                };
                for (k, dc) in d.coeffs.iter().enumerate() {
                    let prod = if right { &t * dc } else { dc * &t };
                    rem[shift + k] = &rem[shift + k] - &prod;
                }
                quot[shift] = t;
            }
            rem.pop();
        }
        Ok((UPoly::new(quot), UPoly::new(rem)))
    }

    /// Coefficientwise quaternion conjugate.
    pub fn conj_poly(&self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(Quat::conj).collect())
    }

    /// `p·p̄`, whose coefficients are all central.
    pub fn companion(&self) -> UPoly {
        self * &self.conj_poly()
    }

    pub fn pow(&self, e: u32) -> UPoly {
        (0..e).fold(UPoly::one(), |acc, _| &acc * self)
    }
}

impl TryFrom<Vec<Quat>> for UPoly {
    type Error = String;
    fn try_from(v: Vec<Quat>) -> std::result::Result<Self, String> {
        Ok(UPoly::new(v))
    }
}

impl From<UPoly> for Vec<Quat> {
    fn from(p: UPoly) -> Self {
        p.coeffs
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new((0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, o: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UPoly::new((0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Quat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in o.coeffs.iter().enumerate() {
                out[a + b] = &out[a + b] + &(ca * cb);
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UPoly {
            type Output = UPoly;
            fn $m(self, o: UPoly) -> UPoly { (&self).$m(&o) }
        }
        impl $tr<&UPoly> for UPoly {
            type Output = UPoly;
            fn $m(self, o: &UPoly) -> UPoly { (&self).$m(o) }
        }
        impl $tr<UPoly> for &UPoly {
            type Output = UPoly;
            fn $m(self, o: UPoly) -> UPoly { self.$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -&self
    }
}

/// Writes `c·mono` in the `(1+i)x^2 - 2/3jx + k` style. Single-component
/// coefficients print bare with their sign pulled out; others get parentheses.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &Quat,
    mono: &str,
    first: bool,
) -> fmt::Result {
    let single = c.support() == 1;
    if single {
        let negative = c.coords().iter().any(|r| r.is_negative());
        let mag = if negative { -c } else { c.clone() };
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        if mono.is_empty() || !mag.is_one() {
            write!(f, "{mag}")?;
        }
    } else {
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "({c})")?;
    }
    write!(f, "{mono}")
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            write_term(f, c, &mono, first)?;
            first = false;
        }
        Ok(())
    }
}
