use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rat::{int, parse_rat, Rat};
use crate::error::{Error, Result};

/// A rational quaternion `w + x·i + y·j + z·k`.
///
/// Coordinates always use the ordered basis `(1, i, j, k)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "QuatRepr", into = "QuatRepr")]
pub struct Quat {
    pub w: Rat,
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl Quat {
    pub fn new(w: Rat, x: Rat, y: Rat, z: Rat) -> Self {
        Quat { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quat::new(int(w), int(x), int(y), int(z))
    }

    pub fn from_rat(r: Rat) -> Self {
        Quat::new(r, Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Quat::from_rat(int(n))
    }

    pub fn zero() -> Self {
        Quat::default()
    }

    pub fn one() -> Self {
        Quat::from_int(1)
    }

    pub fn i() -> Self {
        Quat::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quat::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quat::from_ints(0, 0, 0, 1)
    }

    pub fn from_coords(c: [Rat; 4]) -> Self {
        let [w, x, y, z] = c;
        Quat { w, x, y, z }
    }

    pub fn coords(&self) -> [Rat; 4] {
        [
            self.w.clone(),
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.w.is_one() && self.is_real()
    }

    /// True when the quaternion lies in the center `Q·1`.
    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_pure(&self) -> bool {
        self.w.is_zero()
    }

    pub fn re(&self) -> Rat {
        self.w.clone()
    }

    pub fn im(&self) -> Quat {
        Quat::new(Rat::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    pub fn conj(&self) -> Quat {
        Quat::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm(&self) -> Rat {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn inv(&self) -> Result<Quat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(self.conj().scale(&n.recip()))
    }

    pub fn scale(&self, r: &Rat) -> Quat {
        Quat::new(&self.w * r, &self.x * r, &self.y * r, &self.z * r)
    }

    pub fn pow(&self, e: u32) -> Quat {
        let mut acc = Quat::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `r · self · r⁻¹`.
    pub fn conjugate_by(&self, r: &Quat) -> Result<Quat> {
        Ok(&(r * self) * &r.inv()?)
    }

    pub fn commutes_with(&self, other: &Quat) -> bool {
        commutator(self, other).is_zero()
    }

    /// Number of nonzero coordinates.
    pub(crate) fn support(&self) -> usize {
        [&self.w, &self.x, &self.y, &self.z]
            .iter()
            .filter(|c| !c.is_zero())
            .count()
    }
}

/// `[a, b] = ab − ba`.
pub fn commutator(a: &Quat, b: &Quat) -> Quat {
    &(a * b) - &(b * a)
}

impl From<Rat> for Quat {
    fn from(r: Rat) -> Self {
        Quat::from_rat(r)
    }
}

impl From<i64> for Quat {
    fn from(n: i64) -> Self {
        Quat::from_int(n)
    }
}

impl Add for &Quat {
    type Output = Quat;
    fn add(self, o: &Quat) -> Quat {
        Quat::new(
            &self.w + &o.w,
            &self.x + &o.x,
            &self.y + &o.y,
            &self.z + &o.z,
        )
    }
}

impl Sub for &Quat {
    type Output = Quat;
    fn sub(self, o: &Quat) -> Quat {
        Quat::new(
            &self.w - &o.w,
            &self.x - &o.x,
            &self.y - &o.y,
            &self.z - &o.z,
        )
    }
}

impl Mul for &Quat {
    type Output = Quat;
    fn mul(self, o: &Quat) -> Quat {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        Quat::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Neg for &Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Quat {
            type Output = Quat;
            fn $m(self, o: Quat) -> Quat { (&self).$m(&o) }
        }
        impl $tr<&Quat> for Quat {
            type Output = Quat;
            fn $m(self, o: &Quat) -> Quat { (&self).$m(o) }
        }
        impl $tr<Quat> for &Quat {
            type Output = Quat;
            fn $m(self, o: Quat) -> Quat { self.$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        -&self
    }
}

impl std::iter::Sum for Quat {
    fn sum<I: Iterator<Item = Quat>>(iter: I) -> Quat {
        iter.fold(Quat::zero(), |a, b| a + b)
    }
}

/// Writes a rational coefficient attached to a unit symbol, dropping a bare 1.
fn write_unit_coeff(f: &mut fmt::Formatter<'_>, c: &Rat, unit: &str) -> fmt::Result {
    if c.is_one() && !unit.is_empty() {
        write!(f, "{unit}")
    } else {
        write!(f, "{c}{unit}")
    }
}

impl fmt::Display for Quat {
    /// `1 - 2/3i + j - k`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = [
            (&self.w, ""),
            (&self.x, "i"),
            (&self.y, "j"),
            (&self.z, "k"),
        ];
        let mut first = true;
        for (c, unit) in parts {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_unit_coeff(f, &mag, unit)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// JSON wire form: `{"w":"1","x":"-2/3","y":"1","z":"-1"}`.
#[derive(Serialize, Deserialize)]
struct QuatRepr {
    w: String,
    x: String,
    y: String,
    z: String,
}

impl From<Quat> for QuatRepr {
    fn from(q: Quat) -> Self {
        QuatRepr {
            w: q.w.to_string(),
            x: q.x.to_string(),
            y: q.y.to_string(),
            z: q.z.to_string(),
        }
    }
}

impl TryFrom<QuatRepr> for Quat {
    type Error = String;
    fn try_from(r: QuatRepr) -> std::result::Result<Self, String> {
        let p = |s: &str| parse_rat(s).ok_or_else(|| format!("bad rational {s:?}"));
        Ok(Quat::new(p(&r.w)?, p(&r.x)?, p(&r.y)?, p(&r.z)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat::rat;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quat {
        Quat::from_ints(w, x, y, z)
    }

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quat::i(), Quat::j(), Quat::k());
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        for u in [&i, &j, &k] {
            assert_eq!(u * u, Quat::from_int(-1));
        }
        assert_eq!(&j * &i, -&k);
    }

    #[test]
    fn inverse_of_one_plus_i() {
        let a = q(1, 1, 0, 0);
        let expected = Quat::new(rat(1, 2), rat(-1, 2), rat(0, 1), rat(0, 1));
        assert_eq!(a.inv().unwrap(), expected);
        assert_eq!(&a * &expected, Quat::one());
        assert_eq!(Quat::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn conj_reverses_products() {
        let (i, j) = (Quat::i(), Quat::j());
        let lhs = (&i * &j).conj();
        let rhs = &j.conj() * &i.conj();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, -Quat::k());
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(commutator(&Quat::i(), &Quat::j()), q(0, 0, 0, 2));
        let a = q(3, -1, 2, 5);
        assert!(commutator(&a, &a).is_zero());
        assert!(commutator(&Quat::i(), &Quat::from_rat(rat(3, 2))).is_zero());
    }

    #[test]
    fn display_forms() {
        let a = Quat::new(rat(1, 1), rat(-2, 3), rat(1, 1), rat(-1, 1));
        assert_eq!(a.to_string(), "1 - 2/3i + j - k");
        assert_eq!(Quat::zero().to_string(), "0");
        assert_eq!((-Quat::k()).to_string(), "-k");
        assert_eq!(Quat::from_int(-5).to_string(), "-5");
    }

    #[test]
    fn json_wire_form() {
        let a = Quat::new(rat(1, 1), rat(-2, 3), rat(1, 1), rat(-1, 1));
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"w":"1","x":"-2/3","y":"1","z":"-1"}"#);
        let back: Quat = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<Quat>(r#"{"w":"1/0","x":"0","y":"0","z":"0"}"#).is_err());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = q(1, 2, -1, 3);
        let mut acc = Quat::one();
        for e in 0..6 {
            assert_eq!(a.pow(e), acc);
            acc = &acc * &a;
        }
    }
}
