//! Factorization of rational polynomials into monic irreducibles over `Q`.

use algebraics::polynomial::Polynomial;
use num_bigint::BigInt;
use num_traits::{Pow, Signed, Zero};

use crate::scalar::rat::common_denominator;
use crate::scalar::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFactor {
    /// Monic, irreducible over `Q`, low to high.
    pub coeffs: Vec<Rat>,
    pub multiplicity: usize,
}

impl RationalFactor {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// Irreducible factorization of a nonzero rational polynomial, with the
/// leading coefficient dropped. Constants factor as the empty list.
///
/// The backing factorizer misses splittings of non-monic inputs, so the
/// monic polynomial `p` is first rescaled to `D^d·p(y/D)`, which has integer
/// coefficients and leading coefficient one, and factors are mapped back.
/// Any factor of degree above two is also factored again on its own.
pub fn factor_over_q(coeffs: &[Rat]) -> Vec<RationalFactor> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    let lead = coeffs.last().expect("nonconstant").clone();
    let monic: Vec<Rat> = coeffs.iter().map(|c| c / &lead).collect();
    let d = monic.len() - 1;
    let den = common_denominator(&monic);
    let scaled: Vec<BigInt> = monic
        .iter()
        .enumerate()
        .map(|(k, c)| (c * Rat::from_integer(Pow::pow(&den, (d - k) as u32))).to_integer())
        .collect();
    let mut found = Vec::new();
    refine(Polynomial::from(scaled), 1, &mut found);
    let mut out: Vec<RationalFactor> = found
        .into_iter()
        .map(|(g, multiplicity)| {
            let m = g.len() - 1;
            let coeffs = g
                .into_iter()
                .enumerate()
                .map(|(k, e)| {
                    Rat::from_integer(e) / Rat::from_integer(Pow::pow(&den, (m - k) as u32))
                })
                .collect();
            RationalFactor {
                coeffs,
                multiplicity,
            }
        })
        .collect();
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs.cmp(&b.coeffs))
    });
    let mut merged: Vec<RationalFactor> = Vec::with_capacity(out.len());
    for f in out {
        match merged.last_mut() {
            Some(last) if last.coeffs == f.coeffs => last.multiplicity += f.multiplicity,
            _ => merged.push(f),
        }
    }
    merged
}

/// Monic integer factors of a monic integer polynomial, with multiplicities.
fn refine(poly: Polynomial<BigInt>, power: usize, out: &mut Vec<(Vec<BigInt>, usize)>) {
    let factors = poly.factor().polynomial_factors;
    let single = factors.len() == 1 && factors[0].power == 1;
    for f in factors {
        let (mut elems, _) = f.polynomial.split_out_divisor();
        if elems.last().is_some_and(Signed::is_negative) {
            elems = elems.into_iter().map(|e| -e).collect();
        }
        if elems.len() > 3 && !single {
            refine(Polynomial::from(elems), power * f.power, out);
        } else {
            out.push((elems, power * f.power));
        }
    }
}
