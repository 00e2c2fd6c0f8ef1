use serde::Serialize;

use super::UPoly;
use crate::error::{invalid, Result};
use crate::scalar::linalg::{nullspace, right_linear_solve_over};
use crate::scalar::{centralizer_of_set, CentralizerDesc, Quat, Rat};

/// A right basis of `E(p, a) = {r : p(r a r⁻¹) = 0} ∪ {0}` over `C(a)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ESpaceBasis {
    pub basis: Vec<Quat>,
    pub over: CentralizerDesc,
}

impl ESpaceBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether `r` is a right `C(a)`-combination of the basis.
    pub fn contains(&self, r: &Quat) -> bool {
        right_linear_solve_over(&self.basis, r, &self.over).is_some()
    }
}

/// `E(p, a)` as the solution space of `Σ c_k·r·a^k = 0`, which is
/// `p(r a r⁻¹)·r` written linearly in `r`.
pub fn e_space(p: &UPoly, a: &Quat) -> Result<ESpaceBasis> {
    if !p.eval_left(a).is_zero() {
        return invalid(format!("{a} is not a right root of {p}"));
    }
    let powers: Vec<Quat> = (0..p.coeffs().len()).map(|k| a.pow(k as u32)).collect();
    let units = CentralizerDesc::FullRing.basis();
    let cols: Vec<[Rat; 4]> = units
        .iter()
        .map(|e| {
            p.coeffs()
                .iter()
                .zip(&powers)
                .map(|(c, ak)| &(c * e) * ak)
                .sum::<Quat>()
                .coords()
        })
        .collect();
    let rows: Vec<Vec<Rat>> = (0..4)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let over = centralizer_of_set(std::slice::from_ref(a));
    let mut basis: Vec<Quat> = Vec::new();
    for v in nullspace(&rows, 4) {
        let r = Quat::from_coords([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]);
        if right_linear_solve_over(&basis, &r, &over).is_none() {
            basis.push(r);
        }
    }
    Ok(ESpaceBasis { basis, over })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat::int;

    #[test]
    fn x2_plus_1_at_i() {
        let p = UPoly::from_rats(&[int(1), int(0), int(1)]);
        let e = e_space(&p, &Quat::i()).unwrap();
        assert_eq!(e.dim(), 2);
        assert_eq!(e.over, CentralizerDesc::QuadraticField(Quat::i()));
        assert!(e.contains(&Quat::one()));
        assert!(e.contains(&Quat::j()));
        assert!(e.contains(&Quat::k()));
    }

    #[test]
    fn squared_linear_factor() {
        let l = UPoly::linear(&Quat::i());
        let e = e_space(&(&l * &l), &Quat::i()).unwrap();
        assert_eq!(e.dim(), 1);
        assert!(e.contains(&Quat::from_ints(3, -2, 0, 0)));
        assert!(!e.contains(&Quat::j()));
    }

    #[test]
    fn linear_polynomial_gives_the_centralizer() {
        let a = Quat::from_ints(1, 2, -1, 0);
        let e = e_space(&UPoly::linear(&a), &a).unwrap();
        assert_eq!(e.dim(), 1);
        assert!(e.contains(&a));
        assert!(!e.contains(&Quat::k()));
    }

    #[test]
    fn rejects_non_roots() {
        let p = UPoly::linear(&Quat::i());
        assert!(e_space(&p, &Quat::j()).is_err());
    }
}
