use super::{lclm, UPoly};
use crate::error::{internal, invalid, Result};
use crate::scalar::linalg::{left_linear_solve_over, right_linear_solve_over};
use crate::scalar::{centralizer_of_set, CentralizerDesc, Quat};

/// `dim_Q H_Q`; no minimal polynomial over a division subring can exceed it.
const DEGREE_CAP: usize = 4;

/// Monic `p ∈ C[x]` of least degree with `p(b) = 0`: the first `n` for which
/// `b^n ∈ Σ_{k<n} C·b^k`.
pub fn min_left_poly(b: &Quat, over: &CentralizerDesc) -> Result<UPoly> {
    min_poly(b, over, true)
}

/// Monic `p ∈ C[x]` of least degree with `p_r(a) = 0`, from
/// `a^n ∈ Σ_{k<n} a^k·C`.
pub fn min_right_poly(a: &Quat, over: &CentralizerDesc) -> Result<UPoly> {
    min_poly(a, over, false)
}

fn min_poly(b: &Quat, over: &CentralizerDesc, left: bool) -> Result<UPoly> {
    let mut powers = vec![Quat::one()];
    for n in 1..=DEGREE_CAP {
        let target = b.pow(n as u32);
        let sol = if left {
            left_linear_solve_over(&powers, &target, over)
        } else {
            right_linear_solve_over(&powers, &target, over)
        };
        if let Some(cs) = sol {
            let mut coeffs: Vec<Quat> = cs.iter().map(|c| -c).collect();
            coeffs.push(Quat::one());
            return Ok(UPoly::new(coeffs));
        }
        powers.push(target);
    }
    internal(format!(
        "{b} has no minimal polynomial of degree ≤ {DEGREE_CAP}"
    ))
}

/// Monic generator of `∩_{r ∈ S} D[x](x − r b r⁻¹)` for the group `S`
/// generated by `gens`.
///
/// Starts from `x − b` and replaces the current polynomial `q` by
/// `lclm(q, s q s⁻¹)` until it is fixed by conjugation with every generator.
/// The fixpoint has coefficients in `C(gens)` and must equal the minimal
/// left polynomial of `b` over that centralizer; both are checked.
pub fn wedderburn_lclm(b: &Quat, gens: &[Quat]) -> Result<UPoly> {
    if gens.iter().any(Quat::is_zero) {
        return invalid("conjugating generators must be nonzero");
    }
    let mut q = UPoly::linear(b);
    loop {
        let mut changed = false;
        for s in gens {
            let conj = q.conjugate_by(s)?;
            if conj != q {
                q = lclm(&q, &conj)?;
                changed = true;
            }
        }
        if q.degree().unwrap_or(0) > DEGREE_CAP {
            return internal(format!("Wedderburn iteration exceeded degree {DEGREE_CAP}"));
        }
        if !changed {
            break;
        }
    }
    let over = centralizer_of_set(gens);
    if let Some(c) = q.coeffs().iter().find(|c| !over.is_member(c)) {
        return internal(format!("coefficient {c} of {q} lies outside C(generators)"));
    }
    let expected = min_left_poly(b, &over)?;
    if expected != q {
        return internal(format!(
            "Wedderburn polynomial {q} differs from minimal polynomial {expected}"
        ));
    }
    Ok(q)
}
