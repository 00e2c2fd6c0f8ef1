use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Quat, Rat};
use crate::error::{invalid, Result};

/// The centralizer of a subset of `H_Q`.
///
/// In a quaternion algebra over a field, the centralizer of any set is the
/// whole ring, a quadratic subfield `Q(u)`, or the center.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", content = "u")]
pub enum CentralizerDesc {
    FullRing,
    /// `{p + q·u : p, q ∈ Q}` for a nonzero pure quaternion `u`.
    QuadraticField(Quat),
    Center,
}

impl CentralizerDesc {
    pub fn quadratic(u: Quat) -> Result<Self> {
        if !u.is_pure() || u.is_zero() {
            return invalid(format!(
                "quadratic field generator must be nonzero pure, got {u}"
            ));
        }
        Ok(CentralizerDesc::QuadraticField(u))
    }

    /// Basis over `Q`: `{1, i, j, k}`, `{1, u}` or `{1}`.
    pub fn basis(&self) -> Vec<Quat> {
        match self {
            CentralizerDesc::FullRing => vec![Quat::one(), Quat::i(), Quat::j(), Quat::k()],
            CentralizerDesc::QuadraticField(u) => vec![Quat::one(), u.clone()],
            CentralizerDesc::Center => vec![Quat::one()],
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            CentralizerDesc::FullRing => 4,
            CentralizerDesc::QuadraticField(_) => 2,
            CentralizerDesc::Center => 1,
        }
    }

    /// Coordinates of `q` in [`basis`](Self::basis), or `None` if `q` is not a member.
    pub fn coords(&self, q: &Quat) -> Option<Vec<Rat>> {
        match self {
            CentralizerDesc::FullRing => Some(q.coords().to_vec()),
            CentralizerDesc::Center => q.is_real().then(|| vec![q.re()]),
            CentralizerDesc::QuadraticField(u) => {
                let t = im_multiple(&q.im(), u)?;
                Some(vec![q.re(), t])
            }
        }
    }

    pub fn is_member(&self, q: &Quat) -> bool {
        self.coords(q).is_some()
    }

    pub fn from_coords(&self, c: &[Rat]) -> Quat {
        self.basis().iter().zip(c).map(|(b, t)| b.scale(t)).sum()
    }

    /// True when every member commutes with every other member.
    pub fn is_commutative(&self) -> bool {
        !matches!(self, CentralizerDesc::FullRing)
    }
}

/// `t` with `v = t·u` for pure `v` and nonzero pure `u`.
fn im_multiple(v: &Quat, u: &Quat) -> Option<Rat> {
    let (uc, vc) = (u.coords(), v.coords());
    let pivot = (1..4).find(|&c| !uc[c].is_zero())?;
    let t = &vc[pivot] / &uc[pivot];
    (1..4).all(|c| vc[c] == &t * &uc[c]).then_some(t)
}

/// Exact centralizer `C(S) = {q : qs = sq for all s ∈ S}`.
pub fn centralizer_of_set(s: &[Quat]) -> CentralizerDesc {
    let Some(first) = s.iter().find(|a| !a.is_real()) else {
        return CentralizerDesc::FullRing;
    };
    let u = first.im();
    let field = CentralizerDesc::QuadraticField(u);
    if s.iter().all(|a| field.is_member(a)) {
        field
    } else {
        CentralizerDesc::Center
    }
}
