//! Exact Gaussian elimination over `Q`, and the quaternionic solvers built on
//! it by expanding every unknown in the rational coordinates of a centralizer.

use num_traits::{One, Zero};

use super::{CentralizerDesc, Quat, Rat};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vec<Rat>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        if !inv.is_one() {
            for v in rows[r][c..].iter_mut() {
                *v *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rat>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Some `v` with `A·v = t`, or `None` when the system is inconsistent.
pub fn solve(a: &[Vec<Rat>], t: &[Rat], ncols: usize) -> Option<Vec<Rat>> {
    assert_eq!(a.len(), t.len(), "row count mismatch");
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(t)
        .map(|(row, ti)| {
            let mut r = row.clone();
            r.push(ti.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][ncols].clone();
    }
    Some(x)
}

/// Basis of `{v : A·v = 0}`, one vector per free column.
pub fn nullspace(a: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[r][f];
            }
            v
        })
        .collect()
}

/// Which side the centralizer coefficients multiply on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Rational matrix whose columns are the coordinates of `e·v` (left) or
/// `v·e` (right), for each vector `v` and each `Q`-basis element `e` of `over`.
/// Vectors are tuples of quaternions, flattened to `4·len` rows.
pub(crate) fn expansion_matrix(
    vectors: &[Vec<Quat>],
    over: &CentralizerDesc,
    side: Side,
) -> (Vec<Vec<Rat>>, usize) {
    let basis = over.basis();
    let len = vectors.first().map_or(0, Vec::len);
    let ncols = vectors.len() * basis.len();
    let mut rows = vec![Vec::with_capacity(ncols); 4 * len];
    for v in vectors {
        assert_eq!(v.len(), len, "vectors of unequal length");
        for e in &basis {
            for (slot, comp) in v.iter().enumerate() {
                let p = match side {
                    Side::Left => e * comp,
                    Side::Right => comp * e,
                };
                for (r, c) in p.coords().into_iter().enumerate() {
                    rows[4 * slot + r].push(c);
                }
            }
        }
    }
    (rows, ncols)
}

fn flatten(v: &[Quat]) -> Vec<Rat> {
    v.iter().flat_map(|q| q.coords()).collect()
}

fn gather(sol: &[Rat], n: usize, over: &CentralizerDesc) -> Vec<Quat> {
    let d = over.dim();
    (0..n)
        .map(|i| over.from_coords(&sol[i * d..(i + 1) * d]))
        .collect()
}

/// Coefficients `c_i ∈ over` with `Σ c_i·v_i = target` (left) or
/// `Σ v_i·c_i = target` (right), for vectors in `H_Q^m`.
pub fn solve_vectors_over(
    vectors: &[Vec<Quat>],
    target: &[Quat],
    over: &CentralizerDesc,
    side: Side,
) -> Option<Vec<Quat>> {
    if vectors.is_empty() {
        return target.iter().all(Quat::is_zero).then(Vec::new);
    }
    let (rows, ncols) = expansion_matrix(vectors, over, side);
    let sol = solve(&rows, &flatten(target), ncols)?;
    Some(gather(&sol, vectors.len(), over))
}

/// Rank of the vectors as a left/right module over `over`.
pub fn rank_over(vectors: &[Vec<Quat>], over: &CentralizerDesc, side: Side) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let (rows, ncols) = expansion_matrix(vectors, over, side);
    rank(&rows, ncols) / over.dim()
}

/// `c_i ∈ C` with `Σ c_i·v_i = target`.
pub fn left_linear_solve_over(
    vectors: &[Quat],
    target: &Quat,
    over: &CentralizerDesc,
) -> Option<Vec<Quat>> {
    let vs: Vec<Vec<Quat>> = vectors.iter().map(|v| vec![v.clone()]).collect();
    solve_vectors_over(&vs, std::slice::from_ref(target), over, Side::Left)
}

/// `c_i ∈ C` with `Σ v_i·c_i = target`.
pub fn right_linear_solve_over(
    vectors: &[Quat],
    target: &Quat,
    over: &CentralizerDesc,
) -> Option<Vec<Quat>> {
    let vs: Vec<Vec<Quat>> = vectors.iter().map(|v| vec![v.clone()]).collect();
    solve_vectors_over(&vs, std::slice::from_ref(target), over, Side::Right)
}

/// Nonzero `r` with `r·a·r⁻¹ = b`, from the nullspace of `r ↦ ra − br`.
pub fn find_conjugator(a: &Quat, b: &Quat) -> Option<Quat> {
    if a.re() != b.re() || a.im().norm() != b.im().norm() {
        return None;
    }
    let basis = CentralizerDesc::FullRing.basis();
    let cols: Vec<[Rat; 4]> = basis
        .iter()
        .map(|e| (&(e * a) - &(b * e)).coords())
        .collect();
    let rows: Vec<Vec<Rat>> = (0..4)
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let null = nullspace(&rows, 4);
    let v = null.into_iter().next()?;
    Some(Quat::from_coords([
        v[0].clone(),
        v[1].clone(),
        v[2].clone(),
        v[3].clone(),
    ]))
}
