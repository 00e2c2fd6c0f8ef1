//! Seeded generators for test inputs. Rationals have numerator and
//! denominator bounded by a height.

use rand::Rng;

use crate::mpoly::{
    invert_matrix, mat_mul, CommutingPoint, Exponents, MPoly, ModulePresentation, QMatrix,
};
use crate::scalar::rat::rat;
use crate::scalar::{Quat, Rat};
use crate::upoly::UPoly;

pub const DEFAULT_HEIGHT: i64 = 10;

pub fn rational<R: Rng>(rng: &mut R, height: i64) -> Rat {
    rat(rng.gen_range(-height..=height), rng.gen_range(1..=height))
}

/// Integer in `[-height, height]`, as a rational.
pub fn small_int<R: Rng>(rng: &mut R, height: i64) -> Rat {
    rat(rng.gen_range(-height..=height), 1)
}

pub fn quat<R: Rng>(rng: &mut R, height: i64) -> Quat {
    Quat::new(
        rational(rng, height),
        rational(rng, height),
        rational(rng, height),
        rational(rng, height),
    )
}

pub fn nonzero_quat<R: Rng>(rng: &mut R, height: i64) -> Quat {
    loop {
        let q = quat(rng, height);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Quaternion with a nonzero imaginary part.
pub fn nonreal_quat<R: Rng>(rng: &mut R, height: i64) -> Quat {
    loop {
        let q = quat(rng, height);
        if !q.is_real() {
            return q;
        }
    }
}

/// Polynomial of exact degree `deg`.
pub fn upoly<R: Rng>(rng: &mut R, deg: usize, height: i64) -> UPoly {
    let mut coeffs: Vec<Quat> = (0..deg).map(|_| quat(rng, height)).collect();
    coeffs.push(nonzero_quat(rng, height));
    UPoly::new(coeffs)
}

/// Monic polynomial of exact degree `deg`.
pub fn monic_upoly<R: Rng>(rng: &mut R, deg: usize, height: i64) -> UPoly {
    let mut coeffs: Vec<Quat> = (0..deg).map(|_| quat(rng, height)).collect();
    coeffs.push(Quat::one());
    UPoly::new(coeffs)
}

/// `f_1(q), …, f_n(q)` for one random `q` and rational polynomials `f_i` of
/// degree at most 2; these commute because they all lie in `Q(q)`.
pub fn commuting_point<R: Rng>(rng: &mut R, n: usize, height: i64) -> CommutingPoint {
    let q = quat(rng, height);
    let components = (0..n)
        .map(|_| {
            let f: Vec<Rat> = (0..3).map(|_| rational(rng, height)).collect();
            UPoly::from_rats(&f).eval_left(&q)
        })
        .collect();
    CommutingPoint::new(components).expect("elements of Q(q) commute")
}

/// Point whose coordinates lie in `Q(i)`.
pub fn gaussian_point<R: Rng>(rng: &mut R, n: usize, height: i64) -> CommutingPoint {
    let components = (0..n)
        .map(|_| {
            Quat::new(
                small_int(rng, height),
                small_int(rng, height),
                Rat::default(),
                Rat::default(),
            )
        })
        .collect();
    CommutingPoint::new(components).expect("elements of Q(i) commute")
}

/// Polynomial in `nvars` variables with total degree at most `deg` and up to
/// `terms` terms.
pub fn mpoly<R: Rng>(rng: &mut R, nvars: usize, deg: u32, terms: usize, height: i64) -> MPoly {
    let mut p = MPoly::zero(nvars);
    for _ in 0..terms {
        let mut left = deg;
        let mut e = vec![0u32; nvars];
        for slot in e.iter_mut() {
            let k = rng.gen_range(0..=left);
            *slot = k;
            left -= k;
        }
        p = &p + &MPoly::term(Exponents(e), quat(rng, height));
    }
    p
}

/// Square matrix over `H_Q` with small integer entries.
pub fn matrix<R: Rng>(rng: &mut R, m: usize, height: i64) -> QMatrix {
    (0..m)
        .map(|_| {
            (0..m)
                .map(|_| {
                    Quat::new(
                        small_int(rng, height),
                        small_int(rng, height),
                        small_int(rng, height),
                        small_int(rng, height),
                    )
                })
                .collect()
        })
        .collect()
}

pub fn invertible_matrix<R: Rng>(rng: &mut R, m: usize, height: i64) -> (QMatrix, QMatrix) {
    loop {
        let p = matrix(rng, m, height);
        if let Ok(inv) = invert_matrix(&p) {
            return (p, inv);
        }
    }
}

/// Direct sum of `m` one-dimensional modules at points in `Q(i)^n`,
/// conjugated by a random invertible matrix: `A_j = P·diag(a_{1j}, …, a_{mj})·P⁻¹`.
pub fn conjugated_diagonal_module<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    height: i64,
) -> (ModulePresentation, Vec<CommutingPoint>) {
    let points: Vec<CommutingPoint> = (0..m).map(|_| gaussian_point(rng, n, height)).collect();
    let (p, pinv) = invertible_matrix(rng, m, 3);
    let mats = (0..n)
        .map(|j| {
            let d: QMatrix = (0..m)
                .map(|r| {
                    (0..m)
                        .map(|c| {
                            if r == c {
                                points[r].components()[j].clone()
                            } else {
                                Quat::zero()
                            }
                        })
                        .collect()
                })
                .collect();
            mat_mul(&mat_mul(&p, &d), &pinv)
        })
        .collect();
    (ModulePresentation { m, mats }, points)
}
