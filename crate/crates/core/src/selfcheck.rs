//! Randomized property suites over the whole kernel, runnable from the CLI.

use std::ops::RangeInclusive;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::mpoly::{
    act, eval_c, find_certificate, find_eigen_tuple, point_ideal, reduce_mod_point,
    verify_simple_1dim, LeftIdealGens, MPoly, ModulePresentation, SimplicityReport,
};
use crate::parse::{parse_mpoly, parse_quat, parse_upoly};
use crate::random as gen;
use crate::ratexpr::{
    build_l, closure_witness, indep_oracle, indep_via_l, left_degree, left_degree_via_f,
    left_degree_via_oracle, right_degree,
};
use crate::scalar::{centralizer_of_set, find_conjugator, CentralizerDesc, Quat};
use crate::upoly::{
    e_space, gcrd, lclm, min_left_poly, right_roots, wedderburn_lclm, RootClass, RootStatus, UPoly,
};

type Case = fn(&mut ChaCha8Rng) -> Result<(), String>;

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub millis: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SelfcheckReport {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl SelfcheckReport {
    pub fn all_passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }
}

/// Suite name, case function, and relative cost (cases run = budget / cost).
const SUITES: &[(&str, Case, usize)] = &[
    ("quaternion-laws", quat_laws, 1),
    ("product-formula", product_formula, 1),
    ("remainder-law", remainder_law, 1),
    ("companion-commutes", companion_commutes, 1),
    ("gcrd-lclm-degrees", gcrd_lclm_degrees, 2),
    ("root-class-inequality", root_class_inequality, 2),
    ("wedderburn-dimension", wedderburn_dimension, 2),
    ("reducibility", reducibility, 1),
    ("independence-criterion", independence_criterion, 1),
    ("dependence-suffix", dependence_suffix, 1),
    ("degree-criterion", degree_criterion, 1),
    ("degree-symmetry", degree_symmetry, 1),
    ("reduce-mod-point", reduce_point, 1),
    ("eigen-tuples", eigen_tuples, 5),
    ("simple-round-trip", simple_round_trip, 1),
    ("certificates", certificates, 5),
    ("parse-round-trip", parse_round_trip, 1),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).collect()
}

/// Runs every suite on its own thread. Each suite gets `budget / cost`
/// cases (at least one) from a generator seeded by `seed` and its position.
pub fn run_all(seed: u64, budget: usize) -> SelfcheckReport {
    let suites = std::thread::scope(|scope| {
        let handles: Vec<_> = SUITES
            .iter()
            .enumerate()
            .map(|(idx, &(name, case, cost))| {
                let cases = (budget / cost).max(1);
                let suite_seed = seed
                    .wrapping_add(idx as u64)
                    .wrapping_mul(0x9E37_79B9_7F4A_7C15);
                scope.spawn(move || run_suite(name, case, cases, suite_seed))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread"))
            .collect()
    });
    SelfcheckReport { seed, suites }
}

fn run_suite(name: &'static str, case: Case, total: usize, seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = Instant::now();
    let mut passed = 0;
    let mut first_failure = None;
    for n in 0..total {
        match case(&mut rng) {
            Ok(()) => passed += 1,
            Err(e) => {
                first_failure.get_or_insert(format!("case {n}: {e}"));
            }
        }
    }
    SuiteResult {
        name,
        passed,
        total,
        millis: start.elapsed().as_millis(),
        first_failure,
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<T>(r: crate::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

const H: i64 = gen::DEFAULT_HEIGHT;

fn upoly_of(rng: &mut ChaCha8Rng, degrees: RangeInclusive<usize>, height: i64) -> UPoly {
    let d = rng.gen_range(degrees);
    gen::upoly(rng, d, height)
}

fn monic_of(rng: &mut ChaCha8Rng, degrees: RangeInclusive<usize>, height: i64) -> UPoly {
    let d = rng.gen_range(degrees);
    gen::monic_upoly(rng, d, height)
}

fn quat_laws(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (a, b, c) = (gen::quat(rng, H), gen::quat(rng, H), gen::quat(rng, H));
    check(&(&a * &b) * &c == &a * &(&b * &c), || {
        format!("associativity at {a}, {b}, {c}")
    })?;
    check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || {
        format!("distributivity at {a}, {b}, {c}")
    })?;
    check((&a * &b).norm() == a.norm() * b.norm(), || {
        format!("norm at {a}, {b}")
    })?;
    check((&a * &b).conj() == &b.conj() * &a.conj(), || {
        format!("conjugation at {a}, {b}")
    })?;
    if !a.is_zero() {
        let inv = e2s(a.inv())?;
        check((&a * &inv).is_one() && (&inv * &a).is_one(), || {
            format!("inverse of {a}")
        })?;
    }
    Ok(())
}

fn product_formula(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let a = gen::quat(rng, H);
    let p = upoly_of(rng, 0..=5, H);
    let mut q = upoly_of(rng, 0..=4, H);
    if rng.gen_bool(0.5) {
        q = &q * &UPoly::linear(&a);
    }
    let pq = (&p * &q).eval_left(&a);
    let qa = q.eval_left(&a);
    let expected = if qa.is_zero() {
        Quat::zero()
    } else {
        let conj = e2s(a.conjugate_by(&qa))?;
        &p.eval_left(&conj) * &qa
    };
    check(pq == expected, || format!("({p})({q}) at {a}"))
}

fn remainder_law(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let a = gen::quat(rng, H);
    let p = upoly_of(rng, 1..=5, H);
    let d = UPoly::linear(&a);
    let (q, r) = e2s(p.divide_right(&d))?;
    check(&(&q * &d) + &r == p, || {
        format!("right division of {p} by {d}")
    })?;
    check(r == UPoly::constant(p.eval_left(&a)), || {
        format!("right remainder of {p} at {a}")
    })?;
    let (q, r) = e2s(p.divide_left(&d))?;
    check(&(&d * &q) + &r == p, || {
        format!("left division of {p} by {d}")
    })?;
    check(r == UPoly::constant(p.eval_right(&a)), || {
        format!("left remainder of {p} at {a}")
    })
}

fn companion_commutes(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let p = upoly_of(rng, 0..=5, H);
    let c = p.companion();
    check(c == &p.conj_poly() * &p && c.is_central(), || {
        format!("companion of {p}")
    })
}

fn gcrd_lclm_degrees(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let common = monic_of(rng, 0..=1, 3);
    let p = &upoly_of(rng, 1..=2, 3) * &common;
    let q = &upoly_of(rng, 1..=2, 3) * &common;
    let g = e2s(gcrd(&p, &q))?;
    let l = e2s(lclm(&p, &q))?;
    for (poly, what) in [(&p, "p"), (&q, "q")] {
        check(e2s(poly.divide_right(&g))?.1.is_zero(), || {
            format!("gcrd does not right-divide {what}")
        })?;
        check(e2s(l.divide_right(poly))?.1.is_zero(), || {
            format!("{what} does not right-divide lclm")
        })?;
    }
    let deg = |u: &UPoly| u.degree().unwrap_or(0);
    check(deg(&g) + deg(&l) == deg(&p) + deg(&q), || {
        format!("degree identity for {p}, {q}")
    })
}

fn linear_product<R: Rng>(rng: &mut R) -> (UPoly, Vec<Quat>) {
    let m = rng.gen_range(1..=4);
    let roots: Vec<Quat> = (0..m).map(|_| gen::quat(rng, 3)).collect();
    let p = roots
        .iter()
        .fold(UPoly::one(), |acc, a| &acc * &UPoly::linear(a));
    (p, roots)
}

fn root_class_inequality(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (p, built) = linear_product(rng);
    let set = e2s(right_roots(&p))?;
    check(set.status == RootStatus::Complete, || {
        format!("roots of {p} reported incomplete")
    })?;
    let mut total = 0;
    for class in &set.classes {
        let base = match class {
            RootClass::Isolated { root } => Some(root.clone()),
            RootClass::Sphere { .. } => built.iter().find(|a| class.contains(a)).cloned(),
        };
        let Some(base) = base else {
            return Err(format!(
                "class {class:?} of {p} has no built representative"
            ));
        };
        check(p.eval_left(&base).is_zero(), || {
            format!("{base} is not a root of {p}")
        })?;
        total += e2s(e_space(&p, &base))?.dim();
    }
    let deg = p.degree().unwrap_or(0);
    check(total <= deg, || {
        format!("Σ dim E = {total} exceeds deg {deg} for {p}")
    })
}

fn wedderburn_dimension(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let b = gen::nonreal_quat(rng, 5);
    let gens: Vec<Quat> = (0..rng.gen_range(1..=2))
        .map(|_| gen::nonzero_quat(rng, 5))
        .collect();
    let p = e2s(wedderburn_lclm(&b, &gens))?;
    let n = p.degree().unwrap_or(0);
    let dim = e2s(e_space(&p, &b))?.dim();
    check(dim == n, || format!("dim E({p}, {b}) = {dim}, degree {n}"))?;
    for class in e2s(right_roots(&p))?.classes {
        if let RootClass::Isolated { root } = class {
            check(find_conjugator(&b, &root).is_some(), || {
                format!("{root} not conjugate to {b}")
            })?;
        }
    }
    Ok(())
}

fn reducibility(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let u = loop {
        let q = gen::quat(rng, 5).im();
        if !q.is_zero() {
            break q;
        }
    };
    let field = CentralizerDesc::QuadraticField(u.clone());
    let b = if rng.gen_bool(0.5) {
        let c = field.from_coords(&[gen::rational(rng, H), gen::rational(rng, H)]);
        e2s(c.conjugate_by(&gen::nonzero_quat(rng, H)))?
    } else {
        gen::quat(rng, H)
    };
    let p = e2s(min_left_poly(&b, &field))?;
    if p.degree() != Some(2) {
        return Ok(());
    }
    let mut in_field = Vec::new();
    for class in e2s(right_roots(&p))?.classes {
        let c = match class {
            RootClass::Isolated { root } => field.is_member(&root).then_some(root),
            RootClass::Sphere { trace, norm } => {
                crate::upoly::sphere_point_in(&trace, &norm, &field)
            }
        };
        if let Some(c) = c {
            check(e2s(p.divide_right(&UPoly::linear(&c)))?.1.is_zero(), || {
                format!("{c} does not split {p}")
            })?;
            in_field.push(c);
        }
    }
    if in_field.is_empty() {
        return Ok(());
    }
    check(
        in_field.iter().any(|c| find_conjugator(&b, c).is_some()),
        || format!("{p} splits over Q({u}) but no conjugate of {b} lies there"),
    )
}

/// `a` together with vectors that are sometimes made dependent on purpose.
fn independence_instance<R: Rng>(rng: &mut R) -> (Quat, Vec<Quat>) {
    let a = match rng.gen_range(0..4) {
        0 => Quat::from_rat(gen::rational(rng, H)),
        _ => gen::quat(rng, H),
    };
    let n = rng.gen_range(1..=4);
    let mut bs: Vec<Quat> = (0..n).map(|_| gen::quat(rng, 5)).collect();
    if rng.gen_bool(0.4) {
        let over = centralizer_of_set(std::slice::from_ref(&a));
        let t = rng.gen_range(0..n);
        let combo = (0..n)
            .filter(|&s| s != t)
            .map(|s| {
                let coords: Vec<_> = (0..over.dim()).map(|_| gen::rational(rng, 5)).collect();
                &over.from_coords(&coords) * &bs[s]
            })
            .sum();
        bs[t] = combo;
    }
    (a, bs)
}

fn independence_criterion(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (a, bs) = independence_instance(rng);
    let via_l = e2s(indep_via_l(&a, &bs))?;
    let oracle = indep_oracle(&a, &bs);
    check(via_l == oracle, || {
        format!("L says {via_l}, rank says {oracle} for a = {a}, b = {bs:?}")
    })
}

/// `L_n` is defined and zero exactly when the vectors are dependent while
/// `b_2, …, b_n` are independent.
fn dependence_suffix(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (a, bs) = independence_instance(rng);
    if bs.len() < 2 {
        return Ok(());
    }
    let mut args = vec![a.clone()];
    args.extend_from_slice(&bs);
    let zero = e2s(e2s(build_l(bs.len()))?.eval(&args))?.is_defined_zero();
    let expected = !indep_oracle(&a, &bs) && indep_oracle(&a, &bs[1..]);
    check(zero == expected, || {
        format!("L zero = {zero}, expected {expected} for a = {a}")
    })
}

fn degree_pair<R: Rng>(rng: &mut R) -> (Quat, Quat) {
    let a = gen::quat(rng, H);
    let b = match rng.gen_range(0..4) {
        0 => {
            let over = centralizer_of_set(std::slice::from_ref(&a));
            let coords: Vec<_> = (0..over.dim()).map(|_| gen::rational(rng, H)).collect();
            over.from_coords(&coords)
        }
        _ => gen::quat(rng, H),
    };
    (a, b)
}

fn degree_criterion(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (a, b) = degree_pair(rng);
    let f = e2s(left_degree_via_f(&a, &b))?;
    let oracle = e2s(left_degree_via_oracle(&a, &b))?;
    let minpoly = e2s(left_degree(&a, &b))?;
    check(f == oracle && oracle == minpoly, || {
        format!("degrees F = {f}, rank = {oracle}, minpoly = {minpoly} at ({a}, {b})")
    })
}

fn degree_symmetry(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (a, b) = degree_pair(rng);
    let l = e2s(left_degree(&a, &b))?;
    let r = e2s(right_degree(&b, &a))?;
    check(l == r && (1..=2).contains(&l), || {
        format!("left {l}, right {r} at ({a}, {b})")
    })?;
    let w = e2s(closure_witness(&b, &a))?;
    check(w.iter().all(|c| c.commutes_with(&a)), || {
        format!("witness for ({b}, {a})")
    })
}

fn reduce_point(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=3);
    let p = gen::mpoly(rng, n, 4, 5, H);
    let pt = gen::commuting_point(rng, n, 5);
    let (r, qs) = e2s(reduce_mod_point(&p, &pt))?;
    let gens = point_ideal(&pt);
    let rebuilt = qs
        .iter()
        .zip(gens.gens())
        .fold(MPoly::constant(n, r.clone()), |acc, (q, g)| &acc + &(q * g));
    check(rebuilt == p, || format!("reconstruction of {p}"))?;
    check(r == e2s(eval_c(&p, &pt))?, || {
        format!("remainder of {p} differs from its value")
    })
}

fn eigen_tuples(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=4);
    let (module, _) = gen::conjugated_diagonal_module(rng, n, m, 5);
    let mut seed = vec![Quat::zero(); m];
    seed[0] = Quat::one();
    let t = e2s(find_eigen_tuple(&module, &seed))?;
    check(t.holds_in(&module), || "eigen equations fail".into())?;
    for g in point_ideal(&t.point).gens() {
        let image = e2s(act(&module, g, &t.vector))?;
        check(image.iter().all(Quat::is_zero), || {
            format!("{g} does not annihilate the eigenvector")
        })?;
    }
    Ok(())
}

fn simple_round_trip(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=3);
    let pt = gen::commuting_point(rng, n, H);
    let module = ModulePresentation {
        m: 1,
        mats: pt
            .components()
            .iter()
            .map(|a| vec![vec![a.clone()]])
            .collect(),
    };
    match e2s(verify_simple_1dim(&module))? {
        SimplicityReport::Simple { point, ideal } => {
            check(point == pt && ideal == point_ideal(&pt), || {
                "point ideal not recovered".into()
            })
        }
        other => Err(format!("one-dimensional module judged {other:?}")),
    }
}

fn certificates(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=2);
    let pt = gen::gaussian_point(rng, n, 3);
    let ideal = point_ideal(&pt);
    let h = gen::mpoly(rng, n, 1, 2, 3);
    if h.is_zero() {
        return Ok(());
    }
    let p = &h * &ideal.gens()[rng.gen_range(0..n)];
    let a = gen::nonzero_quat(rng, 3);
    let cert = e2s(find_certificate(&ideal, &p, &a, 2, 1))?;
    let Some(cert) = cert else {
        return Err(format!(
            "no certificate for {p} in the ideal of {:?}",
            pt.components()
        ));
    };
    let ideal: &LeftIdealGens = &ideal;
    check(cert.verify(ideal, &p, &a), || {
        "certificate does not reconstruct".into()
    })
}

fn parse_round_trip(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let q = gen::quat(rng, H);
    check(e2s(parse_quat(&q.to_string()))? == q, || {
        format!("quaternion {q}")
    })?;
    let p = upoly_of(rng, 0..=4, H);
    check(e2s(parse_upoly(&p.to_string()))? == p, || {
        format!("polynomial {p}")
    })?;
    let n = rng.gen_range(1..=3);
    let m = gen::mpoly(rng, n, 3, 4, H);
    check(e2s(parse_mpoly(&m.to_string(), n))? == m, || {
        format!("polynomial {m}")
    })
}
