use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quatnull_core::mpoly::{
    act, eval_c, find_eigen_tuple, in_point_ideal, point_ideal, reduce_mod_point,
    verify_simple_1dim, CommutingPoint, MPoly, ModulePresentation, SimplicityReport,
};
use quatnull_core::parse::{parse_mpoly, parse_quat, parse_upoly};
use quatnull_core::random as gen;
use quatnull_core::ratexpr::{
    build_f, build_l, closure_witness, indep_oracle, indep_via_l, left_degree, left_degree_via_f,
    left_degree_via_oracle, right_degree,
};
use quatnull_core::scalar::linalg::rank;
use quatnull_core::scalar::rat::rat;
use quatnull_core::scalar::{centralizer_of_set, find_conjugator, left_linear_solve_over};
use quatnull_core::upoly::{e_space, gcrd, lclm, right_roots, RootStatus};
use quatnull_core::{CentralizerDesc, Quat, Rat, UPoly};

fn rational() -> impl Strategy<Value = Rat> {
    (-10i64..=10, 1i64..=10).prop_map(|(n, d)| rat(n, d))
}

fn quat() -> impl Strategy<Value = Quat> {
    (rational(), rational(), rational(), rational()).prop_map(|(w, x, y, z)| Quat::new(w, x, y, z))
}

fn small_quat() -> impl Strategy<Value = Quat> {
    (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3)
        .prop_map(|(w, x, y, z)| Quat::from_ints(w, x, y, z))
}

fn upoly(max_deg: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(quat(), 0..=max_deg + 1).prop_map(UPoly::new)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Either an arbitrary quaternion or one sharing `a`'s centralizer.
fn partner(a: &Quat, b: Quat, coords: (Rat, Rat), related: bool) -> Quat {
    if !related {
        return b;
    }
    match centralizer_of_set(std::slice::from_ref(a)) {
        CentralizerDesc::QuadraticField(u) => &Quat::from_rat(coords.0) + &u.scale(&coords.1),
        _ => Quat::from_rat(coords.0),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quaternion_ring_laws(a in quat(), b in quat(), c in quat()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        prop_assert_eq!(a.norm() == rat(0, 1), a.is_zero());
        if let Ok(inv) = a.inv() {
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn product_formula(p in upoly(5), q in upoly(4), a in quat()) {
        let qa = q.eval_left(&a);
        let expected = if qa.is_zero() {
            Quat::zero()
        } else {
            &p.eval_left(&a.conjugate_by(&qa).unwrap()) * &qa
        };
        prop_assert_eq!((&p * &q).eval_left(&a), expected);
    }

    #[test]
    fn right_factor_gives_right_root(p in upoly(4), a in quat()) {
        let pq = &p * &UPoly::linear(&a);
        prop_assert!(pq.eval_left(&a).is_zero());
    }

    #[test]
    fn remainder_law(p in upoly(5), a in quat()) {
        let d = UPoly::linear(&a);
        let (q, r) = p.divide_right(&d).unwrap();
        prop_assert_eq!(&(&q * &d) + &r, p.clone());
        prop_assert_eq!(r, UPoly::constant(p.eval_left(&a)));
        let (q, r) = p.divide_left(&d).unwrap();
        prop_assert_eq!(&(&d * &q) + &r, p.clone());
        prop_assert_eq!(r, UPoly::constant(p.eval_right(&a)));
    }

    #[test]
    fn companion_is_central(p in upoly(4)) {
        let c = p.companion();
        prop_assert_eq!(&c, &(&p.conj_poly() * &p));
        prop_assert!(c.is_central());
    }

    #[test]
    fn centralizer_members_commute(s in prop::collection::vec(quat(), 0..3), r in quat()) {
        let c = centralizer_of_set(&s);
        for b in c.basis() {
            prop_assert!(s.iter().all(|x| x.commutes_with(&b)));
        }
        if !c.is_member(&r) {
            prop_assert!(s.iter().any(|x| !x.commutes_with(&r)));
        }
    }

    #[test]
    fn conjugators(a in quat(), b in quat(), r in quat(), conjugate in any::<bool>()) {
        let b = if conjugate && !r.is_zero() { a.conjugate_by(&r).unwrap() } else { b };
        match find_conjugator(&a, &b) {
            Some(r) => {
                prop_assert!(!r.is_zero());
                prop_assert_eq!(a.conjugate_by(&r).unwrap(), b);
            }
            None => prop_assert!(a.re() != b.re() || a.im().norm() != b.im().norm()),
        }
    }

    #[test]
    fn left_solve_reconstructs(
        vs in prop::collection::vec(small_quat(), 1..4),
        cs in prop::collection::vec((rational(), rational()), 3),
        u in quat(),
        t in small_quat(),
        reachable in any::<bool>(),
    ) {
        let over = match CentralizerDesc::quadratic(u.im()) {
            Ok(f) => f,
            Err(_) => CentralizerDesc::Center,
        };
        let target = if reachable {
            vs.iter()
                .zip(&cs)
                .map(|(v, (p, q))| &over.from_coords(&[p.clone(), q.clone()][..over.dim()]) * v)
                .sum()
        } else {
            t
        };
        // Brute-force oracle: rank of rational coordinates of {c·v} over the basis of `over`.
        let spanning = |extra: Option<&Quat>| {
            let rows: Vec<Vec<Rat>> = vs
                .iter()
                .chain(extra)
                .flat_map(|v| over.basis().into_iter().map(move |e| (&e * v).coords().to_vec()))
                .collect();
            rank(&rows, 4)
        };
        let solvable = spanning(None) == spanning(Some(&target));
        match left_linear_solve_over(&vs, &target, &over) {
            Some(c) => {
                prop_assert!(c.iter().all(|x| over.is_member(x)));
                let sum: Quat = c.iter().zip(&vs).map(|(c, v)| c * v).sum();
                prop_assert_eq!(sum, target);
            }
            None => prop_assert!(!solvable),
        }
        if reachable {
            prop_assert!(solvable);
        }
    }

    #[test]
    fn degree_criterion_and_symmetry(
        a in quat(),
        b in quat(),
        coords in (rational(), rational()),
        related in prop::bool::weighted(0.25),
    ) {
        let b = partner(&a, b, coords, related);
        let d = left_degree_via_oracle(&a, &b).unwrap();
        prop_assert_eq!(left_degree_via_f(&a, &b).unwrap(), d);
        prop_assert_eq!(left_degree(&a, &b).unwrap(), d);
        prop_assert_eq!(right_degree(&b, &a).unwrap(), d);
        prop_assert!(d == 1 || d == 2);
    }

    #[test]
    fn closure_witness_identities(
        a in quat(),
        b in quat(),
        coords in (rational(), rational()),
        related in prop::bool::weighted(0.25),
    ) {
        let b = partner(&a, b, coords, related);
        let w = closure_witness(&a, &b).unwrap();
        prop_assert!(w.len() == 1 || w.len() == 2);
        prop_assert!(w.iter().all(|c| c.commutes_with(&b)));
        let value: Quat = w.iter().enumerate().map(|(k, c)| &a.pow(k as u32) * c).sum();
        prop_assert!((&value + &a.pow(w.len() as u32)).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gcrd_lclm_degrees(seed in any::<u64>()) {
        let mut r = rng(seed);
        let common = gen::monic_upoly(&mut r, 1, 3);
        let p = &gen::upoly(&mut r, 2, 3) * &common;
        let q = &gen::upoly(&mut r, 1, 3) * &common;
        let g = gcrd(&p, &q).unwrap();
        let l = lclm(&p, &q).unwrap();
        prop_assert!(p.divide_right(&g).unwrap().1.is_zero());
        prop_assert!(q.divide_right(&g).unwrap().1.is_zero());
        prop_assert!(l.divide_right(&p).unwrap().1.is_zero());
        prop_assert!(l.divide_right(&q).unwrap().1.is_zero());
        prop_assert_eq!(
            g.degree().unwrap() + l.degree().unwrap(),
            p.degree().unwrap() + q.degree().unwrap()
        );
    }

    #[test]
    fn linear_products_have_complete_bounded_roots(
        roots in prop::collection::vec(small_quat(), 1..=4),
    ) {
        let p = roots.iter().fold(UPoly::one(), |acc, a| &acc * &UPoly::linear(a));
        let set = right_roots(&p).unwrap();
        prop_assert_eq!(&set.status, &RootStatus::Complete);
        prop_assert!(set.classes.iter().any(|c| c.contains(roots.last().unwrap())));
        let mut total = 0;
        for class in &set.classes {
            let rep = class.representative().or_else(|| roots.iter().find(|a| class.contains(a)).cloned());
            let rep = rep.expect("every class meets a built root or has a representative");
            prop_assert!(p.eval_left(&rep).is_zero());
            total += e_space(&p, &rep).unwrap().dim();
        }
        prop_assert!(total <= p.degree().unwrap());
    }

    #[test]
    fn independence_via_l(
        a in quat(),
        bs in prop::collection::vec(small_quat(), 1..=4),
        coeffs in prop::collection::vec((rational(), rational()), 4),
        slot in 0usize..4,
        dependent in any::<bool>(),
    ) {
        let mut bs = bs;
        if dependent && bs.len() > 1 {
            let t = slot % bs.len();
            bs[t] = (0..bs.len())
                .filter(|&s| s != t)
                .map(|s| &partner(&a, Quat::zero(), coeffs[s].clone(), true) * &bs[s])
                .sum();
        }
        let oracle = indep_oracle(&a, &bs);
        prop_assert_eq!(indep_via_l(&a, &bs).unwrap(), oracle);

        let mut args = vec![a.clone()];
        args.extend_from_slice(&bs);
        let value = build_l(bs.len()).unwrap().eval(&args).unwrap();
        if value.is_defined_zero() {
            prop_assert!(!oracle);
            prop_assert!(indep_oracle(&a, &bs[1..]));
        }
        if bs.len() > 1 && !oracle && indep_oracle(&a, &bs[1..]) {
            prop_assert!(value.is_defined_zero());
        }
    }

    #[test]
    fn f_matches_l_shifted(a in quat(), b in quat(), n in 1usize..=3) {
        let mut args = vec![a.clone()];
        args.extend((0..=n).map(|k| b.pow(k as u32)));
        let l = build_l(n + 1).unwrap().eval(&args).unwrap();
        let f = build_f(n).unwrap().eval(&[a, b]).unwrap();
        prop_assert_eq!(f, l);
    }

    #[test]
    fn evaluation_is_order_independent(seed in any::<u64>(), nvars in 1usize..=3) {
        let mut r = rng(seed);
        let p = gen::mpoly(&mut r, nvars, 4, 5, 10);
        let pt = gen::commuting_point(&mut r, nvars, 10);
        let forward = eval_c(&p, &pt).unwrap();
        let backward: Quat = p
            .terms()
            .map(|(e, c)| {
                let mut v = c.clone();
                for (a, k) in pt.components().iter().zip(&e.0).rev() {
                    v = &v * &a.pow(*k);
                }
                v
            })
            .sum();
        prop_assert_eq!(forward, backward);
    }

    #[test]
    fn reduction_reconstructs(seed in any::<u64>(), nvars in 1usize..=3) {
        let mut r = rng(seed);
        let p = gen::mpoly(&mut r, nvars, 4, 5, 10);
        let pt = gen::commuting_point(&mut r, nvars, 10);
        let (rem, qs) = reduce_mod_point(&p, &pt).unwrap();
        let gens = point_ideal(&pt);
        let rebuilt = qs
            .iter()
            .zip(gens.gens())
            .fold(MPoly::constant(nvars, rem.clone()), |acc, (q, g)| &acc + &(q * g));
        prop_assert_eq!(rebuilt, p.clone());
        prop_assert_eq!(rem, eval_c(&p, &pt).unwrap());
    }

    #[test]
    fn simple_modules_round_trip(seed in any::<u64>(), nvars in 1usize..=3) {
        let pt = gen::commuting_point(&mut rng(seed), nvars, 10);
        let module = ModulePresentation {
            m: 1,
            mats: pt.components().iter().map(|a| vec![vec![a.clone()]]).collect(),
        };
        match verify_simple_1dim(&module).unwrap() {
            SimplicityReport::Simple { point, ideal } => {
                prop_assert_eq!(&point, &pt);
                prop_assert_eq!(ideal, point_ideal(&pt));
            }
            other => prop_assert!(false, "{:?}", other),
        }
    }

    #[test]
    fn parse_round_trip(q in quat(), p in upoly(4), seed in any::<u64>(), nvars in 1usize..=3) {
        prop_assert_eq!(parse_quat(&q.to_string()).unwrap(), q);
        prop_assert_eq!(parse_upoly(&p.to_string()).unwrap(), p);
        let m = gen::mpoly(&mut rng(seed), nvars, 3, 4, 10);
        prop_assert_eq!(parse_mpoly(&m.to_string(), nvars).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn eigen_tuples_of_conjugated_sums(seed in any::<u64>(), n in 1usize..=3, m in 1usize..=4) {
        let mut r = rng(seed);
        let (module, _) = gen::conjugated_diagonal_module(&mut r, n, m, 5);
        let mut v0 = vec![Quat::zero(); m];
        v0[0] = Quat::one();
        let t = find_eigen_tuple(&module, &v0).unwrap();
        prop_assert!(t.vector.iter().any(|x| !x.is_zero()));
        prop_assert!(t.holds_in(&module));
        let comps = t.point.components();
        for a in comps {
            prop_assert!(comps.iter().all(|b| a.commutes_with(b)));
        }
        for g in point_ideal(&t.point).gens() {
            prop_assert!(act(&module, g, &t.vector).unwrap().iter().all(Quat::is_zero));
            prop_assert!(in_point_ideal(g, &t.point).unwrap());
        }
        prop_assert!(CommutingPoint::new(comps.to_vec()).is_ok());
    }
}
