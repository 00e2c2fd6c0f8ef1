use quatnull_core::mpoly::{
    check_presentation, find_certificate, find_eigen_tuple, reduce_mod_point, CommutingPoint,
    LeftIdealGens, MPoly, ModulePresentation,
};
use quatnull_core::parse::{parse_mpoly, parse_quat, parse_upoly};
use quatnull_core::ratexpr::{build_l, closure_witness, indep_oracle, indep_via_l, EvalOutcome};
use quatnull_core::ratexpr::{left_degree, left_degree_via_f, right_degree};
use quatnull_core::scalar::centralizer_of_set;
use quatnull_core::selfcheck;
use quatnull_core::upoly::{
    e_space, left_roots, min_left_poly, min_right_poly, right_roots, wedderburn_lclm, RootClass,
    RootStatus,
};
use quatnull_core::{CentralizerDesc, Error, Quat, Result};
use serde_json::{json, Value};

use crate::report::{Report, Status, EXIT_CHECK_FAILED, EXIT_OK};
use crate::{Command, Side};

pub struct Outcome {
    pub report: Report,
    pub code: i32,
}

pub fn dispatch(cmd: &Command) -> Outcome {
    let (operation, provenance) = describe(cmd);
    match run(cmd, operation, provenance) {
        Ok((report, code)) => Outcome { report, code },
        Err(e) => {
            let (report, code) = Report::from_error(operation, provenance, &e);
            Outcome { report, code }
        }
    }
}

fn describe(cmd: &Command) -> (&'static str, &'static str) {
    match cmd {
        Command::Eval { .. } => ("eval", "left and right evaluation in D[x]"),
        Command::Roots { .. } => ("roots", "root classes from the companion polynomial"),
        Command::Minpoly { .. } => ("minpoly", "minimal polynomial over a centralizer"),
        Command::Wedderburn { .. } => (
            "wedderburn",
            "Wedderburn polynomial as an lclm of conjugates",
        ),
        Command::Espace { .. } => ("espace", "solution space E(p, a) over C(a)"),
        Command::Indep { .. } => ("indep", "independence over C(a) via L_n"),
        Command::Degree { .. } => ("degree", "left and right degree over a centralizer"),
        Command::Witness { .. } => (
            "witness",
            "b lies in the centralizer of the minimal polynomial coefficients of a",
        ),
        Command::Reduce { .. } => ("reduce", "reduction modulo a point ideal"),
        Command::Eigen { .. } => ("eigen", "common eigenvector of commuting operators"),
        Command::Rabinowitsch { .. } => (
            "rabinowitsch",
            "Rabinowitsch certificate (ap)^N in I + I(ap) + ... + I(ap)^N",
        ),
        Command::Selfcheck { .. } => ("selfcheck", "randomized property suites"),
    }
}

fn over_name(c: &CentralizerDesc) -> String {
    match c {
        CentralizerDesc::Center => "Q".into(),
        CentralizerDesc::QuadraticField(u) => format!("Q({u})"),
        CentralizerDesc::FullRing => "H".into(),
    }
}

fn strs<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(T::to_string).collect()
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Left => "left",
        Side::Right => "right",
    }
}

/// Comma-separated quaternions.
fn parse_list(src: &str) -> Result<Vec<Quat>> {
    src.split(',').map(|s| parse_quat(s.trim())).collect()
}

/// Rows separated by `;`, entries by `,`.
fn parse_matrix(src: &str) -> Result<Vec<Vec<Quat>>> {
    src.split(';').map(parse_list).collect()
}

/// Largest `n` in any `xn` occurrence, or 1 when only plain `x` appears.
fn infer_nvars<'a>(texts: impl IntoIterator<Item = &'a str>) -> usize {
    let mut n = 1;
    for t in texts {
        let chars: Vec<char> = t.chars().collect();
        for (i, &c) in chars.iter().enumerate() {
            if c == 'x' {
                let digits: String = chars[i + 1..]
                    .iter()
                    .take_while(|d| d.is_ascii_digit())
                    .collect();
                if let Ok(k) = digits.parse::<usize>() {
                    n = n.max(k);
                }
            }
        }
    }
    n
}

fn roots_payload(classes: &[RootClass]) -> Vec<Value> {
    classes
        .iter()
        .map(|c| match c {
            RootClass::Isolated { root } => json!({ "kind": "isolated", "root": root.to_string() }),
            RootClass::Sphere { trace, norm } => json!({
                "kind": "sphere",
                "trace": trace.to_string(),
                "norm": norm.to_string(),
                "equation": format!("{} = 0", c.central_poly()),
                "representative": c.representative().map(|q| q.to_string()),
            }),
        })
        .collect()
}

fn outcome_str(o: &EvalOutcome) -> String {
    match o {
        EvalOutcome::Defined(v) => v.to_string(),
        EvalOutcome::Undefined => "undefined".into(),
    }
}

fn run(cmd: &Command, op: &'static str, prov: &'static str) -> Result<(Report, i32)> {
    let ok = |payload: Value| Ok((Report::ok(op, prov, payload), EXIT_OK));
    match cmd {
        Command::Eval { poly, at, side } => {
            let p = parse_upoly(poly)?;
            let a = parse_quat(at)?;
            let value = match side {
                Side::Left => p.eval_left(&a),
                Side::Right => p.eval_right(&a),
            };
            ok(json!({
                "poly": p.to_string(),
                "at": a.to_string(),
                "side": side_name(*side),
                "value": value.to_string(),
                "root": value.is_zero(),
            }))
        }
        Command::Roots { poly, side } => {
            let p = parse_upoly(poly)?;
            let set = match side {
                Side::Right => right_roots(&p)?,
                Side::Left => left_roots(&p)?,
            };
            let payload = json!({
                "poly": p.to_string(),
                "side": side_name(*side),
                "companion": p.companion().to_string(),
                "classes": roots_payload(&set.classes),
            });
            let status = match set.status {
                RootStatus::Complete => Status::Ok,
                RootStatus::PossiblyIncomplete => Status::PossiblyIncomplete,
            };
            Ok((Report::ok(op, prov, payload).with_status(status), EXIT_OK))
        }
        Command::Minpoly {
            element,
            over,
            side,
        } => {
            let b = parse_quat(element)?;
            let set = over
                .iter()
                .map(|s| parse_quat(s))
                .collect::<Result<Vec<_>>>()?;
            let c = centralizer_of_set(&set);
            let p = match side {
                Side::Left => min_left_poly(&b, &c)?,
                Side::Right => min_right_poly(&b, &c)?,
            };
            ok(json!({
                "element": b.to_string(),
                "over": over_name(&c),
                "side": side_name(*side),
                "poly": p.to_string(),
                "degree": p.degree(),
            }))
        }
        Command::Wedderburn { element, gens } => {
            let b = parse_quat(element)?;
            let gs = gens
                .iter()
                .map(|s| parse_quat(s))
                .collect::<Result<Vec<_>>>()?;
            let p = wedderburn_lclm(&b, &gs)?;
            let e = e_space(&p, &b)?;
            ok(json!({
                "element": b.to_string(),
                "gens": strs(&gs),
                "poly": p.to_string(),
                "degree": p.degree(),
                "e_space_dim": e.dim(),
            }))
        }
        Command::Espace { poly, at } => {
            let p = parse_upoly(poly)?;
            let a = parse_quat(at)?;
            let e = e_space(&p, &a)?;
            ok(json!({
                "poly": p.to_string(),
                "at": a.to_string(),
                "over": over_name(&e.over),
                "dim": e.dim(),
                "basis": strs(&e.basis),
            }))
        }
        Command::Indep { a, b } => {
            let a = parse_quat(a)?;
            let bs = b
                .iter()
                .map(|s| parse_quat(s))
                .collect::<Result<Vec<_>>>()?;
            let independent = indep_via_l(&a, &bs)?;
            let mut args = vec![a.clone()];
            args.extend_from_slice(&bs);
            let value = build_l(bs.len())?.eval(&args)?;
            if independent != indep_oracle(&a, &bs) {
                return Err(Error::Internal("L_n and the rank oracle disagree".into()));
            }
            ok(json!({
                "a": a.to_string(),
                "b": strs(&bs),
                "over": over_name(&centralizer_of_set(std::slice::from_ref(&a))),
                "L": outcome_str(&value),
                "independent": independent,
            }))
        }
        Command::Degree { a, b, side } => {
            let a = parse_quat(a)?;
            let b = parse_quat(b)?;
            let (degree, extra) = match side {
                Side::Left => {
                    let d = left_degree(&a, &b)?;
                    let via_f = left_degree_via_f(&a, &b)?;
                    if via_f != d {
                        return Err(Error::Internal(format!(
                            "F_n gives degree {via_f}, the minimal polynomial {d}"
                        )));
                    }
                    (d, json!({ "via_f": via_f }))
                }
                Side::Right => (right_degree(&a, &b)?, json!({})),
            };
            let mut payload = json!({
                "a": a.to_string(),
                "b": b.to_string(),
                "side": side_name(*side),
                "degree": degree,
            });
            if let (Value::Object(p), Value::Object(e)) = (&mut payload, extra) {
                p.extend(e);
            }
            ok(payload)
        }
        Command::Witness { a, b } => {
            let a = parse_quat(a)?;
            let b = parse_quat(b)?;
            let w = closure_witness(&a, &b)?;
            ok(json!({
                "a": a.to_string(),
                "b": b.to_string(),
                "witness": strs(&w),
                "degree": w.len(),
            }))
        }
        Command::Reduce { poly, point } => {
            let pt = CommutingPoint::new(parse_list(point)?)?;
            let p = parse_mpoly(poly, pt.len())?;
            let (r, qs) = reduce_mod_point(&p, &pt)?;
            ok(json!({
                "poly": p.to_string(),
                "point": strs(pt.components()),
                "remainder": r.to_string(),
                "quotients": strs(&qs),
                "in_ideal": r.is_zero(),
            }))
        }
        Command::Eigen { matrix, start } => {
            let mats = matrix
                .iter()
                .map(|m| parse_matrix(m))
                .collect::<Result<Vec<_>>>()?;
            let m = mats.first().map_or(0, Vec::len);
            let module = ModulePresentation { m, mats };
            let violations = check_presentation(&module);
            if !violations.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "bad presentation: {violations:?}"
                )));
            }
            let v0 = match start {
                Some(s) => parse_list(s)?,
                None => {
                    let mut e = vec![Quat::zero(); m];
                    e[0] = Quat::one();
                    e
                }
            };
            let t = find_eigen_tuple(&module, &v0)?;
            ok(json!({
                "vector": strs(&t.vector),
                "point": strs(t.point.components()),
            }))
        }
        Command::Rabinowitsch {
            ideal,
            p,
            a,
            max_n,
            degbound,
            nvars,
        } => {
            let n = nvars.unwrap_or_else(|| {
                infer_nvars(ideal.iter().map(String::as_str).chain([p.as_str()]))
            });
            let gens = ideal
                .iter()
                .map(|g| parse_mpoly(g, n))
                .collect::<Result<Vec<MPoly>>>()?;
            let ideal = LeftIdealGens::new(gens)?;
            let p = parse_mpoly(p, n)?;
            let a = parse_quat(a)?;
            let search = json!({ "maxN": max_n, "degbound": degbound });
            match find_certificate(&ideal, &p, &a, *max_n, *degbound)? {
                Some(cert) => {
                    let verified = cert.verify(&ideal, &p, &a);
                    let cofactors: Vec<Vec<String>> =
                        cert.cofactors.iter().map(|row| strs(row)).collect();
                    ok(json!({
                        "N": cert.n,
                        "f": p.left_scale(&a).to_string(),
                        "ideal": strs(ideal.gens()),
                        "cofactors": cofactors,
                        "verified": verified,
                        "search": search,
                    }))
                }
                None => Ok((
                    Report::ok(op, prov, json!({ "search": search })).with_status(Status::NotFound),
                    EXIT_OK,
                )),
            }
        }
        Command::Selfcheck { seed, cases } => {
            let report = selfcheck::run_all(*seed, *cases);
            let passed = report.all_passed();
            let payload = json!({
                "seed": report.seed,
                "cases": cases,
                "all_passed": passed,
                "suites": report.suites,
            });
            let (status, code) = if passed {
                (Status::Ok, EXIT_OK)
            } else {
                (Status::Error, EXIT_CHECK_FAILED)
            };
            Ok((Report::ok(op, prov, payload).with_status(status), code))
        }
    }
}
