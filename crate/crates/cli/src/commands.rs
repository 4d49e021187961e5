use std::path::Path;

use linenet_core::cube::{
    assemble_three_cubes, check_joint_region_case, default_placements, incidence,
    verify_diag_claim, verify_nine_thirteen, Placement,
};
use linenet_core::game::{harden, minimal_n, refute, GameError, GameParams};
use linenet_core::geometry::{ConvexBody, Line3, Point3, Vec3};
use linenet_core::higher::{verify_projection_batch, verify_projection_property, LineD};
use linenet_core::planar::{find_transversal, interior_margin, joint_region, RayTriple};
use linenet_core::report::{Check, RunReport};
use linenet_core::rng;
use linenet_core::ruling::{build_witness, ell_line, verify_witness, witness_plan, RulingFamily};
use linenet_core::Scalar;
use serde::Deserialize;
use serde_json::json;

use crate::input::{read_json, CliError};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RulingInput {
    alphas: Vec<Scalar>,
    b: Vec<usize>,
    r: Vec<Line3>,
}

pub fn ruling_witness(path: &Path) -> Result<RunReport, CliError> {
    let input: RulingInput = read_json(path)?;
    let fam = RulingFamily::new(input.alphas)?;
    let plan = witness_plan(&fam, &input.b, &input.r)?;
    let witness = build_witness(&plan)?;
    let lines = fam.lines();
    let b_lines: Vec<Line3> = plan.b.iter().map(|&i| lines[i].clone()).collect();
    let report = verify_witness(&witness, &b_lines, &input.r);

    let mut run = RunReport::new(
        "ruling-witness",
        json!({ "input": path.display().to_string() }),
        None,
    );
    let planar = witness
        .vertices()
        .iter()
        .all(|v| v.z == &(&plan.beta_star * &v.x) + &plan.s);
    let ell = ell_line(&plan.beta_star);
    let cylinder = witness.vertices().iter().zip(&plan.b_alphas).all(|(v, a)| {
        let r = &plan.s * &(Scalar::one() + a.recip().expect("positive"));
        ell.point_dist_sq(v) <= r.square()
    });
    run.push(Check::new(
        "stab_all_miss_all",
        report.ok(),
        json!({ "plan": plan, "witness": witness, "report": report }),
    ));
    run.push(Check::new(
        "planarity",
        planar,
        json!({ "beta_star": plan.beta_star, "s": plan.s }),
    ));
    run.push(Check::new(
        "cylinder_bound",
        cylinder,
        json!({ "b_alphas": plan.b_alphas }),
    ));
    Ok(run)
}

pub struct NetRefute<'a> {
    pub epsilon: &'a Scalar,
    pub k: usize,
    pub n: Option<usize>,
    pub adversary: &'a Path,
    pub harden: Option<(&'a Scalar, &'a Scalar)>,
    pub seed: u64,
}

/// Jitter for ruling `i`: six components on the grid `bound/1000`.
fn jitters(n: usize, bound: &Scalar, seed: u64) -> Vec<[Scalar; 6]> {
    let unit = Scalar::one();
    (0..n)
        .map(|i| {
            let mut r = rng::trial_rng(seed, i as u64);
            [(); 6].map(|_| bound * &rng::symmetric(&mut r, &unit, 1000))
        })
        .collect()
}

pub fn net_refute(args: &NetRefute) -> Result<RunReport, CliError> {
    let n = match args.n {
        Some(n) => n,
        None => minimal_n(args.epsilon, args.k)?,
    };
    let params = GameParams::new(args.epsilon.clone(), args.k, n)?;
    let fam = RulingFamily::integers(n);
    let adversary: Vec<Line3> = read_json(args.adversary)?;
    let w = refute(&fam, &params, &adversary)?;

    let parameters = json!({
        "epsilon": args.epsilon,
        "k": args.k,
        "n": n,
        "adversary": adversary,
        "harden": args.harden.map(|(d, j)| json!({ "delta_prime": d, "jitter": j })),
    });
    let seed = args.harden.map(|_| args.seed);
    let mut run = RunReport::new("net-refute", parameters, seed);
    run.push(Check::new(
        "refutation",
        w.ok(),
        json!({ "stabbed": w.stabbed.len(), "required": w.required, "witness": w }),
    ));
    if let Some((delta, bound)) = args.harden {
        let j = jitters(n, bound, args.seed);
        match harden(&fam, std::slice::from_ref(&w), delta, &j, bound) {
            Ok(h) => run.push(Check::new(
                "hardening",
                true,
                json!({ "jitters": j, "config": h }),
            )),
            Err(GameError::HardeningFailed { failed, report }) => run.push(Check::new(
                "hardening",
                false,
                json!({ "failed": failed, "report": report, "jitters": j }),
            )),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(run)
}

fn incidence_check() -> Check {
    let table = incidence();
    let ok = table[0] == [false; 3]
        && table[1..]
            .iter()
            .all(|row| row.iter().filter(|&&b| b).count() == 2);
    Check::new("incidence_table", ok, table)
}

fn joint_region_checks(run: &mut RunReport) -> Result<(), CliError> {
    for which in 1..=4 {
        let case = check_joint_region_case(which)?;
        run.push(Check::new(
            format!("joint_region_case_{which}"),
            case.passed(),
            case,
        ));
    }
    Ok(())
}

pub fn cube_verify(eps: &Scalar, trials: u64, seed: u64) -> Result<RunReport, CliError> {
    let mut run = RunReport::new(
        "cube-verify",
        json!({ "eps": eps, "trials": trials }),
        Some(seed),
    );
    run.push(incidence_check());
    joint_region_checks(&mut run)?;
    let claim = verify_diag_claim(eps, trials, seed)?;
    run.push(Check::new("diagonal_claim", claim.passed(), claim));
    Ok(run)
}

pub fn cube_assemble(
    separation: &Scalar,
    placements: Option<&Path>,
    eps: &Scalar,
    trials: u64,
    seed: u64,
) -> Result<RunReport, CliError> {
    let placements: Vec<Placement> = match placements {
        Some(p) => read_json(p)?,
        None => default_placements(separation),
    };
    let cfg = assemble_three_cubes(&placements, eps, seed)?;
    let parameters = json!({
        "separation": separation,
        "placements": placements,
        "eps": eps,
        "trials": trials,
    });
    let mut run = RunReport::new("cube-assemble", parameters, Some(seed));
    let certs_ok = cfg.certs.iter().all(|c| c.cert.validate());
    run.push(Check::new(
        "perturbation_certificates",
        certs_ok,
        cfg.certs.len(),
    ));
    if trials > 0 {
        let nine = verify_nine_thirteen(&cfg, trials, seed);
        run.push(Check::new("nine_thirteen", nine.passed(), nine));
    }
    run.push(Check::new("configuration", true, cfg));
    Ok(run)
}

pub fn rays_joint_region(
    input: Option<&Path>,
    diagonal: Option<usize>,
) -> Result<RunReport, CliError> {
    if let Some(which) = diagonal {
        let mut run = RunReport::new("rays-joint-region", json!({ "diagonal": which }), None);
        let case = check_joint_region_case(which)?;
        run.push(Check::new(
            format!("joint_region_case_{which}"),
            case.passed(),
            case,
        ));
        return Ok(run);
    }
    let path = input.ok_or_else(|| CliError::Invalid("give --input or --diagonal".into()))?;
    let triple: RayTriple = read_json(path)?;
    let mut run = RunReport::new("rays-joint-region", json!({ "rays": triple }), None);
    if let Some(t) = find_transversal(&triple) {
        run.push(Check::new("separated", false, json!({ "transversal": t })));
        return Ok(run);
    }
    run.push(Check::new(
        "separated",
        true,
        json!({ "transversal": null }),
    ));
    let region = joint_region(&triple)?;
    let cert = match region.interior_point() {
        Some(p) => {
            let margin = interior_margin(&region, &p);
            json!({ "interior_point": p, "margin_sq": margin, "vertices": region.vertices(), "region": region })
        }
        None => json!({ "region": region }),
    };
    let nonempty = region.interior_point().is_some();
    run.push(Check::new("joint_region_nonempty", nonempty, cert));
    Ok(run)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProjectionInput {
    line: Option<LineD>,
    body: ConvexBody,
}

/// The witness triangle for rulings 1, 2, 3 against the x-axis.
fn default_body() -> ConvexBody {
    let x_axis = Line3::new(Point3::zero(), Vec3::from_ints(1, 0, 0)).expect("axis");
    let plan =
        witness_plan(&RulingFamily::integers(3), &[0, 1, 2], &[x_axis]).expect("fixed instance");
    build_witness(&plan).expect("fixed instance").to_body()
}

pub fn project_d(
    d: usize,
    input: Option<&Path>,
    trials: Option<u64>,
    seed: u64,
) -> Result<RunReport, CliError> {
    let (line, body) = match input {
        Some(p) => {
            let i: ProjectionInput = read_json(p)?;
            (i.line, i.body)
        }
        None => (None, default_body()),
    };
    if let Some(l) = &line {
        if l.dim() != d {
            return Err(CliError::Invalid(format!(
                "line has dimension {}, expected --d {d}",
                l.dim()
            )));
        }
    }
    let trials = trials.unwrap_or(if line.is_some() { 0 } else { 100 });
    let parameters = json!({ "d": d, "line": line, "body": body, "trials": trials });
    let mut run = RunReport::new("project-d", parameters, (trials > 0).then_some(seed));
    if let Some(l) = &line {
        let c = verify_projection_property(l, &body);
        run.push(Check::new("projection_implication", c.holds(), c));
    }
    if trials > 0 {
        let batch = verify_projection_batch(&body, d, trials, seed)?;
        run.push(Check::new("projection_batch", batch.passed(), batch));
    }
    if run.checks.is_empty() {
        return Err(CliError::Invalid(
            "nothing to check: give a line or --trials > 0".into(),
        ));
    }
    Ok(run)
}

pub fn selftest() -> Result<RunReport, CliError> {
    let mut run = RunReport::new("selftest", json!({}), None);
    run.push(incidence_check());
    joint_region_checks(&mut run)?;

    let table: Vec<_> = [((1, 2, 3), 7), ((3, 4, 1), 5), ((1, 2, 1), 3)]
        .into_iter()
        .map(|((p, q, k), want)| {
            let got = minimal_n(&Scalar::ratio(p, q), k)?;
            Ok(json!({ "epsilon": format!("{p}/{q}"), "k": k, "n": got, "expected": want }))
        })
        .collect::<Result<_, GameError>>()?;
    let ok = table.iter().all(|r| r["n"] == r["expected"]);
    run.push(Check::new("minimal_n_table", ok, table));

    let x_axis = Line3::new(Point3::zero(), Vec3::from_ints(1, 0, 0)).expect("axis");
    let plan = witness_plan(
        &RulingFamily::integers(2),
        &[0, 1],
        std::slice::from_ref(&x_axis),
    )?;
    let seg = build_witness(&plan)?;
    let json = serde_json::to_string(seg.vertices()).expect("serializable");
    let ok = json == r#"[["1","4/3","4/3"],["2","7/6","7/3"]]"#;
    run.push(Check::new("worked_segment", ok, seg.vertices()));

    let params = GameParams::new(Scalar::ratio(1, 2), 3, 7)?;
    let adv = [1, 2].map(|a| linenet_core::ruling::lambda_line(&Scalar::from_int(a)));
    let adv = vec![adv[0].clone(), adv[1].clone(), x_axis];
    let w = refute(&RulingFamily::integers(7), &params, &adv)?;
    run.push(Check::new(
        "worked_game",
        w.ok() && w.stabbed.len() == 5,
        json!({ "stabbed": w.stabbed, "required": w.required }),
    ));
    Ok(run)
}
