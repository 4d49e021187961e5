use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use linenet_core::cube::{
    assemble_three_cubes, check_joint_region_case, default_placements, derived_eps, diag_trial,
    main_diagonals, verify_nine_thirteen,
};
use linenet_core::game::{harden, minimal_n, refute, GameParams};
use linenet_core::geometry::{line_body_distance_sq, Line3, Point3, Vec3};
use linenet_core::planar::{find_transversal, joint_region, RayTriple};
use linenet_core::ruling::{lambda_line, RulingFamily};
use linenet_core::Scalar;

fn worked_game() -> (RulingFamily, GameParams, Vec<Line3>) {
    let fam = RulingFamily::integers(7);
    let params = GameParams::new(Scalar::ratio(1, 2), 3, 7).unwrap();
    let x_axis = Line3::new(Point3::zero(), Vec3::from_ints(1, 0, 0)).unwrap();
    let adv = vec![
        lambda_line(&Scalar::from_int(1)),
        lambda_line(&Scalar::from_int(2)),
        x_axis,
    ];
    (fam, params, adv)
}

fn game(c: &mut Criterion) {
    let (fam, params, adv) = worked_game();
    c.bench_function("refute_worked", |b| {
        b.iter(|| refute(black_box(&fam), &params, &adv).unwrap())
    });

    let w = refute(&fam, &params, &adv).unwrap();
    c.bench_function("line_body_distance_sq", |b| {
        b.iter(|| line_body_distance_sq(black_box(&adv[2]), &w.body))
    });

    let jitters: Vec<[Scalar; 6]> = (0..7i64)
        .map(|i| [(); 6].map(|_| Scalar::ratio(i - 3, 10_000_000)))
        .collect();
    let (delta, bound) = (Scalar::ratio(1, 1000), Scalar::ratio(1, 1_000_000));
    c.bench_function("harden_worked", |b| {
        b.iter(|| {
            harden(
                &fam,
                std::slice::from_ref(&w),
                &delta,
                black_box(&jitters),
                &bound,
            )
            .unwrap()
        })
    });

    let eps = Scalar::ratio(3, 4);
    let n = minimal_n(&eps, 5).unwrap();
    let big = RulingFamily::inverse_square(n);
    let p = GameParams::new(eps, 5, n).unwrap();
    let adv5: Vec<Line3> = big.lines().into_iter().step_by(4).take(5).collect();
    c.bench_function("refute_inverse_square_k5", |b| {
        b.iter(|| refute(&big, &p, black_box(&adv5)).unwrap())
    });
}

fn rays(c: &mut Criterion) {
    // the projected R triple of the first cube diagonal is separated
    let case = check_joint_region_case(1).unwrap();
    let t: RayTriple = case.cases[0].rays.clone().unwrap();
    assert!(find_transversal(&t).is_none());
    c.bench_function("find_transversal", |b| {
        b.iter(|| find_transversal(black_box(&t)))
    });
    c.bench_function("joint_region", |b| {
        b.iter(|| joint_region(black_box(&t)).unwrap())
    });
}

fn cube(c: &mut Criterion) {
    let reds = main_diagonals().to_vec();
    let x = [
        Scalar::from_int(5),
        Scalar::from_int(-7),
        Scalar::ratio(9, 2),
    ];
    c.bench_function("diag_trial", |b| {
        b.iter(|| diag_trial(0, black_box(x.clone()), &reds))
    });

    let cfg = assemble_three_cubes(
        &default_placements(&Scalar::from_int(300)),
        &derived_eps(),
        0,
    )
    .unwrap();
    let mut g = c.benchmark_group("nine_thirteen");
    g.sample_size(10);
    g.bench_function("50_trials", |b| {
        b.iter(|| verify_nine_thirteen(&cfg, 50, black_box(1)))
    });
    g.finish();
}

criterion_group!(benches, game, rays, cube);
criterion_main!(benches);
