mod common;

use common::*;
use linenet_core::geometry::{line_intersects_polygon, Line3, Point3, Vec3};
use linenet_core::rng;
use linenet_core::ruling::{
    build_witness, ell_line, lambda_line, verify_witness, witness_plan, RulingError, RulingFamily,
    WitnessPlan,
};
use linenet_core::{Extended, Scalar};
use proptest::prelude::*;

fn b_lines(inst: &RulingInstance, plan: &WitnessPlan) -> Vec<Line3> {
    plan.b
        .iter()
        .map(|&i| lambda_line(&inst.fam.alphas()[i]))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn witness_stabs_b_and_misses_r(seed in any::<u64>()) {
        let inst = ruling_instance(&mut rng::seeded(seed));
        let plan = witness_plan(&inst.fam, &inst.b, &inst.r).unwrap();
        let c = build_witness(&plan).unwrap();
        let rep = verify_witness(&c, &b_lines(&inst, &plan), &inst.r);
        prop_assert!(rep.ok(), "{:?}", rep.violations);
        prop_assert_eq!(rep.stabbed.len(), plan.b.len());
        prop_assert_eq!(rep.missed.len(), inst.r.len());
    }

    #[test]
    fn witness_is_planar_and_near_the_stabbing_ruling(seed in any::<u64>()) {
        let inst = ruling_instance(&mut rng::seeded(seed));
        let plan = witness_plan(&inst.fam, &inst.b, &inst.r).unwrap();
        let c = build_witness(&plan).unwrap();
        let ell = ell_line(&plan.beta_star);
        for (v, a) in c.vertices().iter().zip(&plan.b_alphas) {
            prop_assert_eq!(&v.z, &(&(&plan.beta_star * &v.x) + &plan.s));
            let bound = (&plan.s * &(Scalar::one() + a.recip().unwrap())).square();
            prop_assert!(ell.point_dist_sq(v) <= bound);
        }
        if let Extended::Finite(d) = &plan.delta_sq {
            let a1 = &plan.b_alphas[0];
            prop_assert!((&plan.s * &(Scalar::one() + a1.recip().unwrap())).square() < *d);
        }
    }

    #[test]
    fn unused_rulings_miss_every_scale(seed in any::<u64>()) {
        let inst = ruling_instance(&mut rng::seeded(seed));
        let plan = witness_plan(&inst.fam, &inst.b, &inst.r).unwrap();
        for i in 1..=10 {
            let scaled = WitnessPlan { s: Scalar::ratio(1, i), ..plan.clone() };
            let c = build_witness(&scaled).unwrap();
            for &j in &plan.r_sigma {
                prop_assert!(!line_intersects_polygon(&inst.r[j], &c));
            }
        }
    }
}

#[test]
fn worked_instance() {
    let fam = RulingFamily::integers(7);
    let x_axis = Line3::new(Point3::zero(), Vec3::from_ints(1, 0, 0)).unwrap();
    let r = vec![lambda_line(&q("1")), lambda_line(&q("2")), x_axis];
    let plan = witness_plan(&fam, &[2, 3, 4, 5, 6], &r).unwrap();
    assert_eq!(plan.r_sigma, vec![0, 1]);
    assert_eq!(plan.r_prime, vec![2]);
    assert_eq!(plan.beta_star, q("1"));
    let c = build_witness(&plan).unwrap();
    assert_eq!(c.vertices().len(), 5);
    assert!(verify_witness(&c, &fam.lines()[2..], &r).ok());
}

#[test]
fn preconditions_surface() {
    let fam = RulingFamily::integers(3);
    assert_eq!(witness_plan(&fam, &[], &[]), Err(RulingError::EmptyB));
    assert_eq!(
        witness_plan(&fam, &[0, 1], &[lambda_line(&q("2"))]),
        Err(RulingError::NonDisjointBR(0))
    );
    assert!(RulingFamily::new(vec![q("2"), q("1")]).is_err());
    assert!(RulingFamily::new(vec![q("0")]).is_err());
}
