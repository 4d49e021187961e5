mod common;

use common::*;
use linenet_core::geometry::{ConvexBody, Line3, Point3};
use linenet_core::higher::{
    embed_line, embed_point, project_line_to_s, verify_projection_batch, ProjectedLine,
};
use linenet_core::rng;
use linenet_core::ruling::{build_witness, witness_plan};
use linenet_core::Scalar;
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Point3> {
    let c = || (-30i64..=30, 1i64..=6).prop_map(|(p, q)| Scalar::ratio(p, q));
    (c(), c(), c()).prop_map(|(x, y, z)| Point3::new(x, y, z))
}

proptest! {
    #[test]
    fn embed_then_project_is_identity(p in point(), p2 in point(), d in 3usize..=8) {
        prop_assert_eq!(embed_point(&p, d).unwrap().truncate(), p.clone());
        prop_assume!(p != p2);
        let l = Line3::through(&p, &p2).unwrap();
        prop_assert_eq!(project_line_to_s(&embed_line(&l, d).unwrap()), ProjectedLine::Line { line: l });
    }
}

#[test]
fn projection_implication_on_ruling_witnesses() {
    let mut r = rng::seeded(31);
    for i in 0..6 {
        let inst = ruling_instance(&mut r);
        let plan = witness_plan(&inst.fam, &inst.b, &inst.r).unwrap();
        let body: ConvexBody = build_witness(&plan).unwrap().to_body();
        let body = if i % 2 == 0 {
            body
        } else {
            body.with_inflation(q("1/50")).unwrap()
        };
        let run = verify_projection_batch(&body, 4 + i % 3, 40, i as u64).unwrap();
        assert!(run.passed(), "{:?}", run.violations);
        assert_eq!(run.lifted_hits, 40);
    }
}
