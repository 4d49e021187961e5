mod common;

use common::*;
use linenet_core::game::{inflate, minimal_n, miss_margin, refute, GameParams};
use linenet_core::geometry::{line_meets_body, line_meets_interior};
use linenet_core::rng;
use linenet_core::ruling::RulingFamily;
use linenet_core::{Extended, Scalar};
use proptest::prelude::*;

fn epsilon() -> impl Strategy<Value = Scalar> {
    (1i64..=15, 16i64..=16).prop_map(|(p, q)| Scalar::ratio(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn counting_identity(eps in epsilon(), k in 1usize..=6) {
        let n = minimal_n(&eps, k).unwrap();
        let nn = Scalar::from(n);
        prop_assert!(&nn * &(Scalar::one() - &eps) > Scalar::from(k));
        prop_assert!(&(&nn - &Scalar::one()) * &(Scalar::one() - &eps) <= Scalar::from(k));
        // n - k > eps n, so the unpicked rulings are enough
        prop_assert!(Scalar::from(n - k) > &eps * &nn);
        let p = GameParams::new(eps, k, n).unwrap();
        prop_assert!(n - k >= p.required_stabs());
    }

    #[test]
    fn refutations_are_sound(seed in any::<u64>(), eps in epsilon(), k in 1usize..=4) {
        let n = minimal_n(&eps, k).unwrap();
        let fam = RulingFamily::inverse_square(n);
        let params = GameParams::new(eps, k, n).unwrap();
        let adv = game_adversary(&mut rng::seeded(seed), &fam, k);
        let w = refute(&fam, &params, &adv).unwrap();
        prop_assert!(w.ok());
        prop_assert!(w.stabbed.len() >= n - adv.len());
        for r in &adv {
            prop_assert!(!line_meets_body(r, &w.body));
        }
    }

    #[test]
    fn inflation_turns_contact_into_interior(seed in any::<u64>(), num in 1i64..=1000) {
        let mut r = rng::seeded(seed);
        let body = random_body(&mut r, 6);
        let l = grid_line(&mut r, -4, 4, 2);
        let delta = Scalar::ratio(num, 1000);
        let fat = inflate(&body, &delta).unwrap();
        if line_meets_body(&l, &body) {
            prop_assert!(line_meets_interior(&l, &fat));
        }
    }

    #[test]
    fn margin_positive_iff_some_member_missed(seed in any::<u64>()) {
        let mut r = rng::seeded(seed);
        let bodies: Vec<_> = (0..3).map(|_| random_body(&mut r, 4)).collect();
        let lines: Vec<_> = (0..3).map(|_| grid_line(&mut r, -3, 3, 1)).collect();
        let positive = miss_margin(&bodies, &lines).unwrap() > Extended::Finite(Scalar::zero());
        let some_missed = bodies.iter().any(|k| lines.iter().all(|l| !line_meets_body(l, k)));
        prop_assert_eq!(positive, some_missed);
    }
}
