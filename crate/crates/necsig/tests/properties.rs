//! Randomized invariant checks across the library.

use necsig::hoare::{subgroup_signature, PipelineOptions};
use necsig::permutation::{orbits, parse_cycles, Permutation};
use necsig::representation::CosetAction;
use necsig::signature::{genus_from_area, rational, NecSignature, SignSymbol};
use proptest::prelude::*;

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).expect("shuffled range"))
}

fn degree_and_perms(count: usize) -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (1usize..8).prop_flat_map(move |n| (Just(n), prop::collection::vec(permutation(n), count)))
}

fn signature() -> impl Strategy<Value = NecSignature> {
    (
        0u32..4,
        any::<bool>(),
        prop::collection::vec(2u32..13, 0..4),
        prop::collection::vec(prop::collection::vec(2u32..13, 0..4), 0..4),
    )
        .prop_map(|(g, minus, periods, cycles)| {
            let sign = if minus {
                SignSymbol::Minus
            } else {
                SignSymbol::Plus
            };
            let genus = if minus { g.max(1) } else { g };
            NecSignature::new(genus, sign, periods, cycles)
        })
        .prop_filter("must be hyperbolic", |s| s.validate().is_ok())
}

proptest! {
    #[test]
    fn composition_is_associative((_, perms) in degree_and_perms(3)) {
        let (p, q, r) = (&perms[0], &perms[1], &perms[2]);
        let left = p.then(q).unwrap().then(r).unwrap();
        let right = p.then(&q.then(r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels((_, perms) in degree_and_perms(1)) {
        let p = &perms[0];
        prop_assert!(p.then(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().then(p).unwrap().is_identity());
    }

    #[test]
    fn power_to_the_order_is_identity((_, perms) in degree_and_perms(1)) {
        let p = &perms[0];
        prop_assert!(p.pow(p.order()).is_identity());
    }

    #[test]
    fn cycle_notation_round_trips((n, perms) in degree_and_perms(1)) {
        let p = &perms[0];
        let back = parse_cycles(&p.to_string(), n).unwrap();
        prop_assert_eq!(p, &back);
    }

    #[test]
    fn orbits_partition_the_points((n, perms) in degree_and_perms(3)) {
        let orbs = orbits(n, &perms).unwrap();
        let mut seen: Vec<usize> = orbs.iter().flatten().copied().collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (1..=n).collect::<Vec<_>>());
    }

    #[test]
    fn signature_display_round_trips(s in signature()) {
        let back: NecSignature = s.to_string().parse().unwrap();
        prop_assert_eq!(s, back);
    }

    #[test]
    fn normalize_is_idempotent(s in signature()) {
        let n = s.normalize();
        prop_assert_eq!(n.clone(), n.normalize());
    }

    #[test]
    fn normalize_ignores_cycle_presentation(
        s in signature(),
        spins in prop::collection::vec((0usize..8, any::<bool>()), 4),
        flip_order in any::<bool>(),
    ) {
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        for (i, cyc) in s.period_cycles().iter().enumerate() {
            let (shift, reverse) = spins[i % spins.len()];
            let mut c = cyc.clone();
            if reverse {
                c.reverse();
            }
            if !c.is_empty() {
                let len = c.len();
                c.rotate_left(shift % len);
            }
            cycles.push(c);
        }
        if flip_order {
            cycles.reverse();
        }
        let shuffled = NecSignature::new(
            s.genus(),
            s.sign(),
            s.proper_periods().to_vec(),
            cycles,
        );
        prop_assert_eq!(s.normalize(), shuffled.normalize());
    }

    #[test]
    fn fuchsian_double_cover_area(s in signature()) {
        let f = s.canonical_fuchsian();
        if s.is_proper_nec() {
            prop_assert_eq!(f.area(), rational(2, 1) * s.reduced_area());
        } else {
            prop_assert_eq!(f.area(), s.reduced_area());
            prop_assert_eq!(f.genus, s.genus());
        }
    }

    #[test]
    fn genus_recovers_from_area(s in signature()) {
        let g = genus_from_area(
            &s.reduced_area(),
            s.sign(),
            s.proper_periods(),
            s.period_cycles(),
        )
        .unwrap();
        prop_assert_eq!(g, s.genus());
    }

    #[test]
    fn trivial_action_is_the_identity_of_the_pipeline(s in signature()) {
        let report =
            subgroup_signature(&CosetAction::trivial(&s), PipelineOptions::default()).unwrap();
        prop_assert_eq!(report.signature, s.normalize());
        prop_assert_eq!(report.area.subgroup_area, s.reduced_area());
        prop_assert!(report.action_verified);
    }
}
