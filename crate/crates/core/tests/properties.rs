use proptest::prelude::*;

use nilorbit::euler::chi;
use nilorbit::intervals::{
    basic_move, check_certificate, is_i_stable, normalize, roots_of, CertificateFile, Direction,
    Interval, IntervalSet, MoveCertificate, Side,
};

fn subspace() -> impl Strategy<Value = IntervalSet> {
    (2usize..=8).prop_flat_map(|n| {
        prop::collection::vec((1..n as i64, 1..n as i64), 0..6).prop_map(move |pairs| {
            normalize(pairs.into_iter().map(|(x, y)| (x.min(y), x.max(y))), n)
        })
    })
}

fn is_antichain(u: &IntervalSet) -> bool {
    let m = u.minimal();
    m.iter()
        .enumerate()
        .all(|(i, x)| m.iter().enumerate().all(|(j, y)| i == j || !x.precedes(y)))
}

proptest! {
    #[test]
    fn normalize_is_idempotent(u in subspace()) {
        prop_assert!(is_antichain(&u));
        let again = normalize(u.minimal().iter().map(|iv| (iv.a as i64, iv.b as i64)), u.n());
        prop_assert_eq!(&again, &u);
        // the root set is up-closed
        let roots = roots_of(&u);
        for r in &roots {
            if r.a > 1 {
                prop_assert!(roots.contains(&Interval::new(r.a - 1, r.b)));
            }
            if r.b + 1 < u.n() {
                prop_assert!(roots.contains(&Interval::new(r.a, r.b + 1)));
            }
        }
        prop_assert_eq!(u.dimension(), roots.len());
    }

    #[test]
    fn admissible_moves_change_one_root_and_keep_chi(u in subspace()) {
        for &target in u.minimal() {
            for side in [Side::Left, Side::Right] {
                let Ok(step) = basic_move(&u, target, side, Direction::Shrink) else { continue };
                prop_assert!(is_antichain(&step.after));
                prop_assert_eq!(step.after.dimension() + 1, u.dimension());
                let mut after_roots = roots_of(&step.after);
                after_roots.insert(target);
                prop_assert_eq!(after_roots, roots_of(&u));

                let back = basic_move(&step.after, target, side, Direction::Grow).unwrap();
                prop_assert_eq!(&back.after, &u);

                for j in 0..=2 {
                    prop_assert_eq!(chi(&u, j).unwrap(), chi(&step.after, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn shrink_needs_stability(u in subspace()) {
        for &target in u.minimal() {
            let index = target.b + 1;
            if index >= u.n() {
                continue;
            }
            let ok = basic_move(&u, target, Side::Right, Direction::Shrink).is_ok();
            prop_assert_eq!(ok, is_i_stable(&u, index).unwrap());
        }
    }

    #[test]
    fn certificates_round_trip(u in subspace(), picks in prop::collection::vec(0usize..16, 1..6)) {
        let mut cert = MoveCertificate::empty(u);
        for pick in picks {
            let state = cert.final_state.clone();
            let options: Vec<_> = state
                .minimal()
                .iter()
                .flat_map(|&t| [(t, Side::Left), (t, Side::Right)])
                .filter(|&(t, s)| basic_move(&state, t, s, Direction::Shrink).is_ok())
                .collect();
            if options.is_empty() {
                break;
            }
            let (t, s) = options[pick % options.len()];
            cert.apply(t, s, Direction::Shrink).unwrap();
        }
        prop_assert!(check_certificate(&cert).passed);
        prop_assert!(check_certificate(&cert.inverse()).passed);
        let parsed = CertificateFile::from_json(&cert.to_json()).unwrap().into_certificate().unwrap();
        prop_assert_eq!(parsed, cert);
    }
}
