use proptest::prelude::*;

use qperiod::laurent::mod_cyclotomic;
use qperiod::pathspace::{bilinear_oracle, enumerate_paths};
use qperiod::verify::validity_violation;
use qperiod::{gram_raw, GramSession, Path, RootSystem, RootVector, Strategy as Exec, Weight};

const SYSTEMS: [&str; 4] = ["A1", "A2", "B2", "G2"];

fn rank_two_product() -> RootSystem {
    RootSystem::from_cartan("A1xA1", vec![vec![2, 0], vec![0, 2]]).unwrap()
}

fn system(k: usize) -> RootSystem {
    if k == SYSTEMS.len() {
        rank_two_product()
    } else {
        RootSystem::named(SYSTEMS[k]).unwrap()
    }
}

/// Two random orderings of one random multiset of simple roots.
fn paired(max: usize) -> impl Strategy<Value = (usize, Vec<i64>, Vec<u8>, Vec<u8>)> {
    (0..=SYSTEMS.len()).prop_flat_map(move |k| {
        let rank = system(k).rank();
        prop::collection::vec(0..rank as u8, 0..=max).prop_flat_map(move |entries| {
            (
                Just(k),
                prop::collection::vec(-6i64..=6, rank),
                Just(entries.clone()).prop_shuffle(),
                Just(entries).prop_shuffle(),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn form_is_symmetric((k, lam, d, g) in paired(7)) {
        let rs = system(k);
        let lam = Weight(lam);
        let (d, g) = (Path(d), Path(g));
        // fresh sessions so neither value is read back from the other's memo entry
        prop_assert_eq!(gram_raw(&rs, &lam, &d, &g).unwrap(), gram_raw(&rs, &lam, &g, &d).unwrap());
        prop_assert_eq!(bilinear_oracle(&rs, &lam, &d, &g), bilinear_oracle(&rs, &lam, &g, &d));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn normalized_entries_are_integral((k, lam, d, g) in paired(8)) {
        let rs = system(k);
        let session = GramSession::new(&rs, Weight(lam));
        prop_assert!(session.entry(&Path(d), &Path(g)).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn congruence_under_shifts(
        (k, lam, _, _) in paired(0),
        gamma in prop::collection::vec(-2i64..=2, 2),
        c in prop::collection::vec(0i64..=3, 2),
        l in 3u64..=7,
    ) {
        let rs = system(k);
        let rank = rs.rank();
        let nu = RootVector(c[..rank].to_vec());
        prop_assume!(nu.0.iter().all(|&x| (x as u64) < l));
        prop_assume!(validity_violation(&rs, l, Some(&nu)).is_none());
        let lam = Weight(lam);
        let top = &lam + &Weight(gamma[..rank].to_vec()).scaled(l as i64);
        let low = GramSession::new(&rs, lam).matrix(&nu, Exec::Sequential).unwrap();
        let high = GramSession::new(&rs, top).matrix(&nu, Exec::Sequential).unwrap();
        for (ra, rb) in high.entries.iter().zip(&low.entries) {
            for (a, b) in ra.iter().zip(rb) {
                prop_assert!(mod_cyclotomic(&(a - b), l).is_zero());
            }
        }
    }
}

/// Every pair of paths of height at most (3, 3) in rank two, and at most 6
/// in rank one, against the operator composition.
#[test]
fn recursion_matches_operator_composition() {
    let lambdas = [[-6, 4], [0, 0], [1, 2], [5, -3], [-2, -5]];
    for k in 0..=SYSTEMS.len() {
        let rs = system(k);
        let heights: Vec<RootVector> = if rs.rank() == 1 {
            (0..=6).map(|n| RootVector(vec![n])).collect()
        } else {
            (0..=3).flat_map(|a| (0..=3).map(move |b| RootVector(vec![a, b]))).collect()
        };
        for lam in lambdas {
            let lam = Weight(lam[..rs.rank()].to_vec());
            let session = GramSession::new(&rs, lam.clone());
            for nu in &heights {
                let paths = enumerate_paths(nu);
                for d in &paths {
                    for g in &paths {
                        assert_eq!(
                            session.raw(d, g).unwrap(),
                            bilinear_oracle(&rs, &lam, d, g),
                            "{} {lam} {d} {g}",
                            rs.name()
                        );
                    }
                }
            }
        }
    }
}
