use proptest::prelude::*;

use qperiod::pathspace::{enumerate_paths, epsilon_divided, path_count, path_factorial};
use qperiod::verify::check_commutation;
use qperiod::{Path, PathVector, RootSystem, RootVector, Weight};

const SYSTEMS: [&str; 5] = ["A1", "A2", "B2", "G2", "A3"];

fn instance(max_len: usize) -> impl Strategy<Value = (usize, Vec<i64>, Vec<u8>)> {
    (0..SYSTEMS.len()).prop_flat_map(move |k| {
        let rank = RootSystem::named(SYSTEMS[k]).unwrap().rank();
        (Just(k), prop::collection::vec(-6i64..=6, rank), prop::collection::vec(0..rank as u8, 0..=max_len))
    })
}

#[test]
fn enumeration_is_sorted_and_complete() {
    for nu in [vec![0, 0], vec![1, 0], vec![2, 1], vec![3, 3], vec![4, 2], vec![1, 1, 2]] {
        let nu = RootVector(nu);
        let paths = enumerate_paths(&nu);
        assert!(paths.windows(2).all(|w| w[0] < w[1]), "{nu}");
        assert_eq!(paths.len() as u128, path_count(&nu));
        assert!(paths.iter().all(|p| p.height(nu.rank()) == nu));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn factorial_is_reversal_invariant((k, _, path) in instance(9)) {
        let rs = RootSystem::named(SYSTEMS[k]).unwrap();
        let p = Path(path);
        prop_assert_eq!(path_factorial(&rs, &p), path_factorial(&rs, &p.reversed()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn divided_powers_preserve_the_integral_lattice(
        (k, lam, path) in instance(7),
        alpha_seed in 0usize..8,
        n in 1usize..=3,
    ) {
        let rs = RootSystem::named(SYSTEMS[k]).unwrap();
        let alpha = alpha_seed % rs.rank();
        let p = Path(path);
        let divided = PathVector::basis(p.clone()).divide(&path_factorial(&rs, &p));
        let image = epsilon_divided(&rs, &Weight(lam), alpha, n, &divided);
        prop_assert!(image.divided_basis_coordinates(&rs).is_ok());
    }

    #[test]
    fn commutation_relations(
        (k, lam, path) in instance(5),
        a in 0usize..8,
        b in 0usize..8,
        m in 1usize..=3,
        n in 1usize..=3,
    ) {
        let rs = RootSystem::named(SYSTEMS[k]).unwrap();
        let r = check_commutation(&rs, &Weight(lam), a % rs.rank(), b % rs.rank(), m, n, &Path(path));
        prop_assert!(r.is_pass(), "{}", r.to_json_line());
    }
}
