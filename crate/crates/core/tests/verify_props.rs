use proptest::prelude::*;

use qperiod::verify::{check_matrix_congruence, check_periodicity_theorem, check_qbinom_identity, Outcome};
use qperiod::{Field, RootSystem, RootVector, Weight};

const SYSTEMS: [&str; 4] = ["A1", "A2", "B2", "G2"];

fn instance() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, Vec<i64>, u64)> {
    (0..SYSTEMS.len()).prop_flat_map(|k| {
        let rank = RootSystem::named(SYSTEMS[k]).unwrap().rank();
        (
            Just(k),
            prop::collection::vec(-6i64..=6, rank),
            prop::collection::vec(-2i64..=2, rank),
            prop::collection::vec(0i64..=3, rank),
            3u64..=8,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn binomial_identity(a in -20i64..=20, b in -20i64..=20, c in 0u32..=10) {
        prop_assert_eq!(check_qbinom_identity(a, b, c).outcome, Outcome::Pass);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    /// Congruent Gram matrices have equal rank wherever `sigma_l(q) = 0`.
    #[test]
    fn congruence_implies_periodicity((k, lam, gamma, c, l) in instance()) {
        let rs = RootSystem::named(SYSTEMS[k]).unwrap();
        let (lam, gamma, nu) = (Weight(lam), Weight(gamma), RootVector(c));
        let congruence = check_matrix_congruence(&rs, &lam, &gamma, l, &nu, false).unwrap();
        prop_assert_ne!(congruence.outcome, Outcome::Fail, "{}", congruence.to_json_line());
        if congruence.outcome == Outcome::Pass {
            let field = Field::parse(&format!("Q@zeta{l}")).unwrap();
            let mu = &lam - &rs.root_to_weight(&nu);
            let r = check_periodicity_theorem(&field, l, &rs, &lam, &mu, &gamma, false).unwrap();
            prop_assert_eq!(r.outcome, Outcome::Pass, "{}", r.to_json_line());
        }
    }
}
