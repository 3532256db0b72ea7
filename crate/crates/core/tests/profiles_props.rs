mod common;

use common::*;
use minspan_core::profiles::{enumerated_profiles, oracle_profiles, profiles_from_basis, DimensionProfiles};
use minspan_core::GeneratorMatrix;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// State and transition dimensions from subcode dimensions counted by
/// brute-force enumeration.
fn brute_profiles(g: &GeneratorMatrix) -> DimensionProfiles {
    let spec = g.spec();
    let words = brute_codewords(g);
    let n = spec.n_symbols();
    let k = g.k();
    let past = |t: usize| if t == 0 { 0 } else { subcode_dim(spec, &words, 0, t - 1) };
    let future = |t: usize| if t >= n { 0 } else { subcode_dim(spec, &words, t, n - 1) };
    let state = (0..=n).map(|t| k - past(t) - future(t)).collect();
    let trans = (0..n).map(|t| k - past(t) - future(t + 1)).collect();
    DimensionProfiles::from_state_and_transition(state, trans)
}

fn code_strategy() -> impl Strategy<Value = GeneratorMatrix> {
    (any::<u64>(), prop::sample::select(vec![2u64, 3, 5]), 1usize..=7, any::<bool>()).prop_map(|(seed, p, n, wide)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = random_spec(&mut rng, gf(p), n, wide);
        let max_k = spec.total_cols().min(if p == 2 { 5 } else { 3 });
        let k = rng.gen_range(0..=max_k);
        random_code(&mut rng, &spec, k)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn all_routes_agree(g in code_strategy()) {
        let from_basis = profiles_from_basis(&g.to_shortest_basis().unwrap()).unwrap();
        prop_assert!(from_basis.sum_rules_hold());
        prop_assert_eq!(&from_basis, &oracle_profiles(&g));
        prop_assert_eq!(&from_basis, &enumerated_profiles(&g, 1 << 16).unwrap());
        prop_assert_eq!(&from_basis, &brute_profiles(&g));
    }

    #[test]
    fn profiles_are_basis_invariant(g in code_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = mix_rows(&mut rng, &g);
        prop_assert_eq!(oracle_profiles(&h), oracle_profiles(&g));
    }
}

#[test]
fn rm_golden_profiles() {
    let prof = profiles_from_basis(&rm844().to_shortest_basis().unwrap()).unwrap();
    assert_eq!(prof.state_dims, [0, 1, 2, 3, 2, 3, 2, 1, 0]);
    assert_eq!(prof.transition_dims, [1, 2, 3, 3, 3, 3, 2, 1]);
    assert_eq!(prof.in_dims, [1, 1, 1, 0, 1, 0, 0, 0]);
    assert_eq!(prof.out_dims, [0, 0, 0, 1, 0, 1, 1, 1]);
    assert_eq!(prof.max_state_dim(), 3);
}

#[test]
fn enumeration_cap_is_enforced() {
    assert!(enumerated_profiles(&rm844(), 8).is_err());
}
