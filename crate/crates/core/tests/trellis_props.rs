mod common;

use common::*;
use minspan_core::profiles::oracle_profiles;
use minspan_core::trellis::{build_controller, controller_from_basis, observer_for_code, TrellisLimits};
use minspan_core::GeneratorMatrix;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_code(seed: u64) -> GeneratorMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = [2u64, 3][rng.gen_range(0..2)];
    let n = rng.gen_range(1..=if p == 2 { 8 } else { 5 });
    let wide = rng.gen_bool(0.3);
    let spec = random_spec(&mut rng, gf(p), n, wide);
    let max_k = spec.total_cols().min(if p == 2 { 5 } else { 3 });
    let k = rng.gen_range(0..=max_k);
    random_code(&mut rng, &spec, k)
}

fn pow(p: u32, e: usize) -> usize {
    (p as usize).pow(e as u32)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn controller_paths_are_the_code(seed in any::<u64>()) {
        let g = small_code(seed);
        let lim = TrellisLimits::default();
        let t = build_controller(&g.to_shortest_basis().unwrap(), &lim).unwrap();
        prop_assert_eq!(t.enumerate_paths(&lim).unwrap(), brute_codewords(&g));
        prop_assert!(t.is_linear());
        let prof = oracle_profiles(&g);
        let p = g.field().modulus();
        let states: Vec<usize> = prof.state_dims.iter().map(|&d| pow(p, d)).collect();
        let trans: Vec<usize> = prof.transition_dims.iter().map(|&d| pow(p, d)).collect();
        prop_assert_eq!(t.state_counts(), states);
        prop_assert_eq!(t.transition_counts(), trans);
    }

    #[test]
    fn observer_accepts_exactly_the_code(seed in any::<u64>()) {
        let g = small_code(seed);
        let lim = TrellisLimits::default();
        let obs = observer_for_code(&g, &lim).unwrap();
        let ctl = build_controller(&g.to_shortest_basis().unwrap(), &lim).unwrap();
        prop_assert_eq!(obs.state_counts(), ctl.state_counts());
        prop_assert_eq!(obs.transition_counts(), ctl.transition_counts());
        let code = brute_codewords(&g);
        for w in all_words(g.field(), g.spec().total_cols()) {
            prop_assert_eq!(obs.accepts(&w).unwrap(), code.contains(&w));
        }
    }

    #[test]
    fn non_shortest_basis_never_beats_shortest(seed in any::<u64>()) {
        let g = small_code(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let h = mix_rows(&mut rng, &g);
        let lim = TrellisLimits::default();
        let best = build_controller(&g.to_shortest_basis().unwrap(), &lim).unwrap().state_counts();
        let t = controller_from_basis(&h, &lim).unwrap();
        prop_assert_eq!(t.enumerate_paths(&lim).unwrap(), brute_codewords(&g));
        let counts = t.state_counts();
        prop_assert!(counts.iter().zip(&best).all(|(a, b)| a >= b));
        if !h.check_psp().ok() {
            prop_assert!(counts.iter().zip(&best).any(|(a, b)| a > b));
        }
    }
}

#[test]
fn rm_trellis_counts() {
    let lim = TrellisLimits::default();
    let t = build_controller(&rm844().to_shortest_basis().unwrap(), &lim).unwrap();
    assert_eq!(t.state_counts(), [1, 2, 4, 8, 4, 8, 4, 2, 1]);
    assert_eq!(t.transition_counts(), [2, 4, 8, 8, 8, 8, 4, 2]);
    assert_eq!(t.path_count(), 16);
    let obs = observer_for_code(&rm844(), &lim).unwrap();
    assert_eq!(obs.state_counts(), t.state_counts());
}

#[test]
fn state_cap_is_enforced() {
    let lim = TrellisLimits { max_states: 4, ..TrellisLimits::default() };
    assert!(build_controller(&rm844().to_shortest_basis().unwrap(), &lim).is_err());
}
