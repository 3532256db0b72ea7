mod common;

use common::*;
use minspan_core::{CodeSpec, GeneratorMatrix, Interval};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

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
    fn shortest_basis_matches_greedy_lengths(g in code_strategy()) {
        let b = g.to_shortest_basis().unwrap();
        prop_assert!(b.certified);
        prop_assert!(b.matrix.check_psp().ok());
        prop_assert!(b.matrix.same_code(&g));
        prop_assert_eq!(b.span_lengths(), greedy_span_lengths(&g));
    }

    #[test]
    fn reduction_is_idempotent(g in code_strategy()) {
        let b = g.to_shortest_basis().unwrap();
        let again = b.matrix.to_shortest_basis().unwrap();
        prop_assert_eq!(again.matrix.matrix(), b.matrix.matrix());
        prop_assert_eq!(again.spans, b.spans);
    }

    #[test]
    fn span_multiset_is_basis_invariant(g in code_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = mix_rows(&mut rng, &g);
        prop_assert_eq!(h.to_shortest_basis().unwrap().spans, g.to_shortest_basis().unwrap().spans);
    }

    #[test]
    fn psp_implies_shortest(g in code_strategy()) {
        if g.check_psp().ok() {
            let mut lens: Vec<usize> = g.spans().into_iter().map(|s| s.unwrap().len()).collect();
            lens.sort_unstable();
            prop_assert_eq!(lens, greedy_span_lengths(&g));
        }
    }

    #[test]
    fn subsystem_basis_spans_subcode(g in code_strategy()) {
        let b = g.to_shortest_basis().unwrap();
        let spec = g.spec().clone();
        let words = brute_codewords(&g);
        let n = spec.n_symbols();
        for a in 0..n {
            for e in a..n {
                let sub = b.subsystem_basis(Interval::new(a, e)).unwrap();
                prop_assert_eq!(sub.k(), subcode_dim(&spec, &words, a, e));
                for s in sub.spans().into_iter().flatten() {
                    prop_assert!(a <= s.start && s.end <= e);
                }
            }
        }
    }
}

#[test]
fn rm_golden_rows_and_spans() {
    let b = rm844().to_shortest_basis().unwrap();
    let spans: Vec<String> = b.spans.iter().map(ToString::to_string).collect();
    assert_eq!(spans, ["[0,3]", "[1,6]", "[2,5]", "[4,7]"]);
    assert_eq!(b.span_lengths(), [4, 4, 4, 6]);
}

#[test]
fn dependent_rows_are_reported() {
    let spec = CodeSpec::uniform(gf(3), 4);
    let g = GeneratorMatrix::from_rows(spec, &[[1, 2, 0, 1], [2, 1, 0, 2]]).unwrap();
    assert!(matches!(g.to_shortest_basis(), Err(minspan_core::Error::DependentRows)));
}

#[test]
fn random_sweep_against_greedy() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let n = rng.gen_range(1..=8);
        let wide = rng.gen_bool(0.3);
        let spec = random_spec(&mut rng, gf(p), n, wide);
        let max_k = spec.total_cols().min(if p == 2 { 6 } else { 4 });
        let k = rng.gen_range(1..=max_k);
        let g = random_code(&mut rng, &spec, k);
        assert_eq!(g.to_shortest_basis().unwrap().span_lengths(), greedy_span_lengths(&g));
    }
}
