//! Property tests over randomized relabelings, seeds and catalog subsets.

use proptest::prelude::*;

use skewbrace::catalog::Catalog;
use skewbrace::enumerate::enumerate_braces;
use skewbrace::group::{cyclic, dihedral, direct_product};
use skewbrace::ideal::GenKind;
use skewbrace::sample;
use skewbrace::set::ElemSet;
use skewbrace::SkewBrace;

/// A permutation of `{0,…,n-1}` fixing 0, from ranking seeds.
fn permutation_fixing_zero(n: usize, seeds: &[u64]) -> Vec<usize> {
    let mut rest: Vec<usize> = (1..n).collect();
    let mut sigma = vec![0usize];
    let mut i = 0;
    while !rest.is_empty() {
        let pick = (seeds[i % seeds.len()] as usize).wrapping_add(i) % rest.len();
        sigma.push(rest.remove(pick));
        i += 1;
    }
    sigma
}

proptest! {
    #[test]
    fn canonical_key_is_relabeling_invariant(seeds in proptest::collection::vec(any::<u64>(), 8)) {
        for brace in [sample::e4(), sample::at6(), SkewBrace::trivial(dihedral(4))] {
            let sigma = permutation_fixing_zero(brace.order(), &seeds);
            let relabeled = brace.relabel(&sigma);
            prop_assert_eq!(brace.canonical_key(), relabeled.canonical_key());
            prop_assert!(brace.is_isomorphic(&relabeled));
        }
    }

    #[test]
    fn generated_subgroup_is_idempotent_and_monotone(seed_a in proptest::collection::vec(0usize..8, 0..4),
                                                     extra in 0usize..8) {
        for g in [cyclic(8), dihedral(4), direct_product(&cyclic(2), &cyclic(4))] {
            let seed: ElemSet = seed_a.iter().copied().filter(|&x| x < g.order()).collect();
            let closed = g.generated_subgroup(&seed);
            prop_assert_eq!(g.generated_subgroup(&closed).clone(), closed.clone());
            let bigger = g.generated_subgroup(&closed.union(&ElemSet::singleton(extra % g.order())));
            prop_assert!(closed.is_subset_of(&bigger));
        }
    }

    #[test]
    fn brace_closure_operations_are_idempotent(seed in proptest::collection::vec(0usize..6, 0..3)) {
        let at6 = sample::at6();
        let seed: ElemSet = seed.into_iter().collect();
        for kind in [GenKind::SubBrace, GenKind::LeftIdeal, GenKind::StrongLeftIdeal, GenKind::Ideal] {
            let out = at6.generated(&seed, kind);
            prop_assert_eq!(at6.generated(&out, kind).clone(), out.clone());
            let flags = at6.classify_subset(&out).unwrap();
            let ok = match kind {
                GenKind::SubBrace => flags.subbrace,
                GenKind::LeftIdeal => flags.left_ideal,
                GenKind::StrongLeftIdeal => flags.strong_left_ideal,
                GenKind::Ideal => flags.ideal,
            };
            prop_assert!(ok);
        }
    }

    #[test]
    fn skb_round_trip_of_catalog_subsets(mask in 0u32..64) {
        let catalog = enumerate_braces(4).unwrap();
        let chosen: Vec<SkewBrace> = catalog
            .entries
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, e)| e.brace.clone())
            .collect();
        let subset = Catalog::from_braces(chosen);
        let text = subset.to_skb_string();
        let back = Catalog::from_skb_str(&text).unwrap();
        prop_assert_eq!(subset.keys(), back.keys());
        prop_assert_eq!(back.to_skb_string(), text);
    }
}

/// Each catalog brace keeps its canonical key under 100 random
/// relabelings.
#[test]
fn catalog_keys_survive_relabelings() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand::rngs::StdRng::seed_from_u64(41);
    let combined = Catalog::merge((1..=6).map(|n| enumerate_braces(n).unwrap()));
    for entry in &combined.entries {
        let n = entry.brace.order();
        for _ in 0..100 {
            let mut rest: Vec<usize> = (1..n).collect();
            rest.shuffle(&mut rng);
            let mut sigma = vec![0usize];
            sigma.extend(rest);
            assert_eq!(
                entry.brace.relabel(&sigma).canonical_key(),
                entry.key.as_slice(),
                "entry {}",
                entry.id
            );
        }
    }
}

/// The order-8 catalog version of the relabeling invariant.
#[test]
#[ignore = "order-8 sweep; run explicitly with --release"]
fn order_eight_keys_survive_relabelings() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand::rngs::StdRng::seed_from_u64(42);
    let catalog = enumerate_braces(8).unwrap();
    for entry in &catalog.entries {
        for _ in 0..100 {
            let mut rest: Vec<usize> = (1..8).collect();
            rest.shuffle(&mut rng);
            let mut sigma = vec![0usize];
            sigma.extend(rest);
            assert_eq!(entry.brace.relabel(&sigma).canonical_key(), entry.key.as_slice());
        }
    }
}

/// The theorem harness stays green on the full order-8 catalog.
#[test]
#[ignore = "order-8 sweep; run explicitly with --release"]
fn order_eight_theorem_harness() {
    let catalog = enumerate_braces(8).unwrap();
    assert_eq!(catalog.len(), 47);
    let summary = skewbrace::checks::check_theorems(&catalog, None).unwrap();
    for run in &summary.runs {
        assert!(run.failures.is_empty(), "{} failed: {:?}", run.id, run.failures);
        assert!(run.applicable() > 0, "{} never applied", run.id);
    }
}
