//! Randomized differential checks between the independent computation paths:
//! dynamic-programming tables, exhaustive enumeration, the divisor-reduction
//! transport, and the closed form for (a1, a2, m*a1*a2) triples. Each block
//! states a fact that holds for every gcd-1 tuple, so a single shrunk
//! counterexample from any of these is a real bug, not test flakiness.

use jfrob::denumerant::{denumerant, denumerant_table, positive_denumerant};
use jfrob::oracle::{enumerate_representations, oracle_f_j, oracle_g_j, verify_lemma_witness, WitnessOutcome};
use jfrob::reduction::{corollary_triple, f_from_g, f_j_reduced, find_reduction, g_from_f, g_j_reduced, reduce_fully, AffineMap};
use jfrob::search::{enumerate_tuples, scan_inversions};
use jfrob::solver;
use jfrob::GeneratorTuple;
use num_bigint::BigUint;
use proptest::collection::vec;
use proptest::prelude::*;

// ---- strategies ----

/// Arbitrary gcd-1 tuple with 2..=max_k generators in 1..=max_gen.
fn arb_tuple(max_k: usize, max_gen: u64) -> impl Strategy<Value = GeneratorTuple> {
    (2..=max_k)
        .prop_flat_map(move |k| vec(1..=max_gen, k))
        .prop_filter_map("tuple must have gcd 1", |values| {
            GeneratorTuple::new(values).ok().filter(|t| t.gcd() == 1)
        })
}

/// Tuple with a planted divisor step: every generator except one pivot is
/// multiplied by d in 2..=4, so the reduction chain has real work to do.
fn arb_scaled_tuple() -> impl Strategy<Value = GeneratorTuple> {
    (arb_tuple(4, 9), any::<prop::sample::Index>(), 2u64..=4)
        .prop_filter_map("divisor must be coprime to the pivot", |(base, pivot, d)| {
            let pivot = pivot.index(base.k());
            let gens = base.generators();
            if num_integer::gcd(gens[pivot], d) != 1 {
                return None;
            }
            let scaled: Vec<u64> = gens
                .iter()
                .enumerate()
                .map(|(i, &a)| if i == pivot { a } else { a * d })
                .collect();
            GeneratorTuple::new(scaled).ok().filter(|t| t.gcd() == 1)
        })
}

// ---- counting ----

proptest! {
    #[test]
    fn table_matches_enumeration(tuple in arb_tuple(3, 9), n in 0u64..=60) {
        let table = denumerant_table(&tuple, 60, u32::MAX).unwrap();
        let listed = enumerate_representations(&tuple, n, false).count();
        prop_assert_eq!(u64::from(table.count(n)), listed as u64);
    }

    #[test]
    fn positive_counts_match_enumeration(tuple in arb_tuple(3, 9), n in 0u64..=60) {
        let listed = enumerate_representations(&tuple, n, true).count();
        prop_assert_eq!(positive_denumerant(&tuple, n), BigUint::from(listed));
    }

    #[test]
    fn counts_never_drop_under_generator_shifts(tuple in arb_tuple(4, 15), n in 0u64..=200) {
        let here = denumerant(&tuple, n);
        for &a in tuple.generators() {
            // adding one more copy of generator a embeds every representation
            prop_assert!(denumerant(&tuple, n + a) >= here);
        }
    }

    #[test]
    fn saturated_table_is_exact_count_clamped(tuple in arb_tuple(4, 12), cap in 1u32..6, n in 0u64..=80) {
        let table = denumerant_table(&tuple, 80, cap).unwrap();
        let expect = denumerant(&tuple, n).min(BigUint::from(cap));
        prop_assert_eq!(BigUint::from(table.count(n)), expect);
    }
}

// ---- solver ----

proptest! {
    #[test]
    fn sequences_ignore_generator_order(
        (values, shuffled) in arb_tuple(4, 20).prop_flat_map(|t| {
            let v = t.generators().to_vec();
            (Just(v.clone()), Just(v).prop_shuffle())
        }),
    ) {
        let a = GeneratorTuple::new(values).unwrap();
        let b = GeneratorTuple::new(shuffled).unwrap();
        prop_assert_eq!(solver::g_sequence(&a, 6).unwrap().values, solver::g_sequence(&b, 6).unwrap().values);
        prop_assert_eq!(solver::f_sequence(&a, 6).unwrap().values, solver::f_sequence(&b, 6).unwrap().values);
    }

    #[test]
    fn present_values_have_exactly_j_representations(tuple in arb_tuple(3, 15), j in 0u32..=6) {
        if let Some(g) = solver::g_j(&tuple, j).unwrap().value() {
            prop_assert_eq!(denumerant(&tuple, g), BigUint::from(j));
        }
        if let Some(f) = solver::f_j(&tuple, j).unwrap().value() {
            prop_assert_eq!(positive_denumerant(&tuple, f), BigUint::from(j));
        }
    }

    #[test]
    fn f_and_g_differ_by_the_tuple_sum(tuple in arb_tuple(4, 15), j in 0u32..=6) {
        let k_sum = tuple.sum();
        let g = solver::g_j(&tuple, j).unwrap();
        let f = solver::f_j(&tuple, j).unwrap();
        if let Some(gv) = g.value() {
            prop_assert_eq!(f.value(), Some(gv + k_sum));
            prop_assert_eq!(f_from_g(g, k_sum), f);
            prop_assert_eq!(g_from_f(f, k_sum).unwrap(), g);
        }
        if let Some(fv) = f.value() {
            // below the sum the downward shift can leave the positive range,
            // which is exactly the degenerate case where g may be absent
            if fv > k_sum {
                prop_assert_eq!(g.value(), Some(fv - k_sum));
            }
        }
    }
}

// ---- reduction ----

proptest! {
    #[test]
    fn reduced_path_matches_direct_scan(tuple in arb_scaled_tuple(), j in 0u32..=6) {
        prop_assert_eq!(g_j_reduced(&tuple, j).unwrap(), solver::g_j(&tuple, j).unwrap());
        prop_assert_eq!(f_j_reduced(&tuple, j).unwrap(), solver::f_j(&tuple, j).unwrap());
    }

    #[test]
    fn reduced_path_is_identity_on_plain_tuples(tuple in arb_tuple(3, 20), j in 0u32..=5) {
        prop_assert_eq!(g_j_reduced(&tuple, j).unwrap(), solver::g_j(&tuple, j).unwrap());
        prop_assert_eq!(f_j_reduced(&tuple, j).unwrap(), solver::f_j(&tuple, j).unwrap());
    }

    #[test]
    fn reduction_chain_structure_is_sound(tuple in arb_scaled_tuple()) {
        let chain = reduce_fully(&tuple).unwrap();
        prop_assert_eq!(&chain.original, &tuple);
        let mut parent = tuple.clone();
        let mut composed = AffineMap::identity();
        for step in &chain.steps {
            prop_assert!(step.divisor >= 2);
            let gens = parent.generators();
            let reduced = step.reduced.generators();
            prop_assert_eq!(reduced.len(), gens.len());
            for (i, (&before, &after)) in gens.iter().zip(reduced).enumerate() {
                if i == step.pivot_index {
                    prop_assert_eq!(after, before);
                } else {
                    prop_assert_eq!(after * step.divisor, before);
                }
            }
            prop_assert_eq!(step.transform.scale, step.divisor);
            prop_assert_eq!(step.transform.offset, (step.divisor - 1) * gens[step.pivot_index]);
            composed = composed.compose_inner(&step.transform);
            parent = step.reduced.clone();
        }
        prop_assert_eq!(&chain.final_tuple, &parent);
        prop_assert_eq!(chain.transform, composed);
        prop_assert_eq!(chain.scale(), chain.transform.scale);
        for p in 0..chain.final_tuple.k() {
            prop_assert!(find_reduction(&chain.final_tuple, p).unwrap().is_none());
        }
    }

    #[test]
    fn affine_extended_agrees_with_plain(scale in 1u64..=50, offset in 0u64..=500, v in 0u64..=100_000) {
        let map = AffineMap { scale, offset };
        let plain = map.apply(v);
        prop_assert_eq!(map.apply_extended(Some(v as i64)), Some(plain as i64));
        prop_assert_eq!(map.apply_extended(None), None);
        // the -1 level ("everything representable") transports below zero
        prop_assert_eq!(map.apply_extended(Some(-1)), Some(offset as i64 - scale as i64));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_form_matches_solver(a1 in 1u64..=7, a2 in 1u64..=7, m in 1u64..=3, j in 0u32..=5) {
        prop_assume!(a1 < a2 && num_integer::gcd(a1, a2) == 1);
        let tuple = GeneratorTuple::new(vec![a1, a2, m * a1 * a2]).unwrap();
        prop_assert_eq!(corollary_triple(a1, a2, m, j).unwrap(), solver::g_j(&tuple, j).unwrap());
    }
}

// ---- oracle ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oracle_agrees_with_solver(tuple in arb_tuple(3, 10), j in 0u32..=4) {
        let limit = solver::default_hard_limit(&tuple, j);
        prop_assert_eq!(oracle_g_j(&tuple, j, limit).unwrap(), solver::g_j(&tuple, j).unwrap());
        prop_assert_eq!(oracle_f_j(&tuple, j, limit).unwrap(), solver::f_j(&tuple, j).unwrap());
    }

    #[test]
    fn witness_decomposition_over_trailing_generators(tuple in arb_tuple(3, 10), j in 0u32..=4) {
        match verify_lemma_witness(&tuple, j).unwrap() {
            WitnessOutcome::Found { f_value, witness } => {
                prop_assert_eq!(Some(f_value), solver::f_j(&tuple, j).unwrap().value());
                let trailing = GeneratorTuple::new(tuple.generators()[1..].to_vec()).unwrap();
                prop_assert!(witness.is_strictly_positive());
                prop_assert!(witness.satisfies(&trailing));
                prop_assert_eq!(witness.target(), f_value);
            }
            WitnessOutcome::NotApplicable => {
                prop_assert!(solver::f_j(&tuple, j).unwrap().value().is_none() || tuple.k() < 2);
            }
            WitnessOutcome::Failed { f_value } => {
                return Err(TestCaseError::fail(format!("no witness for f = {f_value}")));
            }
        }
    }
}

// ---- search ----

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn enumeration_is_canonical_and_complete(k in 2usize..=3, max_gen in 2u64..=8) {
        let tuples = enumerate_tuples(k, max_gen);
        for w in tuples.windows(2) {
            prop_assert!(w[0].generators() < w[1].generators());
        }
        let mut expect: Vec<Vec<u64>> = Vec::new();
        for a in 1..=max_gen {
            for b in a..=max_gen {
                if k == 2 {
                    if num_integer::gcd(a, b) == 1 {
                        expect.push(vec![a, b]);
                    }
                    continue;
                }
                for c in b..=max_gen {
                    if num_integer::gcd(num_integer::gcd(a, b), c) == 1 {
                        expect.push(vec![a, b, c]);
                    }
                }
            }
        }
        let got: Vec<Vec<u64>> = tuples.iter().map(|t| t.generators().to_vec()).collect();
        prop_assert_eq!(got, expect);
    }

    #[test]
    fn inversion_records_are_sound_and_complete(tuple in arb_tuple(3, 12), max_j in 1u32..=10) {
        let records = scan_inversions(&tuple, max_j).unwrap();
        let seq = solver::g_sequence(&tuple, max_j + 1).unwrap();
        let mut expect = Vec::new();
        for j in 0..=max_j {
            if let (Some(a), Some(b)) = (seq.value(j).value(), seq.value(j + 1).value()) {
                if b < a {
                    expect.push((j, a, b));
                }
            }
        }
        let got: Vec<(u32, u64, u64)> = records.iter().map(|r| (r.j, r.g_j, r.g_j_plus_1)).collect();
        prop_assert_eq!(got, expect);
        for r in &records {
            prop_assert_eq!(&r.tuple, &tuple);
        }
    }
}
