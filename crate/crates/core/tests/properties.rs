//! Property tests for the algebraic invariants of the core operations.

use proptest::prelude::*;

use mondepth::{
    admits_partition, associated_primes, betti_lcm, char_poset, depth_quotient, lexsegment,
    minimalize, modify_trivial, parse_ideal, primary_decomposition, render_ideal, sdepth_ideal,
    substitute, Alpha, FieldChar, Monomial, MonomialIdeal, MonomialPrime, PartitionSearch,
    PosetMode, Ring, SdepthConfig, SdepthResult,
};

const P: FieldChar = FieldChar::Prime(32003);

fn arb_monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::new)
}

fn arb_ideal(n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(arb_monomial(n, max_exp), 0..=max_gens)
        .prop_map(move |gens| MonomialIdeal::new(n, gens).expect("generators live in the ring"))
}

/// Nonzero proper ideal: at least one generator, none of them the unit.
fn arb_proper_ideal(
    n: usize,
    max_gens: usize,
    max_exp: u32,
) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(arb_monomial(n, max_exp), 1..=max_gens).prop_filter_map(
        "all generators must be non-unit",
        move |gens| {
            if gens.iter().any(|g| g.is_unit()) {
                return None;
            }
            Some(MonomialIdeal::new(n, gens).expect("generators live in the ring"))
        },
    )
}

fn arb_squarefree_ideal(n: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    arb_proper_ideal(n, max_gens, 1)
}

fn all_monomials_up_to(n: usize, max_degree: u32) -> Vec<Monomial> {
    let ring = Ring::new(n).unwrap();
    (0..=max_degree)
        .flat_map(|d| ring.monomials_of_degree(d))
        .collect()
}

proptest! {
    #[test]
    fn minimalize_is_idempotent(gens in prop::collection::vec(arb_monomial(3, 3), 0..8)) {
        let once = minimalize(&gens);
        prop_assert_eq!(minimalize(&once), once.clone());
        let ideal = MonomialIdeal::new(3, gens).unwrap();
        prop_assert_eq!(
            MonomialIdeal::new(3, ideal.gens().to_vec()).unwrap(),
            ideal
        );
    }

    #[test]
    fn intersect_and_sum_are_commutative_and_idempotent(
        a in arb_ideal(3, 4, 3),
        b in arb_ideal(3, 4, 3),
    ) {
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
        prop_assert_eq!(a.sum(&a).unwrap(), a.clone());
    }

    #[test]
    fn intersect_and_sum_are_associative(
        a in arb_ideal(3, 3, 2),
        b in arb_ideal(3, 3, 2),
        c in arb_ideal(3, 3, 2),
    ) {
        prop_assert_eq!(
            a.intersect(&b).unwrap().intersect(&c).unwrap(),
            a.intersect(&b.intersect(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.sum(&b).unwrap().sum(&c).unwrap(),
            a.sum(&b.sum(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn membership_distributes_over_intersection(
        a in arb_ideal(3, 4, 2),
        b in arb_ideal(3, 4, 2),
    ) {
        let both = a.intersect(&b).unwrap();
        // bounded-degree exhaustive membership comparison
        for w in all_monomials_up_to(3, 5) {
            let lhs = both.contains(&w).unwrap();
            let rhs = a.contains(&w).unwrap() && b.contains(&w).unwrap();
            prop_assert_eq!(lhs, rhs, "disagree at {}", w);
        }
    }

    #[test]
    fn colon_composes(
        ideal in arb_ideal(3, 4, 3),
        m in arb_monomial(3, 2),
        m2 in arb_monomial(3, 2),
    ) {
        let product = m.try_mul(&m2).unwrap();
        prop_assert_eq!(
            ideal.colon(&product).unwrap(),
            ideal.colon(&m).unwrap().colon(&m2).unwrap()
        );
    }

    #[test]
    fn lex_is_a_total_order(
        a in arb_monomial(4, 3),
        b in arb_monomial(4, 3),
        c in arb_monomial(4, 3),
    ) {
        use std::cmp::Ordering;
        // antisymmetry
        if a.cmp_lex(&b).unwrap() == Ordering::Equal {
            prop_assert_eq!(&a, &b);
        }
        // transitivity
        if a.cmp_lex(&b).unwrap() != Ordering::Less && b.cmp_lex(&c).unwrap() != Ordering::Less {
            prop_assert_ne!(a.cmp_lex(&c).unwrap(), Ordering::Less);
        }
    }

    #[test]
    fn lexsegment_count_is_rank_difference(
        n in 2usize..=4,
        d in 2u32..=3,
        seed in any::<u64>(),
    ) {
        let ring = Ring::new(n).unwrap();
        let monos: Vec<Monomial> = ring.monomials_of_degree(d).collect();
        let i = (seed as usize) % monos.len();
        let j = i + (seed as usize / monos.len()) % (monos.len() - i);
        let segment = lexsegment(&ring, d, &monos[i], &monos[j]).unwrap();
        prop_assert_eq!(segment.num_gens(), j - i + 1);
    }

    #[test]
    fn substitution_composes_pointwise(
        ideal in arb_ideal(3, 4, 2),
        a in prop::collection::vec(1u32..=3, 3),
        b in prop::collection::vec(1u32..=3, 3),
    ) {
        let alpha = Alpha::new(a).unwrap();
        let beta = Alpha::new(b).unwrap();
        let two_step = substitute(&substitute(&ideal, &alpha).unwrap(), &beta).unwrap();
        let direct = substitute(&ideal, &alpha.try_mul(&beta).unwrap()).unwrap();
        prop_assert_eq!(two_step, direct);
    }

    #[test]
    fn identity_alpha_is_identity(ideal in arb_squarefree_ideal(4, 4)) {
        prop_assert_eq!(modify_trivial(&ideal, &Alpha::ones(4)).unwrap(), ideal);
    }

    #[test]
    fn parse_render_round_trips(ideal in arb_ideal(4, 5, 4)) {
        prop_assert_eq!(parse_ideal(&render_ideal(&ideal)).unwrap(), ideal);
    }

    #[test]
    fn parser_never_panics(text in "\\PC{0,60}") {
        let _ = parse_ideal(&text);
    }

    #[test]
    fn parser_never_panics_on_format_shaped_input(
        n in 0usize..6,
        gens in "[x0-9^*, /]{0,40}",
    ) {
        let _ = parse_ideal(&format!("vars: {n}\ngens: {gens}"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decomposition_recomposes_and_is_irredundant(ideal in arb_proper_ideal(3, 4, 3)) {
        let dec = primary_decomposition(&ideal).unwrap();
        prop_assert_eq!(dec.intersection(3).unwrap(), ideal);
        let mut radicals = dec.radicals();
        radicals.dedup();
        prop_assert_eq!(radicals.len(), dec.components.len());
        for skip in 0..dec.components.len() {
            let mut others = MonomialIdeal::unit(3).unwrap();
            for (j, c) in dec.components.iter().enumerate() {
                if j != skip {
                    others = others.intersect(&c.ideal).unwrap();
                }
            }
            let contained = others
                .gens()
                .iter()
                .all(|g| dec.components[skip].ideal.contains(g).unwrap());
            prop_assert!(!contained, "component {} is redundant", skip);
        }
    }

    #[test]
    fn squarefree_ass_is_minimal_vertex_covers(ideal in arb_squarefree_ideal(4, 4)) {
        let n = ideal.nvars();
        // brute force: subsets of variables meeting every generator support,
        // minimal under inclusion
        let mut covers: Vec<Vec<usize>> = Vec::new();
        for mask in 0u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let is_cover = ideal
                .gens()
                .iter()
                .all(|g| g.support().iter().any(|v| subset.contains(v)));
            if is_cover {
                covers.push(subset);
            }
        }
        let minimal: Vec<&Vec<usize>> = covers
            .iter()
            .filter(|c| {
                !covers
                    .iter()
                    .any(|other| other.len() < c.len() && other.iter().all(|v| c.contains(v)))
            })
            .collect();
        let mut expected: Vec<MonomialPrime> = minimal
            .into_iter()
            .map(|c| MonomialPrime::new(c.iter().copied()))
            .collect();
        expected.sort();
        expected.dedup();
        let ass = associated_primes(&ideal).unwrap();
        prop_assert_eq!(ass, expected);
    }

    #[test]
    fn betti_table_shape(ideal in arb_proper_ideal(3, 4, 3)) {
        let table = betti_lcm(&ideal, P).unwrap();
        prop_assert!(table.pd as usize <= ideal.num_gens().max(1));
        prop_assert!(table.depth_quotient < ideal.nvars() as u32);
        // homological index 1 sits exactly on the minimal generators
        for g in ideal.gens() {
            prop_assert_eq!(table.beta(1, g), 1);
        }
        let ones = table.entries.keys().filter(|(i, _)| *i == 1).count();
        prop_assert_eq!(ones, ideal.num_gens());
    }

    #[test]
    fn depth_is_permutation_invariant(ideal in arb_squarefree_ideal(4, 4), seed in any::<u64>()) {
        let n = ideal.nvars();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates from the seed
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let permuted_gens: Vec<Monomial> = ideal
            .gens()
            .iter()
            .map(|g| {
                let mut exps = vec![0u32; n];
                for (i, &e) in g.exps().iter().enumerate() {
                    exps[perm[i]] = e;
                }
                Monomial::new(exps)
            })
            .collect();
        let permuted = MonomialIdeal::new(n, permuted_gens).unwrap();
        prop_assert_eq!(
            depth_quotient(&ideal, P).unwrap(),
            depth_quotient(&permuted, P).unwrap()
        );
        let config = SdepthConfig::default();
        let (a, b) = (
            sdepth_ideal(&ideal, &config).unwrap(),
            sdepth_ideal(&permuted, &config).unwrap(),
        );
        prop_assert_eq!(a.exact_value(), b.exact_value());
    }

    #[test]
    fn partition_existence_is_monotone_in_k(ideal in arb_proper_ideal(3, 3, 2)) {
        let config = SdepthConfig::default();
        let poset = char_poset(&ideal, PosetMode::Ideal).unwrap();
        let result = sdepth_ideal(&ideal, &config).unwrap();
        let SdepthResult::Exact { value, .. } = result else {
            return Ok(());
        };
        for k in 0..=value {
            prop_assert!(
                matches!(
                    admits_partition(&poset, k, config.node_budget),
                    PartitionSearch::Found(_)
                ),
                "partition missing at k={} though sdepth={}",
                k,
                value
            );
        }
        prop_assert!(
            !matches!(
                admits_partition(&poset, value + 1, config.node_budget),
                PartitionSearch::Found(_)
            ),
            "partition found above the computed sdepth"
        );
    }
}
