use edgereg::even::{brute_colon, colon_generators};
use edgereg::homology::Field;
use edgereg::invariants::{induced_matching_number, oracle_power_regularity, power_lower_bound};
use edgereg::verify::instance_name;
use edgereg::{BettiEngine, EdgeProduct, Graph, Monomial, MonomialIdeal};
use proptest::prelude::*;

fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|nvars| {
        prop::collection::vec(prop::collection::vec(0u8..=3, nvars), 1..=4).prop_filter_map("unit generator", move |gens| {
            if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
                return None;
            }
            MonomialIdeal::new(nvars, gens.into_iter().map(Monomial::from_exponents)).ok()
        })
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>()).prop_map(|(n, seed)| Graph::random(n, 0.5, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polarization_preserves_graded_betti_numbers(i in ideal()) {
        let engine = BettiEngine::default();
        let polar = i.polarize();
        prop_assert!(polar.target.is_squarefree());
        prop_assert_eq!(engine.betti_table(&i).unwrap().coarse(), engine.betti_table(&polar.target).unwrap().coarse());
    }

    #[test]
    fn fields_agree_on_small_ideals(i in ideal()) {
        let engine = BettiEngine::default();
        prop_assert_eq!(
            engine.betti_table_in(&i, Field::Gf2).unwrap().coarse(),
            engine.betti_table_in(&i, Field::Rational).unwrap().coarse()
        );
    }

    #[test]
    fn normalization_keeps_regularity_of_non_linear_part(i in ideal()) {
        let norm = i.normalize();
        prop_assume!(norm.linear_vars.is_empty() && !norm.ideal.is_zero());
        let engine = BettiEngine::default();
        prop_assert_eq!(engine.regularity(&i).unwrap(), engine.regularity(&norm.ideal).unwrap());
    }

    #[test]
    fn colon_generators_match_brute_force(g in graph(6), s in 1usize..=2, pick in any::<u64>()) {
        let products = EdgeProduct::all(&g, s);
        prop_assume!(!products.is_empty());
        let m = &products[(pick % products.len() as u64) as usize];
        prop_assert_eq!(colon_generators(&g, m).unwrap(), brute_colon(&g, m).unwrap());
    }

    #[test]
    fn induced_matching_lower_bound(g in graph(7)) {
        prop_assume!(g.edge_count() > 0);
        let engine = BettiEngine::default();
        let reg = oracle_power_regularity(&engine, &g, 1).unwrap();
        prop_assert!(reg >= power_lower_bound(&g, 1).unwrap());
        prop_assert!(reg > induced_matching_number(&g));
    }

    #[test]
    fn report_instance_names_parse_back(g in graph(9)) {
        prop_assert_eq!(Graph::from_descriptor(&instance_name(&g)).unwrap(), g);
    }
}
