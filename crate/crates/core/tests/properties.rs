//! Property tests for the algebraic laws: canonical forms, oracle
//! agreement on random instances, fold well-definedness, and the
//! network-model structure maps.

use std::sync::Arc;

use proptest::prelude::*;

use netmods::green::fold_letters;
use netmods::monoid::inclusion_left;
use netmods::monoid::inclusion_right;
use netmods::oracle::{oracle_equal, shuffle_closure, OracleBudget};
use netmods::{
    boolean_monoid, direct_product, induced_hom, kneser_graph, path_band_monoid, GreenContext,
    Letter, MonoidHom, NetworkModel, Permutation, SimpleGraph, VarietalModel, VarietyTag,
};

fn palette() -> Vec<Arc<GreenContext>> {
    let b = boolean_monoid();
    let band = path_band_monoid();
    vec![
        GreenContext::uniform(kneser_graph(4, 2), &b, VarietyTag::Mon).unwrap(),
        GreenContext::uniform(kneser_graph(4, 2), &b, VarietyTag::CMon).unwrap(),
        GreenContext::uniform(kneser_graph(4, 2), &b, VarietyTag::GMon).unwrap(),
        GreenContext::uniform(kneser_graph(3, 2), &band, VarietyTag::Mon).unwrap(),
        GreenContext::uniform(kneser_graph(3, 2), &band, VarietyTag::GMon).unwrap(),
        GreenContext::uniform(SimpleGraph::edgeless(2), &b, VarietyTag::Mon).unwrap(),
        GreenContext::uniform(SimpleGraph::complete(3), &band, VarietyTag::Mon).unwrap(),
    ]
}

fn generators(ctx: &GreenContext) -> Vec<Letter> {
    let mut out = Vec::new();
    for (c, m) in ctx.components().iter().enumerate() {
        for v in m.elements().unwrap() {
            if !m.is_identity(&v) {
                out.push(Letter::new(c, v));
            }
        }
    }
    out
}

fn pick_word(ctx: &GreenContext, picks: &[prop::sample::Index]) -> Vec<Letter> {
    let gens = generators(ctx);
    picks.iter().map(|i| gens[i.index(gens.len())].clone()).collect()
}

proptest! {
    #[test]
    fn normalize_is_idempotent(
        ctx_idx in 0..7usize,
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..6),
    ) {
        let ctx = palette().swap_remove(ctx_idx);
        let word = pick_word(&ctx, &picks);
        let once = ctx.normalize(word).unwrap();
        let twice = ctx.normalize(once.word().to_vec()).unwrap();
        prop_assert!(once.equal(&twice).unwrap());
        prop_assert_eq!(once.word(), twice.word());
    }

    #[test]
    fn multiply_is_associative(
        ctx_idx in 0..7usize,
        a in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
        b in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
        c in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
    ) {
        let ctx = palette().swap_remove(ctx_idx);
        let x = ctx.normalize(pick_word(&ctx, &a)).unwrap();
        let y = ctx.normalize(pick_word(&ctx, &b)).unwrap();
        let z = ctx.normalize(pick_word(&ctx, &c)).unwrap();
        let left = x.multiply(&y).unwrap().multiply(&z).unwrap();
        let right = x.multiply(&y.multiply(&z).unwrap()).unwrap();
        prop_assert!(left.equal(&right).unwrap());
    }

    #[test]
    fn canonical_equality_matches_the_oracle(
        ctx_idx in 0..7usize,
        a in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
        b in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
    ) {
        let ctx = palette().swap_remove(ctx_idx);
        let left = pick_word(&ctx, &a);
        let right = pick_word(&ctx, &b);
        let max_len = left.len().max(right.len()) + 3;
        let by_canon = ctx
            .normalize(left.clone())
            .unwrap()
            .equal(&ctx.normalize(right.clone()).unwrap())
            .unwrap();
        let by_oracle =
            oracle_equal(&ctx, &left, &right, OracleBudget::default(), max_len).unwrap();
        prop_assert_eq!(by_canon, by_oracle);
    }

    #[test]
    fn oracle_agreement_on_random_index_graphs(
        mask in 0u8..64,
        flavor in 0..3usize,
        a in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
        b in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
    ) {
        // arbitrary commutation graph on four components, not just Kneser
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, e)| *e);
        let graph = SimpleGraph::new(4, edges).unwrap();
        let (monoid, variety) = match flavor {
            0 => (path_band_monoid(), VarietyTag::Mon),
            1 => (boolean_monoid(), VarietyTag::CMon),
            _ => (path_band_monoid(), VarietyTag::GMon),
        };
        let ctx = GreenContext::uniform(graph, &monoid, variety).unwrap();
        let left = pick_word(&ctx, &a);
        let right = pick_word(&ctx, &b);
        let max_len = left.len().max(right.len()) + 3;
        let by_canon = ctx
            .normalize(left.clone())
            .unwrap()
            .equal(&ctx.normalize(right.clone()).unwrap())
            .unwrap();
        let by_oracle =
            oracle_equal(&ctx, &left, &right, OracleBudget::default(), max_len).unwrap();
        prop_assert_eq!(by_canon, by_oracle);
    }

    #[test]
    fn normalize_lands_in_the_shuffle_class(
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..5),
    ) {
        // variety Mon: the canonical form must be shuffle-reachable from the
        // input word
        let ctx = palette().swap_remove(0);
        let word = pick_word(&ctx, &picks);
        let canonical = ctx.normalize(word.clone()).unwrap();
        let class = shuffle_closure(&ctx, &word, OracleBudget::default()).unwrap();
        prop_assert!(class.contains(canonical.word()));
    }

    #[test]
    fn automorphism_action_is_a_homomorphism(
        a in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
        b in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
        swap_pair in 0..3usize,
    ) {
        // KG_{3,2} is edgeless, so every permutation of its three vertices
        // is an automorphism
        let ctx = palette().swap_remove(3);
        let x = ctx.normalize(pick_word(&ctx, &a)).unwrap();
        let y = ctx.normalize(pick_word(&ctx, &b)).unwrap();
        let sigma = match swap_pair {
            0 => Permutation::from_cycles(3, "(0 1)").unwrap(),
            1 => Permutation::from_cycles(3, "(1 2)").unwrap(),
            _ => Permutation::from_cycles(3, "(0 1 2)").unwrap(),
        };
        let lhs = x.multiply(&y).unwrap().apply_automorphism(&sigma).unwrap();
        let rhs = x
            .apply_automorphism(&sigma)
            .unwrap()
            .multiply(&y.apply_automorphism(&sigma).unwrap())
            .unwrap();
        prop_assert!(lhs.equal(&rhs).unwrap());
    }

    #[test]
    fn folds_are_representative_independent(
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..5),
    ) {
        // fold into band x band along inclusions chosen so that exactly the
        // matched Kneser components commute
        let band = path_band_monoid();
        let ctx =
            GreenContext::uniform(kneser_graph(4, 2), &band, VarietyTag::Mon).unwrap();
        let target = direct_product(&band, &band);
        let maps: Vec<MonoidHom> = (0..6)
            .map(|c| {
                if c < 3 {
                    inclusion_left(&band, &band)
                } else {
                    inclusion_right(&band, &band)
                }
            })
            .collect();
        let word = pick_word(&ctx, &picks);
        let reference = fold_letters(&word, &target, &maps);
        for member in shuffle_closure(&ctx, &word, OracleBudget::default()).unwrap() {
            prop_assert!(target.eq(&fold_letters(&member, &target, &maps), &reference));
        }
        // and the checked fold accepts this cocone
        let elem = ctx.normalize(word).unwrap();
        let folded = netmods::universal_fold(&elem, &target, &maps).unwrap();
        prop_assert!(target.eq(&folded, &reference));
    }

    #[test]
    fn induced_hom_commutes_with_overlay(
        a in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
        b in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
    ) {
        let band_model = VarietalModel::new(path_band_monoid(), VarietyTag::GMon).unwrap();
        let bool_model = VarietalModel::new(boolean_monoid(), VarietyTag::GMon).unwrap();
        let collapse = MonoidHom::collapse_to_bool(&path_band_monoid());
        let ctx = band_model.green_context(3);
        let g = band_model
            .from_green(3, ctx.normalize(pick_word(&ctx, &a)).unwrap())
            .unwrap();
        let h = band_model
            .from_green(3, ctx.normalize(pick_word(&ctx, &b)).unwrap())
            .unwrap();
        let lhs = induced_hom(
            &collapse,
            &band_model,
            &bool_model,
            &band_model.overlay(&g, &h).unwrap(),
        )
        .unwrap();
        let rhs = bool_model
            .overlay(
                &induced_hom(&collapse, &band_model, &bool_model, &g).unwrap(),
                &induced_hom(&collapse, &band_model, &bool_model, &h).unwrap(),
            )
            .unwrap();
        prop_assert!(bool_model.eq(&lhs, &rhs).unwrap());
    }

    #[test]
    fn induced_hom_commutes_with_placement_and_action(
        a in prop::collection::vec(any::<prop::sample::Index>(), 0..3),
        b in prop::collection::vec(any::<prop::sample::Index>(), 0..3),
        s in any::<prop::sample::Index>(),
    ) {
        let band_model = VarietalModel::new(path_band_monoid(), VarietyTag::GMon).unwrap();
        let bool_model = VarietalModel::new(boolean_monoid(), VarietyTag::GMon).unwrap();
        let collapse = MonoidHom::collapse_to_bool(&path_band_monoid());
        let ctx = band_model.green_context(2);
        let g = band_model
            .from_green(2, ctx.normalize(pick_word(&ctx, &a)).unwrap())
            .unwrap();
        let h = band_model
            .from_green(2, ctx.normalize(pick_word(&ctx, &b)).unwrap())
            .unwrap();
        // commutes with the disjoint union
        let lhs = induced_hom(
            &collapse,
            &band_model,
            &bool_model,
            &band_model.disjoint_union(&g, &h).unwrap(),
        )
        .unwrap();
        let rhs = bool_model
            .disjoint_union(
                &induced_hom(&collapse, &band_model, &bool_model, &g).unwrap(),
                &induced_hom(&collapse, &band_model, &bool_model, &h).unwrap(),
            )
            .unwrap();
        prop_assert!(bool_model.eq(&lhs, &rhs).unwrap());
        // commutes with the symmetric-group action
        let all = Permutation::all(2);
        let sigma = all[s.index(all.len())].clone();
        let lhs = induced_hom(
            &collapse,
            &band_model,
            &bool_model,
            &band_model.permute(&sigma, &g).unwrap(),
        )
        .unwrap();
        let rhs = bool_model
            .permute(
                &sigma,
                &induced_hom(&collapse, &band_model, &bool_model, &g).unwrap(),
            )
            .unwrap();
        prop_assert!(bool_model.eq(&lhs, &rhs).unwrap());
    }

    #[test]
    fn interchange_on_random_sizes(
        m in 1..3usize,
        n in 1..3usize,
        a in prop::collection::vec(any::<prop::sample::Index>(), 0..3),
        b in prop::collection::vec(any::<prop::sample::Index>(), 0..3),
        c in prop::collection::vec(any::<prop::sample::Index>(), 0..3),
        d in prop::collection::vec(any::<prop::sample::Index>(), 0..3),
    ) {
        let model = VarietalModel::new(boolean_monoid(), VarietyTag::Mon).unwrap();
        let word = |size: usize, picks: &[prop::sample::Index]| {
            let ctx = model.green_context(size);
            let w = if ctx.graph().n_vertices() == 0 {
                Vec::new()
            } else {
                pick_word(&ctx, picks)
            };
            model.from_green(size, ctx.normalize(w).unwrap()).unwrap()
        };
        let (ga, gb) = (word(m, &a), word(m, &b));
        let (gc, gd) = (word(n, &c), word(n, &d));
        let lhs = model
            .overlay(
                &model.disjoint_union(&ga, &gc).unwrap(),
                &model.disjoint_union(&gb, &gd).unwrap(),
            )
            .unwrap();
        let rhs = model
            .disjoint_union(
                &model.overlay(&ga, &gb).unwrap(),
                &model.overlay(&gc, &gd).unwrap(),
            )
            .unwrap();
        prop_assert!(model.eq(&lhs, &rhs).unwrap());
    }

    #[test]
    fn permutation_action_is_functorial(
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
        s in any::<prop::sample::Index>(),
        t in any::<prop::sample::Index>(),
    ) {
        let model = VarietalModel::new(boolean_monoid(), VarietyTag::Mon).unwrap();
        let ctx = model.green_context(4);
        let g = model
            .from_green(4, ctx.normalize(pick_word(&ctx, &picks)).unwrap())
            .unwrap();
        let all = Permutation::all(4);
        let sigma = all[s.index(all.len())].clone();
        let tau = all[t.index(all.len())].clone();
        let lhs = model.permute(&sigma.compose(&tau).unwrap(), &g).unwrap();
        let rhs = model
            .permute(&sigma, &model.permute(&tau, &g).unwrap())
            .unwrap();
        prop_assert!(model.eq(&lhs, &rhs).unwrap());
    }
}
