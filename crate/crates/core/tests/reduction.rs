mod common;

use cisgraph::reduction::{
    factor_lex_complete, factor_lex_empty, irreducible_quotient, is_irreducible, neighborhood_partition,
    NeighborhoodMode,
};
use cisgraph::symmetry::{are_isomorphic, transitivity, DEFAULT_BUDGET};
use cisgraph::{families, Graph, VertexSet};
use common::{circulant, graph_strategy};
use proptest::prelude::*;

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn quotient_is_idempotent(g in graph_strategy(1, 12)) {
        let q = irreducible_quotient(&g).quotient;
        prop_assert!(is_irreducible(&q));
        prop_assert_eq!(irreducible_quotient(&q).quotient, q);
    }

    #[test]
    fn classes_partition_and_agree(g in graph_strategy(1, 12)) {
        for mode in [NeighborhoodMode::Open, NeighborhoodMode::Closed] {
            let r = neighborhood_partition(&g, mode);
            let mut seen = VertexSet::empty();
            for &c in &r.classes {
                prop_assert!(seen.is_disjoint(c));
                seen = seen.union(c);
                let first = c.first().unwrap();
                for v in c.iter() {
                    match mode {
                        NeighborhoodMode::Open => {
                            prop_assert_eq!(g.neighbors(v), g.neighbors(first));
                            prop_assert!(g.is_stable(c));
                        }
                        NeighborhoodMode::Closed => {
                            prop_assert_eq!(g.closed_neighbors(v), g.closed_neighbors(first));
                            prop_assert!(g.is_clique(c));
                        }
                    }
                }
            }
            prop_assert_eq!(seen, g.vertices());
            // representatives in increasing order
            let reps: Vec<usize> = r.classes.iter().map(|c| c.first().unwrap()).collect();
            prop_assert!(reps.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn factorizations_rebuild_the_input(g in graph_strategy(1, 10)) {
        if let Some((x, n)) = factor_lex_empty(&g) {
            let rebuilt = x.lexicographic_product(&Graph::empty(n).unwrap()).unwrap();
            prop_assert!(are_isomorphic(&rebuilt, &g, DEFAULT_BUDGET).unwrap());
        }
        if let Some((z, m)) = factor_lex_complete(&g) {
            prop_assert!(m >= 2);
            let rebuilt = z.lexicographic_product(&Graph::complete(m).unwrap()).unwrap();
            prop_assert!(are_isomorphic(&rebuilt, &g, DEFAULT_BUDGET).unwrap());
        }
    }

    #[test]
    fn vertex_transitive_iff_quotient_transitive_and_uniform(
        n in 3usize..=16,
        raw in proptest::collection::vec(1usize..16, 0..4),
        blow in 1usize..=3,
    ) {
        // circulants and their blow-ups are vertex-transitive; mixing with a
        // pendant breaks that, so both directions get exercised
        let s: Vec<usize> = raw.into_iter().map(|d| d % n).filter(|&d| d != 0).collect();
        let base = circulant(n, &s).lexicographic_product(&Graph::empty(blow).unwrap()).unwrap();
        for g in [base.clone(), base.disjoint_union(&Graph::complete(2).unwrap()).unwrap()] {
            let vt = transitivity(&g, DEFAULT_BUDGET).unwrap().is_vertex_transitive;
            let rhs = match factor_lex_empty(&g) {
                Some((x, _)) => transitivity(&x, DEFAULT_BUDGET).unwrap().is_vertex_transitive,
                None => false,
            };
            prop_assert_eq!(vt, rhs);
        }
    }
}

#[test]
fn open_partition_examples() {
    let k23 = families::complete_bipartite(2, 3).unwrap();
    let r = neighborhood_partition(&k23, NeighborhoodMode::Open);
    assert_eq!((r.classes.len(), r.quotient), (2, Graph::complete(2).unwrap()));
    let c4 = families::cycle(4).unwrap();
    let r = neighborhood_partition(&c4, NeighborhoodMode::Open);
    assert_eq!(r.classes, vec![set(&[0, 2]), set(&[1, 3])]);
}

#[test]
fn closed_partition_examples() {
    let g = families::cycle(4).unwrap().lexicographic_product(&Graph::complete(2).unwrap()).unwrap();
    let r = neighborhood_partition(&g, NeighborhoodMode::Closed);
    assert_eq!(r.class_sizes(), vec![2; 4]);
    assert_eq!(r.quotient, families::cycle(4).unwrap());
}

#[test]
fn irreducible_quotient_examples() {
    for n in 4..=8 {
        let q = families::q_graph(n).unwrap();
        let r = irreducible_quotient(&q);
        assert_eq!(r.quotient, q);
        assert!(r.classes.iter().all(|c| c.len() == 1));
        assert!(is_irreducible(&q));
    }
    let r = irreducible_quotient(&families::complete_bipartite(3, 3).unwrap());
    assert_eq!((r.class_sizes(), r.quotient), (vec![3, 3], Graph::complete(2).unwrap()));
    assert_eq!(irreducible_quotient(&Graph::empty(5).unwrap()).quotient, Graph::complete(1).unwrap());
    assert!(!is_irreducible(&families::cycle(4).unwrap()));
    assert!(is_irreducible(&Graph::complete(6).unwrap()));
}

#[test]
fn lex_complete_examples() {
    let c4 = families::cycle(4).unwrap();
    let g = c4.lexicographic_product(&Graph::complete(2).unwrap()).unwrap();
    assert_eq!(factor_lex_complete(&g), Some((c4, 2)));
    assert_eq!(factor_lex_complete(&Graph::complete(6).unwrap()), Some((Graph::complete(1).unwrap(), 6)));
    let q5 = families::q_graph(5).unwrap();
    // brute force: no two vertices of Q_5 share a closed neighborhood
    let n = q5.order();
    assert!((0..n).all(|u| (u + 1..n).all(|v| q5.closed_neighbors(u) != q5.closed_neighbors(v))));
    assert_eq!(factor_lex_complete(&q5), None);
}

#[test]
fn lex_empty_examples() {
    let k33 = families::complete_bipartite(3, 3).unwrap();
    assert_eq!(factor_lex_empty(&k33), Some((Graph::complete(2).unwrap(), 3)));
    let k4 = Graph::complete(4).unwrap();
    let g = k4.lexicographic_product(&Graph::empty(2).unwrap()).unwrap();
    assert_eq!(factor_lex_empty(&g), Some((k4.clone(), 2)));
    assert_eq!(factor_lex_empty(&families::complete_bipartite(2, 3).unwrap()), None);
    assert_eq!(factor_lex_empty(&k4), Some((k4, 1)));
}
