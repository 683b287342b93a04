mod common;

use cisgraph::families;
use cisgraph::graph::{decode_graph6, encode_graph6, parse_edge_list, write_edge_list};
use cisgraph::{Error, Graph};
use common::graph_strategy;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn complement_is_an_involution(g in graph_strategy(1, 40)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(1, 128)) {
        let text = encode_graph6(&g);
        prop_assert_eq!(decode_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(1, 30)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn lexicographic_product_edge_count(a in graph_strategy(1, 8), b in graph_strategy(1, 8)) {
        let p = a.lexicographic_product(&b).unwrap();
        let (na, nb) = (a.order(), b.order());
        prop_assert_eq!(p.order(), na * nb);
        prop_assert_eq!(p.edge_count(), a.edge_count() * nb * nb + na * b.edge_count());
    }

    #[test]
    fn line_graph_degree_law(g in graph_strategy(2, 14)) {
        prop_assume!(g.edge_count() >= 1 && g.edge_count() <= 128);
        let l = g.line_graph().unwrap();
        for (i, (u, v)) in g.edges().into_iter().enumerate() {
            prop_assert_eq!(l.degree(i), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn complement_edge_count(g in graph_strategy(1, 40)) {
        let n = g.order();
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
    }
}

#[test]
fn construction_examples() {
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    assert_eq!(c4.profile().valency, Some(2));
    assert_eq!(Graph::from_edges(1, &[]).unwrap(), Graph::complete(1).unwrap());
    assert_eq!(Graph::from_edges(3, &[(0, 0)]), Err(Error::LoopEdge(0)));
    assert_eq!(Graph::from_edges(0, &[]), Err(Error::EmptyOrder));
    assert_eq!(Graph::from_edges(129, &[]), Err(Error::OrderTooLarge(129)));
    assert_eq!(Graph::from_edges(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, order: 3 }));
}

#[test]
fn complement_examples() {
    let k4 = Graph::complete(4).unwrap();
    assert_eq!(k4.complement(), Graph::empty(4).unwrap());
    let k3 = Graph::complete(3).unwrap();
    let two_k3 = k3.disjoint_union(&k3).unwrap();
    assert_eq!(two_k3.complement(), families::complete_bipartite(3, 3).unwrap());
}

#[test]
fn disjoint_union_examples() {
    let c4 = families::cycle(4).unwrap();
    let k2 = Graph::complete(2).unwrap();
    let u = c4.disjoint_union(&k2).unwrap();
    assert_eq!((u.order(), u.edge_count(), u.components().len()), (6, 5, 2));
    let k1 = Graph::complete(1).unwrap();
    assert_eq!(k1.disjoint_union(&k1).unwrap(), Graph::empty(2).unwrap());
    let big = Graph::empty(100).unwrap();
    assert_eq!(big.disjoint_union(&big), Err(Error::OrderTooLarge(200)));
}

#[test]
fn lexicographic_product_examples() {
    let c4 = families::cycle(4).unwrap();
    let p = c4.lexicographic_product(&Graph::complete(2).unwrap()).unwrap();
    assert_eq!((p.order(), p.profile().valency), (8, Some(5)));
    let oct = Graph::complete(3).unwrap().lexicographic_product(&Graph::empty(2).unwrap()).unwrap();
    assert_eq!(oct.profile().valency, Some(4));
    let k1 = Graph::complete(1).unwrap();
    assert_eq!(c4.lexicographic_product(&k1).unwrap(), c4);
    // (u, x) is vertex u * |B| + x
    assert!(p.is_adjacent(0, 1) && p.is_adjacent(0, 2) && !p.is_adjacent(0, 4));
}

#[test]
fn line_graph_examples() {
    let k33 = families::complete_bipartite(3, 3).unwrap();
    let l = k33.line_graph().unwrap();
    assert_eq!((l.order(), l.profile().valency), (9, Some(4)));
    let c5 = families::cycle(5).unwrap();
    assert_eq!(c5.line_graph().unwrap().profile().valency, Some(2));
    assert_eq!(families::complete_bipartite(1, 3).unwrap().line_graph().unwrap(), Graph::complete(3).unwrap());
    assert_eq!(Graph::empty(3).unwrap().line_graph(), Err(Error::NoEdges));
}

#[test]
fn induced_and_local_examples() {
    let c5 = families::cycle(5).unwrap();
    let set = [0, 1, 2].into_iter().collect();
    assert_eq!(c5.induced_subgraph(set).unwrap(), common::path(3));
    let c4 = families::cycle(4).unwrap();
    assert_eq!(c4.induced_subgraph([0, 2].into_iter().collect()).unwrap(), Graph::empty(2).unwrap());
    assert_eq!(c5.local_graph(3).unwrap(), Graph::empty(2).unwrap());
    for n in 2..=9 {
        let local = Graph::complete(n).unwrap().local_graph(0).unwrap();
        assert_eq!(local, Graph::complete(n - 1).unwrap());
    }
    let with_isolated = Graph::from_edges(3, &[(0, 1)]).unwrap();
    assert_eq!(with_isolated.local_graph(2), Err(Error::IsolatedVertex(2)));
}

#[test]
fn profile_examples() {
    let p3 = common::path(3).profile();
    assert_eq!((p3.degrees, p3.valency, p3.is_connected), (vec![1, 2, 1], None, true));
    let q6 = families::q_graph(6).unwrap().profile();
    assert_eq!((q6.valency, q6.is_connected), (Some(7), true));
    let r3 = families::r_graph(3).unwrap().profile();
    assert_eq!((r3.valency, r3.is_connected), (Some(9), true));
}

#[test]
fn graph6_examples() {
    assert_eq!(encode_graph6(&Graph::complete(4).unwrap()), "C~");
    assert_eq!(encode_graph6(&common::path(3)), "Bg");
    assert_eq!(encode_graph6(&Graph::complete(1).unwrap()), "@");
    assert_eq!(decode_graph6(b"C~").unwrap(), Graph::complete(4).unwrap());
    // extended order form from 63 vertices on
    let g = Graph::empty(63).unwrap();
    let text = encode_graph6(&g);
    assert!(text.starts_with('~'));
    assert_eq!(decode_graph6(text.as_bytes()).unwrap(), g);
    assert_eq!(encode_graph6(&Graph::empty(62).unwrap()).as_bytes()[0], 62 + 63);
}
