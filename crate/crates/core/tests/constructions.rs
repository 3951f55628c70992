use amoeba_core::canon::is_isomorphic;
use amoeba_core::classifier::{self, Limits};
use amoeba_core::constructions::*;
use amoeba_core::replacement::{amoeba_group, feasible_replacements};
use amoeba_core::{Graph, Permutation};

#[test]
fn expansion_lift_realises_a_replacement() {
    let p5 = path(5).unwrap();
    // 45 -> 15 in P5 is realised by (1 4)(2 3), which stabilises {2, 3}
    let sigma = Permutation::parse("(1 4)(2 3)", 5).unwrap();
    assert_eq!(p5.apply_permutation(&sigma).unwrap(), p5.replace_edge((3, 4), (0, 4)).unwrap());
    let h = RootedGraph::new(Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3), (0, 2)]).unwrap(), 0).unwrap();
    let exp = expand(&p5, &[1, 2], &h).unwrap();
    let lifted = lift_expansion_perm(&sigma, &exp).unwrap();
    let g = &exp.graph;
    assert_eq!(g.apply_permutation(&lifted).unwrap(), g.replace_edge((3, 4), (0, 4)).unwrap());
    assert!(amoeba_group(g).contains(&lifted).unwrap());
    assert!(is_isomorphic(&g.apply_permutation(&lifted).unwrap(), g));
}

#[test]
fn subgraph_lift_realises_a_replacement() {
    // G' on 1..6 where 12 -> 13 swaps the roles of 2 and 3; G'' on 4..9
    let g1 = Graph::from_one_based(6, &[(1, 2), (2, 4), (3, 4), (4, 5), (5, 6)]).unwrap();
    let sigma = Permutation::parse("(2 3)", 6).unwrap();
    assert_eq!(g1.apply_permutation(&sigma).unwrap(), g1.replace_edge((0, 1), (0, 2)).unwrap());
    let g = Graph::from_one_based(9, &[(1, 2), (2, 4), (3, 4), (4, 5), (5, 6), (4, 7), (7, 8), (8, 9), (6, 9)]).unwrap();
    let j1: Vec<usize> = (0..6).collect();
    let j2: Vec<usize> = (3..9).collect();
    let lifted = lift_subgraph_perm(&sigma, &j1, &j2).unwrap();
    assert_eq!(g.apply_permutation(&lifted).unwrap(), g.replace_edge((0, 1), (0, 2)).unwrap());
    assert!(feasible_replacements(&g).iter().any(|r| r.source == (0, 1) && r.target == (0, 2)));
}

#[test]
fn expansion_copies_map_back_onto_h() {
    let h = fib_tree(4).unwrap();
    let exp = expand(&cycle(5).unwrap(), &[0, 2, 3], &h).unwrap();
    assert_eq!(exp.graph.order(), 5 + 3 * 5);
    for l in 0..3 {
        let map = exp.copy_map(l);
        let mut sorted = map.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), h.graph.order());
        assert_eq!(exp.graph.induced(&map), h.graph);
    }
}

#[test]
fn constructed_unions_are_global() {
    let lim = Limits::default();
    let g = union_copy_plus_edge(&path(3).unwrap(), &[0, 1, 2], (0, 2)).unwrap();
    assert!(classifier::is_global_amoeba(&g, &lim).unwrap());
    let g = embed_as_component(&path(3).unwrap()).unwrap();
    assert!(classifier::is_global_amoeba(&g, &lim).unwrap());
    let g = embed_as_component(&cycle(3).unwrap()).unwrap();
    assert!(classifier::is_global_amoeba(&g, &Limits::with_max_n(12)).unwrap());
    let c4 = cycle(4).unwrap().with_isolates(1);
    let g = union_copy_minus_edge(&tadpole(4).unwrap(), &[0, 1, 2, 3, 4], (0, 4)).unwrap();
    assert!(is_isomorphic(&g, &tadpole(4).unwrap().disjoint_union(&c4)));
    assert!(classifier::is_global_amoeba(&g, &Limits::with_max_n(12)).unwrap());
    assert!(!classifier::is_global_amoeba(&c4, &lim).unwrap());
}
