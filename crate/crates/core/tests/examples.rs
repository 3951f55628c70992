//! Worked examples for each operation, one test per area. Values that are
//! not read directly off a definition are recomputed here by brute force.

use std::collections::HashSet;

use amoeba_core::canon::{automorphisms, canonical_form, enumerate_isomorphisms, is_isomorphic};
use amoeba_core::classifier::{self, Limits};
use amoeba_core::constructions::*;
use amoeba_core::graph::{chromatic_number, clique_number, welsh_powell_bound, DEFAULT_EXACT_CAP};
use amoeba_core::oracle::{self, enumerate_copies, expected_copy_count, replacement_reachability, DEFAULT_BUDGET};
use amoeba_core::replacement::{amoeba_group, feasible_replacements, generator_set, replacement_coset};
use amoeba_core::{Error, Graph, PermGroup, Permutation};
use num_bigint::BigUint;

const CAP: usize = 100_000;

fn g1(n: usize, pairs: &[(usize, usize)]) -> Graph {
    Graph::from_one_based(n, pairs).unwrap()
}

fn perm(s: &str, n: usize) -> Permutation {
    Permutation::parse(s, n).unwrap()
}

fn strings(ps: &[Permutation]) -> Vec<String> {
    let mut v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    v.sort();
    v
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn all_perms(n: usize) -> Vec<Permutation> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..n).filter(|x| !p.contains(x)).map(|x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                }).collect::<Vec<_>>()
            })
            .collect();
    }
    out.into_iter().map(|p| Permutation::from_images(p).unwrap()).collect()
}

fn closure(n: usize, gens: &[Permutation]) -> usize {
    let id = Permutation::identity(n);
    let mut seen = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = p.compose(g);
            if seen.insert(q.clone()) {
                stack.push(q);
            }
        }
    }
    seen.len()
}

fn copies(g: &Graph, t: usize) -> Graph {
    (1..t).fold(g.clone(), |acc, _| acc.disjoint_union(g))
}

#[test]
fn graph_basics() {
    let p4 = g1(4, &[(1, 2), (2, 3), (3, 4)]);
    assert_eq!(p4.edges(), &[(0, 1), (1, 2), (2, 3)]);
    assert_eq!(g1(3, &[]).size(), 0);
    assert!(matches!(Graph::from_one_based(4, &[(1, 2), (1, 2)]), Err(Error::DuplicateEdge { .. })));
    assert_eq!(p4.apply_permutation(&perm("(2 4)", 4)).unwrap(), g1(4, &[(2, 3), (3, 4), (1, 4)]));
    assert_eq!(p4.apply_permutation(&Permutation::identity(4)).unwrap(), p4);
    assert_eq!(p4.apply_permutation(&perm("(1 4)(2 3)", 4)).unwrap(), p4);
    assert_eq!(Graph::complete(4).complement(), Graph::empty(4));
    let c5 = cycle(5).unwrap();
    assert!(is_isomorphic(&c5.complement(), &c5));
    for n in 3..=8 {
        let dual = h_graph(n - 1).unwrap().with_isolates(1).complement();
        assert!(is_isomorphic(&dual, &h_graph(n).unwrap()));
    }
    let p2 = path(2).unwrap();
    let two_k2 = p2.disjoint_union(&p2);
    assert_eq!((two_k2.order(), two_k2.size()), (4, 2));
    assert_eq!(p4.with_isolates(1).order(), 5);
    assert_eq!(p4.with_isolates(1).edges(), p4.edges());
    let p3c3 = path(3).unwrap().disjoint_union(&cycle(3).unwrap());
    assert_eq!((p3c3.order(), p3c3.size()), (6, 5));
}

#[test]
fn isomorphism_examples() {
    let p4 = path(4).unwrap();
    let k13 = star(4).unwrap();
    for s in all_perms(4) {
        assert!(is_isomorphic(&p4, &p4.apply_permutation(&s).unwrap()));
    }
    assert!(!is_isomorphic(&k13, &p4));
    assert!(is_isomorphic(&p4.replace_edge((0, 1), (0, 3)).unwrap(), &p4));
    let g2 = g1(4, &[(1, 3), (2, 3), (2, 4)]);
    assert_eq!(strings(&enumerate_isomorphisms(&p4, &g2, CAP).unwrap()), ["(1 4)", "(2 3)"]);
    assert_eq!(strings(&enumerate_isomorphisms(&p4, &p4, CAP).unwrap()), ["()", "(1 4)(2 3)"]);
    assert!(enumerate_isomorphisms(&k13, &p4, CAP).unwrap().is_empty());
    assert_eq!(automorphisms(&cycle(5).unwrap(), CAP).unwrap().len(), 10);
    assert_eq!(automorphisms(&Graph::complete(4), CAP).unwrap().len(), 24);
}

#[test]
fn canonical_forms_separate_the_four_vertex_classes() {
    let p4 = path(4).unwrap();
    let s = perm("(1 3 2)", 4);
    assert_eq!(canonical_form(&p4), canonical_form(&p4.apply_permutation(&s).unwrap()));
    assert_ne!(canonical_form(&cycle(4).unwrap()), canonical_form(&star(4).unwrap()));
    // partition all 64 labelled graphs by exhaustive permutation testing
    let perms = all_perms(4);
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut reps: Vec<Graph> = Vec::new();
    let mut keys = HashSet::new();
    for mask in 0u32..64 {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(4, &edges).unwrap();
        keys.insert(canonical_form(&g));
        if !reps.iter().any(|r| perms.iter().any(|s| r.apply_permutation(s).unwrap() == g)) {
            reps.push(g);
        }
    }
    assert_eq!(reps.len(), 11);
    assert_eq!(keys.len(), 11);
}

#[test]
fn parameters() {
    let mut h5 = h_graph(5).unwrap().degree_sequence();
    h5.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(h5, [4, 3, 2, 2, 1]);
    assert_eq!(Graph::complete(4).degree_sequence(), [3, 3, 3, 3]);
    let mut g9 = g_graph(9).unwrap().degree_sequence();
    g9.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(g9, [7, 6, 5, 5, 4, 3, 2, 1, 1]);
    assert_eq!(welsh_powell_bound(&Graph::complete(4)), 4);
    assert_eq!(welsh_powell_bound(&Graph::empty(5)), 1);
    // H_6 degrees (5,4,3,3,2,1): max_i min(d_i + 1, i) = 4
    let h6 = h_graph(6).unwrap();
    let mut d = h6.degree_sequence();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let by_hand = d.iter().enumerate().map(|(i, &x)| (x + 1).min(i + 1)).max().unwrap();
    assert_eq!(welsh_powell_bound(&h6), by_hand);
    assert_eq!(by_hand, 4);
    for n in 2..=10 {
        assert_eq!(clique_number(&h_graph(n).unwrap(), DEFAULT_EXACT_CAP).unwrap(), n / 2 + 1);
    }
    let c5 = cycle(5).unwrap();
    assert_eq!(clique_number(&c5, DEFAULT_EXACT_CAP).unwrap(), 2);
    assert_eq!(chromatic_number(&c5, DEFAULT_EXACT_CAP).unwrap(), 3);
    assert_eq!(clique_number(&Graph::complete(4), DEFAULT_EXACT_CAP).unwrap(), 4);
    assert_eq!(chromatic_number(&Graph::complete(4), DEFAULT_EXACT_CAP).unwrap(), 4);
}

#[test]
fn group_examples() {
    let sym = |n: usize| {
        let cycle: Vec<usize> = (0..n).collect();
        PermGroup::new(
            n,
            &[
                Permutation::transposition(n, 0, 1).unwrap(),
                Permutation::from_cycles(n, &[&cycle]).unwrap(),
            ],
        )
        .unwrap()
    };
    assert_eq!(sym(10).order(), big(3_628_800));
    assert_eq!(PermGroup::new(3, &[perm("(1 2 3)", 3)]).unwrap().order(), big(3));
    assert_eq!(PermGroup::new(4, &[perm("(1 4)(2 3)", 4)]).unwrap().order(), big(2));
    assert_eq!(amoeba_group(&path(4).unwrap()).order(), big(24));
    let c5 = cycle(5).unwrap();
    assert_eq!(amoeba_group(&c5).order(), big(closure(5, &generator_set(&c5)) as u64));
    assert_eq!(amoeba_group(&c5).order(), big(10));
    assert_eq!(PermGroup::trivial(4).order(), big(1));

    let s9 = amoeba_group(&g_graph(9).unwrap());
    assert_eq!(s9.orbits(), vec![(0..8).collect::<Vec<_>>(), vec![8]]);
    assert_eq!(sym(6).orbit(0).unwrap(), (0..6).collect::<Vec<_>>());
    assert_eq!(PermGroup::new(5, &[perm("(1 2 3)", 5)]).unwrap().orbit(3).unwrap(), [3]);
    // (q 2q) with q = 4
    assert!(s9.contains(&perm("(4 8)", 9)).unwrap());

    assert_eq!(sym(4).stabilizer(3).unwrap().order(), big(6));
    assert_eq!(PermGroup::trivial(3).stabilizer(1).unwrap().order(), big(1));
    let c5p = amoeba_group(&c5_plus()).stabilizer(4).unwrap();
    assert!(c5p.is_transitive_on(&[0, 1, 2, 3]).unwrap());

    let g = PermGroup::new(3, &[perm("(1 2)", 3), perm("(1 2 3)", 3)]).unwrap();
    assert!(g.contains(&perm("(1 2)", 3)).unwrap());
    let c3 = PermGroup::new(3, &[perm("(1 2 3)", 3)]).unwrap();
    assert!(!c3.contains(&perm("(1 2)", 3)).unwrap());

    assert!(amoeba_group(&path(4).unwrap()).is_symmetric());
    assert!(!amoeba_group(&cycle(4).unwrap()).is_symmetric());
    assert!(sym(8).is_symmetric());

    // T_5 is local, so the stabiliser of its root is transitive on the rest
    let t5 = fib_tree(5).unwrap();
    let stab = amoeba_group(&t5.graph).stabilizer(t5.root).unwrap();
    let rest: Vec<usize> = (0..10).filter(|&v| v != t5.root).collect();
    assert!(stab.is_transitive_on(&rest).unwrap());
    assert!(c3.is_transitive_on(&[2]).unwrap());
    let swap = PermGroup::new(3, &[perm("(1 2)", 3)]).unwrap();
    assert!(swap.is_transitive_on(&[0, 1]).unwrap());

    let sp2 = amoeba_group(&path(2).unwrap());
    let prod = PermGroup::direct_product(&sp2.embed(0, 4).unwrap(), &sp2.embed(2, 4).unwrap()).unwrap();
    let gens: Vec<Permutation> = prod.generators().to_vec();
    assert_eq!(prod.order(), big(closure(4, &gens) as u64));
    assert_eq!(prod.order(), big(4));
    let b = amoeba_group(&path(3).unwrap());
    let with_trivial = PermGroup::direct_product(&PermGroup::trivial(5), &b.embed(2, 5).unwrap()).unwrap();
    assert_eq!(with_trivial.order(), b.order());
}

#[test]
fn replacement_examples() {
    let p4 = path(4).unwrap();
    assert_eq!(feasible_replacements(&p4).len(), 8);
    // C_4: every (edge, non-edge) pair checked directly
    let c4 = cycle(4).unwrap();
    let reps = feasible_replacements(&c4);
    assert!(reps.len() == 4 && reps.iter().all(|r| r.trivial));
    for &e in c4.edges() {
        for (k, l) in [(0, 2), (1, 3)] {
            assert!(!is_isomorphic(&c4.replace_edge(e, (k, l)).unwrap(), &c4));
        }
    }
    for n in 2..=6 {
        let reps = feasible_replacements(&Graph::complete(n));
        assert_eq!(reps.len(), n * (n - 1) / 2);
        assert!(reps.iter().all(|r| r.trivial));
    }
    let rep = feasible_replacements(&p4).into_iter().find(|r| r.target == (0, 3) && r.source == (0, 1)).unwrap();
    assert_eq!(strings(&replacement_coset(&p4, &rep, CAP).unwrap()), ["(1 4 3 2)", "(2 4)"]);
    // an asymmetric graph: trivial cosets are {id}
    let asym = oracle::graph_classes(6)
        .unwrap()
        .into_iter()
        .find(|g| g.size() > 0 && automorphisms(g, CAP).unwrap().len() == 1)
        .unwrap();
    for r in feasible_replacements(&asym).iter().filter(|r| r.trivial) {
        assert_eq!(strings(&replacement_coset(&asym, r, CAP).unwrap()), ["()"]);
    }
    assert_eq!(closure(4, &generator_set(&p4)), 24);
    assert_eq!(closure(5, &generator_set(&cycle(5).unwrap())), 10);
    assert_eq!(amoeba_group(&Graph::empty(5)).order(), big(120));
    assert_eq!(amoeba_group(&c4).order(), big(closure(4, &generator_set(&c4)) as u64));
    assert_eq!(amoeba_group(&c4).order(), big(8));
}

#[test]
fn prefilters() {
    use classifier::{global_degree_prefilter as global, local_degree_prefilter as local};
    assert!(!local(&star(4).unwrap()));
    assert!(local(&path(5).unwrap()));
    assert!(local(&h_graph(7).unwrap()));
    assert!(!global(&cycle(4).unwrap()));
    assert!(!global(&complete_minus_matching(4, 1).unwrap()));
    assert!(global(&path(4).unwrap()));
}

#[test]
fn classifier_examples() {
    let lim = Limits::default();
    let local = |g: &Graph| classifier::is_local_amoeba(g, &lim).unwrap();
    let global = |g: &Graph| classifier::is_global_amoeba(g, &lim).unwrap();
    for k in 2..=9 {
        assert!(local(&path(k).unwrap()) && global(&path(k).unwrap()));
    }
    for k in 4..=9 {
        assert!(!local(&cycle(k).unwrap()));
    }
    assert!(local(&fib_tree(5).unwrap().graph));
    assert!(local(&c5_plus()));
    for (t, ns) in [(1, 4..=7), (2, 5..=7)] {
        for n in ns {
            assert!(local(&complete_minus_matching(n, t).unwrap()), "K_{n} - {t}K_2");
        }
    }
    for t in 2..=3 {
        for k in 2..=3 {
            assert!(!local(&copies(&path(k).unwrap(), t)));
        }
    }
    assert!(global(&g_graph(9).unwrap()));
    assert!(!global(&complete_minus_matching(4, 1).unwrap()));
    assert!(!global(&c5_plus()));
    assert!(!global(&g_graph(9).unwrap().with_isolates(1).complement()));
    assert!(global(&path(3).unwrap().disjoint_union(&cycle(3).unwrap())));
    for n in 1..=5 {
        assert!(global(&Graph::empty(n)));
    }

    let d = classifier::degree_decrement_check(&g_graph(9).unwrap(), &lim).unwrap();
    assert!(d.holds);
    assert!(d.witnesses.iter().all(|w| w.1.is_some()));
    assert!(!classifier::degree_decrement_check(&cycle(4).unwrap(), &lim).unwrap().holds);

    let h6 = classifier::classify(&h_graph(6).unwrap(), &lim).unwrap();
    assert!(h6.is_local && h6.is_global);
    assert_eq!(h6.group_order, big(720));
    let two_p3 = classifier::classify(&copies(&path(3).unwrap(), 2), &lim).unwrap();
    assert!(!two_p3.is_local && two_p3.is_global);
    let k13 = classifier::classify(&star(4).unwrap(), &lim).unwrap();
    assert!(!k13.is_local && !k13.is_global);
}

#[test]
fn bound_examples() {
    let lim = Limits::default();
    for n in 2..=10 {
        let b = classifier::verify_extremal_bounds(&h_graph(n).unwrap(), &lim).unwrap();
        assert!(b.applicable && b.edges.tight);
        let c = b.colouring.unwrap();
        assert!(c.tight && c.clique_number == c.chromatic_number);
    }
    let forest = star_forest(3).unwrap();
    assert_eq!((forest.order(), forest.size()), (7, 5));
    let b = classifier::verify_extremal_bounds(&forest, &lim).unwrap();
    let d = b.max_degree.unwrap();
    assert!(b.applicable && d.value == 3 && d.tight);
    let b = classifier::verify_extremal_bounds(&g_graph(9).unwrap(), &lim).unwrap();
    let c = b.colouring.unwrap();
    assert_eq!((c.clique_number, c.chromatic_number), (5, 5));
    assert!(b.edges.value < 20);
}

#[test]
fn construction_examples() {
    let h5 = h_graph(5).unwrap();
    assert_eq!(h5.size(), 6);
    assert_eq!(h_graph(2).unwrap(), Graph::complete(2));
    assert!(g_graph(7).is_err());
    assert!(classifier::is_global_amoeba(&g_graph(9).unwrap(), &Limits::default()).unwrap());
    let t5 = fib_tree(5).unwrap().graph;
    assert_eq!((t5.order(), t5.max_degree()), (10, 4));
    assert_eq!(fib_tree(1).unwrap().graph, Graph::complete(2));
    let t6 = fib_tree(6).unwrap().graph;
    assert_eq!((t6.order(), t6.size()), (16, 15));
    assert!(t6.is_connected());

    // P5 with K_{1,3} + e glued at 2 and 3
    let h = RootedGraph::new(g1(4, &[(1, 2), (2, 3), (2, 4), (1, 3)]), 0).unwrap();
    let exp = expand(&path(5).unwrap(), &[1, 2], &h).unwrap();
    assert_eq!(exp.graph.order(), 11);
    let lifted = lift_expansion_perm(&perm("(1 4)(2 3)", 5), &exp).unwrap();
    assert_eq!(lifted.to_string(), "(1 4)(2 3)(6 9)(7 10)(8 11)");
    assert!(is_isomorphic(&exp.graph.apply_permutation(&lifted).unwrap(), &exp.graph));
    let stabilising = lift_expansion_perm(&perm("(1 5)", 5), &exp).unwrap();
    assert_eq!(stabilising.to_string(), "(1 5)");
    assert_eq!(expand(&path(5).unwrap(), &[], &h).unwrap().graph, path(5).unwrap());
    let k2 = RootedGraph::new(Graph::complete(2), 0).unwrap();
    assert_eq!(expand(&Graph::empty(1), &[0], &k2).unwrap().graph, Graph::complete(2));

    let j1: Vec<usize> = (0..6).collect();
    let j2: Vec<usize> = (3..9).collect();
    assert_eq!(lift_subgraph_perm(&perm("(2 3)", 6), &j1, &j2).unwrap().to_string(), "(2 3)");
    assert!(lift_subgraph_perm(&Permutation::identity(6), &j1, &j2).unwrap().is_identity());
    assert!(lift_subgraph_perm(&perm("(4 5)", 6), &j1, &j2).is_err());

    let p3 = path(3).unwrap();
    let g = union_copy_plus_edge(&p3, &[0, 1, 2], (0, 2)).unwrap();
    assert!(is_isomorphic(&g, &p3.disjoint_union(&cycle(3).unwrap())));
    assert!(union_copy_plus_edge(&p3, &[0, 1, 2], (0, 1)).is_err());

    let k4 = embed_as_component(&Graph::complete(4)).unwrap();
    assert_eq!(k4.components().len(), 7);
    assert!(k4.components().iter().any(|c| k4.induced(c) == Graph::complete(4)));
    assert_eq!(embed_as_component(&Graph::empty(1)).unwrap(), Graph::empty(1));
    let e3 = embed_as_component(&p3).unwrap();
    assert_eq!(e3.order(), 6);
    assert!(is_isomorphic(&e3, &Graph::empty(1).disjoint_union(&path(2).unwrap()).disjoint_union(&p3)));

    let tp = tadpole(3).unwrap();
    assert_eq!((tp.order(), tp.size()), (4, 4));
    let mut km = complete_minus_matching(5, 2).unwrap().degree_sequence();
    km.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(km, [4, 3, 3, 3, 3]);
}

#[test]
fn oracle_examples() {
    let perms4 = all_perms(4);
    let distinct = |g: &Graph| {
        perms4.iter().map(|s| g.apply_permutation(s).unwrap()).collect::<HashSet<_>>().len()
    };
    let p4 = path(4).unwrap();
    assert_eq!(enumerate_copies(&p4, 4, DEFAULT_BUDGET).unwrap().len(), distinct(&p4));
    assert_eq!(distinct(&p4), 12);
    assert_eq!(enumerate_copies(&Graph::complete(3), 3, DEFAULT_BUDGET).unwrap().len(), 1);
    let p3 = path(3).unwrap();
    assert_eq!(distinct(&p3.with_isolates(1)), 12);
    assert_eq!(enumerate_copies(&p3, 4, DEFAULT_BUDGET).unwrap().len(), 12);
    assert_eq!(expected_copy_count(&p3, 4).unwrap(), big(12));

    assert_eq!(replacement_reachability(&p4, 4, DEFAULT_BUDGET).unwrap().components(), 1);
    assert_eq!(replacement_reachability(&cycle(4).unwrap(), 4, DEFAULT_BUDGET).unwrap().components(), 3);
    let two_k2 = copies(&path(2).unwrap(), 2);
    let r = replacement_reachability(&two_k2, 4, DEFAULT_BUDGET).unwrap();
    assert_eq!(r.connected(), classifier::is_local_amoeba(&two_k2, &Limits::default()).unwrap());

    let verdicts = |g: &Graph| {
        (
            oracle::oracle_is_local(g, DEFAULT_BUDGET).unwrap(),
            oracle::oracle_is_global(g, DEFAULT_BUDGET).unwrap(),
        )
    };
    assert_eq!(verdicts(&p4), (true, true));
    assert_eq!(verdicts(&cycle(4).unwrap()), (false, false));
    assert_eq!(verdicts(&complete_minus_matching(4, 1).unwrap()), (true, false));

    let one = oracle::sweep(1, &Limits::default(), DEFAULT_BUDGET).unwrap();
    assert_eq!(one.len(), 1);
    assert_eq!((one[0].oracle.local, one[0].oracle.global), (true, true));
    assert!(one[0].matches());
}
