mod common;

use std::collections::{BTreeMap, BTreeSet};

use primegraph::smallgraph::{
    canonical, complement, components, induced, parse_graph, rooted_canonical, three_colorable, to_dot, to_text,
    triangles, PrimeGraph,
};
use primegraph::Error;
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = PrimeGraph> {
    (1usize..=7).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let vs = &common::LABELS[..n];
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 0..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((vs[i], vs[j]));
                    }
                    k += 1;
                }
            }
            common::graph(vs, &edges)
        })
    })
}

fn arb_graph_and_perm() -> impl Strategy<Value = (PrimeGraph, Vec<u64>)> {
    arb_graph().prop_flat_map(|g| {
        let targets: Vec<u64> = [23u64, 29, 31, 37, 41, 43, 47][..g.order()].to_vec();
        (Just(g), Just(targets).prop_shuffle())
    })
}

fn relabel(g: &PrimeGraph, targets: &[u64]) -> PrimeGraph {
    let map: BTreeMap<u64, u64> = g.vertices().iter().copied().zip(targets.iter().copied()).collect();
    g.relabel(&map).unwrap()
}

proptest! {
    #[test]
    fn canonical_form_is_relabeling_invariant((g, perm) in arb_graph_and_perm()) {
        let h = relabel(&g, &perm);
        prop_assert_eq!(canonical(&g), canonical(&h));
        let root = *g.vertices().iter().next().unwrap();
        let image = perm[0];
        prop_assert_eq!(rooted_canonical(&g, root).unwrap(), rooted_canonical(&h, image).unwrap());
    }

    #[test]
    fn text_format_round_trips(g in arb_graph()) {
        let root = g.vertices().iter().next().copied();
        let (back, r) = parse_graph(&to_text(&g, root)).unwrap();
        prop_assert_eq!(back, g);
        prop_assert_eq!(r, root);
    }

    #[test]
    fn coloring_agrees_with_exhaustive_search(g in arb_graph()) {
        let none = BTreeSet::new();
        let found = three_colorable(&g, None);
        prop_assert_eq!(found.is_some(), common::brute_three_colorable(&g, &none));
        if let Some(c) = found {
            prop_assert!(c.is_proper(&g));
        }
    }

    #[test]
    fn mono_class_coloring_agrees_with_exhaustive_search(g in arb_graph(), pick in any::<u8>()) {
        let forced: BTreeSet<u64> =
            g.vertices().iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|(_, &v)| v).collect();
        let found = three_colorable(&g, Some(&forced));
        prop_assert_eq!(found.is_some(), common::brute_three_colorable(&g, &forced));
    }

    #[test]
    fn triangle_free_agrees_with_brute_force(g in arb_graph()) {
        prop_assert_eq!(g.is_triangle_free(), common::brute_triangle_free(&g));
        prop_assert_eq!(triangles(&g).is_empty(), g.is_triangle_free());
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph()) {
        let c = complement(&g);
        prop_assert_eq!(complement(&c), g.clone());
        let n = g.order();
        prop_assert_eq!(g.edges().len() + c.edges().len(), n * (n - 1) / 2);
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph()) {
        let parts = components(&g);
        let union: BTreeSet<u64> = parts.iter().flatten().copied().collect();
        prop_assert_eq!(&union, g.vertices());
        prop_assert_eq!(parts.iter().map(BTreeSet::len).sum::<usize>(), g.order());
        for p in &parts {
            let sub = induced(&g, p);
            prop_assert_eq!(components(&sub).len(), 1);
        }
    }
}

#[test]
fn isomorphism_class_counts_match_known_values() {
    // Number of graphs on n unlabeled vertices (OEIS A000088).
    let known = [1, 2, 4, 11, 34, 156];
    for (n, &want) in (1..=6).zip(&known) {
        let ours = common::brute_isomorphism_classes(n);
        assert_eq!(ours.len(), want, "n = {n}");
        let lib = primegraph::classify::graphs_of_order(n);
        let a: BTreeSet<_> = ours.iter().map(canonical).collect();
        let b: BTreeSet<_> = lib.iter().map(canonical).collect();
        assert_eq!(a, b, "n = {n}");
    }
}

#[test]
fn rooted_class_counts() {
    // Rooted graphs on n vertices (OEIS A000666).
    for (n, want) in [(1, 1), (2, 2), (3, 6), (4, 20), (5, 90)] {
        let lib = primegraph::classify::rooted_graphs_of_order(n);
        assert_eq!(lib.len(), want, "n = {n}");
        // Brute force: rooted classes of every unrooted class, one per root orbit.
        let mut shapes = BTreeSet::new();
        for g in common::brute_isomorphism_classes(n) {
            for &v in g.vertices() {
                shapes.insert(rooted_canonical(&g, v).unwrap());
            }
        }
        assert_eq!(shapes.len(), want, "n = {n}");
    }
}

#[test]
fn parser_rejects_bad_input() {
    let cases = [
        "edge: 2 3\n",
        "vertices: 2,3\nedge: 2 4\n",
        "vertices: 2,4\n",
        "vertices: 2,3\nedge: 2\n",
        "vertices: 2,3\nroot: 5\n",
        "vertices: 2,3\nfoo: 1\n",
        "vertices: 2,3\nedge: 2 2\n",
    ];
    for text in cases {
        match parse_graph(text) {
            Err(Error::Parse { .. }) | Err(Error::InvalidParameter(_)) => {}
            other => panic!("{text:?} parsed as {other:?}"),
        }
    }
}

#[test]
fn comments_and_blank_lines_are_ignored() {
    let (g, root) = parse_graph("# diamond\nvertices: 2,3,5,17\n\nedge: 2 3 # note\nedge: 2 5\nroot: 17\n").unwrap();
    assert_eq!(g.edges().len(), 2);
    assert_eq!(root, Some(17));
}

#[test]
fn dot_marks_the_root() {
    let g = common::graph(&[2, 3], &[(2, 3)]);
    let dot = to_dot(&g, Some(3));
    assert!(dot.starts_with("graph pgc {"));
    assert!(dot.contains("\"3\" [label=\"3\", peripheries=2]"));
    assert!(dot.contains("\"2\" -- \"3\""));
}

#[test]
fn petersen_is_triangle_free_and_three_chromatic() {
    let outer = [2u64, 3, 5, 7, 11];
    let inner = [13u64, 17, 19, 23, 29];
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((outer[i], outer[(i + 1) % 5]));
        edges.push((inner[i], inner[(i + 2) % 5]));
        edges.push((outer[i], inner[i]));
    }
    let vs: Vec<u64> = outer.iter().chain(&inner).copied().collect();
    let g = common::graph(&vs, &edges);
    assert!(g.is_triangle_free());
    assert!(three_colorable(&g, None).is_some());
}
