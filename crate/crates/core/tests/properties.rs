use proptest::prelude::*;

use dh_cct::cct::{build_cct, find_cct_oracle, is_cct, is_two_one, minimize_witness};
use dh_cct::cliques::maximal_cliques;
use dh_cct::dh::{is_distance_hereditary, pruning_sequence, pruning_sequence_by, BuildKind};
use dh_cct::patterns::{contains_induced, is_cograph, is_split, is_threshold, NamedPattern};
use dh_cct::{canonical_form, graph6, Graph, VertexSet};

fn graph_on(n: usize) -> impl Strategy<Value = Graph> {
    prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
        let mut it = bits.into_iter();
        Graph::from_fn(n, |_, _| it.next().unwrap()).unwrap()
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(graph_on)
}

/// A distance-hereditary graph grown by random edits, with shuffled labels.
fn dh_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (
        prop::collection::vec((0usize..3, any::<prop::sample::Index>()), 0..max_n),
        any::<prop::sample::Index>(),
    )
        .prop_map(|(edits, shuffle)| {
            let mut g = Graph::empty(1).unwrap();
            for (kind, at) in edits {
                let x = at.index(g.n());
                g = match kind {
                    0 => g.add_pendant(x),
                    1 => g.add_true_twin(x),
                    _ => g.add_false_twin(x),
                }
                .unwrap();
            }
            let n = g.n();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut seed = shuffle.index(usize::MAX);
            for i in (1..n).rev() {
                perm.swap(i, seed % (i + 1));
                seed /= i + 1;
            }
            g.permute(&perm)
        })
}

fn has_cycle_dfs(g: &Graph, s: VertexSet) -> bool {
    fn visit(
        g: &Graph,
        s: VertexSet,
        v: usize,
        parent: Option<usize>,
        seen: &mut VertexSet,
    ) -> bool {
        seen.insert(v);
        for w in g.neighbors(v) & s {
            if Some(w) == parent {
                continue;
            }
            if seen.contains(w) || visit(g, s, w, Some(v), seen) {
                return true;
            }
        }
        false
    }
    let mut seen = VertexSet::EMPTY;
    s.iter()
        .any(|v| !seen.contains(v) && visit(g, s, v, None, &mut seen))
}

fn brute_cliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let cliques: Vec<VertexSet> = (0u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&s| !s.is_empty() && g.is_clique(s))
        .collect();
    let mut maximal: Vec<VertexSet> = cliques
        .iter()
        .copied()
        .filter(|&s| (0..n).all(|v| s.contains(v) || !g.sees_all(v, s)))
        .collect();
    maximal.sort_by_key(|s| s.to_vec());
    maximal
}

fn brute_contains(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == h.n() {
            return true;
        }
        for v in 0..g.n() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| h.has_edge(i, j) == g.has_edge(v, map[j])) {
                map.push(v);
                if extend(g, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(g, h, &mut Vec::new())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

proptest! {
    #[test]
    fn edits_create_the_advertised_vertex(g in graph(8), at in any::<prop::sample::Index>()) {
        let x = at.index(g.n());
        let y = g.n();
        let pendant = g.add_pendant(x).unwrap();
        prop_assert_eq!(pendant.neighbors(y), VertexSet::singleton(x));
        let t = g.add_true_twin(x).unwrap();
        prop_assert!(t.is_true_twin(x, y));
        let f = g.add_false_twin(x).unwrap();
        prop_assert!(f.is_false_twin(x, y));
        for h in [&pendant, &t, &f] {
            prop_assert_eq!(&h.delete_vertex(y), &g);
        }
    }

    #[test]
    fn distance_layers_partition_the_vertices(g in graph(10), at in any::<prop::sample::Index>()) {
        let x = at.index(g.n());
        let d = g.distance_decomposition(x).unwrap();
        let parts = [VertexSet::singleton(x), d.level1, d.level2, d.remainder];
        let mut union = VertexSet::EMPTY;
        for p in parts {
            prop_assert!(union.is_disjoint(p));
            union |= p;
        }
        prop_assert_eq!(union, g.vertices());
        prop_assert_eq!(d.level1, g.neighbors(x));
        for v in d.level2 {
            prop_assert!(!g.has_edge(x, v));
            prop_assert!(!g.neighbors(v).is_disjoint(d.level1));
        }
        for v in d.remainder {
            prop_assert!(g.neighbors(v).is_disjoint(d.level1));
        }
    }

    #[test]
    fn forest_test_matches_dfs(g in graph(10), mask in any::<u64>()) {
        let s = VertexSet::from_bits(mask) & g.vertices();
        prop_assert_eq!(g.is_forest(s), !has_cycle_dfs(&g, s));
    }

    #[test]
    fn cliques_match_brute_force(g in graph(7)) {
        prop_assert_eq!(maximal_cliques(&g), brute_cliques(&g));
    }

    #[test]
    fn induced_search_matches_brute_force(g in graph(7), which in 0usize..6) {
        let names = ["P4", "C4", "2K2", "house", "gem", "K3"];
        let h = names[which].parse::<NamedPattern>().unwrap().graph();
        let found = contains_induced(&g, &h);
        prop_assert_eq!(found.is_some(), brute_contains(&g, &h));
        if let Some(map) = found {
            for (i, &u) in map.iter().enumerate() {
                for (j, &v) in map.iter().enumerate().skip(i + 1) {
                    prop_assert_eq!(g.has_edge(u, v), h.has_edge(i, j));
                }
            }
        }
    }

    #[test]
    fn threshold_graphs_are_split_cographs(g in graph(8)) {
        if is_threshold(&g) {
            prop_assert!(is_split(&g) && is_cograph(&g));
        }
        prop_assert_eq!(is_split(&g), is_split(&g.complement()));
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(9), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            perm.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let form = canonical_form(&g);
        prop_assert_eq!(&canonical_form(&g.permute(&perm)), &form);
        let rebuilt = form.to_graph();
        prop_assert_eq!(canonical_form(&rebuilt), form);
        prop_assert_eq!(rebuilt.edge_count(), g.edge_count());
    }

    #[test]
    fn canonical_form_separates_non_isomorphic((a, b) in (1usize..=6).prop_flat_map(|n| (graph_on(n), graph_on(n)))) {
        let isomorphic = a.edge_count() == b.edge_count()
            && permutations(a.n()).iter().any(|p| a.permute(p) == b);
        prop_assert_eq!(canonical_form(&a) == canonical_form(&b), isomorphic);
    }

    #[test]
    fn graph6_round_trips(g in graph(12)) {
        let text = graph6::emit(&g);
        prop_assert_eq!(graph6::parse(&text).unwrap(), g);
    }

    #[test]
    fn any_deletion_order_prunes_a_dh_graph(g in dh_graph(12), picks in prop::collection::vec(any::<prop::sample::Index>(), 12)) {
        let mut it = picks.into_iter();
        let sequence = pruning_sequence_by(&g, |options| it.next().map_or(0, |i| i.index(options.len())))
            .unwrap()
            .expect("distance-hereditary graphs prune in any order");
        prop_assert_eq!(sequence.reconstruct(), g);
    }

    #[test]
    fn pruning_sequences_rebuild_the_input(g in graph(8)) {
        match pruning_sequence(&g).unwrap() {
            Some(sequence) => {
                prop_assert_eq!(sequence.reconstruct(), g.clone());
                prop_assert_eq!(sequence.len(), g.n());
                prop_assert_eq!(sequence.steps()[0].kind, BuildKind::Initial);
            }
            None => prop_assert!(!is_distance_hereditary(&g)),
        }
    }

    #[test]
    fn induced_subgraphs_stay_distance_hereditary(g in dh_graph(12), mask in any::<u64>()) {
        let s = VertexSet::from_bits(mask) & g.vertices();
        prop_assert!(is_distance_hereditary(&g.induced_subgraph(s).graph));
    }

    #[test]
    fn cct_is_hereditary_and_closed_upward(g in graph(9), at in any::<prop::sample::Index>()) {
        if let Some(t) = find_cct_oracle(&g) {
            let v = at.index(g.n());
            prop_assert!(find_cct_oracle(&g.delete_vertex(v)).is_some());
            let small = minimize_witness(&g, t);
            prop_assert!(is_cct(&g, small));
            for k in maximal_cliques(&g) {
                if small.is_subset(k) {
                    prop_assert!(is_cct(&g, k));
                }
            }
        }
    }

    #[test]
    fn no_odd_cycle_clique_means_no_cct(g in graph(9)) {
        if is_two_one(&g).is_none() {
            prop_assert!(find_cct_oracle(&g).is_none());
        }
    }

    #[test]
    fn builder_agrees_with_oracle_on_larger_graphs(g in dh_graph(16)) {
        let report = build_cct(&g).unwrap();
        prop_assert_eq!(report.witness.is_some(), find_cct_oracle(&g).is_some());
        if let Some(t) = report.witness {
            prop_assert!(is_cct(&g, t));
        }
    }
}
