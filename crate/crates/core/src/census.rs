//! Isomorphism classes of all graphs of a given order, independent of the
//! distance-hereditary machinery. Every graph on `n` vertices is a graph on
//! `n - 1` vertices plus one vertex with some neighborhood, so augmenting each
//! class by every neighborhood and deduplicating is complete.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;

/// Canonical representatives of every graph on exactly `n` vertices, sorted by
/// canonical form. Practical up to `n = 8`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let k0 = Graph::empty(0).unwrap();
    level.insert(canonical_form(&k0), k0);
    for k in 0..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for mask in 0u64..1 << k {
                let h = Graph::from_fn(k + 1, |u, v| {
                    if v == k {
                        mask >> u & 1 == 1
                    } else {
                        g.has_edge(u, v)
                    }
                })
                .unwrap();
                next.entry(canonical_form(&h))
                    .or_insert_with_key(|c| c.to_graph());
            }
        }
        level = next;
    }
    level.into_values().collect()
}
