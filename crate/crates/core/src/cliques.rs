use crate::graph::Graph;
use crate::set::VertexSet;

/// All maximal cliques, sorted lexicographically by their ascending vertex lists.
///
/// Bron–Kerbosch with Tomita pivoting over bitsets. The edgeless graph on
/// zero vertices has the single maximal clique `{}`.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    expand(
        g,
        VertexSet::EMPTY,
        g.vertices(),
        VertexSet::EMPTY,
        &mut out,
    );
    out.sort_by_cached_key(|c| c.to_vec());
    out
}

/// Maximal cliques of the subgraph induced by `within`, as host vertex sets.
pub fn maximal_cliques_in(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    expand(g, VertexSet::EMPTY, within, VertexSet::EMPTY, &mut out);
    out.sort_by_cached_key(|c| c.to_vec());
    out
}

fn expand(
    g: &Graph,
    clique: VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if candidates.is_empty() {
        if excluded.is_empty() {
            out.push(clique);
        }
        return;
    }
    let pivot = (candidates | excluded)
        .iter()
        .max_by_key(|&u| (g.neighbors(u) & candidates).len())
        .expect("nonempty");
    for v in candidates - g.neighbors(pivot) {
        let nv = g.neighbors(v);
        expand(g, clique.with(v), candidates & nv, excluded & nv, out);
        candidates.remove(v);
        excluded.insert(v);
    }
}
