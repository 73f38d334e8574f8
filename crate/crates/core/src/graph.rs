//! Simple undirected graphs on vertices `0..n`, `n <= 62`.
//!
//! Adjacency is one 64-bit row per vertex, so every neighborhood is a
//! [`VertexSet`] and set queries are word operations. Graphs are immutable
//! once built: the twin and pendant edits return a new graph whose extra
//! vertex is always `n`.

use std::fmt;

use crate::error::{Error, Result, MAX_VERTICES};
use crate::set::VertexSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.set_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_subset(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices()).min() {
            None => Ok(()),
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            }),
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degree of `v` inside the induced subgraph on `s`.
    #[inline]
    pub fn degree_in(&self, v: usize, s: VertexSet) -> usize {
        (self.adj[v] & s).len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Number of edges with both ends in `s`.
    pub fn edge_count_in(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s).len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.adj[v]))
    }

    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Whether `v` is adjacent to every vertex of `s` other than itself.
    #[inline]
    pub fn sees_all(&self, v: usize, s: VertexSet) -> bool {
        s.without(v).is_subset(self.adj[v])
    }

    pub fn is_true_twin(&self, u: usize, v: usize) -> bool {
        u != v && self.closed_neighbors(u) == self.closed_neighbors(v)
    }

    pub fn is_false_twin(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u] == self.adj[v]
    }

    pub fn is_twin(&self, u: usize, v: usize) -> bool {
        self.is_true_twin(u, v) || self.is_false_twin(u, v)
    }

    /// Vertex sets of the connected components of the subgraph induced by `s`,
    /// ordered by their smallest vertex.
    pub fn components(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s;
        let mut out = Vec::new();
        while let Some(start) = rest.min() {
            let comp = self.reach(start, s);
            rest -= comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `s` (`start` must lie in `s`).
    pub fn reach(&self, start: usize, s: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            next &= s - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True iff the subgraph induced by `s` is acyclic.
    pub fn is_forest(&self, s: VertexSet) -> bool {
        let components = self.components(s).len();
        self.edge_count_in(s) + components == s.len()
    }

    /// True iff the subgraph induced by `s` is bipartite.
    pub fn is_bipartite(&self, s: VertexSet) -> bool {
        let mut rest = s;
        while let Some(start) = rest.min() {
            let mut sides = [VertexSet::singleton(start), VertexSet::EMPTY];
            let mut frontier = sides[0];
            let mut side = 0;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next |= self.adj[v];
                }
                next &= s;
                if !next.is_disjoint(sides[side]) {
                    return false;
                }
                side ^= 1;
                next -= sides[side];
                sides[side] |= next;
                frontier = next;
            }
            rest -= sides[0] | sides[1];
        }
        true
    }

    /// Breadth-first distance levels around `x`.
    pub fn distance_decomposition(&self, x: usize) -> Result<DistanceDecomposition> {
        self.check_vertex(x)?;
        let level1 = self.adj[x];
        let mut level2 = VertexSet::EMPTY;
        for v in level1 {
            level2 |= self.adj[v];
        }
        level2 -= level1.with(x);
        let remainder = self.vertices() - level1 - level2 - VertexSet::singleton(x);
        Ok(DistanceDecomposition {
            root: x,
            level1,
            level2,
            remainder,
        })
    }

    /// Subgraph induced by `s`, relabelled order-preservingly to `0..|s|`.
    pub fn induced_subgraph(&self, s: VertexSet) -> InducedSubgraph {
        let map = s.to_vec();
        let graph = Graph::from_fn(map.len(), |i, j| self.has_edge(map[i], map[j]))
            .expect("subgraph is no larger than its host");
        InducedSubgraph { graph, map }
    }

    /// `G - v`, relabelled order-preservingly.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertices().without(v)).graph
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut g = Graph::empty(self.n()).expect("same order");
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n();
        let mut g = Graph::empty(shift + other.n())?;
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + shift, v + shift);
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n(), |u, v| !self.has_edge(u, v)).expect("same order")
    }

    fn extend(&self, anchor: usize, neighbors: VertexSet) -> Result<Graph> {
        self.check_vertex(anchor)?;
        let y = self.n();
        let mut g = Graph::empty(y + 1)?;
        g.adj[..y].copy_from_slice(&self.adj);
        for u in neighbors {
            g.set_edge(u, y);
        }
        Ok(g)
    }

    /// Adds a new vertex `n` adjacent to `x` only.
    pub fn add_pendant(&self, x: usize) -> Result<Graph> {
        self.extend(x, VertexSet::singleton(x))
    }

    /// Adds a new vertex `n` with `N[n] = N[x]`.
    pub fn add_true_twin(&self, x: usize) -> Result<Graph> {
        self.check_vertex(x)?;
        self.extend(x, self.closed_neighbors(x))
    }

    /// Adds a new vertex `n` with `N(n) = N(x)`.
    pub fn add_false_twin(&self, x: usize) -> Result<Graph> {
        self.check_vertex(x)?;
        self.extend(x, self.neighbors(x))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// The partition `{x} ∪ N(x) ∪ N²(x) ∪ R` around a root `x`; `R` holds every
/// vertex at distance three or more, including unreachable ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceDecomposition {
    pub root: usize,
    pub level1: VertexSet,
    pub level2: VertexSet,
    pub remainder: VertexSet,
}

impl DistanceDecomposition {
    /// `N²(x) ∪ R`.
    pub fn far(&self) -> VertexSet {
        self.level2 | self.remainder
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `map[i]` is the host vertex behind subgraph vertex `i`.
    pub map: Vec<usize>,
}

impl InducedSubgraph {
    /// Translates a vertex set of the subgraph back to host vertices.
    pub fn lift(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|i| self.map[i]).collect()
    }
}
