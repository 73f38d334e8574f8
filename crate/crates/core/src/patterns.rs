//! Named small graphs, induced-subgraph matching, and the split, threshold
//! and cograph tests expressed through their forbidden patterns.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// House on `a..e = 0..4`: edges ab, bc, cd, ad, ae, be.
pub fn house() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)]).unwrap()
}

/// Gem on `a..e = 0..4`: edges ab, bc, cd, ae, be, ce, de.
pub fn gem() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]).unwrap()
}

/// Domino on `a, b, c, d, e, h = 0..5`: edges ab, bc, cd, ad, be, eh, ch.
pub fn domino() -> Graph {
    Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (0, 3), (1, 4), (4, 5), (2, 5)]).unwrap()
}

pub fn cycle(k: usize) -> Graph {
    assert!(k >= 3, "cycles need at least 3 vertices");
    Graph::from_fn(k, |u, v| v == u + 1 || (u == 0 && v == k - 1)).unwrap()
}

pub fn path(k: usize) -> Graph {
    Graph::from_fn(k, |u, v| v == u + 1).unwrap()
}

pub fn complete(k: usize) -> Graph {
    Graph::from_fn(k, |_, _| true).unwrap()
}

pub fn edgeless(k: usize) -> Graph {
    Graph::empty(k).unwrap()
}

/// `copies` disjoint copies of `g`.
pub fn copies(g: &Graph, copies: usize) -> Graph {
    let mut out = Graph::empty(0).unwrap();
    for _ in 0..copies {
        out = out.disjoint_union(g).unwrap();
    }
    out
}

/// The patterns addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedPattern {
    House,
    Gem,
    Domino,
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Edgeless(usize),
    /// `m` disjoint copies of `K_k`, e.g. `2K2`.
    CompleteCopies(usize, usize),
}

impl NamedPattern {
    pub fn graph(self) -> Graph {
        match self {
            NamedPattern::House => house(),
            NamedPattern::Gem => gem(),
            NamedPattern::Domino => domino(),
            NamedPattern::Cycle(k) => cycle(k),
            NamedPattern::Path(k) => path(k),
            NamedPattern::Complete(k) => complete(k),
            NamedPattern::Edgeless(k) => edgeless(k),
            NamedPattern::CompleteCopies(m, k) => copies(&complete(k), m),
        }
    }
}

impl fmt::Display for NamedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedPattern::House => f.write_str("house"),
            NamedPattern::Gem => f.write_str("gem"),
            NamedPattern::Domino => f.write_str("domino"),
            NamedPattern::Cycle(k) => write!(f, "C{k}"),
            NamedPattern::Path(k) => write!(f, "P{k}"),
            NamedPattern::Complete(k) => write!(f, "K{k}"),
            NamedPattern::Edgeless(k) => write!(f, "I{k}"),
            NamedPattern::CompleteCopies(m, k) => write!(f, "{m}K{k}"),
        }
    }
}

impl FromStr for NamedPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownPattern(s.to_string());
        let name = s.trim();
        match name.to_ascii_lowercase().as_str() {
            "house" => return Ok(NamedPattern::House),
            "gem" => return Ok(NamedPattern::Gem),
            "domino" => return Ok(NamedPattern::Domino),
            _ => {}
        }
        let split = name
            .find(|c: char| !c.is_ascii_digit())
            .ok_or_else(unknown)?;
        let (count, rest) = name.split_at(split);
        let mut chars = rest.chars();
        let letter = chars.next().ok_or_else(unknown)?;
        let k: usize = chars.as_str().parse().map_err(|_| unknown())?;
        let bound = crate::error::MAX_VERTICES;
        let pattern = if count.is_empty() {
            match letter {
                'C' | 'c' if (3..=bound).contains(&k) => NamedPattern::Cycle(k),
                'P' | 'p' if (1..=bound).contains(&k) => NamedPattern::Path(k),
                'K' | 'k' if (1..=bound).contains(&k) => NamedPattern::Complete(k),
                'I' | 'i' if (1..=bound).contains(&k) => NamedPattern::Edgeless(k),
                _ => return Err(unknown()),
            }
        } else {
            let m: usize = count.parse().map_err(|_| unknown())?;
            match letter {
                'K' | 'k' if m >= 1 && k >= 1 && m * k <= bound => {
                    NamedPattern::CompleteCopies(m, k)
                }
                _ => return Err(unknown()),
            }
        };
        Ok(pattern)
    }
}

/// First induced embedding of `h` into `g` in lexicographic backtracking order:
/// `h`'s vertices are placed in order `0, 1, ..`, each on the smallest feasible
/// host vertex. `result[i]` is the host vertex of pattern vertex `i`.
pub fn contains_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    let mut map = Vec::with_capacity(h.n());
    extend_embedding(g, h, &mut map, VertexSet::EMPTY).then_some(map)
}

fn extend_embedding(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: VertexSet) -> bool {
    let i = map.len();
    if i == h.n() {
        return true;
    }
    let need = h.degree(i);
    // host candidates must be adjacent to the images of earlier h-neighbors
    // and non-adjacent to the images of earlier h-non-neighbors
    let mut candidates = g.vertices() - used;
    for (j, &w) in map.iter().enumerate() {
        if h.has_edge(i, j) {
            candidates &= g.neighbors(w);
        } else {
            candidates -= g.neighbors(w);
        }
    }
    for v in candidates {
        if g.degree(v) < need {
            continue;
        }
        map.push(v);
        if extend_embedding(g, h, map, used.with(v)) {
            return true;
        }
        map.pop();
    }
    false
}

/// Some chordless cycle on at least five vertices, listed in cycle order and
/// starting from its smallest vertex.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    for start in 0..g.n() {
        let allowed = g.vertices() - VertexSet::full(start + 1);
        let mut path = vec![start];
        if extend_hole(g, allowed, &mut path) {
            return Some(path);
        }
    }
    None
}

/// Depth-first over induced paths from `path[0]` using only vertices of
/// `allowed` (all larger than the start). A path stays induced when each new
/// vertex sees only the current end; it closes into a hole when the new
/// vertex also sees the start and the cycle has five or more vertices.
fn extend_hole(g: &Graph, allowed: VertexSet, path: &mut Vec<usize>) -> bool {
    let start = path[0];
    let last = *path.last().unwrap();
    let interior: VertexSet = match path.len() {
        0..=2 => VertexSet::EMPTY,
        len => path[1..len - 1].iter().collect(),
    };
    let on_path: VertexSet = path.iter().collect();
    for v in g.neighbors(last) & (allowed - on_path) {
        let nv = g.neighbors(v);
        if !nv.is_disjoint(interior) {
            continue;
        }
        let sees_start = nv.contains(start) && path.len() > 1;
        if sees_start {
            if path.len() >= 4 {
                path.push(v);
                return true;
            }
            continue;
        }
        path.push(v);
        if extend_hole(g, allowed, path) {
            return true;
        }
        path.pop();
    }
    false
}

pub fn has_hole(g: &Graph) -> bool {
    find_hole(g).is_some()
}

/// A partition of the vertices into a clique and a stable set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub stable: VertexSet,
}

fn free_of(g: &Graph, forbidden: &[Graph]) -> bool {
    forbidden.iter().all(|h| contains_induced(g, h).is_none())
}

/// `(2K2, C4, C5)`-free.
pub fn is_split(g: &Graph) -> bool {
    free_of(g, &[copies(&complete(2), 2), cycle(4), cycle(5)])
}

/// `(2K2, C4, P4)`-free.
pub fn is_threshold(g: &Graph) -> bool {
    free_of(g, &[copies(&complete(2), 2), cycle(4), path(4)])
}

/// `P4`-free.
pub fn is_cograph(g: &Graph) -> bool {
    contains_induced(g, &path(4)).is_none()
}

/// Clique/stable partition of a split graph, or `None` when `g` is not split.
///
/// Takes the `m` highest-degree vertices as the clique, where `m` is the
/// largest index with `d_m >= m - 1` in the non-increasing degree order, and
/// verifies the result.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    if !is_split(g) {
        return None;
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = order
        .iter()
        .enumerate()
        .filter(|&(i, &v)| g.degree(v) >= i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let clique: VertexSet = order[..m].iter().collect();
    let stable = g.vertices() - clique;
    assert!(
        g.is_clique(clique) && g.is_stable(stable),
        "degree-sequence split partition failed on a split graph: {g:?}"
    );
    Some(SplitPartition { clique, stable })
}
