//! Canonical labelling for isomorphism rejection.
//!
//! Colour refinement produces an ordered equitable partition; the search then
//! individualizes vertices of the first smallest non-singleton cell and
//! refines again until every cell is a singleton. Each discrete partition is a
//! vertex ordering, and the canonical form is the lexicographically least
//! graph6 string over all orderings reached.
//!
//! Swapping two twins is an automorphism that fixes every other vertex, so at
//! each branching point only one vertex per twin class of the target cell is
//! tried. Distance-hereditary graphs are built from twins, which keeps the
//! search tree small for the enumerator.

use std::fmt;

use crate::graph::Graph;
use crate::graph6;

/// Isomorphism-complete key: equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The canonical graph6 string.
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    pub fn order(&self) -> usize {
        (self.0[0] - 63) as usize
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        graph6::parse(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// The canonical form together with the ordering that produced it:
/// `order[i]` is the vertex of `g` placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    let mut search = Search { g, best: None };
    let cells = vec![(0..n).collect::<Vec<_>>()];
    let cells = refine(g, cells);
    search.descend(cells);
    let (bytes, order) = search.best.unwrap_or_else(|| (graph6::emit(g), Vec::new()));
    (CanonicalForm(bytes), order)
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(target) = target else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&u| self.g.is_twin(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.descend(refine(self.g, next));
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let relabelled = self.g.permute(&position);
        let bytes = graph6::emit(&relabelled);
        match &self.best {
            Some((b, _)) if *b <= bytes => {}
            _ => self.best = Some((bytes, order)),
        }
    }
}

/// Splits cells by neighbor counts into every other cell until stable. Within
/// a cell, vertices with a smaller count vector come first; the procedure
/// depends only on the cell structure, so it commutes with relabelling.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    loop {
        let masks: Vec<_> = cells
            .iter()
            .map(|c| c.iter().collect::<crate::set::VertexSet>())
            .collect();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
        let mut changed = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let key = masks
                        .iter()
                        .map(|&m| (g.neighbors(v) & m).len() as u8)
                        .collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
            if next.last().map(Vec::len) != Some(cell.len()) {
                changed = true;
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{complete, cycle, path};

    #[test]
    fn invariant_under_relabelling() {
        let p3 = path(3);
        let relabelled = p3.permute(&[1, 0, 2]);
        assert_ne!(p3, relabelled);
        assert_eq!(canonical_form(&p3), canonical_form(&relabelled));
    }

    #[test]
    fn four_vertex_classes() {
        let mut keys = std::collections::HashSet::new();
        for mask in 0u32..64 {
            let mut k = 0;
            let g = Graph::from_fn(4, |_, _| {
                let bit = mask >> k & 1 == 1;
                k += 1;
                bit
            })
            .unwrap();
            keys.insert(canonical_form(&g));
        }
        assert_eq!(keys.len(), 11);
    }

    #[test]
    fn distinguishes_same_degree_sequences() {
        let c6 = cycle(6);
        let two_k3 = complete(3).disjoint_union(&complete(3)).unwrap();
        assert_ne!(canonical_form(&c6), canonical_form(&two_k3));
    }

    #[test]
    fn labeling_reproduces_form() {
        let g = cycle(5).add_pendant(2).unwrap();
        let (form, order) = canonical_labeling(&g);
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        assert_eq!(graph6::emit(&g.permute(&position)), form.as_bytes());
        assert_eq!(form.to_graph().n(), 6);
    }

    #[test]
    fn degenerate_orders() {
        let k0 = Graph::empty(0).unwrap();
        assert_eq!(canonical_form(&k0).as_str(), "?");
        assert_eq!(canonical_form(&complete(1)).as_str(), "@");
    }
}
