//! Distance-hereditary graphs.
//!
//! A graph is distance-hereditary exactly when it can be grown from one vertex
//! by adding pendant vertices, true twins and false twins, and exactly when it
//! has no induced house, gem, domino or hole. The first characterization gives
//! the recognizer (peel pendants and twins off until one vertex is left) and
//! the enumerator; the second gives an independent check and a negative
//! certificate.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{contains_induced, domino, find_hole, gem, house};
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BuildKind {
    Initial,
    Pendant,
    TrueTwin,
    FalseTwin,
}

impl BuildKind {
    pub fn name(self) -> &'static str {
        match self {
            BuildKind::Initial => "initial",
            BuildKind::Pendant => "pendant",
            BuildKind::TrueTwin => "true_twin",
            BuildKind::FalseTwin => "false_twin",
        }
    }

    /// Applies the edit to `g`; the new vertex is `g.n()`.
    pub fn apply(self, g: &Graph, anchor: usize) -> Result<Graph> {
        match self {
            BuildKind::Initial => Err(Error::BuildSequence(
                "the initial step has no anchor".into(),
            )),
            BuildKind::Pendant => g.add_pendant(anchor),
            BuildKind::TrueTwin => g.add_true_twin(anchor),
            BuildKind::FalseTwin => g.add_false_twin(anchor),
        }
    }
}

impl fmt::Display for BuildKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuildKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "initial" => Ok(BuildKind::Initial),
            "pendant" => Ok(BuildKind::Pendant),
            "true_twin" => Ok(BuildKind::TrueTwin),
            "false_twin" => Ok(BuildKind::FalseTwin),
            other => Err(Error::BuildSequence(format!("unknown step kind `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BuildStep {
    pub kind: BuildKind,
    pub new_vertex: usize,
    pub anchor: Option<usize>,
}

/// Construction certificate: step `i` introduces vertex `i`.
///
/// `labels[i]` names the vertex of the source graph that step `i` stands for,
/// so `replay().permute(labels())` is the source graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BuildSequence {
    steps: Vec<BuildStep>,
    labels: Vec<usize>,
}

impl BuildSequence {
    /// Validates step numbering: one initial step first, anchors point backwards.
    pub fn new(steps: Vec<BuildStep>, labels: Vec<usize>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::BuildSequence("no steps".into()));
        }
        if labels.len() != steps.len() {
            return Err(Error::BuildSequence(
                "label count differs from step count".into(),
            ));
        }
        let mut seen = VertexSet::EMPTY;
        for &l in &labels {
            if l >= steps.len() || seen.contains(l) {
                return Err(Error::BuildSequence("labels are not a permutation".into()));
            }
            seen.insert(l);
        }
        for (i, s) in steps.iter().enumerate() {
            if s.new_vertex != i {
                return Err(Error::BuildSequence(format!(
                    "step {i} introduces vertex {}",
                    s.new_vertex
                )));
            }
            match (i, s.kind, s.anchor) {
                (0, BuildKind::Initial, None) => {}
                (0, ..) => return Err(Error::BuildSequence("step 0 must be initial".into())),
                (_, BuildKind::Initial, _) => {
                    return Err(Error::BuildSequence(format!("step {i} repeats initial")))
                }
                (_, _, Some(a)) if a < i => {}
                _ => return Err(Error::BuildSequence(format!("step {i} has a bad anchor"))),
            }
        }
        Ok(BuildSequence { steps, labels })
    }

    fn identity(steps: Vec<BuildStep>) -> Self {
        let labels = (0..steps.len()).collect();
        BuildSequence { steps, labels }
    }

    pub fn steps(&self) -> &[BuildStep] {
        &self.steps
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The graph in build numbering.
    pub fn replay(&self) -> Graph {
        let mut g = Graph::empty(1).expect("one vertex");
        for s in &self.steps[1..] {
            g = s
                .kind
                .apply(&g, s.anchor.expect("validated"))
                .expect("validated anchors are in range");
        }
        g
    }

    /// The graph in the source numbering.
    pub fn reconstruct(&self) -> Graph {
        self.replay().permute(&self.labels)
    }

    fn extended(&self, kind: BuildKind, anchor: usize) -> Self {
        let mut steps = self.steps.clone();
        steps.push(BuildStep {
            kind,
            new_vertex: steps.len(),
            anchor: Some(anchor),
        });
        BuildSequence::identity(steps)
    }
}

/// One line per step: `i kind anchor`, with `-` for the initial anchor.
impl fmt::Display for BuildSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            match s.anchor {
                Some(a) => write!(f, "{} {} {}", s.new_vertex, s.kind, a)?,
                None => write!(f, "{} {} -", s.new_vertex, s.kind)?,
            }
        }
        Ok(())
    }
}

impl FromStr for BuildSequence {
    type Err = Error;

    /// Parses the line format; labels are taken as the identity.
    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let bad = || Error::BuildSequence(format!("malformed step line `{line}`"));
            let mut parts = line.split_whitespace();
            let i: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let kind: BuildKind = parts.next().ok_or_else(bad)?.parse()?;
            let anchor = match parts.next().ok_or_else(bad)? {
                "-" => None,
                a => Some(a.parse().map_err(|_| bad())?),
            };
            if parts.next().is_some() {
                return Err(bad());
            }
            steps.push(BuildStep {
                kind,
                new_vertex: i,
                anchor,
            });
        }
        let labels = (0..steps.len()).collect();
        BuildSequence::new(steps, labels)
    }
}

/// A single deletion available to the eliminator: remove `vertex`, which is a
/// pendant of, or a twin of, `anchor`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Elimination {
    pub kind: BuildKind,
    pub vertex: usize,
    pub anchor: usize,
}

/// Every pendant and twin deletion available among `alive`.
pub fn available_eliminations(g: &Graph, alive: VertexSet) -> Vec<Elimination> {
    let mut out = Vec::new();
    for v in alive {
        let nv = g.neighbors(v) & alive;
        if nv.len() == 1 {
            out.push(Elimination {
                kind: BuildKind::Pendant,
                vertex: v,
                anchor: nv.min().unwrap(),
            });
        }
    }
    for (kind, closed) in [(BuildKind::TrueTwin, true), (BuildKind::FalseTwin, false)] {
        for v in alive {
            for u in alive.without(v) {
                if twins_within(g, alive, u, v, closed) {
                    out.push(Elimination {
                        kind,
                        vertex: v,
                        anchor: u,
                    });
                }
            }
        }
    }
    out
}

fn twins_within(g: &Graph, alive: VertexSet, u: usize, v: usize, closed: bool) -> bool {
    if closed {
        g.closed_neighbors(u) & alive == g.closed_neighbors(v) & alive
    } else {
        g.neighbors(u) & alive == g.neighbors(v) & alive
    }
}

/// The fixed-priority choice: the lowest pendant vertex whose neighbor has
/// other neighbors, else the lexicographically first true-twin pair `(u, v)`
/// deleting `v`, else the first false-twin pair likewise.
///
/// An isolated edge is a pair of true twins and is recorded as such, so `K2`
/// builds as `initial, true_twin`.
fn first_elimination(g: &Graph, alive: VertexSet) -> Option<Elimination> {
    for v in alive {
        let nv = g.neighbors(v) & alive;
        if nv.len() == 1 {
            let a = nv.min().unwrap();
            if (g.neighbors(a) & alive).len() >= 2 {
                return Some(Elimination {
                    kind: BuildKind::Pendant,
                    vertex: v,
                    anchor: a,
                });
            }
        }
    }
    for (kind, closed) in [(BuildKind::TrueTwin, true), (BuildKind::FalseTwin, false)] {
        for u in alive {
            for v in alive - VertexSet::full(u + 1) {
                if twins_within(g, alive, u, v, closed) {
                    return Some(Elimination {
                        kind,
                        vertex: v,
                        anchor: u,
                    });
                }
            }
        }
    }
    None
}

/// Pruning sequence by the fixed eliminator priority, or `None` when `g` is
/// not distance-hereditary.
pub fn pruning_sequence(g: &Graph) -> Result<Option<BuildSequence>> {
    prune(g, first_elimination)
}

/// Pruning with a caller-chosen deletion order: `pick` receives every
/// available deletion and returns the index of the one to apply.
pub fn pruning_sequence_by(
    g: &Graph,
    mut pick: impl FnMut(&[Elimination]) -> usize,
) -> Result<Option<BuildSequence>> {
    prune(g, |g, alive| {
        let options = available_eliminations(g, alive);
        if options.is_empty() {
            None
        } else {
            Some(options[pick(&options)])
        }
    })
}

fn prune(
    g: &Graph,
    mut next: impl FnMut(&Graph, VertexSet) -> Option<Elimination>,
) -> Result<Option<BuildSequence>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut alive = g.vertices();
    let mut deletions = Vec::with_capacity(g.n());
    while alive.len() > 1 {
        let Some(e) = next(g, alive) else {
            return Ok(None);
        };
        alive.remove(e.vertex);
        deletions.push(e);
    }
    let root = alive.min().expect("one vertex left");
    let mut labels = vec![root];
    let mut build_index = vec![usize::MAX; g.n()];
    build_index[root] = 0;
    let mut steps = vec![BuildStep {
        kind: BuildKind::Initial,
        new_vertex: 0,
        anchor: None,
    }];
    for e in deletions.iter().rev() {
        let i = steps.len();
        build_index[e.vertex] = i;
        labels.push(e.vertex);
        steps.push(BuildStep {
            kind: e.kind,
            new_vertex: i,
            anchor: Some(build_index[e.anchor]),
        });
    }
    Ok(Some(BuildSequence { steps, labels }))
}

pub fn is_distance_hereditary(g: &Graph) -> bool {
    g.n() == 0 || first_sequence_exists(g)
}

fn first_sequence_exists(g: &Graph) -> bool {
    let mut alive = g.vertices();
    while alive.len() > 1 {
        match first_elimination(g, alive) {
            Some(e) => alive.remove(e.vertex),
            None => return false,
        }
    }
    true
}

/// Which forbidden configuration an [`HhdgWitness`] exhibits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HhdgKind {
    House,
    Gem,
    Domino,
    /// A chordless cycle of the given length (at least five).
    Hole(usize),
}

impl fmt::Display for HhdgKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HhdgKind::House => f.write_str("house"),
            HhdgKind::Gem => f.write_str("gem"),
            HhdgKind::Domino => f.write_str("domino"),
            HhdgKind::Hole(k) => write!(f, "C{k}"),
        }
    }
}

/// An induced house, gem, domino or hole; `embedding[i]` is the host vertex
/// of pattern vertex `i` (cycle order for holes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HhdgWitness {
    pub kind: HhdgKind,
    pub embedding: Vec<usize>,
}

impl fmt::Display for HhdgWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at vertices", self.kind)?;
        for (i, v) in self.embedding.iter().enumerate() {
            write!(f, " {i}->{v}")?;
        }
        Ok(())
    }
}

/// First of house, gem, domino, hole found in `g`.
pub fn hhdg_witness(g: &Graph) -> Option<HhdgWitness> {
    let named = [
        (HhdgKind::House, house()),
        (HhdgKind::Gem, gem()),
        (HhdgKind::Domino, domino()),
    ];
    for (kind, h) in named {
        if let Some(embedding) = contains_induced(g, &h) {
            return Some(HhdgWitness { kind, embedding });
        }
    }
    find_hole(g).map(|cycle| HhdgWitness {
        kind: HhdgKind::Hole(cycle.len()),
        embedding: cycle,
    })
}

/// Recognition through the eliminator, cross-checked against the forbidden
/// subgraph test; disagreement is reported as an internal error.
pub fn is_distance_hereditary_checked(g: &Graph) -> Result<bool> {
    let by_pruning = is_distance_hereditary(g);
    let by_patterns = hhdg_witness(g).is_none();
    if by_pruning != by_patterns {
        return Err(Error::Internal(format!(
            "pruning says {by_pruning}, forbidden patterns say {by_patterns} for {g:?}"
        )));
    }
    Ok(by_pruning)
}

/// One isomorphism class from the enumerator. `graph` is numbered in build
/// order, so `sequence.replay() == graph`.
#[derive(Clone, Debug)]
pub struct DhClass {
    pub graph: Graph,
    pub sequence: BuildSequence,
    pub canonical: CanonicalForm,
}

/// All distance-hereditary graphs up to a vertex bound, one per isomorphism
/// class, grouped by order and sorted by canonical form within each order.
#[derive(Clone, Debug, Default)]
pub struct DhCatalog {
    levels: Vec<Vec<DhClass>>,
}

impl DhCatalog {
    pub fn max_n(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    /// Classes on exactly `n` vertices.
    pub fn order(&self, n: usize) -> &[DhClass] {
        self.levels.get(n).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = &DhClass> {
        self.levels.iter().flatten()
    }

    /// Classes with at most `n` vertices.
    pub fn up_to(&self, n: usize) -> impl Iterator<Item = &DhClass> {
        self.levels.iter().take(n + 1).flatten()
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

const EDITS: [BuildKind; 3] = [
    BuildKind::Pendant,
    BuildKind::TrueTwin,
    BuildKind::FalseTwin,
];

/// Breadth-first closure of `K1` under the three edits, deduplicated by
/// canonical form. Frontier expansion runs in parallel; the representative of
/// each class is the child with the smallest (parent, anchor, edit) triple, so
/// the output does not depend on scheduling.
pub fn enumerate_dh(max_n: usize) -> Result<DhCatalog> {
    if max_n == 0 || max_n > crate::error::MAX_VERTICES {
        return Err(Error::Parameter(format!("max_n = {max_n} outside 1..=62")));
    }
    let k1 = Graph::empty(1)?;
    let root = DhClass {
        canonical: canonical_form(&k1),
        sequence: BuildSequence::identity(vec![BuildStep {
            kind: BuildKind::Initial,
            new_vertex: 0,
            anchor: None,
        }]),
        graph: k1,
    };
    let mut levels = vec![Vec::new(), vec![root]];
    for _ in 2..=max_n {
        let frontier = levels.last().unwrap();
        let mut children: Vec<(CanonicalForm, usize, usize, usize, Graph)> = frontier
            .par_iter()
            .enumerate()
            .flat_map_iter(|(pi, parent)| {
                let mut local: Vec<(CanonicalForm, usize, usize, usize, Graph)> = Vec::new();
                for x in 0..parent.graph.n() {
                    for (ei, kind) in EDITS.iter().enumerate() {
                        let child = kind.apply(&parent.graph, x).expect("anchor in range");
                        local.push((canonical_form(&child), pi, x, ei, child));
                    }
                }
                local.sort_by(|a, b| (&a.0, a.1, a.2, a.3).cmp(&(&b.0, b.1, b.2, b.3)));
                local.dedup_by(|b, a| a.0 == b.0);
                local
            })
            .collect();
        children.par_sort_unstable_by(|a, b| (&a.0, a.1, a.2, a.3).cmp(&(&b.0, b.1, b.2, b.3)));
        children.dedup_by(|b, a| a.0 == b.0);
        let level = children
            .into_iter()
            .map(|(canonical, pi, x, ei, graph)| DhClass {
                sequence: frontier[pi].sequence.extended(EDITS[ei], x),
                canonical,
                graph,
            })
            .collect();
        levels.push(level);
    }
    Ok(DhCatalog { levels })
}

/// A breach of the neighborhood laws around a root `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawViolation {
    /// `u, v` lie in one component of `G[N²(x) ∪ R]` but see different parts of `N(x)`.
    Connected {
        u: usize,
        v: usize,
        u_sees: VertexSet,
        v_sees: VertexSet,
    },
    /// `N(x)` is stable, `uv` is not an edge, and the traces on `N(x)` cross.
    Overlap {
        u: usize,
        v: usize,
        u_sees: VertexSet,
        v_sees: VertexSet,
    },
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawViolation::Connected {
                u,
                v,
                u_sees,
                v_sees,
            } => write!(
                f,
                "connected {u},{v} see different neighbors: {{{u_sees}}} vs {{{v_sees}}}"
            ),
            LawViolation::Overlap {
                u,
                v,
                u_sees,
                v_sees,
            } => write!(
                f,
                "nonadjacent {u},{v} have crossing neighbors: {{{u_sees}}} vs {{{v_sees}}}"
            ),
        }
    }
}

/// Checks, for every pair `u < v` in `N²(x)`: vertices in one component of
/// `G[N²(x) ∪ R]` have equal traces on `N(x)`; and, when `N(x)` is stable,
/// nonadjacent vertices have traces that are disjoint, equal or nested.
pub fn check_neighborhood_laws(g: &Graph, x: usize) -> Result<Vec<LawViolation>> {
    let d = g.distance_decomposition(x)?;
    let far = d.far();
    let level1_stable = g.is_stable(d.level1);
    let mut out = Vec::new();
    for u in d.level2 {
        let component = g.reach(u, far);
        let u_sees = g.neighbors(u) & d.level1;
        for v in d.level2 - VertexSet::full(u + 1) {
            let v_sees = g.neighbors(v) & d.level1;
            if component.contains(v) && u_sees != v_sees {
                out.push(LawViolation::Connected {
                    u,
                    v,
                    u_sees,
                    v_sees,
                });
            }
            let crossing = !u_sees.is_disjoint(v_sees)
                && !u_sees.is_subset(v_sees)
                && !v_sees.is_subset(u_sees);
            if level1_stable && !g.has_edge(u, v) && crossing {
                out.push(LawViolation::Overlap {
                    u,
                    v,
                    u_sees,
                    v_sees,
                });
            }
        }
    }
    Ok(out)
}
