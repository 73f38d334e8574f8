//! Clique cycle-transversals (ccts): cliques whose removal leaves a forest.
//!
//! Two independent routes decide existence:
//!
//! * [`find_cct_oracle`] tries every maximal clique. Deleting more vertices
//!   from a forest leaves a forest, so if some clique is a cct then every
//!   maximal clique containing it is one too.
//! * [`build_cct`] walks a pruning sequence of a distance-hereditary graph
//!   and carries a cct from each prefix to the next using the twin-extension
//!   rules below. A pendant creates no cycle. For a twin `y` of `x` the rules
//!   look at `Q1 = Q ∩ N(x)`, `Q2 = Q ∩ N²(x)`, `N1 = N(x) \ Q1` and at
//!   whether `G[N²(x) ∪ R]` has a cycle.
//!
//! The rules may start from any cct `Q` of the prefix. A twin step first
//! tries the carried witness, then the carried witness with redundant
//! vertices dropped, then each maximal clique of the prefix that is a cct
//! and its minimization.
//! When no base witness leads to a rule whose candidate is a cct of the
//! extended graph, the step reports that the extended graph has no cct.
//! Admitting a cct is hereditary, so the whole graph then has none.

use std::fmt;

use crate::cliques::{maximal_cliques, maximal_cliques_in};
use crate::dh::{is_distance_hereditary, pruning_sequence, BuildKind, BuildSequence};
use crate::error::{Error, Result};
use crate::graph::{Graph, InducedSubgraph};
use crate::patterns::{contains_induced, is_threshold};
use crate::set::VertexSet;

/// Clique `t` with `G - t` a forest. The empty set is a clique.
pub fn is_cct(g: &Graph, t: VertexSet) -> bool {
    t.is_subset(g.vertices()) && g.is_clique(t) && g.is_forest(g.vertices() - t)
}

/// First maximal clique (in [`maximal_cliques`] order) that is a cct.
pub fn find_cct_oracle(g: &Graph) -> Option<VertexSet> {
    maximal_cliques(g)
        .into_iter()
        .find(|&k| g.is_forest(g.vertices() - k))
}

/// Brute force over all `2^n` vertex subsets; the lowest bitmask that is a
/// cct. Intended for small graphs.
pub fn find_cct_exhaustive(g: &Graph) -> Option<VertexSet> {
    assert!(g.n() <= 24, "exhaustive search is limited to 24 vertices");
    (0u64..1 << g.n())
        .map(VertexSet::from_bits)
        .find(|&t| g.is_clique(t) && g.is_forest(g.vertices() - t))
}

/// First maximal clique whose removal leaves a bipartite graph, i.e. a clique
/// meeting every odd cycle.
pub fn is_two_one(g: &Graph) -> Option<VertexSet> {
    maximal_cliques(g)
        .into_iter()
        .find(|&k| g.is_bipartite(g.vertices() - k))
}

/// Greedily drops vertices (lowest first) while the set stays a cct.
pub fn minimize_witness(g: &Graph, t: VertexSet) -> VertexSet {
    debug_assert!(is_cct(g, t));
    let mut t = t;
    for v in t {
        if is_cct(g, t.without(v)) {
            t.remove(v);
        }
    }
    t
}

/// Whether the cct question on `g` matches freeness from `family`: `g` has a
/// cct iff no family member is an induced subgraph of `g`.
pub fn verify_characterization(g: &Graph, family: &[Graph]) -> Result<bool> {
    if !is_distance_hereditary(g) {
        return Err(Error::NotDistanceHereditary);
    }
    let has_cct = find_cct_oracle(g).is_some();
    let family_free = family.iter().all(|h| contains_induced(g, h).is_none());
    Ok(has_cct == family_free)
}

/// The rule that handled one builder step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// A pendant lies on no cycle.
    Pendant,
    /// Dropping `Q2` vertices without an `N1` neighbor broke the witness of `G`.
    PruneQ2,
    /// True twin, `Q ⊆ N[x]`: add `y`.
    TrueClosedNeighborhood,
    /// True twin, far side acyclic, `Q2 = ∅`: add `y`.
    TrueAcyclicEmpty,
    /// True twin, far side acyclic, `Q2 = {u, v}`: swap `u, v` for their
    /// unique common `N1` neighbor `a` (which must see `Q1`) and `y`.
    TrueAcyclicPair,
    /// True twin, far side acyclic, `Q2 = {u}`, some `N1` neighbor of `u`
    /// misses `Q1`: swap `u` for `x, y`.
    TrueAcyclicSingleMiss,
    /// True twin, far side acyclic, `Q2 = {u}`, all `N1` neighbors of `u` see
    /// `Q1`: swap `u` for `x, y, a`.
    TrueAcyclicSingleSee,
    /// True twin, far side cyclic: `N(x) ∪ Q2`, which must be a clique.
    TrueCyclic,
    /// Too large a clique in the acyclic far side.
    AcyclicLargeQ2,
    /// False twin, `|N(x)| ≤ 1`: keep `Q`.
    FalseLowDegree,
    /// False twin, far side acyclic, `Q2 = {u, v}` with two common `N1`
    /// neighbors: add the one seeing `Q1`.
    FalsePairTwoCommon,
    /// `Q2 = {u, v}`, one common `N1` neighbor `a` missing part of `Q1`: keep `Q`.
    FalsePairOneCommonMiss,
    /// `Q2 = {u, v}`, one common `N1` neighbor `a` seeing `Q1`: swap `u, v` for `a, y`.
    FalsePairOneCommonSee,
    /// `Q2 = {u, v}` with no or three or more common `N1` neighbors.
    FalsePairOtherCommon,
    /// `Q2 = {u}` with two `N1` neighbors: swap `u` for the one seeing `Q1`, and `y`.
    FalseSingleTwo,
    /// `Q2 = {u}`, its only `N1` neighbor `a` sees `Q1`: swap `u` for `a, y`.
    FalseSingleOneSee,
    /// `Q2 = {u}`, its only `N1` neighbor `a` misses `Q1` and `N1 = {a}`: keep `Q`.
    FalseSingleOnlyNeighbor,
    /// `Q2 = {u}`, its only `N1` neighbor misses `Q1`, `N1` larger: swap `u` for `y`.
    FalseSingleOther,
    /// `Q2 = {u}` with three or more `N1` neighbors.
    FalseSingleMany,
    /// `Q2 = ∅`, `x ∉ Q`: add `y`.
    FalseEmptyWithoutX,
    /// `Q2 = ∅`, `x ∈ Q`: a maximal clique of the threshold graph `G[N(x)]`
    /// that is a cct of `G`, plus `y`.
    FalseEmptyThreshold,
    /// False twin, far side cyclic, `|N1| ≤ 1`: keep `Q`.
    FalseCyclicSmall,
    /// Far side cyclic, `N1 = {a, b}`: add `a`, or fall back to `Q2 ∪ {b}`.
    FalseCyclicPair,
    /// Far side cyclic, `|N1| ≥ 3`.
    FalseCyclicMany,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Pendant => "pendant",
            Rule::PruneQ2 => "prune-q2",
            Rule::TrueClosedNeighborhood => "true/closed-neighborhood",
            Rule::TrueAcyclicEmpty => "true/acyclic/q2-empty",
            Rule::TrueAcyclicPair => "true/acyclic/q2-pair",
            Rule::TrueAcyclicSingleMiss => "true/acyclic/q2-single/miss",
            Rule::TrueAcyclicSingleSee => "true/acyclic/q2-single/see",
            Rule::TrueCyclic => "true/cyclic",
            Rule::AcyclicLargeQ2 => "acyclic/q2-large",
            Rule::FalseLowDegree => "false/low-degree",
            Rule::FalsePairTwoCommon => "false/acyclic/q2-pair/two-common",
            Rule::FalsePairOneCommonMiss => "false/acyclic/q2-pair/one-common/miss",
            Rule::FalsePairOneCommonSee => "false/acyclic/q2-pair/one-common/see",
            Rule::FalsePairOtherCommon => "false/acyclic/q2-pair/other-common",
            Rule::FalseSingleTwo => "false/acyclic/q2-single/two",
            Rule::FalseSingleOneSee => "false/acyclic/q2-single/one/see",
            Rule::FalseSingleOnlyNeighbor => "false/acyclic/q2-single/one/only",
            Rule::FalseSingleOther => "false/acyclic/q2-single/one/other",
            Rule::FalseSingleMany => "false/acyclic/q2-single/many",
            Rule::FalseEmptyWithoutX => "false/acyclic/q2-empty/without-x",
            Rule::FalseEmptyThreshold => "false/acyclic/q2-empty/threshold",
            Rule::FalseCyclicSmall => "false/cyclic/n1-small",
            Rule::FalseCyclicPair => "false/cyclic/n1-pair",
            Rule::FalseCyclicMany => "false/cyclic/n1-many",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What happened at one builder step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleOutcome {
    /// The rule produced this witness for the extended graph.
    Witness(VertexSet),
    /// The rule's guard failed.
    Guard,
    /// The rule's candidate is not a cct of the extended graph.
    Rejected(VertexSet),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    /// Vertex introduced by the step (build numbering).
    pub vertex: usize,
    pub kind: BuildKind,
    pub anchor: usize,
    pub rule: Rule,
    pub outcome: RuleOutcome,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {}: ",
            self.vertex, self.kind, self.anchor, self.rule
        )?;
        match self.outcome {
            RuleOutcome::Witness(t) => write!(f, "{{{t}}}"),
            RuleOutcome::Guard => f.write_str("NONE (guard)"),
            RuleOutcome::Rejected(t) => write!(f, "NONE (candidate {{{t}}} rejected)"),
        }
    }
}

/// A prefix of a build sequence together with a cct for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuilderState {
    pub graph: Graph,
    pub witness: VertexSet,
    pub trace: Vec<TraceEntry>,
}

impl BuilderState {
    /// The one-vertex graph with the empty witness.
    pub fn initial() -> Self {
        BuilderState {
            graph: Graph::empty(1).expect("one vertex"),
            witness: VertexSet::EMPTY,
            trace: Vec::new(),
        }
    }

    pub fn new(graph: Graph, witness: VertexSet) -> Result<Self> {
        let state = BuilderState {
            graph,
            witness,
            trace: Vec::new(),
        };
        state.check()?;
        Ok(state)
    }

    fn check(&self) -> Result<()> {
        if is_cct(&self.graph, self.witness) {
            Ok(())
        } else {
            Err(Error::Internal(format!(
                "builder witness {{{}}} is not a cct of {:?}",
                self.witness, self.graph
            )))
        }
    }
}

/// Result of a twin step: the extended state, or the trace ending in the
/// step that found no cct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    Extended(BuilderState),
    NoCct(Vec<TraceEntry>),
}

pub fn builder_step_pendant(state: BuilderState, x: usize) -> Result<BuilderState> {
    state.check()?;
    let graph = state.graph.add_pendant(x)?;
    let mut trace = state.trace;
    trace.push(TraceEntry {
        vertex: graph.n() - 1,
        kind: BuildKind::Pendant,
        anchor: x,
        rule: Rule::Pendant,
        outcome: RuleOutcome::Witness(state.witness),
    });
    let next = BuilderState {
        graph,
        witness: state.witness,
        trace,
    };
    next.check()?;
    Ok(next)
}

pub fn builder_step_true_twin(state: BuilderState, x: usize) -> Result<StepOutcome> {
    twin_step(state, x, BuildKind::TrueTwin)
}

pub fn builder_step_false_twin(state: BuilderState, x: usize) -> Result<StepOutcome> {
    twin_step(state, x, BuildKind::FalseTwin)
}

fn twin_step(state: BuilderState, x: usize, kind: BuildKind) -> Result<StepOutcome> {
    state.check()?;
    let g = &state.graph;
    let extended = kind.apply(g, x)?;
    let y = g.n();
    let mut first = None;
    let mut found = None;
    for q in base_witnesses(g, state.witness) {
        let (rule, candidate) = match kind {
            BuildKind::TrueTwin => true_twin_rule(g, q, x, y),
            BuildKind::FalseTwin => false_twin_rule(g, q, x, y),
            _ => unreachable!("twin_step only handles twins"),
        };
        let outcome = match candidate {
            Candidate::Witness(t) if is_cct(&extended, t) => RuleOutcome::Witness(t),
            Candidate::Witness(t) | Candidate::BrokenPrune(t) => RuleOutcome::Rejected(t),
            Candidate::Guard => RuleOutcome::Guard,
        };
        if let RuleOutcome::Witness(_) = outcome {
            found = Some((rule, outcome));
            break;
        }
        first.get_or_insert((rule, outcome));
    }
    let (rule, outcome) = found.or(first).expect("at least one base witness");
    let mut trace = state.trace;
    trace.push(TraceEntry {
        vertex: y,
        kind,
        anchor: x,
        rule,
        outcome,
    });
    Ok(match outcome {
        RuleOutcome::Witness(witness) => StepOutcome::Extended(BuilderState {
            graph: extended,
            witness,
            trace,
        }),
        _ => StepOutcome::NoCct(trace),
    })
}

/// The carried witness and its minimization, followed by every maximal
/// clique of `g` that is a cct and its minimization.
fn base_witnesses(g: &Graph, carried: VertexSet) -> Vec<VertexSet> {
    let ccts = maximal_cliques(g)
        .into_iter()
        .filter(|&k| g.is_forest(g.vertices() - k));
    let mut out = Vec::new();
    for k in std::iter::once(carried).chain(ccts) {
        for t in [k, minimize_witness(g, k)] {
            if !out.contains(&t) {
                out.push(t);
            }
        }
    }
    out
}

enum Candidate {
    Witness(VertexSet),
    Guard,
    /// The `Q2` pruning step left a set that is no cct of `G`.
    BrokenPrune(VertexSet),
}

/// Views of the old witness around `x`.
struct Around {
    q1: VertexSet,
    q2: VertexSet,
    n1: VertexSet,
    far_acyclic: bool,
}

fn around(g: &Graph, q: VertexSet, x: usize) -> Around {
    let d = g.distance_decomposition(x).expect("x in range");
    let q1 = q & d.level1;
    Around {
        q1,
        q2: q & d.level2,
        n1: d.level1 - q1,
        far_acyclic: g.is_forest(d.far()),
    }
}

/// Drops every `Q2` vertex without a neighbor in `N1`.
fn prune_q2(g: &Graph, q: VertexSet, a: &mut Around) -> Result<VertexSet, VertexSet> {
    let mut q = q;
    for u in a.q2 {
        if g.neighbors(u).is_disjoint(a.n1) {
            q.remove(u);
        }
    }
    a.q2 &= q;
    if is_cct(g, q) {
        Ok(q)
    } else {
        Err(q)
    }
}

fn first_seeing_all(g: &Graph, among: VertexSet, target: VertexSet) -> Option<usize> {
    among.iter().find(|&a| g.sees_all(a, target))
}

fn pair(s: VertexSet) -> (usize, usize) {
    let mut it = s.iter();
    (it.next().unwrap(), it.next().unwrap())
}

fn true_twin_rule(g: &Graph, q: VertexSet, x: usize, y: usize) -> (Rule, Candidate) {
    use Candidate::{Guard, Witness};
    if q.is_subset(g.closed_neighbors(x)) {
        return (Rule::TrueClosedNeighborhood, Witness(q.with(y)));
    }
    let mut a = around(g, q, x);
    if !a.far_acyclic {
        let level1 = g.neighbors(x);
        let t = level1 | a.q2;
        return if g.is_clique(level1) && g.is_clique(t) {
            (Rule::TrueCyclic, Witness(t))
        } else {
            (Rule::TrueCyclic, Guard)
        };
    }
    let q = match prune_q2(g, q, &mut a) {
        Ok(q) => q,
        Err(broken) => return (Rule::PruneQ2, Candidate::BrokenPrune(broken)),
    };
    match a.q2.len() {
        0 => (Rule::TrueAcyclicEmpty, Witness(q.with(y))),
        1 => {
            let u = a.q2.min().unwrap();
            let nbrs = g.neighbors(u) & a.n1;
            if nbrs.iter().any(|b| !g.sees_all(b, a.q1)) {
                (
                    Rule::TrueAcyclicSingleMiss,
                    Witness(q.without(u).with(x).with(y)),
                )
            } else {
                let b = nbrs.min().expect("pruned Q2 vertices have an N1 neighbor");
                (
                    Rule::TrueAcyclicSingleSee,
                    Witness(q.without(u).with(x).with(y).with(b)),
                )
            }
        }
        2 => {
            let (u, v) = pair(a.q2);
            let common = g.neighbors(u) & g.neighbors(v) & a.n1;
            match common.min() {
                Some(c) if common.len() == 1 && g.sees_all(c, a.q1) => (
                    Rule::TrueAcyclicPair,
                    Witness(q.without(u).without(v).with(c).with(y)),
                ),
                _ => (Rule::TrueAcyclicPair, Guard),
            }
        }
        _ => (Rule::AcyclicLargeQ2, Guard),
    }
}

fn false_twin_rule(g: &Graph, q: VertexSet, x: usize, y: usize) -> (Rule, Candidate) {
    use Candidate::{Guard, Witness};
    if g.degree(x) <= 1 {
        return (Rule::FalseLowDegree, Witness(q));
    }
    let mut a = around(g, q, x);
    if !a.far_acyclic {
        return match a.n1.len() {
            0 | 1 => (Rule::FalseCyclicSmall, Witness(q)),
            2 => {
                let Some(first) = first_seeing_all(g, a.n1, a.q1) else {
                    return (Rule::FalseCyclicPair, Guard);
                };
                let second = a.n1.without(first).min().unwrap();
                if g.is_clique(a.q2.with(first)) {
                    (Rule::FalseCyclicPair, Witness(q.with(first)))
                } else if a.q1.is_empty() && g.is_clique(a.q2.with(second)) {
                    (Rule::FalseCyclicPair, Witness(a.q2.with(second)))
                } else {
                    (Rule::FalseCyclicPair, Guard)
                }
            }
            _ => (Rule::FalseCyclicMany, Guard),
        };
    }
    let q = match prune_q2(g, q, &mut a) {
        Ok(q) => q,
        Err(broken) => return (Rule::PruneQ2, Candidate::BrokenPrune(broken)),
    };
    match a.q2.len() {
        0 if !q.contains(x) => (Rule::FalseEmptyWithoutX, Witness(q.with(y))),
        0 => {
            let level1 = g.neighbors(x);
            if !is_threshold(&g.induced_subgraph(level1).graph) {
                return (Rule::FalseEmptyThreshold, Guard);
            }
            match maximal_cliques_in(g, level1)
                .into_iter()
                .find(|&k| is_cct(g, k))
            {
                Some(k) => (Rule::FalseEmptyThreshold, Witness(k.with(y))),
                None => (Rule::FalseEmptyThreshold, Guard),
            }
        }
        1 => {
            let u = a.q2.min().unwrap();
            let nbrs = g.neighbors(u) & a.n1;
            match nbrs.len() {
                2 => match first_seeing_all(g, nbrs, a.q1) {
                    Some(b) => (Rule::FalseSingleTwo, Witness(q.without(u).with(b).with(y))),
                    None => (Rule::FalseSingleTwo, Guard),
                },
                1 => {
                    let b = nbrs.min().unwrap();
                    if g.sees_all(b, a.q1) {
                        (
                            Rule::FalseSingleOneSee,
                            Witness(q.without(u).with(b).with(y)),
                        )
                    } else if a.n1 == nbrs {
                        (Rule::FalseSingleOnlyNeighbor, Witness(q))
                    } else {
                        (Rule::FalseSingleOther, Witness(q.without(u).with(y)))
                    }
                }
                _ => (Rule::FalseSingleMany, Guard),
            }
        }
        2 => {
            let (u, v) = pair(a.q2);
            let common = g.neighbors(u) & g.neighbors(v) & a.n1;
            match common.len() {
                2 => match first_seeing_all(g, common, a.q1) {
                    Some(b) => (Rule::FalsePairTwoCommon, Witness(q.with(b))),
                    None => (Rule::FalsePairTwoCommon, Guard),
                },
                1 => {
                    let b = common.min().unwrap();
                    if g.sees_all(b, a.q1) {
                        (
                            Rule::FalsePairOneCommonSee,
                            Witness(q.without(u).without(v).with(b).with(y)),
                        )
                    } else {
                        (Rule::FalsePairOneCommonMiss, Witness(q))
                    }
                }
                _ => (Rule::FalsePairOtherCommon, Guard),
            }
        }
        _ => (Rule::AcyclicLargeQ2, Guard),
    }
}

/// Outcome of [`build_cct`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildReport {
    /// Witness in the input graph's numbering, or `None` if there is no cct.
    pub witness: Option<VertexSet>,
    /// Connected components of the input that contain a cycle.
    pub cyclic_components: Vec<VertexSet>,
    /// The replayed component and its pruning sequence, present when exactly
    /// one component has a cycle.
    pub replay: Option<Replay>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Replay {
    pub component: InducedSubgraph,
    pub sequence: BuildSequence,
    /// One entry per non-initial step, in build numbering.
    pub trace: Vec<TraceEntry>,
}

impl BuildReport {
    pub fn trace(&self) -> &[TraceEntry] {
        self.replay.as_ref().map_or(&[], |r| &r.trace)
    }
}

/// Decides cct existence constructively.
///
/// A cct is a clique, so it lies inside one component and every other
/// component must be a forest. With no cyclic component the empty set is a
/// witness; with two or more there is none. Otherwise the cyclic component is
/// replayed along its pruning sequence from `K1` with the empty witness,
/// applying one rule per step. Every prefix of that sequence is connected.
pub fn build_cct(g: &Graph) -> Result<BuildReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !is_distance_hereditary(g) {
        return Err(Error::NotDistanceHereditary);
    }
    let cyclic_components: Vec<VertexSet> = g
        .components(g.vertices())
        .into_iter()
        .filter(|&c| !g.is_forest(c))
        .collect();
    let &[component] = cyclic_components.as_slice() else {
        let witness = cyclic_components.is_empty().then_some(VertexSet::EMPTY);
        return Ok(BuildReport {
            witness,
            cyclic_components,
            replay: None,
        });
    };
    let component = g.induced_subgraph(component);
    let sequence = pruning_sequence(&component.graph)?.ok_or_else(|| {
        Error::Internal("a component of a distance-hereditary graph has no pruning sequence".into())
    })?;
    let (local, trace) = replay_sequence(&sequence)?;
    let witness = local.map(|t| {
        let labels = sequence.labels();
        component.lift(t.iter().map(|v| labels[v]).collect())
    });
    if let Some(t) = witness {
        if !is_cct(g, t) {
            return Err(Error::Internal(format!(
                "relabelled builder witness {{{t}}} is not a cct of {g:?}"
            )));
        }
    }
    Ok(BuildReport {
        witness,
        cyclic_components,
        replay: Some(Replay {
            component,
            sequence,
            trace,
        }),
    })
}

/// Runs the builder along `sequence`; the witness is in build numbering.
pub fn replay_sequence(sequence: &BuildSequence) -> Result<(Option<VertexSet>, Vec<TraceEntry>)> {
    let mut state = BuilderState::initial();
    for step in &sequence.steps()[1..] {
        let x = step.anchor.expect("non-initial steps have anchors");
        let outcome = match step.kind {
            BuildKind::Pendant => StepOutcome::Extended(builder_step_pendant(state, x)?),
            BuildKind::TrueTwin => builder_step_true_twin(state, x)?,
            BuildKind::FalseTwin => builder_step_false_twin(state, x)?,
            BuildKind::Initial => unreachable!("validated sequence"),
        };
        state = match outcome {
            StepOutcome::Extended(s) => s,
            StepOutcome::NoCct(trace) => return Ok((None, trace)),
        };
    }
    Ok((Some(state.witness), state.trace))
}
