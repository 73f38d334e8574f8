//! Minimal distance-hereditary graphs without a cct.
//!
//! A graph with a cct keeps one under vertex deletion (intersect the witness
//! with what remains), so a graph without a cct is minimal as soon as every
//! one-vertex deletion has a cct. Mining therefore needs one oracle pass per
//! enumerated class plus, for the classes without a cct, one pass per vertex.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::cct::{build_cct, find_cct_oracle, is_two_one, verify_characterization};
use crate::dh::{enumerate_dh, DhCatalog};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::patterns::{contains_induced, is_cograph};

/// Number of obstructions the characterization names.
pub const EXPECTED_FAMILY_SIZE: usize = 12;
/// Default search bound for mining.
pub const DEFAULT_SEARCH_BOUND: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionRecord {
    /// The canonical representative.
    pub graph: Graph,
    pub canonical: CanonicalForm,
    pub order: usize,
    pub is_cograph: bool,
    pub is_two_one_graph: bool,
}

impl ObstructionRecord {
    pub fn new(graph: &Graph) -> Self {
        let canonical = canonical_form(graph);
        let graph = canonical.to_graph();
        ObstructionRecord {
            order: graph.n(),
            is_cograph: is_cograph(&graph),
            is_two_one_graph: is_two_one(&graph).is_some(),
            canonical,
            graph,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionFamily {
    /// Sorted by `(order, canonical)`.
    pub records: Vec<ObstructionRecord>,
    pub search_bound: usize,
}

impl ObstructionFamily {
    pub fn from_graphs(graphs: &[Graph], search_bound: usize) -> Self {
        let mut records: Vec<_> = graphs.iter().map(ObstructionRecord::new).collect();
        records.sort_by(|a, b| (a.order, &a.canonical).cmp(&(b.order, &b.canonical)));
        records.dedup_by(|b, a| a.canonical == b.canonical);
        ObstructionFamily {
            records,
            search_bound,
        }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn graphs(&self) -> Vec<Graph> {
        self.records.iter().map(|r| r.graph.clone()).collect()
    }

    /// Display name of record `i`: `O1`, `O2`, ...
    pub fn name(i: usize) -> String {
        format!("O{}", i + 1)
    }

    /// graph6 file: a comment header, then per record one comment line with
    /// its flags followed by the graph6 line.
    pub fn to_graph6_file(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "# minimal distance-hereditary graphs without a clique cycle-transversal"
        )
        .unwrap();
        writeln!(
            out,
            "# search_bound={} records={}",
            self.search_bound,
            self.len()
        )
        .unwrap();
        for (i, r) in self.records.iter().enumerate() {
            writeln!(
                out,
                "# {} order={} edges={} cograph={} two_one={}",
                Self::name(i),
                r.order,
                r.graph.edge_count(),
                r.is_cograph as u8,
                r.is_two_one_graph as u8
            )
            .unwrap();
            writeln!(out, "{}", r.canonical).unwrap();
        }
        out
    }

    /// Reads a family file; the search bound comes from the header when present.
    pub fn from_graph6_file(text: &str) -> std::result::Result<Self, (usize, Error)> {
        let graphs = graph6::parse_graphs(text)?;
        let bound = text
            .lines()
            .filter(|l| l.starts_with('#'))
            .flat_map(|l| l.split_whitespace())
            .find_map(|w| w.strip_prefix("search_bound=")?.parse().ok())
            .unwrap_or_else(|| graphs.iter().map(Graph::n).max().unwrap_or(0));
        Ok(ObstructionFamily::from_graphs(&graphs, bound))
    }
}

/// Whether `g` has no cct while every one-vertex deletion has one.
pub fn is_minimal_obstruction(g: &Graph) -> bool {
    find_cct_oracle(g).is_none()
        && (0..g.n()).all(|v| find_cct_oracle(&g.delete_vertex(v)).is_some())
}

pub fn mine_obstructions(max_n: usize) -> Result<ObstructionFamily> {
    if !(3..=12).contains(&max_n) {
        return Err(Error::Parameter(format!("max_n = {max_n} outside 3..=12")));
    }
    let catalog = enumerate_dh(max_n)?;
    Ok(mine_catalog(&catalog, max_n, |_| true))
}

/// Mines the classes of `catalog` with at most `max_n` vertices that pass
/// `filter`.
pub fn mine_catalog(
    catalog: &DhCatalog,
    max_n: usize,
    filter: impl Fn(&Graph) -> bool + Sync,
) -> ObstructionFamily {
    let found: Vec<Graph> = catalog
        .up_to(max_n)
        .collect::<Vec<_>>()
        .par_iter()
        .filter(|c| filter(&c.graph) && is_minimal_obstruction(&c.graph))
        .map(|c| c.graph.clone())
        .collect();
    ObstructionFamily::from_graphs(&found, max_n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub total: usize,
    /// Indices of cograph members.
    pub cographs: Vec<usize>,
    /// Indices of members that are not (2,1)-graphs.
    pub not_two_one: Vec<usize>,
    /// Indices of members containing an induced `P4`.
    pub contains_p4: Vec<usize>,
    /// Size of the family mined independently inside the cograph subclass.
    pub cograph_mined: usize,
    /// Whether that independent family equals the cograph members.
    pub cograph_crosscheck: bool,
}

impl ClassificationReport {
    pub fn summary(&self) -> String {
        let names = |ix: &[usize]| {
            ix.iter()
                .map(|&i| ObstructionFamily::name(i))
                .collect::<Vec<_>>()
                .join(",")
        };
        format!(
            "records {}\ncographs {} [{}]\nnot-two-one {} [{}]\ncograph-subclass-mined {} crosscheck {}",
            self.total,
            self.cographs.len(),
            names(&self.cographs),
            self.not_two_one.len(),
            names(&self.not_two_one),
            self.cograph_mined,
            if self.cograph_crosscheck { "ok" } else { "MISMATCH" }
        )
    }
}

/// Counts cograph and non-(2,1) members, and re-mines the cograph subclass
/// from `catalog` to cross-check the cograph members.
pub fn classify_family(
    family: &ObstructionFamily,
    catalog: &DhCatalog,
) -> Result<ClassificationReport> {
    if family.is_empty() {
        return Err(Error::Parameter("empty family".into()));
    }
    let mut cographs = Vec::new();
    let mut not_two_one = Vec::new();
    let mut contains_p4 = Vec::new();
    let p4 = crate::patterns::path(4);
    for (i, r) in family.records.iter().enumerate() {
        if is_cograph(&r.graph) {
            cographs.push(i);
        }
        if is_two_one(&r.graph).is_none() {
            not_two_one.push(i);
        }
        if contains_induced(&r.graph, &p4).is_some() {
            contains_p4.push(i);
        }
    }
    let bound = family.search_bound.min(catalog.max_n());
    let mined = mine_catalog(catalog, bound, is_cograph);
    let expected: Vec<&CanonicalForm> = cographs
        .iter()
        .map(|&i| &family.records[i].canonical)
        .collect();
    let got: Vec<&CanonicalForm> = mined.records.iter().map(|r| &r.canonical).collect();
    Ok(ClassificationReport {
        total: family.len(),
        cograph_mined: mined.len(),
        cograph_crosscheck: expected == got,
        cographs,
        not_two_one,
        contains_p4,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TheoremSummary {
    pub tested: usize,
    pub with_cct: usize,
    pub without_cct: usize,
    /// Graphs where "has a cct" differs from "family-free".
    pub characterization_mismatches: usize,
    /// Graphs where builder and oracle disagree on existence.
    pub builder_mismatches: usize,
}

impl TheoremSummary {
    pub fn mismatches(&self) -> usize {
        self.characterization_mismatches + self.builder_mismatches
    }
}

impl std::fmt::Display for TheoremSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "tested {} with-cct {} without-cct {} characterization-mismatches {} builder-mismatches {}",
            self.tested,
            self.with_cct,
            self.without_cct,
            self.characterization_mismatches,
            self.builder_mismatches
        )
    }
}

pub fn verify_theorem(max_n: usize, family: &ObstructionFamily) -> Result<TheoremSummary> {
    let catalog = enumerate_dh(max_n)?;
    verify_catalog(&catalog, max_n, family)
}

/// Checks every class of `catalog` up to `max_n` against the family and the
/// builder. Builder errors are counted as mismatches.
pub fn verify_catalog(
    catalog: &DhCatalog,
    max_n: usize,
    family: &ObstructionFamily,
) -> Result<TheoremSummary> {
    if family.search_bound < max_n {
        return Err(Error::Parameter(format!(
            "family mined to {} cannot certify graphs on {max_n} vertices",
            family.search_bound
        )));
    }
    let members = family.graphs();
    let classes: Vec<_> = catalog.up_to(max_n).collect();
    let summary = classes
        .par_iter()
        .map(|c| {
            let g = &c.graph;
            let oracle = find_cct_oracle(g).is_some();
            let characterization_ok = verify_characterization(g, &members).unwrap_or(false);
            let builder_ok = match build_cct(g) {
                Ok(report) => report.witness.is_some() == oracle,
                Err(_) => false,
            };
            TheoremSummary {
                tested: 1,
                with_cct: oracle as usize,
                without_cct: !oracle as usize,
                characterization_mismatches: !characterization_ok as usize,
                builder_mismatches: !builder_ok as usize,
            }
        })
        .reduce(TheoremSummary::default, |a, b| TheoremSummary {
            tested: a.tested + b.tested,
            with_cct: a.with_cct + b.with_cct,
            without_cct: a.without_cct + b.without_cct,
            characterization_mismatches: a.characterization_mismatches
                + b.characterization_mismatches,
            builder_mismatches: a.builder_mismatches + b.builder_mismatches,
        });
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::{complete, copies, cycle};

    #[test]
    fn nothing_below_six_vertices() {
        assert!(mine_obstructions(5).unwrap().is_empty());
        assert!(mine_obstructions(2).is_err());
    }

    #[test]
    fn two_triangles_is_the_first_obstruction() {
        let family = mine_obstructions(6).unwrap();
        let two_k3 = canonical_form(&copies(&complete(3), 2));
        assert!(family.records.iter().any(|r| r.canonical == two_k3));
        let r = ObstructionRecord::new(&copies(&complete(3), 2));
        assert!(r.is_cograph);
        assert!(!r.is_two_one_graph);
    }

    #[test]
    fn family_file_round_trip() {
        let family = ObstructionFamily::from_graphs(&[copies(&complete(3), 2), cycle(4)], 7);
        let text = family.to_graph6_file();
        let back = ObstructionFamily::from_graph6_file(&text).unwrap();
        assert_eq!(back, family);
        assert!(text.contains("# O1 order=4"));
    }

    #[test]
    fn dropping_a_record_is_detected() {
        let family = mine_obstructions(6).unwrap();
        let mut corrupted = family.clone();
        corrupted.records.pop();
        let catalog = enumerate_dh(6).unwrap();
        assert_eq!(
            verify_catalog(&catalog, 6, &family).unwrap().mismatches(),
            0
        );
        assert!(
            verify_catalog(&catalog, 6, &corrupted)
                .unwrap()
                .characterization_mismatches
                > 0
        );
    }
}
