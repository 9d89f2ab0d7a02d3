//! Structural checkers for concrete graphs.
//!
//! Each checker first verifies its precondition (usually that the graph is
//! `(I_m, L_n)`-free) and reports `Inapplicable` otherwise; a violation in an
//! applicable check means the graph or the detectors are buggy, so the
//! reports exist to be asserted empty.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::canon::{canonical_code, CanonError};
use crate::circulant::{witness, WitnessName};
use crate::detect::is_free;
use crate::graph::OrientedGraph;

/// Result of running a structural checker.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "outcome")]
pub enum CheckOutcome {
    /// The graph does not satisfy the checker's hypothesis.
    Inapplicable { reason: String },
    /// The checker ran; `report.passed()` tells whether every item held.
    Checked { report: CheckReport },
}

impl CheckOutcome {
    /// True iff the check ran and every item passed.
    pub fn passed(&self) -> bool {
        match self {
            CheckOutcome::Inapplicable { .. } => false,
            CheckOutcome::Checked { report } => report.passed(),
        }
    }

    pub fn is_inapplicable(&self) -> bool {
        matches!(self, CheckOutcome::Inapplicable { .. })
    }

    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            CheckOutcome::Inapplicable { .. } => None,
            CheckOutcome::Checked { report } => Some(report),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckItem {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    fn push(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.items.push(CheckItem {
            label: label.into(),
            passed,
            detail: detail.into(),
        });
    }
}

/// Checks the neighborhood decomposition of an `(I_m, L_n)`-free graph: for
/// every vertex `v`, the subgraphs induced on the out- and in-neighborhoods
/// are `(I_m, L_{n-1})`-free and the subgraph induced on the non-neighborhood
/// is `(I_{m-1}, L_n)`-free.
pub fn check_neighborhood_lemma(g: &OrientedGraph, m: usize, n: usize) -> CheckOutcome {
    if m < 2 || n < 2 {
        return CheckOutcome::Inapplicable {
            reason: format!("needs m, n >= 2, got ({m}, {n})"),
        };
    }
    if let Some(cert) = is_free(g, m, n).certificate().cloned() {
        return CheckOutcome::Inapplicable {
            reason: format!(
                "graph is not ({m}, {n})-free: contains {:?} {:?}",
                cert.kind, cert.vertices
            ),
        };
    }
    let mut report = CheckReport { items: Vec::new() };
    for v in 0..g.order() {
        let (out, inn, indep) = g.neighborhoods(v);
        let mut ok = true;
        let mut detail = String::new();
        for (name, side) in [("out", out), ("in", inn)] {
            if !side.is_empty() {
                let sub = g.induced_subgraph(side).expect("nonempty");
                if let Some(c) = is_free(&sub, m, n - 1).certificate() {
                    ok = false;
                    detail = format!(
                        "{name}-neighborhood {side} is not ({m}, {})-free: {:?}",
                        n - 1,
                        c.vertices
                    );
                }
            }
        }
        if ok && !indep.is_empty() {
            let sub = g.induced_subgraph(indep).expect("nonempty");
            if let Some(c) = is_free(&sub, m - 1, n).certificate() {
                ok = false;
                detail = format!(
                    "non-neighborhood {indep} is not ({}, {n})-free: {:?}",
                    m - 1,
                    c.vertices
                );
            }
        }
        if ok {
            detail = "out/in/non-neighborhoods decompose as required".to_string();
        }
        report.push(format!("vertex {v}"), ok, detail);
    }
    CheckOutcome::Checked { report }
}

/// Checks the degree consequences of `L_3`-freeness for an `(I_m, L_3)`-free
/// graph: both oriented degrees of every vertex are at most `m - 1`, and both
/// oriented neighborhoods are independent sets.
pub fn check_l3_degree_bound(g: &OrientedGraph, m: usize) -> CheckOutcome {
    if m < 2 {
        return CheckOutcome::Inapplicable {
            reason: format!("needs m >= 2, got {m}"),
        };
    }
    if let Some(cert) = is_free(g, m, 3).certificate().cloned() {
        return CheckOutcome::Inapplicable {
            reason: format!(
                "graph is not ({m}, 3)-free: contains {:?} {:?}",
                cert.kind, cert.vertices
            ),
        };
    }
    let cap = m - 1;
    let mut report = CheckReport { items: Vec::new() };
    for v in 0..g.order() {
        let (out, inn, _) = g.neighborhoods(v);
        let degrees_ok = out.len() <= cap && inn.len() <= cap;
        let out_independent = set_is_independent(g, out);
        let in_independent = set_is_independent(g, inn);
        let ok = degrees_ok && out_independent && in_independent;
        report.push(
            format!("vertex {v}"),
            ok,
            format!(
                "d+={} d-={} (cap {cap}); out independent: {out_independent}, in independent: {in_independent}",
                out.len(),
                inn.len()
            ),
        );
    }
    CheckOutcome::Checked { report }
}

fn set_is_independent(g: &OrientedGraph, s: VertexSet) -> bool {
    let vs = s.to_vec();
    (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| !g.adjacent(vs[i], vs[j])))
}

/// Checks the six properties every `(I_3, L_3)`-free oriented graph on eight
/// vertices satisfies: 4-regularity; every vertex triple spans an edge; every
/// non-neighborhood induces a triangle; every 5-set contains a triangle or
/// induces an undirected 5-cycle; every 6-set contains a triangle; and the
/// graph is isomorphic to the `W8` witness. Triangle and cycle checks ignore
/// arc orientation.
pub fn check_eight_vertex_properties(g: &OrientedGraph) -> CheckOutcome {
    if g.order() != 8 {
        return CheckOutcome::Inapplicable {
            reason: format!("needs 8 vertices, got {}", g.order()),
        };
    }
    if let Some(cert) = is_free(g, 3, 3).certificate().cloned() {
        return CheckOutcome::Inapplicable {
            reason: format!(
                "graph is not (3, 3)-free: contains {:?} {:?}",
                cert.kind, cert.vertices
            ),
        };
    }
    let mut report = CheckReport { items: Vec::new() };

    let degrees: Vec<usize> = (0..8).map(|v| g.degree(v)).collect();
    report.push(
        "4-regular",
        degrees.iter().all(|&d| d == 4),
        format!("degrees {degrees:?}"),
    );

    let mut triple_ok = true;
    for a in 0..8 {
        for b in (a + 1)..8 {
            for c in (b + 1)..8 {
                if !g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c) {
                    triple_ok = false;
                }
            }
        }
    }
    report.push(
        "every triple spans an edge",
        triple_ok,
        "checked all 56 triples",
    );

    let mut nonnbhd_ok = true;
    let mut nonnbhd_detail = String::from("each I(v) is an undirected triangle");
    for v in 0..8 {
        let indep = g.non_neighbors(v);
        if indep.len() != 3 || !set_is_undirected_clique(g, indep) {
            nonnbhd_ok = false;
            nonnbhd_detail = format!("I({v}) = {indep} does not induce a triangle");
        }
    }
    report.push(
        "non-neighborhoods induce triangles",
        nonnbhd_ok,
        nonnbhd_detail,
    );

    let mut five_ok = true;
    let mut six_ok = true;
    for subset in subsets_of_size(8, 5) {
        if !has_undirected_triangle(g, subset) && !induces_undirected_c5(g, subset) {
            five_ok = false;
        }
    }
    for subset in subsets_of_size(8, 6) {
        if !has_undirected_triangle(g, subset) {
            six_ok = false;
        }
    }
    report.push(
        "5-sets contain a triangle or induce C5",
        five_ok,
        "checked all 56 five-subsets",
    );
    report.push(
        "6-sets contain a triangle",
        six_ok,
        "checked all 28 six-subsets",
    );

    match eight_vertex_code_matches_w8(g) {
        Ok(matches) => report.push("isomorphic to W8", matches, "canonical code comparison"),
        Err(e) => report.push(
            "isomorphic to W8",
            false,
            format!("canonicalization failed: {e}"),
        ),
    }

    CheckOutcome::Checked { report }
}

fn eight_vertex_code_matches_w8(g: &OrientedGraph) -> Result<bool, CanonError> {
    Ok(canonical_code(g)? == canonical_code(&witness(WitnessName::W8))?)
}

fn set_is_undirected_clique(g: &OrientedGraph, s: VertexSet) -> bool {
    let vs = s.to_vec();
    (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| g.adjacent(vs[i], vs[j])))
}

fn has_undirected_triangle(g: &OrientedGraph, s: VertexSet) -> bool {
    let vs = s.to_vec();
    for i in 0..vs.len() {
        for j in (i + 1)..vs.len() {
            if !g.adjacent(vs[i], vs[j]) {
                continue;
            }
            for k in (j + 1)..vs.len() {
                if g.adjacent(vs[i], vs[k]) && g.adjacent(vs[j], vs[k]) {
                    return true;
                }
            }
        }
    }
    false
}

/// A triangle-free 2-regular underlying graph on five vertices is exactly an
/// undirected 5-cycle, so degree counting suffices here.
fn induces_undirected_c5(g: &OrientedGraph, s: VertexSet) -> bool {
    if has_undirected_triangle(g, s) {
        return false;
    }
    s.iter().all(|v| (g.neighbors(v) & s).len() == 2)
}

fn subsets_of_size(universe: usize, size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let full = 1u64 << universe;
    for bits in 0..full {
        if bits.count_ones() as usize == size {
            out.push(VertexSet::from_bits(bits));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::OrientedGraph;

    #[test]
    fn neighborhood_lemma_inapplicable_on_transitive_triangle() {
        let tt3 = OrientedGraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let outcome = check_neighborhood_lemma(&tt3, 2, 3);
        assert!(outcome.is_inapplicable());
        assert!(!outcome.passed());
    }

    #[test]
    fn eight_vertex_check_inapplicable_on_empty_graph() {
        let empty8 = OrientedGraph::new(8).unwrap();
        let outcome = check_eight_vertex_properties(&empty8);
        assert!(outcome.is_inapplicable());
    }

    #[test]
    fn eight_vertex_check_inapplicable_on_wrong_order() {
        let empty7 = OrientedGraph::new(7).unwrap();
        assert!(check_eight_vertex_properties(&empty7).is_inapplicable());
    }

    #[test]
    fn degree_bound_inapplicable_when_not_free() {
        // An empty graph on 4 vertices contains I_3, so it is not (3,3)-free.
        let g = OrientedGraph::new(4).unwrap();
        assert!(check_l3_degree_bound(&g, 3).is_inapplicable());
    }

    #[test]
    fn c5_recognizer() {
        let c5 = OrientedGraph::from_arcs(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(induces_undirected_c5(&c5, VertexSet::full(5)));
        let path = OrientedGraph::from_arcs(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(!induces_undirected_c5(&path, VertexSet::full(5)));
    }
}
