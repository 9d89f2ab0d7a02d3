//! Exact detectors for the two pattern families: independent sets `I_m` and
//! transitive tournaments `L_n`.
//!
//! Both detectors are complete branch-and-bound searches over vertex bitsets;
//! answers are exact, never heuristic. Certificates carry the vertices that
//! realize a pattern and can be re-validated in `O(size^2)` without searching
//! again.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::OrientedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    IndependentSet,
    TransitiveTournament,
}

/// A found pattern. For a transitive tournament the vertices are listed in
/// dominance order: each vertex has arcs to all later ones. For an
/// independent set they are ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub vertices: Vec<usize>,
}

impl Certificate {
    /// Re-checks the certificate against `g` without searching.
    pub fn validate(&self, g: &OrientedGraph) -> bool {
        let vs = &self.vertices;
        if vs.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let mut seen = VertexSet::EMPTY;
        for &v in vs {
            if seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        match self.kind {
            CertificateKind::IndependentSet => {
                (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| !g.adjacent(vs[i], vs[j])))
            }
            CertificateKind::TransitiveTournament => {
                (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| g.has_arc(vs[i], vs[j])))
            }
        }
    }
}

/// Search outcome of [`is_free`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict", content = "certificate")]
pub enum FreenessVerdict {
    Free,
    NotFree(Certificate),
}

impl FreenessVerdict {
    pub fn is_free(&self) -> bool {
        matches!(self, FreenessVerdict::Free)
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            FreenessVerdict::Free => None,
            FreenessVerdict::NotFree(c) => Some(c),
        }
    }
}

/// Finds an independent set of exactly `m` vertices, if one exists.
pub fn find_independent_set(g: &OrientedGraph, m: usize) -> Option<Certificate> {
    let mut chosen = Vec::with_capacity(m);
    if !extend_independent(g, &mut chosen, g.vertices(), m) {
        return None;
    }
    chosen.sort_unstable();
    Some(Certificate {
        kind: CertificateKind::IndependentSet,
        vertices: chosen,
    })
}

/// Finds an independent set of `m` vertices that contains `v`, if one exists.
/// Used by the search to re-test only subsets involving a newly added vertex.
pub fn find_independent_set_containing(
    g: &OrientedGraph,
    m: usize,
    v: usize,
) -> Option<Certificate> {
    if m == 0 {
        return find_independent_set(g, 0);
    }
    let mut chosen = vec![v];
    if !extend_independent(g, &mut chosen, g.non_neighbors(v), m) {
        return None;
    }
    chosen.sort_unstable();
    Some(Certificate {
        kind: CertificateKind::IndependentSet,
        vertices: chosen,
    })
}

/// Branch and bound on the non-adjacency graph. Pivots on the candidate with
/// the largest undirected degree: including it shrinks the candidate pool
/// fastest, excluding it is handled by the loop.
fn extend_independent(
    g: &OrientedGraph,
    chosen: &mut Vec<usize>,
    mut candidates: VertexSet,
    target: usize,
) -> bool {
    if chosen.len() >= target {
        return true;
    }
    while !candidates.is_empty() {
        if chosen.len() + candidates.len() < target {
            return false;
        }
        let pivot = candidates
            .iter()
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        chosen.push(pivot);
        let next = candidates & g.non_neighbors(pivot);
        if extend_independent(g, chosen, next, target) {
            return true;
        }
        chosen.pop();
        candidates.remove(pivot);
    }
    false
}

/// Finds a transitive tournament on exactly `n` vertices, returned in
/// dominance order, if one exists.
pub fn find_transitive_tournament(g: &OrientedGraph, n: usize) -> Option<Certificate> {
    let mut chosen = Vec::with_capacity(n);
    if !extend_tournament(g, &mut chosen, g.vertices(), n, None, false) {
        return None;
    }
    Some(Certificate {
        kind: CertificateKind::TransitiveTournament,
        vertices: chosen,
    })
}

/// Finds a transitive tournament on `n` vertices that contains `v`.
pub fn find_transitive_tournament_containing(
    g: &OrientedGraph,
    n: usize,
    v: usize,
) -> Option<Certificate> {
    if n == 0 {
        return find_transitive_tournament(g, 0);
    }
    let mut chosen = Vec::with_capacity(n);
    if !extend_tournament(g, &mut chosen, g.vertices(), n, Some(v), false) {
        return None;
    }
    Some(Certificate {
        kind: CertificateKind::TransitiveTournament,
        vertices: chosen,
    })
}

/// Recursively extends a dominance chain. The candidate pool is the
/// intersection of the out-neighborhoods of all chosen vertices; candidates
/// are tried in descending out-degree order.
fn extend_tournament(
    g: &OrientedGraph,
    chosen: &mut Vec<usize>,
    pool: VertexSet,
    target: usize,
    required: Option<usize>,
    have_required: bool,
) -> bool {
    if chosen.len() >= target {
        return required.is_none() || have_required;
    }
    if chosen.len() + pool.len() < target {
        return false;
    }
    if let Some(r) = required {
        if !have_required && !pool.contains(r) {
            return false;
        }
    }
    let mut order: Vec<usize> = pool.to_vec();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.out_degree(v)), v));
    for v in order {
        chosen.push(v);
        let next = pool & g.out_neighbors(v);
        if extend_tournament(
            g,
            chosen,
            next,
            target,
            required,
            have_required || Some(v) == required,
        ) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Decides `(I_m, L_n)`-freeness. The independent set is checked first; if
/// both patterns are present the certificate reported is the independent set.
pub fn is_free(g: &OrientedGraph, m: usize, n: usize) -> FreenessVerdict {
    if let Some(c) = find_independent_set(g, m) {
        return FreenessVerdict::NotFree(c);
    }
    if let Some(c) = find_transitive_tournament(g, n) {
        return FreenessVerdict::NotFree(c);
    }
    FreenessVerdict::Free
}

/// Number of transitive triangles: triples `{a, b, c}` carrying arcs
/// `a -> b`, `b -> c`, `a -> c`. Each such triple is counted once, via its
/// unique source -> middle arc.
pub fn count_transitive_triangles(g: &OrientedGraph) -> usize {
    let mut count = 0;
    for a in 0..g.order() {
        let out_a = g.out_neighbors(a);
        for b in out_a.iter() {
            count += (out_a & g.out_neighbors(b)).len();
        }
    }
    count
}

/// The independence number: the largest `m` with an `I_m` present.
pub fn independence_number(g: &OrientedGraph) -> usize {
    let mut alpha = 0;
    while alpha < g.order() && find_independent_set(g, alpha + 1).is_some() {
        alpha += 1;
    }
    alpha
}
