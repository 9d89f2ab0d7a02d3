//! Isomorph-reduced exhaustive generation of `(I_m, L_n)`-free oriented
//! graphs, plus the Cayley scans and the end-to-end Ramsey-value verdict.
//!
//! Level `k` holds one canonical representative per isomorphism class of
//! free graphs on `k` vertices. Extending a representative adds one new
//! vertex and walks all `3^k` arc-choice vectors (none / forward / backward
//! per old vertex, old-vertex 0 the most significant digit). A child
//! survives if it stays free — only patterns through the new vertex need
//! re-testing, freeness being hereditary — and its canonical code is unseen
//! at the level. Every free graph on `k+1` vertices arises by extending some
//! level-`k` class, so each level is complete.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::bounds::{best_bounds, known_directed_exact, BoundsError};
use crate::canon::{canonical_form, CanonicalCode};
use crate::cayley::{enumerate_cayley, CayleyError, CayleyGroup};
use crate::circulant::{witness, WitnessName};
use crate::detect::{
    find_independent_set_containing, find_transitive_tournament_containing, is_free,
};
use crate::graph::OrientedGraph;
use crate::io::write_arc_list;

/// Desk-scale cap on the search order.
pub const MAX_SEARCH_ORDER: usize = 10;

/// Default per-level class cap for the memory guard.
pub const DEFAULT_CLASS_CAP: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    /// Exhaustive class counts at every level (the default).
    CountClasses,
    /// Stop the final level at the first class found.
    FindAny,
    /// Like `FindAny`; a nonzero final count refutes emptiness.
    ProveEmpty,
}

impl SearchMode {
    pub fn parse(s: &str) -> Option<SearchMode> {
        match s {
            "count-classes" => Some(SearchMode::CountClasses),
            "find-any" => Some(SearchMode::FindAny),
            "prove-empty" => Some(SearchMode::ProveEmpty),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub m: usize,
    pub n: usize,
    pub max_order: usize,
    pub mode: SearchMode,
    /// Number of workers; 1 forces the sequential path.
    pub worker_count: usize,
    /// Apply the degree cap `d^+, d^- <= m - 1` while generating (sound for
    /// n = 3 at every level; ignored otherwise).
    pub degree_cap_enabled: bool,
    /// Memory guard: abort a level whose class set exceeds this.
    pub class_cap: usize,
    /// Post-hoc filter for hypothetical-extremal scans: keep only final-level
    /// classes satisfying [`extremal_degree_equalities`]. Off by default;
    /// never applied while generating (intermediate levels need not satisfy
    /// the equalities).
    pub extremal_equality_filter: bool,
}

impl SearchConfig {
    pub fn new(m: usize, n: usize, max_order: usize) -> SearchConfig {
        SearchConfig {
            m,
            n,
            max_order,
            mode: SearchMode::CountClasses,
            worker_count: 1,
            degree_cap_enabled: true,
            class_cap: DEFAULT_CLASS_CAP,
            extremal_equality_filter: false,
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.m < 2 || self.n < 2 {
            return Err(SearchError::InvalidConfig(format!(
                "m and n must be >= 2, got ({}, {})",
                self.m, self.n
            )));
        }
        if self.max_order == 0 || self.max_order > MAX_SEARCH_ORDER {
            return Err(SearchError::InvalidConfig(format!(
                "max_order must be in 1..={MAX_SEARCH_ORDER}, got {}",
                self.max_order
            )));
        }
        if self.worker_count == 0 {
            return Err(SearchError::InvalidConfig(
                "worker_count must be >= 1".to_string(),
            ));
        }
        if self.class_cap == 0 {
            return Err(SearchError::InvalidConfig(
                "class_cap must be >= 1".to_string(),
            ));
        }
        if self.extremal_equality_filter
            && (known_directed_exact(self.m, self.n - 1).is_none()
                || known_directed_exact(self.m - 1, self.n).is_none())
        {
            return Err(SearchError::InvalidConfig(format!(
                "extremal equality filter needs exact values for ({}, {}) and ({}, {})",
                self.m,
                self.n - 1,
                self.m - 1,
                self.n
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LevelCount {
    pub order: usize,
    pub classes: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub pruned_independence: u64,
    pub pruned_tournament: u64,
    pub pruned_degree_cap: u64,
    pub pruned_canonical: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub m: usize,
    pub n: usize,
    pub per_order: Vec<LevelCount>,
    /// Largest order with at least one class, within the completed levels.
    pub extremal_order: usize,
    /// Arc lists of the classes at the extremal order, in canonical-code
    /// order.
    pub representatives: Vec<String>,
    pub stats: SearchStats,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("class cap {cap} exceeded at order {order}; report holds the completed levels")]
    ClassCapExceeded {
        cap: usize,
        order: usize,
        partial: Box<SearchReport>,
    },
}

/// Exhaustive isomorph-reduced search up to `cfg.max_order`.
pub fn extremal_search(cfg: &SearchConfig) -> Result<SearchReport, SearchError> {
    extremal_search_with(cfg, |_| {})
}

/// Like [`extremal_search`], invoking `progress` after each completed level.
pub fn extremal_search_with<F>(
    cfg: &SearchConfig,
    mut progress: F,
) -> Result<SearchReport, SearchError>
where
    F: FnMut(&LevelCount),
{
    cfg.validate()?;
    let mut stats = SearchStats::default();
    let mut per_order: Vec<LevelCount> = Vec::new();

    // Order 1: the single-vertex graph, free for every m, n >= 2.
    let mut reps = vec![OrientedGraph::new(1).expect("order 1 valid")];
    let mut extremal_reps = reps.clone();
    let first = LevelCount {
        order: 1,
        classes: 1,
    };
    per_order.push(first);
    progress(&first);

    for target in 2..=cfg.max_order {
        let early_stop = target == cfg.max_order && cfg.mode != SearchMode::CountClasses;
        let expanded = if early_stop {
            Ok(expand_level_first_only(cfg, &reps))
        } else {
            expand_level(cfg, &reps)
        };
        let (mut classes, level_stats) = match expanded {
            Ok(v) => v,
            Err(CapHit) => {
                let report = build_report(cfg, per_order, &extremal_reps, stats);
                return Err(SearchError::ClassCapExceeded {
                    cap: cfg.class_cap,
                    order: target,
                    partial: Box::new(report),
                });
            }
        };
        if cfg.extremal_equality_filter && target == cfg.max_order {
            classes.retain(|_, g| {
                extremal_degree_equalities(g, cfg.m, cfg.n).expect("validated at config time")
            });
        }
        merge_stats(&mut stats, &level_stats);
        let count = LevelCount {
            order: target,
            classes: classes.len(),
        };
        per_order.push(count);
        progress(&count);
        reps = classes.into_values().collect();
        if reps.is_empty() {
            // Freeness is hereditary, so every later level is empty too.
            break;
        }
        extremal_reps = reps.clone();
    }

    Ok(build_report(cfg, per_order, &extremal_reps, stats))
}

fn build_report(
    cfg: &SearchConfig,
    per_order: Vec<LevelCount>,
    extremal_reps: &[OrientedGraph],
    stats: SearchStats,
) -> SearchReport {
    let extremal_order = per_order
        .iter()
        .rev()
        .find(|l| l.classes > 0)
        .map(|l| l.order)
        .unwrap_or(0);
    SearchReport {
        m: cfg.m,
        n: cfg.n,
        per_order,
        extremal_order,
        representatives: extremal_reps.iter().map(write_arc_list).collect(),
        stats,
    }
}

fn merge_stats(into: &mut SearchStats, from: &SearchStats) {
    into.nodes_expanded += from.nodes_expanded;
    into.pruned_independence += from.pruned_independence;
    into.pruned_tournament += from.pruned_tournament;
    into.pruned_degree_cap += from.pruned_degree_cap;
    into.pruned_canonical += from.pruned_canonical;
}

struct CapHit;

#[derive(Default, Clone, Copy)]
struct Counters {
    nodes: u64,
    pruned_independence: u64,
    pruned_tournament: u64,
    pruned_degree_cap: u64,
    canonicalized: u64,
}

impl Counters {
    fn absorb(&mut self, other: &Counters) {
        self.nodes += other.nodes;
        self.pruned_independence += other.pruned_independence;
        self.pruned_tournament += other.pruned_tournament;
        self.pruned_degree_cap += other.pruned_degree_cap;
        self.canonicalized += other.canonicalized;
    }

    /// `pruned_canonical` is derived as (children canonicalized) minus
    /// (classes retained); both are schedule-independent, so the stats are
    /// identical for every worker count.
    fn into_stats(self, classes_retained: usize) -> SearchStats {
        SearchStats {
            nodes_expanded: self.nodes,
            pruned_independence: self.pruned_independence,
            pruned_tournament: self.pruned_tournament,
            pruned_degree_cap: self.pruned_degree_cap,
            pruned_canonical: self.canonicalized - classes_retained as u64,
        }
    }
}

/// Walks the free, canonicalized children of one parent in the fixed
/// enumeration order, updating the prune counters. Returns `Break` if the
/// visitor broke.
fn for_each_free_child<F>(
    cfg: &SearchConfig,
    parent: &OrientedGraph,
    counters: &mut Counters,
    visit: &mut F,
) -> std::ops::ControlFlow<()>
where
    F: FnMut(OrientedGraph, CanonicalCode) -> std::ops::ControlFlow<()>,
{
    use std::ops::ControlFlow;

    let k = parent.order();
    let new = k;
    let total = 3usize.pow(k as u32);
    for idx in 0..total {
        counters.nodes += 1;

        // Decode the base-3 choice vector, old vertex 0 most significant:
        // 0 none, 1 forward (old -> new), 2 backward (new -> old).
        let mut forward = VertexSet::EMPTY;
        let mut backward = VertexSet::EMPTY;
        let mut rest = idx;
        for u in (0..k).rev() {
            match rest % 3 {
                0 => {}
                1 => forward.insert(u),
                2 => backward.insert(u),
                _ => unreachable!(),
            }
            rest /= 3;
        }
        let child = parent.extend_with_vertex(forward, backward);

        if cfg.degree_cap_enabled && cfg.n == 3 {
            let cap = cfg.m - 1;
            let ok = child.in_degree(new) <= cap
                && child.out_degree(new) <= cap
                && forward.iter().all(|u| child.out_degree(u) <= cap)
                && backward.iter().all(|u| child.in_degree(u) <= cap);
            if !ok {
                counters.pruned_degree_cap += 1;
                continue;
            }
        }
        // The parent is free, so any new pattern must pass through the new
        // vertex.
        if find_independent_set_containing(&child, cfg.m, new).is_some() {
            counters.pruned_independence += 1;
            continue;
        }
        if find_transitive_tournament_containing(&child, cfg.n, new).is_some() {
            counters.pruned_tournament += 1;
            continue;
        }
        counters.canonicalized += 1;
        let (canonical, code) = canonical_form(&child).expect("search order within limit");
        if visit(canonical, code).is_break() {
            return ControlFlow::Break(());
        }
    }
    ControlFlow::Continue(())
}

fn expand_parents(
    cfg: &SearchConfig,
    parents: &[OrientedGraph],
) -> Result<(BTreeMap<CanonicalCode, OrientedGraph>, Counters), CapHit> {
    let mut classes: BTreeMap<CanonicalCode, OrientedGraph> = BTreeMap::new();
    let mut counters = Counters::default();
    for parent in parents {
        let mut hit = false;
        let flow = for_each_free_child(cfg, parent, &mut counters, &mut |canonical, code| {
            classes.entry(code).or_insert(canonical);
            if classes.len() > cfg.class_cap {
                hit = true;
                std::ops::ControlFlow::Break(())
            } else {
                std::ops::ControlFlow::Continue(())
            }
        });
        if flow.is_break() && hit {
            return Err(CapHit);
        }
    }
    Ok((classes, counters))
}

/// Expands one level completely. Parents are split across workers; the
/// worker-local class maps are merged in chunk order, which is set-union and
/// therefore schedule-independent.
fn expand_level(
    cfg: &SearchConfig,
    parents: &[OrientedGraph],
) -> Result<(BTreeMap<CanonicalCode, OrientedGraph>, SearchStats), CapHit> {
    let chunks: Vec<(BTreeMap<CanonicalCode, OrientedGraph>, Counters)> =
        if cfg.worker_count <= 1 || parents.len() <= 1 {
            vec![expand_parents(cfg, parents)?]
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.worker_count)
                .build()
                .expect("thread pool construction");
            let chunk_size = parents.len().div_ceil(cfg.worker_count * 4).max(1);
            pool.install(|| {
                parents
                    .par_chunks(chunk_size)
                    .map(|c| expand_parents(cfg, c))
                    .collect::<Result<Vec<_>, CapHit>>()
            })?
        };

    let mut classes: BTreeMap<CanonicalCode, OrientedGraph> = BTreeMap::new();
    let mut counters = Counters::default();
    for (chunk_classes, chunk_counters) in chunks {
        counters.absorb(&chunk_counters);
        for (code, graph) in chunk_classes {
            classes.entry(code).or_insert(graph);
        }
        if classes.len() > cfg.class_cap {
            return Err(CapHit);
        }
    }
    let retained = classes.len();
    Ok((classes, counters.into_stats(retained)))
}

/// Final-level expansion for the early-stopping modes: sequential, stops at
/// the first surviving class so the outcome is worker-count independent.
fn expand_level_first_only(
    cfg: &SearchConfig,
    parents: &[OrientedGraph],
) -> (BTreeMap<CanonicalCode, OrientedGraph>, SearchStats) {
    let mut classes = BTreeMap::new();
    let mut counters = Counters::default();
    for parent in parents {
        let flow = for_each_free_child(cfg, parent, &mut counters, &mut |canonical, code| {
            classes.insert(code, canonical);
            std::ops::ControlFlow::Break(())
        });
        if flow.is_break() {
            break;
        }
    }
    let retained = classes.len();
    (classes, counters.into_stats(retained))
}

/// Degree equalities every vertex of a maximum-size free graph satisfies
/// when the recurrence bound is met with equality:
/// `d- = d+ = r(I_m, L_{n-1}) - 1` and `|I(v)| = r(I_{m-1}, L_n) - 1`.
/// Decidable only when both sub-values are known exactly (`None` otherwise).
/// Unsound as generation-time pruning; meant for post-hoc scans of
/// hypothetical extremal graphs.
pub fn extremal_degree_equalities(g: &OrientedGraph, m: usize, n: usize) -> Option<bool> {
    if m < 2 || n < 2 {
        return None;
    }
    let d = known_directed_exact(m, n - 1)? as usize - 1;
    let i = known_directed_exact(m - 1, n)? as usize - 1;
    Some((0..g.order()).all(|v| {
        g.out_degree(v) == d && g.in_degree(v) == d && g.non_neighbors(v).len() == i
    }))
}

/// Scan every Cayley digraph of the group for `(I_m, L_n)`-freeness.
#[derive(Clone, Debug, Serialize)]
pub struct CayleyScanReport {
    pub group: CayleyGroup,
    pub order: usize,
    pub m: usize,
    pub n: usize,
    pub scanned: usize,
    pub free_count: usize,
    /// Connection sets of the free graphs, in enumeration order.
    pub free_connection_sets: Vec<String>,
}

pub fn cayley_scan(
    group: CayleyGroup,
    order: usize,
    m: usize,
    n: usize,
) -> Result<CayleyScanReport, CayleyError> {
    let mut scanned = 0;
    let mut free_connection_sets = Vec::new();
    for digraph in enumerate_cayley(group, order)? {
        scanned += 1;
        if is_free(&digraph.graph, m, n).is_free() {
            free_connection_sets.push(digraph.connection.to_string());
        }
    }
    Ok(CayleyScanReport {
        group,
        order,
        m,
        n,
        scanned,
        free_count: free_connection_sets.len(),
        free_connection_sets,
    })
}

/// How the lower side of a Ramsey verdict was certified.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum LowerEvidence {
    /// A named witness of order `claimed - 1` passed the freeness check.
    NamedWitness { name: String, order: usize },
    /// The exhaustive search produced a free graph of order `claimed - 1`.
    Searched { order: usize },
    /// No witness available (or the search refuted the claim).
    Unknown { reason: String },
}

/// Verdict for a claimed exact value: the lower side is certified
/// computationally (witness or search), the upper side formulaically.
#[derive(Clone, Debug, Serialize)]
pub struct RamseyVerdict {
    pub m: usize,
    pub n: usize,
    pub claimed: u64,
    pub exact: bool,
    pub lower_evidence: LowerEvidence,
    pub upper: u64,
    pub upper_src: String,
}

pub fn verify_ramsey_value(m: usize, n: usize, claimed: u64) -> Result<RamseyVerdict, BoundsError> {
    let entry = best_bounds(m, n)?;
    let witness_order = claimed as usize - 1;

    let named = WitnessName::ALL
        .iter()
        .find(|w| w.claims() == (m, n) && w.spec().modulus == witness_order);
    let lower_evidence = if let Some(&name) = named {
        if is_free(&witness(name), m, n).is_free() {
            LowerEvidence::NamedWitness {
                name: name.to_string(),
                order: witness_order,
            }
        } else {
            LowerEvidence::Unknown {
                reason: format!("named witness {name} failed its freeness check"),
            }
        }
    } else if witness_order <= MAX_SEARCH_ORDER {
        let mut cfg = SearchConfig::new(m, n, witness_order);
        cfg.mode = SearchMode::FindAny;
        match extremal_search(&cfg) {
            Ok(report) if report.extremal_order == witness_order => LowerEvidence::Searched {
                order: witness_order,
            },
            Ok(report) => LowerEvidence::Unknown {
                reason: format!(
                    "search found no free graph above order {}",
                    report.extremal_order
                ),
            },
            Err(e) => LowerEvidence::Unknown {
                reason: format!("search aborted: {e}"),
            },
        }
    } else {
        LowerEvidence::Unknown {
            reason: format!("no witness of order {witness_order} available at desk scale"),
        }
    };

    let lower_certified = !matches!(lower_evidence, LowerEvidence::Unknown { .. });
    Ok(RamseyVerdict {
        m,
        n,
        claimed,
        exact: lower_certified && entry.upper == claimed,
        lower_evidence,
        upper: entry.upper,
        upper_src: entry.upper_src(),
    })
}
