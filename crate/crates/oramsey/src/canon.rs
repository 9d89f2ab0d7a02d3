//! Canonical codes for small oriented graphs.
//!
//! The canonical code of a graph is the lexicographically minimal byte
//! encoding of its arc structure over all vertex relabelings, restricted to
//! relabelings that list vertices in non-decreasing `(out-degree, in-degree)`
//! order. Two graphs have equal codes iff they are isomorphic. The search is
//! a depth-first assignment of labels with prefix pruning against the best
//! code found so far; at the orders this crate searches (<= 10) this simple
//! scheme is fast and easy to audit.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::OrientedGraph;

/// Practical order limit for canonicalization: above this the permutation
/// search is no longer desk-scale and the call is refused.
pub const CANONICAL_ORDER_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("order {order} above the canonicalization limit {CANONICAL_ORDER_LIMIT}")]
    OrderLimit { order: usize },
}

/// A total-order-comparable encoding of an oriented graph, invariant under
/// vertex relabeling. Equal codes certify isomorphism.
///
/// Layout: one byte for the order, then for each label `p = 1..n` the pair
/// states against labels `q = 0..p` in ascending `q` — `0` no arc, `1` arc
/// `q -> p`, `2` arc `p -> q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    bytes: Vec<u8>,
}

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Reconstructs the canonical representative graph encoded by this code.
    pub fn to_graph(&self) -> OrientedGraph {
        let order = self.bytes[0] as usize;
        let mut g = OrientedGraph::new(order).expect("code order in range");
        let mut i = 1;
        for p in 1..order {
            for q in 0..p {
                match self.bytes[i] {
                    0 => {}
                    1 => g.add_arc(q, p).expect("code is consistent"),
                    2 => g.add_arc(p, q).expect("code is consistent"),
                    b => unreachable!("invalid pair state {b}"),
                }
                i += 1;
            }
        }
        g
    }
}

impl std::fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalCode(")?;
        for b in &self.bytes {
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

/// Computes the canonical code of `g`.
pub fn canonical_code(g: &OrientedGraph) -> Result<CanonicalCode, CanonError> {
    canonical_form(g).map(|(_, code)| code)
}

/// Computes the canonically relabeled copy of `g` together with its code.
pub fn canonical_form(g: &OrientedGraph) -> Result<(OrientedGraph, CanonicalCode), CanonError> {
    let n = g.order();
    if n > CANONICAL_ORDER_LIMIT {
        return Err(CanonError::OrderLimit { order: n });
    }

    // Vertices may only be assigned to labels whose position in the sorted
    // degree-pair sequence matches their own pair; this prunes the n!
    // search without affecting the iff property (the encoding determines the
    // graph completely, and the restricted candidate sets of isomorphic
    // graphs coincide).
    let pairs: Vec<(usize, usize)> = (0..n).map(|v| (g.out_degree(v), g.in_degree(v))).collect();
    let mut sorted_pairs = pairs.clone();
    sorted_pairs.sort_unstable();

    let mut search = Search {
        graph: g,
        pairs,
        sorted_pairs,
        assigned: Vec::with_capacity(n),
        used: VertexSet::EMPTY,
        code: vec![n as u8],
        best: None,
        best_assignment: Vec::new(),
    };
    search.descend(true);

    let Search {
        best,
        best_assignment,
        ..
    } = search;
    let code = CanonicalCode {
        bytes: best.expect("at least one labeling exists"),
    };
    // best_assignment[label] = original vertex; relabel wants perm[old] = new.
    let mut perm = vec![0usize; n];
    for (label, &old) in best_assignment.iter().enumerate() {
        perm[old] = label;
    }
    let canonical = g.relabel(&perm);
    debug_assert_eq!(encode_full(&canonical), code.bytes);
    Ok((canonical, code))
}

struct Search<'a> {
    graph: &'a OrientedGraph,
    pairs: Vec<(usize, usize)>,
    sorted_pairs: Vec<(usize, usize)>,
    assigned: Vec<usize>,
    used: VertexSet,
    code: Vec<u8>,
    best: Option<Vec<u8>>,
    best_assignment: Vec<usize>,
}

impl Search<'_> {
    /// Extends the partial labeling by one label and reports whether the best
    /// code was replaced anywhere in the subtree.
    ///
    /// `tight_in` means the code built so far equals the corresponding prefix
    /// of the current best; `false` (with a best present) means it is already
    /// strictly smaller. When a descendant installs a new best, the current
    /// prefix is exactly the new best's prefix, so later siblings compare
    /// tight again.
    fn descend(&mut self, tight_in: bool) -> bool {
        let n = self.graph.order();
        let label = self.assigned.len();
        if label == n {
            if self.best.is_none() || !tight_in {
                self.best = Some(self.code.clone());
                self.best_assignment = self.assigned.clone();
                return true;
            }
            return false;
        }
        let mut node_tight = tight_in;
        let mut replaced_any = false;
        let want = self.sorted_pairs[label];
        for v in 0..n {
            if self.used.contains(v) || self.pairs[v] != want {
                continue;
            }
            let base = self.code.len();
            let mut tight = node_tight && self.best.is_some();
            let mut worse = false;
            for (q, &w) in self.assigned.iter().enumerate() {
                let state = if self.graph.has_arc(w, v) {
                    1
                } else if self.graph.has_arc(v, w) {
                    2
                } else {
                    0
                };
                self.code.push(state);
                if tight {
                    let best_byte = self.best.as_ref().unwrap()[base + q];
                    if state > best_byte {
                        worse = true;
                        break;
                    }
                    if state < best_byte {
                        tight = false;
                    }
                }
            }
            if !worse {
                self.assigned.push(v);
                self.used.insert(v);
                if self.descend(tight) {
                    node_tight = true;
                    replaced_any = true;
                }
                self.used.remove(v);
                self.assigned.pop();
            }
            self.code.truncate(base);
        }
        replaced_any
    }
}

fn encode_full(g: &OrientedGraph) -> Vec<u8> {
    let n = g.order();
    let mut bytes = vec![n as u8];
    for p in 1..n {
        for q in 0..p {
            bytes.push(if g.has_arc(q, p) {
                1
            } else if g.has_arc(p, q) {
                2
            } else {
                0
            });
        }
    }
    bytes
}

/// True iff `a` and `b` are isomorphic. Both orders must be within
/// [`CANONICAL_ORDER_LIMIT`].
pub fn isomorphic(a: &OrientedGraph, b: &OrientedGraph) -> Result<bool, CanonError> {
    if a.order() != b.order() {
        return Ok(false);
    }
    Ok(canonical_code(a)? == canonical_code(b)?)
}
