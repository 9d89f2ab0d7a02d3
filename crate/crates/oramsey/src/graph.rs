//! The oriented-graph value type.
//!
//! An oriented graph is a digraph without loops and without 2-cycles: between
//! any two vertices there is at most one arc, and it has a direction. Graphs
//! are built by [`OrientedGraph::add_arc`] and treated as immutable values
//! afterwards; every operation in this crate reads but never mutates them.

use rand::Rng;
use thiserror::Error;

use crate::bitset::VertexSet;

/// Largest supported vertex count; keeps [`VertexSet`] a single machine word.
pub const MAX_ORDER: usize = 64;

/// Errors from graph construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} out of range 1..={MAX_ORDER}")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop arc {0} -> {0} rejected")]
    LoopArc(usize),
    #[error("arc {u} -> {v} rejected: reverse arc {v} -> {u} already present")]
    Antisymmetry { u: usize, v: usize },
    #[error("induced subgraph requires a nonempty vertex set")]
    EmptyVertexSet,
}

/// A loop-free, antisymmetric digraph on at most 64 vertices.
///
/// Stores both out- and in-neighborhood bitsets per vertex so that the
/// detectors can intersect neighborhoods without transposing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedGraph {
    order: usize,
    out: Vec<VertexSet>,
    inc: Vec<VertexSet>,
}

impl OrientedGraph {
    /// An arcless graph on `order` vertices.
    pub fn new(order: usize) -> Result<Self, GraphError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(order));
        }
        Ok(OrientedGraph {
            order,
            out: vec![VertexSet::EMPTY; order],
            inc: vec![VertexSet::EMPTY; order],
        })
    }

    /// Builds a graph from an arc list.
    pub fn from_arcs<I>(order: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = OrientedGraph::new(order)?;
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    /// A random oriented graph: each unordered pair independently carries an
    /// arc with probability `arc_probability`, direction uniform.
    pub fn random<R: Rng + ?Sized>(order: usize, arc_probability: f64, rng: &mut R) -> Self {
        let mut g = OrientedGraph::new(order).expect("order in range");
        for u in 0..order {
            for v in (u + 1)..order {
                if rng.random_bool(arc_probability) {
                    if rng.random_bool(0.5) {
                        g.add_arc(u, v).unwrap();
                    } else {
                        g.add_arc(v, u).unwrap();
                    }
                }
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// The full vertex set `{0, .., order - 1}`.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    /// Inserts the arc `u -> v`.
    ///
    /// Re-adding an existing arc is an idempotent success; this lets residue
    /// rules that overlap build the same graph without bookkeeping. A reverse
    /// arc or a loop is rejected.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopArc(u));
        }
        if self.out[v].contains(u) {
            return Err(GraphError::Antisymmetry { u, v });
        }
        self.out[u].insert(v);
        self.inc[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order && v < self.order);
        self.out[u].contains(v)
    }

    /// True iff there is an arc between `u` and `v` in either direction.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    /// Targets of arcs leaving `v`.
    #[inline]
    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.order);
        self.out[v]
    }

    /// Sources of arcs entering `v`.
    #[inline]
    pub fn in_neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.order);
        self.inc[v]
    }

    /// Vertices adjacent to `v` in either direction.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.out[v] | self.inc[v]
    }

    /// Vertices non-adjacent to `v` (excluding `v` itself).
    #[inline]
    pub fn non_neighbors(&self, v: usize) -> VertexSet {
        self.vertices() - self.neighbors(v) - VertexSet::singleton(v)
    }

    /// The three-way split around `v`: `(out, in, non-adjacent)`.
    ///
    /// Together with `{v}` the three sets partition the vertex set.
    pub fn neighborhoods(&self, v: usize) -> (VertexSet, VertexSet, VertexSet) {
        debug_assert!(v < self.order);
        (self.out[v], self.inc[v], self.non_neighbors(v))
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.inc[v].len()
    }

    /// Number of vertices adjacent to `v` in either direction.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    /// Total number of arcs.
    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|s| s.len()).sum()
    }

    /// All arcs in ascending `(u, v)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| self.out[u].iter().map(move |v| (u, v)))
    }

    /// The subgraph induced on `s`, with vertices relabeled `0..|s|-1`
    /// preserving ascending original index.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<OrientedGraph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let keep = s & self.vertices();
        let selected = keep.to_vec();
        let mut g = OrientedGraph::new(selected.len())?;
        for (new_u, &old_u) in selected.iter().enumerate() {
            for (new_v, &old_v) in selected.iter().enumerate() {
                if self.has_arc(old_u, old_v) {
                    g.out[new_u].insert(new_v);
                    g.inc[new_v].insert(new_u);
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertices: `perm[old] = new`. `perm` must be a permutation of
    /// `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> OrientedGraph {
        assert_eq!(perm.len(), self.order, "permutation length mismatch");
        let mut g = OrientedGraph::new(self.order).expect("order in range");
        for (u, v) in self.arcs() {
            g.out[perm[u]].insert(perm[v]);
            g.inc[perm[v]].insert(perm[u]);
        }
        debug_assert_eq!(g.arc_count(), self.arc_count());
        g
    }

    /// Extends the graph by one new vertex (label `order`) whose arcs to the
    /// old vertices are given by `forward` (old -> new) and `backward`
    /// (new -> old). The two sets must be disjoint subsets of the old vertex
    /// set. Used by the orderly search, which guarantees both conditions.
    pub(crate) fn extend_with_vertex(
        &self,
        forward: VertexSet,
        backward: VertexSet,
    ) -> OrientedGraph {
        debug_assert!(self.order < MAX_ORDER);
        debug_assert!(forward.is_disjoint(backward));
        debug_assert!((forward | backward).is_subset(self.vertices()));
        let new = self.order;
        let mut out = self.out.clone();
        let mut inc = self.inc.clone();
        out.push(backward);
        inc.push(forward);
        for u in forward.iter() {
            out[u].insert(new);
        }
        for u in backward.iter() {
            inc[u].insert(new);
        }
        OrientedGraph {
            order: new + 1,
            out,
            inc,
        }
    }
}

impl std::fmt::Debug for OrientedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrientedGraph(n={}, arcs=[", self.order)?;
        for (i, (u, v)) in self.arcs().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}->{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn new_graph_bounds() {
        assert_eq!(OrientedGraph::new(3).unwrap().arc_count(), 0);
        assert!(OrientedGraph::new(64).is_ok());
        assert_eq!(
            OrientedGraph::new(65).unwrap_err(),
            GraphError::OrderOutOfRange(65)
        );
        assert_eq!(
            OrientedGraph::new(0).unwrap_err(),
            GraphError::OrderOutOfRange(0)
        );
    }

    #[test]
    fn add_arc_rules() {
        let mut g = OrientedGraph::new(3).unwrap();
        g.add_arc(0, 1).unwrap();
        assert!(g.has_arc(0, 1));
        // duplicate arc is an idempotent success
        g.add_arc(0, 1).unwrap();
        assert_eq!(g.arc_count(), 1);
        // reverse arc violates antisymmetry
        assert_eq!(
            g.add_arc(1, 0).unwrap_err(),
            GraphError::Antisymmetry { u: 1, v: 0 }
        );
        assert_eq!(g.add_arc(2, 2).unwrap_err(), GraphError::LoopArc(2));
        assert!(matches!(
            g.add_arc(0, 3).unwrap_err(),
            GraphError::VertexOutOfRange { vertex: 3, .. }
        ));
    }

    #[test]
    fn neighborhood_split_empty_graph() {
        let g = OrientedGraph::new(5).unwrap();
        let (out, inn, indep) = g.neighborhoods(0);
        assert!(out.is_empty());
        assert!(inn.is_empty());
        assert_eq!(indep.to_vec(), vec![1, 2, 3, 4]);

        let single = OrientedGraph::new(1).unwrap();
        let (out, inn, indep) = single.neighborhoods(0);
        assert!(out.is_empty() && inn.is_empty() && indep.is_empty());
    }

    #[test]
    fn neighborhoods_partition_after_random_insertions() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let order = rng.random_range(1..=10);
            let g = OrientedGraph::random(order, 0.5, &mut rng);
            for v in 0..order {
                let (out, inn, indep) = g.neighborhoods(v);
                let me = VertexSet::singleton(v);
                assert!(out.is_disjoint(inn));
                assert!(out.is_disjoint(indep));
                assert!(inn.is_disjoint(indep));
                assert!(me.is_disjoint(out | inn | indep));
                assert_eq!(me | out | inn | indep, g.vertices());
            }
        }
    }

    #[test]
    fn induced_subgraph_relabels_ascending() {
        // arcs 0->2, 3->0 on 4 vertices; induce on {0, 2, 3}
        let g = OrientedGraph::from_arcs(4, [(0, 2), (3, 0)]).unwrap();
        let h = g
            .induced_subgraph(VertexSet::from_vertices([0, 2, 3]))
            .unwrap();
        assert_eq!(h.order(), 3);
        // 0 -> 0, 2 -> 1, 3 -> 2
        assert!(h.has_arc(0, 1));
        assert!(h.has_arc(2, 0));
        assert_eq!(h.arc_count(), 2);

        let one = g.induced_subgraph(VertexSet::singleton(2)).unwrap();
        assert_eq!(one.order(), 1);
        assert_eq!(one.arc_count(), 0);

        assert_eq!(
            g.induced_subgraph(VertexSet::EMPTY).unwrap_err(),
            GraphError::EmptyVertexSet
        );
    }

    #[test]
    fn induced_subgraph_composes() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let g = OrientedGraph::random(9, 0.5, &mut rng);
            // s = {1,3,4,6,8}; t (in relabeled coordinates) = {0,2,3} -> original {1,4,6}
            let s = VertexSet::from_vertices([1, 3, 4, 6, 8]);
            let gs = g.induced_subgraph(s).unwrap();
            let t = VertexSet::from_vertices([0, 2, 3]);
            let gst = gs.induced_subgraph(t).unwrap();
            let direct = g
                .induced_subgraph(VertexSet::from_vertices([1, 4, 6]))
                .unwrap();
            assert_eq!(gst, direct);
        }
    }

    #[test]
    fn extend_with_vertex_matches_add_arc() {
        let g = OrientedGraph::from_arcs(3, [(0, 1), (2, 1)]).unwrap();
        let fwd = VertexSet::from_vertices([0, 2]);
        let bwd = VertexSet::from_vertices([1]);
        let h = g.extend_with_vertex(fwd, bwd);

        let mut expect = OrientedGraph::from_arcs(4, [(0, 1), (2, 1)]).unwrap();
        expect.add_arc(0, 3).unwrap();
        expect.add_arc(2, 3).unwrap();
        expect.add_arc(3, 1).unwrap();
        assert_eq!(h, expect);
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = OrientedGraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let h = g.relabel(&[2, 0, 1]);
        assert!(h.has_arc(2, 0));
        assert!(h.has_arc(0, 1));
        assert!(h.has_arc(2, 1));
    }

    proptest::proptest! {
        // Feed a random arc stream, dropping rejected insertions; the result
        // must stay antisymmetric and loop-free with consistent in/out views.
        #[test]
        fn antisymmetry_survives_random_arc_streams(
            order in 2usize..12,
            arcs in proptest::collection::vec((0usize..12, 0usize..12), 0..80),
        ) {
            let mut g = OrientedGraph::new(order).unwrap();
            for (u, v) in arcs {
                if u < order && v < order {
                    let reverse_present = g.has_arc(v, u);
                    match g.add_arc(u, v) {
                        Ok(()) => proptest::prop_assert!(u != v && !reverse_present),
                        Err(GraphError::LoopArc(_)) => proptest::prop_assert_eq!(u, v),
                        Err(GraphError::Antisymmetry { .. }) => {
                            proptest::prop_assert!(reverse_present)
                        }
                        Err(e) => return Err(proptest::test_runner::TestCaseError::fail(
                            format!("unexpected error {e}"),
                        )),
                    }
                }
            }
            for u in 0..order {
                proptest::prop_assert!(!g.has_arc(u, u));
                for v in 0..order {
                    proptest::prop_assert!(!(g.has_arc(u, v) && g.has_arc(v, u)));
                    proptest::prop_assert_eq!(
                        g.out_neighbors(u).contains(v),
                        g.in_neighbors(v).contains(u)
                    );
                }
            }
        }
    }
}
