//! The text arc-list interchange format.
//!
//! ```text
//! n 8
//! 0 1
//! 0 6
//! ...
//! ```
//!
//! The first line is `n <order>`; each following line is `<u> <v>` for an arc
//! `u -> v`, 0-indexed decimal. Writers emit arcs sorted ascending by
//! `(u, v)`, LF line endings, no trailing whitespace; that form is bit-exact.
//! Readers additionally accept arcs in any order, but reject loops and
//! antisymmetry violations with a diagnostic naming the offending line.

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::graph::{GraphError, OrientedGraph, MAX_ORDER};

#[derive(Debug, Error)]
pub enum ArcListError {
    #[error("line {line}: expected `{expected}`, got `{got}`")]
    Syntax {
        line: usize,
        expected: &'static str,
        got: String,
    },
    #[error("line {line}: order {order} out of range 1..={MAX_ORDER}")]
    OrderOutOfRange { line: usize, order: usize },
    #[error("line {line}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        order: usize,
    },
    #[error("line {line}: loop arc {v} -> {v} rejected")]
    LoopArc { line: usize, v: usize },
    #[error("line {line}: arc {u} -> {v} conflicts with an earlier arc {v} -> {u}")]
    Antisymmetry { line: usize, u: usize, v: usize },
    #[error("empty input: missing `n <order>` header")]
    MissingHeader,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Renders a graph in the arc-list format (the bit-exact writer form).
pub fn write_arc_list(g: &OrientedGraph) -> String {
    let mut s = String::with_capacity(8 + 6 * g.arc_count());
    s.push_str(&format!("n {}\n", g.order()));
    for (u, v) in g.arcs() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses the arc-list format.
pub fn parse_arc_list(text: &str) -> Result<OrientedGraph, ArcListError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(ArcListError::MissingHeader)?;
    let order = parse_header(header)?;
    if order == 0 || order > MAX_ORDER {
        return Err(ArcListError::OrderOutOfRange { line: 1, order });
    }
    let mut g = OrientedGraph::new(order).expect("order checked");
    for (idx, raw) in lines {
        let line = idx + 1; // 1-based for diagnostics
        let (u, v) = parse_arc_line(line, raw)?;
        match g.add_arc(u, v) {
            Ok(()) => {}
            Err(GraphError::LoopArc(v)) => return Err(ArcListError::LoopArc { line, v }),
            Err(GraphError::Antisymmetry { u, v }) => {
                return Err(ArcListError::Antisymmetry { line, u, v })
            }
            Err(GraphError::VertexOutOfRange { vertex, order }) => {
                return Err(ArcListError::VertexOutOfRange {
                    line,
                    vertex,
                    order,
                })
            }
            Err(e) => unreachable!("unexpected graph error from add_arc: {e}"),
        }
    }
    Ok(g)
}

/// Reads and parses an arc-list file.
pub fn read_arc_list_file<P: AsRef<Path>>(path: P) -> Result<OrientedGraph, ArcListError> {
    let text = fs::read_to_string(path)?;
    parse_arc_list(&text)
}

fn parse_header(line: &str) -> Result<usize, ArcListError> {
    let syntax = || ArcListError::Syntax {
        line: 1,
        expected: "n <order>",
        got: line.to_string(),
    };
    let rest = line.strip_prefix("n ").ok_or_else(syntax)?;
    rest.parse::<usize>().map_err(|_| syntax())
}

fn parse_arc_line(line: usize, raw: &str) -> Result<(usize, usize), ArcListError> {
    let syntax = || ArcListError::Syntax {
        line,
        expected: "<u> <v>",
        got: raw.to_string(),
    };
    let mut parts = raw.split(' ');
    let u = parts
        .next()
        .filter(|s| !s.is_empty())
        .and_then(|s| s.parse::<usize>().ok())
        .ok_or_else(syntax)?;
    let v = parts
        .next()
        .filter(|s| !s.is_empty())
        .and_then(|s| s.parse::<usize>().ok())
        .ok_or_else(syntax)?;
    if parts.next().is_some() {
        return Err(syntax());
    }
    Ok((u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn writer_form_is_sorted_lf_terminated() {
        let g = OrientedGraph::from_arcs(4, [(2, 0), (0, 1), (0, 3)]).unwrap();
        assert_eq!(write_arc_list(&g), "n 4\n0 1\n0 3\n2 0\n");
    }

    #[test]
    fn parse_rejects_bad_header() {
        for bad in ["", "m 4", "n", "n x", "n  4", "n 0", "n 65"] {
            assert!(parse_arc_list(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn parse_rejects_loop_with_line_number() {
        let err = parse_arc_list("n 3\n0 1\n2 2\n").unwrap_err();
        match err {
            ArcListError::LoopArc { line, v } => {
                assert_eq!(line, 3);
                assert_eq!(v, 2);
            }
            other => panic!("expected loop error, got {other}"),
        }
    }

    #[test]
    fn parse_rejects_antisymmetry_with_line_number() {
        let err = parse_arc_list("n 3\n0 1\n1 0\n").unwrap_err();
        match err {
            ArcListError::Antisymmetry { line, u, v } => {
                assert_eq!(line, 3);
                assert_eq!((u, v), (1, 0));
            }
            other => panic!("expected antisymmetry error, got {other}"),
        }
    }

    #[test]
    fn parse_rejects_out_of_range_vertex() {
        let err = parse_arc_list("n 3\n0 3\n").unwrap_err();
        assert!(matches!(
            err,
            ArcListError::VertexOutOfRange {
                line: 2,
                vertex: 3,
                order: 3
            }
        ));
    }

    #[test]
    fn parse_rejects_malformed_arc_lines() {
        for bad in ["n 3\n0\n", "n 3\n0 1 2\n", "n 3\na b\n", "n 3\n0  1\n"] {
            assert!(parse_arc_list(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn duplicate_arcs_are_idempotent() {
        let g = parse_arc_list("n 3\n0 1\n0 1\n").unwrap();
        assert_eq!(g.arc_count(), 1);
    }

    proptest! {
        #[test]
        fn round_trip_is_identity(seed in 0u64..500, order in 1usize..12) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let g = OrientedGraph::random(order, 0.4, &mut rng);
            let text = write_arc_list(&g);
            let back = parse_arc_list(&text).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
