//! Oriented Ramsey numbers `r(I_m, L_n)`.
//!
//! `r(I_m, L_n)` is the least `k` such that every oriented graph (no loops,
//! no 2-cycles) on `k` vertices contains an independent set of size `m` or a
//! transitive tournament on `n` vertices. This crate provides:
//!
//! - a bitset-backed oriented-graph type with canonical forms and a text
//!   arc-list interchange format ([`graph`], [`canon`], [`io`]);
//! - exact detectors for independent sets and transitive tournaments, plus
//!   structural checkers for the neighborhood decomposition, degree caps,
//!   and the eight-vertex extremal graph ([`detect`], [`lemma`]);
//! - circulant and parity-circulant constructions including the named
//!   witnesses `W8`, `W14`, `W22`, and Cayley digraph enumeration over small
//!   cyclic and dihedral groups ([`circulant`], [`cayley`]);
//! - evaluators for every known bound formula and a best-known bound table
//!   ([`bounds`]);
//! - isomorph-reduced exhaustive search re-deriving small exact values
//!   ([`search`]).
//!
//! ```
//! use oramsey::circulant::{witness, WitnessName};
//! use oramsey::detect::is_free;
//!
//! // The 14-vertex witness shows r(I_4, L_3) > 14; the quadratic bound
//! // m^2 - m + 3 closes the other side at 15.
//! let w14 = witness(WitnessName::W14);
//! assert!(is_free(&w14, 4, 3).is_free());
//! assert_eq!(oramsey::bounds::quadratic_upper(4).unwrap(), 15);
//! ```

pub mod bitset;
pub mod bounds;
pub mod canon;
pub mod cayley;
pub mod circulant;
pub mod detect;
pub mod graph;
pub mod io;
pub mod lemma;
pub mod search;

pub use bitset::VertexSet;
pub use canon::{canonical_code, canonical_form, CanonicalCode};
pub use detect::{
    count_transitive_triangles, find_independent_set, find_transitive_tournament,
    independence_number, is_free, Certificate, CertificateKind, FreenessVerdict,
};
pub use graph::{GraphError, OrientedGraph, MAX_ORDER};
