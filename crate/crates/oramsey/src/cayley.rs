//! Cayley digraph enumeration over small cyclic and dihedral groups.
//!
//! `Cay(G, S)` has the group elements as vertices and arcs `g -> g·s` for
//! every `s` in the connection set `S`. The digraph is oriented exactly when
//! `S` avoids the identity, avoids involutions, and is disjoint from its own
//! inverses; the enumeration therefore walks the inverse pairs `{g, g^-1}`
//! and picks one of `{neither, g, g^-1}` per pair, yielding `3^pairs` graphs
//! in lexicographic order of the choice vector.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::OrientedGraph;

/// Largest supported group order for enumeration.
pub const MAX_CAYLEY_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayleyError {
    #[error("{group} group of order {order} unsupported: {reason}")]
    Unsupported {
        group: CayleyGroup,
        order: usize,
        reason: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CayleyGroup {
    Cyclic,
    Dihedral,
}

impl CayleyGroup {
    pub fn parse(s: &str) -> Option<CayleyGroup> {
        match s.to_ascii_lowercase().as_str() {
            "cyclic" => Some(CayleyGroup::Cyclic),
            "dihedral" => Some(CayleyGroup::Dihedral),
            _ => None,
        }
    }
}

impl fmt::Display for CayleyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CayleyGroup::Cyclic => write!(f, "cyclic"),
            CayleyGroup::Dihedral => write!(f, "dihedral"),
        }
    }
}

/// A connection set drawn from the enumeration. For the cyclic group the
/// elements are residues mod `order`; for the dihedral group they are
/// rotation exponents mod `order / 2` (reflections are involutions and never
/// appear).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectionSet {
    pub group: CayleyGroup,
    pub order: usize,
    pub elements: Vec<usize>,
}

impl fmt::Display for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match self.group {
                CayleyGroup::Cyclic => write!(f, "{e}")?,
                CayleyGroup::Dihedral => write!(f, "r^{e}")?,
            }
        }
        write!(f, "}}")
    }
}

/// One enumerated Cayley digraph together with the connection set that
/// produced it.
#[derive(Clone, Debug)]
pub struct CayleyDigraph {
    pub graph: OrientedGraph,
    pub connection: ConnectionSet,
}

/// Deterministic stream over all oriented Cayley digraphs of the group.
pub struct CayleyEnumeration {
    group: CayleyGroup,
    order: usize,
    /// Inverse pairs `(g, g^-1)` with `g < g^-1`, ascending by `g`.
    pairs: Vec<(usize, usize)>,
    next_index: usize,
    total: usize,
}

impl CayleyEnumeration {
    /// Total number of graphs the stream yields: `3^pairs`.
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn inverse_pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    fn build(&self, index: usize) -> CayleyDigraph {
        let mut elements = Vec::new();
        let p = self.pairs.len();
        let mut rest = index;
        // First pair is the most significant digit, so graphs come out in
        // lexicographic order of the choice vector (none < g < g^-1).
        for i in (0..p).rev() {
            let choice = rest % 3;
            rest /= 3;
            match choice {
                0 => {}
                1 => elements.push(self.pairs[i].0),
                _ => elements.push(self.pairs[i].1),
            }
        }
        elements.sort_unstable();
        let graph = match self.group {
            CayleyGroup::Cyclic => {
                let k = self.order;
                let mut g = OrientedGraph::new(k).expect("order checked");
                for x in 0..k {
                    for &s in &elements {
                        g.add_arc(x, (x + s) % k)
                            .expect("connection set is antisymmetric");
                    }
                }
                g
            }
            CayleyGroup::Dihedral => {
                // Vertices: rotations r^0..r^(h-1) then reflections
                // s·r^0..s·r^(h-1). Right multiplication by a rotation r^j
                // stays within each coset: r^a -> r^(a+j), s·r^a -> s·r^(a+j).
                let h = self.order / 2;
                let mut g = OrientedGraph::new(self.order).expect("order checked");
                for a in 0..h {
                    for &j in &elements {
                        g.add_arc(a, (a + j) % h).expect("antisymmetric");
                        g.add_arc(h + a, h + (a + j) % h).expect("antisymmetric");
                    }
                }
                g
            }
        };
        CayleyDigraph {
            graph,
            connection: ConnectionSet {
                group: self.group,
                order: self.order,
                elements,
            },
        }
    }
}

impl Iterator for CayleyEnumeration {
    type Item = CayleyDigraph;

    fn next(&mut self) -> Option<CayleyDigraph> {
        if self.next_index >= self.total {
            return None;
        }
        let item = self.build(self.next_index);
        self.next_index += 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.total - self.next_index;
        (left, Some(left))
    }
}

impl ExactSizeIterator for CayleyEnumeration {}

/// Enumerates every oriented Cayley digraph `Cay(G, S)` for the chosen group.
pub fn enumerate_cayley(
    group: CayleyGroup,
    order: usize,
) -> Result<CayleyEnumeration, CayleyError> {
    if !(2..=MAX_CAYLEY_ORDER).contains(&order) {
        return Err(CayleyError::Unsupported {
            group,
            order,
            reason: format!("order must be in 2..={MAX_CAYLEY_ORDER}"),
        });
    }
    let pairs = match group {
        CayleyGroup::Cyclic => inverse_pairs_mod(order),
        CayleyGroup::Dihedral => {
            if !order.is_multiple_of(2) {
                return Err(CayleyError::Unsupported {
                    group,
                    order,
                    reason: "dihedral group order must be even".to_string(),
                });
            }
            // Reflections are involutions, so only rotations can enter S;
            // rotations form a cyclic group of order h = order / 2.
            inverse_pairs_mod(order / 2)
        }
    };
    let total = 3usize.pow(pairs.len() as u32);
    Ok(CayleyEnumeration {
        group,
        order,
        pairs,
        next_index: 0,
        total,
    })
}

/// Non-identity, non-involution inverse pairs `{g, m - g}` of `Z_m`.
fn inverse_pairs_mod(m: usize) -> Vec<(usize, usize)> {
    (1..m)
        .filter(|&g| (2 * g) % m != 0) // exclude involutions and identity
        .filter(|&g| g < m - g)
        .map(|g| (g, m - g))
        .collect()
}
