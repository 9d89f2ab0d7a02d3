//! Circulant and parity-circulant constructions, and the named witnesses.
//!
//! A circulant spec over `Z_k` lists residues `r` generating arcs
//! `x -> x + r (mod k)`. Global residues apply to every vertex; `even` and
//! `odd` residues apply only to vertices of that parity. Residues are stored
//! normalized to `1..k-1`, so the map `x -> x - 2` is residue `k - 2`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{GraphError, OrientedGraph, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CirculantError {
    #[error("modulus {0} out of range 2..={MAX_ORDER}")]
    ModulusOutOfRange(usize),
    #[error("residue {residue} is 0 mod {modulus}")]
    ZeroResidue { residue: i64, modulus: usize },
    #[error("rule (x={vertex}, +{residue}) creates a 2-cycle between {vertex} and {target}")]
    TwoCycle {
        vertex: usize,
        residue: usize,
        target: usize,
    },
    #[error("cannot parse circulant spec: {0}")]
    Parse(String),
}

/// Residue rules over `Z_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CirculantSpec {
    pub modulus: usize,
    /// Arcs `x -> x + r` for every `x`. Normalized to `1..modulus-1`, sorted.
    pub global: Vec<usize>,
    /// Arcs applied only when `x` is even.
    pub even: Vec<usize>,
    /// Arcs applied only when `x` is odd.
    pub odd: Vec<usize>,
}

impl CirculantSpec {
    /// Builds a spec from signed residues, normalizing them mod `modulus`.
    pub fn from_signed(
        modulus: usize,
        global: &[i64],
        even: &[i64],
        odd: &[i64],
    ) -> Result<Self, CirculantError> {
        if !(2..=MAX_ORDER).contains(&modulus) {
            return Err(CirculantError::ModulusOutOfRange(modulus));
        }
        let normalize = |rs: &[i64]| -> Result<Vec<usize>, CirculantError> {
            let mut out = Vec::with_capacity(rs.len());
            for &r in rs {
                let m = modulus as i64;
                let norm = r.rem_euclid(m) as usize;
                if norm == 0 {
                    return Err(CirculantError::ZeroResidue {
                        residue: r,
                        modulus,
                    });
                }
                out.push(norm);
            }
            out.sort_unstable();
            out.dedup();
            Ok(out)
        };
        Ok(CirculantSpec {
            modulus,
            global: normalize(global)?,
            even: normalize(even)?,
            odd: normalize(odd)?,
        })
    }

    /// Parses the text form `k=<modulus>; all=<r1,r2,...>; even=<...>; odd=<...>`.
    /// Signed residues are accepted and normalized; `even`/`odd`/`all`
    /// sections may be omitted.
    ///
    /// ```
    /// use oramsey::circulant::CirculantSpec;
    /// let spec = CirculantSpec::parse("k=14; all=+1,-2; even=+4; odd=-6").unwrap();
    /// assert_eq!(spec.global, vec![1, 12]);
    /// ```
    pub fn parse(text: &str) -> Result<Self, CirculantError> {
        let mut modulus: Option<usize> = None;
        let mut global = Vec::new();
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for part in text.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, value) = part.split_once('=').ok_or_else(|| {
                CirculantError::Parse(format!("expected key=value, got `{part}`"))
            })?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "k" => {
                    let k = value
                        .parse::<usize>()
                        .map_err(|_| CirculantError::Parse(format!("bad modulus `{value}`")))?;
                    modulus = Some(k);
                }
                "all" | "even" | "odd" => {
                    let mut residues = Vec::new();
                    if !value.is_empty() {
                        for item in value.split(',') {
                            let item = item.trim();
                            let r = item.parse::<i64>().map_err(|_| {
                                CirculantError::Parse(format!("bad residue `{item}`"))
                            })?;
                            residues.push(r);
                        }
                    }
                    match key {
                        "all" => global = residues,
                        "even" => even = residues,
                        _ => odd = residues,
                    }
                }
                other => {
                    return Err(CirculantError::Parse(format!("unknown key `{other}`")));
                }
            }
        }
        let modulus =
            modulus.ok_or_else(|| CirculantError::Parse("missing `k=<modulus>`".to_string()))?;
        CirculantSpec::from_signed(modulus, &global, &even, &odd)
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |rs: &[usize]| {
            rs.iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "k={}; all={}", self.modulus, list(&self.global))?;
        if !self.even.is_empty() {
            write!(f, "; even={}", list(&self.even))?;
        }
        if !self.odd.is_empty() {
            write!(f, "; odd={}", list(&self.odd))?;
        }
        Ok(())
    }
}

/// Builds the oriented graph of a circulant spec. Fails if any rule pair
/// would create a 2-cycle, naming the offending `(x, r)` pair; overlapping
/// rules that generate the same arc are fine.
pub fn build_circulant(spec: &CirculantSpec) -> Result<OrientedGraph, CirculantError> {
    let k = spec.modulus;
    let mut g = OrientedGraph::new(k).expect("modulus checked at spec construction");
    let apply = |x: usize, r: usize, g: &mut OrientedGraph| -> Result<(), CirculantError> {
        let y = (x + r) % k;
        match g.add_arc(x, y) {
            Ok(()) => Ok(()),
            Err(GraphError::Antisymmetry { .. }) => Err(CirculantError::TwoCycle {
                vertex: x,
                residue: r,
                target: y,
            }),
            Err(GraphError::LoopArc(_)) => Err(CirculantError::ZeroResidue {
                residue: r as i64,
                modulus: k,
            }),
            Err(e) => unreachable!("unexpected graph error: {e}"),
        }
    };
    for x in 0..k {
        for &r in &spec.global {
            apply(x, r, &mut g)?;
        }
        let parity_rules = if x % 2 == 0 { &spec.even } else { &spec.odd };
        for &r in parity_rules {
            apply(x, r, &mut g)?;
        }
    }
    Ok(g)
}

/// The three named lower-bound witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessName {
    /// 8 vertices, `(I_3, L_3)`-free: `r(I_3, L_3) > 8`.
    W8,
    /// 14 vertices, `(I_4, L_3)`-free: `r(I_4, L_3) > 14`.
    W14,
    /// 22 vertices, `(I_5, L_3)`-free: `r(I_5, L_3) > 22`.
    W22,
}

impl WitnessName {
    pub const ALL: [WitnessName; 3] = [WitnessName::W8, WitnessName::W14, WitnessName::W22];

    pub fn parse(s: &str) -> Option<WitnessName> {
        match s.to_ascii_lowercase().as_str() {
            "w8" => Some(WitnessName::W8),
            "w14" => Some(WitnessName::W14),
            "w22" => Some(WitnessName::W22),
            _ => None,
        }
    }

    /// The `(m, n)` pair the witness claims freeness for.
    pub fn claims(self) -> (usize, usize) {
        match self {
            WitnessName::W8 => (3, 3),
            WitnessName::W14 => (4, 3),
            WitnessName::W22 => (5, 3),
        }
    }

    /// The circulant rules defining the witness.
    pub fn spec(self) -> CirculantSpec {
        let spec = match self {
            WitnessName::W8 => CirculantSpec::from_signed(8, &[1, -2], &[], &[]),
            WitnessName::W14 => CirculantSpec::from_signed(14, &[1, -2], &[4], &[-6]),
            WitnessName::W22 => CirculantSpec::from_signed(22, &[1, 4, -5, 10], &[], &[]),
        };
        spec.expect("witness specs are well-formed")
    }
}

impl fmt::Display for WitnessName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessName::W8 => write!(f, "W8"),
            WitnessName::W14 => write!(f, "W14"),
            WitnessName::W22 => write!(f, "W22"),
        }
    }
}

/// Builds a named witness graph.
pub fn witness(name: WitnessName) -> OrientedGraph {
    build_circulant(&name.spec()).expect("witness construction succeeds")
}
