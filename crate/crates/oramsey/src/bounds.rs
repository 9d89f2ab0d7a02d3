//! Bound formulas for `r(I_m, L_n)` and the best-known bound table.
//!
//! Throughout, `ld` is the logarithm base 2 (logarithmus dualis); the
//! asymptotic constants change under any other base. Exact table entries are
//! integers only; the floating-point Alon-style estimators are diagnostics
//! and never feed the exact table.
//!
//! Base conventions, fixed here because they are elsewhere implicit:
//! `r(I_m, L_2) = m` (an arcless graph is an `I_m`, any arc is an `L_2`),
//! `r(I_1, L_n) = r(I_m, L_1) = 1`.

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("{op}: argument out of domain: {detail}")]
    Domain { op: &'static str, detail: String },
    #[error("{op}: value overflows u64")]
    Overflow { op: &'static str },
}

fn domain(op: &'static str, detail: impl Into<String>) -> BoundsError {
    BoundsError::Domain {
        op,
        detail: detail.into(),
    }
}

/// Provenance of a bound value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    KnownValue,
    Witness,
    Recurrence,
    Quadratic,
    Exponential,
    AppendixFormula,
    AsymptoticL3,
    AsymptoticGeneral,
    ClassicalSandwich,
}

impl Source {
    pub fn label(self) -> &'static str {
        match self {
            Source::KnownValue => "known-value",
            Source::Witness => "witness",
            Source::Recurrence => "recurrence",
            Source::Quadratic => "quadratic",
            Source::Exponential => "exponential",
            Source::AppendixFormula => "appendix-formula",
            Source::AsymptoticL3 => "asymptotic-L3",
            Source::AsymptoticGeneral => "asymptotic-general",
            Source::ClassicalSandwich => "classical-sandwich",
        }
    }
}

/// Exact directed values `r(I_m, L_n)`, including the degenerate base
/// families.
pub fn known_directed_exact(m: usize, n: usize) -> Option<u64> {
    if m == 0 || n == 0 {
        return None;
    }
    if m == 1 || n == 1 {
        return Some(1);
    }
    if n == 2 {
        return Some(m as u64);
    }
    match (m, n) {
        (2, 3) => Some(4),
        (2, 4) => Some(8),
        (2, 5) => Some(14),
        (2, 6) => Some(28),
        (3, 3) => Some(9),
        (4, 3) => Some(15),
        (5, 3) => Some(23),
        _ => None,
    }
}

/// Tabulated classical undirected Ramsey values `r(I_m, K_n)`: the `K_3`
/// column for `m = 2..9`, the two cited `K_4` cells, and the trivial
/// families (`n = 2`, `m = 2`, and the degenerate `1` rows).
pub fn known_classical(m: usize, n: usize) -> Option<u64> {
    if m == 0 || n == 0 {
        return None;
    }
    if m == 1 || n == 1 {
        return Some(1);
    }
    if n == 2 {
        return Some(m as u64);
    }
    if m == 2 {
        return Some(n as u64);
    }
    match (m, n) {
        (3, 3) => Some(6),
        (4, 3) => Some(9),
        (5, 3) => Some(14),
        (6, 3) => Some(18),
        (7, 3) => Some(23),
        (8, 3) => Some(28),
        (9, 3) => Some(36),
        (4, 4) => Some(18),
        (5, 4) => Some(25),
        _ => None,
    }
}

/// Lower bounds certified by the named circulant witnesses: a free graph on
/// `k` vertices shows `r > k`.
pub fn witness_lower(m: usize, n: usize) -> Option<u64> {
    match (m, n) {
        (3, 3) => Some(9),
        (4, 3) => Some(15),
        (5, 3) => Some(23),
        _ => None,
    }
}

/// One step of the recurrence `r(I_m, L_n) <= 2 r(I_m, L_{n-1}) +
/// r(I_{m-1}, L_n) - 1`, evaluated with the supplied sub-bounds.
///
/// Applies strictly above the base row `r(I_m, L_2) = m` and base column
/// `r(I_2, L_n)` (covered by the exponential bound), so `m, n >= 3`.
pub fn recurrence_upper<F>(m: usize, n: usize, sub_upper: F) -> Result<u64, BoundsError>
where
    F: Fn(usize, usize) -> u64,
{
    if m < 3 || n < 3 {
        return Err(domain(
            "recurrence_upper",
            format!("needs m, n >= 3 (base cases cover the rest), got ({m}, {n})"),
        ));
    }
    let a = sub_upper(m, n - 1);
    let b = sub_upper(m - 1, n);
    a.checked_mul(2)
        .and_then(|x| x.checked_add(b))
        .and_then(|x| x.checked_sub(1))
        .ok_or(BoundsError::Overflow {
            op: "recurrence_upper",
        })
}

/// `r(I_m, L_3) <= m^2 - m + 3` for `m >= 3`.
pub fn quadratic_upper(m: usize) -> Result<u64, BoundsError> {
    if m < 3 {
        return Err(domain("quadratic_upper", format!("needs m >= 3, got {m}")));
    }
    let m = m as u64;
    m.checked_mul(m)
        .and_then(|x| x.checked_sub(m))
        .and_then(|x| x.checked_add(3))
        .ok_or(BoundsError::Overflow {
            op: "quadratic_upper",
        })
}

/// `r(I_2, L_n) <= 2^(n-1)` for `n >= 1`.
pub fn exponential_upper(n: usize) -> Result<u64, BoundsError> {
    if n < 1 {
        return Err(domain(
            "exponential_upper",
            format!("needs n >= 1, got {n}"),
        ));
    }
    1u64.checked_shl((n - 1) as u32)
        .ok_or(BoundsError::Overflow {
            op: "exponential_upper",
        })
}

/// Binomial coefficient with the convention that out-of-range arguments
/// (negative `a` or `b`, or `b > a`) give 0; this is the unique convention
/// under which the closed formula reproduces its own base row at `m = 2`.
pub fn binomial(a: i64, b: i64) -> u128 {
    if b < 0 || a < 0 || b > a {
        return 0;
    }
    let (a, b) = (a as u128, b as u128);
    let b = b.min(a - b);
    let mut c: u128 = 1;
    for i in 1..=b {
        c = c * (a - b + i) / i;
    }
    c
}

/// The closed-form upper bound
/// `v(m, n) = sum_{i=0}^{n-2} C(i+m-1, i+1) 2^i - C(m+n-6, m-4) 2^(n-3) + 1`
/// for `m >= 2`, `n >= 3`. Satisfies `v(2, n) = 2^(n-1)`,
/// `v(m, 3) = m^2 - m + 3`, and `v(m+1, n+1) = 2 v(m+1, n) + v(m, n+1) - 1`.
pub fn appendix_v(m: usize, n: usize) -> Result<u64, BoundsError> {
    if m < 2 || n < 3 {
        return Err(domain(
            "appendix_v",
            format!("needs m >= 2 and n >= 3, got ({m}, {n})"),
        ));
    }
    let (mi, ni) = (m as i64, n as i64);
    let mut sum: u128 = 0;
    for i in 0..=(ni - 2) {
        let term = binomial(i + mi - 1, i + 1)
            .checked_mul(1u128 << i)
            .ok_or(BoundsError::Overflow { op: "appendix_v" })?;
        sum = sum
            .checked_add(term)
            .ok_or(BoundsError::Overflow { op: "appendix_v" })?;
    }
    let correction = binomial(mi + ni - 6, mi - 4)
        .checked_mul(1u128 << (ni - 3))
        .ok_or(BoundsError::Overflow { op: "appendix_v" })?;
    let value = sum
        .checked_add(1)
        .and_then(|x| x.checked_sub(correction))
        .ok_or(BoundsError::Overflow { op: "appendix_v" })?;
    u64::try_from(value).map_err(|_| BoundsError::Overflow { op: "appendix_v" })
}

/// Independence lower bound `v ld(d) / (160 d ld(r+1))` for a graph on `v`
/// vertices with maximum degree `d >= 1` whose neighborhoods are
/// `r`-colourable. Floating point; diagnostic only.
pub fn alon_lower_independence(v: u64, d: u64, r: u64) -> Result<f64, BoundsError> {
    if v < 1 || d < 1 || r < 1 {
        return Err(domain(
            "alon_lower_independence",
            format!("needs v, d, r >= 1, got ({v}, {d}, {r})"),
        ));
    }
    let num = v as f64 * (d as f64).log2();
    let den = 160.0 * d as f64 * ((r + 1) as f64).log2();
    Ok(num / den)
}

/// Average-degree variant: `v ld(2d) / (640 d ld(r+1))`. Diagnostic only.
pub fn alon_average_lower_independence(v: u64, d: u64, r: u64) -> Result<f64, BoundsError> {
    if v < 1 || d < 1 || r < 1 {
        return Err(domain(
            "alon_average_lower_independence",
            format!("needs v, d, r >= 1, got ({v}, {d}, {r})"),
        ));
    }
    let num = v as f64 * (2.0 * d as f64).log2();
    let den = 640.0 * d as f64 * ((r + 1) as f64).log2();
    Ok(num / den)
}

/// Independence lower bound `2^-16 eps (v/d) ld(d)` for graphs with few
/// transitive triangles. Diagnostic only.
pub fn sparsified_independence_lower(v: u64, d: u64, epsilon: f64) -> Result<f64, BoundsError> {
    if v < 1 || d < 1 || !epsilon.is_finite() || epsilon <= 0.0 {
        return Err(domain(
            "sparsified_independence_lower",
            format!("needs v, d >= 1 and epsilon > 0, got ({v}, {d}, {epsilon})"),
        ));
    }
    Ok(epsilon * (v as f64 / d as f64) * (d as f64).log2() / 65536.0)
}

fn big_div_ceil(a: BigUint, b: &BigUint) -> BigUint {
    (a + (b - 1u32)) / b
}

/// `ceil(num / (ld m)^pow)`. Exact when `m` is a power of two; otherwise the
/// logarithm is a 32-bit fixed-point value rounded down, so the result never
/// falls below the true ceiling (it can exceed it by at most one in
/// borderline cases) — safe for upper bounds.
fn div_ceil_by_log_pow(num: BigUint, m: u64, pow: u32) -> BigUint {
    if pow == 0 {
        return num;
    }
    if m.is_power_of_two() {
        let k = BigUint::from(m.trailing_zeros());
        big_div_ceil(num, &k.pow(pow))
    } else {
        const FRAC: u32 = 32;
        let scaled = ((m as f64).log2() * (1u64 << FRAC) as f64).floor() as u64 - 1;
        let denom = BigUint::from(scaled).pow(pow);
        big_div_ceil(num << (FRAC as u64 * pow as u64), &denom)
    }
}

/// `ceil(2^9 m^2 / ld m)` for `m >= 2`. Exact for powers of two.
pub fn asymptotic_upper_l3(m: u64) -> Result<BigUint, BoundsError> {
    if m < 2 {
        return Err(domain(
            "asymptotic_upper_l3",
            format!("needs m >= 2 (ld 1 = 0), got {m}"),
        ));
    }
    let num = BigUint::from(512u32) * m * m;
    Ok(div_ceil_by_log_pow(num, m, 1))
}

/// `ceil(2^(19n) m^(n-1) / (ld m)^(n-2))` for `m, n >= 2`. Exact for powers
/// of two (and for every `m` when `n = 2`).
pub fn asymptotic_upper_general(m: u64, n: u32) -> Result<BigUint, BoundsError> {
    if m < 2 || n < 2 {
        return Err(domain(
            "asymptotic_upper_general",
            format!("needs m, n >= 2, got ({m}, {n})"),
        ));
    }
    let num = (BigUint::from(1u32) << (19 * n as u64)) * BigUint::from(m).pow(n - 1);
    Ok(div_ceil_by_log_pow(num, m, n - 2))
}

/// Classical sandwich `r(I_m, K_n) <= r(I_m, L_n) <= r(I_m, K_{2^{n-1}})`,
/// restricted to tabulated classical values; absent components are `None`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SandwichBounds {
    pub lower: Option<u64>,
    pub upper: Option<u64>,
}

pub fn classical_sandwich(m: usize, n: usize) -> SandwichBounds {
    let lower = known_classical(m, n);
    let upper = if n >= 1 && n - 1 < 20 {
        known_classical(m, 1usize << (n - 1))
    } else {
        None
    };
    SandwichBounds { lower, upper }
}

/// Minimum edge count of an `(I_m, L_3)`-free oriented graph on
/// `m^2 - m + 2` vertices: `(m^2 - m + 2)(2m - 3) / 2` for `m >= 3`.
/// The numerator is always even, so the value is an integer.
pub fn edge_minimum(m: usize) -> Result<u64, BoundsError> {
    if m < 3 {
        return Err(domain("edge_minimum", format!("needs m >= 3, got {m}")));
    }
    let m = m as u64;
    let vertices = m * m - m + 2;
    let product = vertices
        .checked_mul(2 * m - 3)
        .ok_or(BoundsError::Overflow { op: "edge_minimum" })?;
    assert!(product % 2 == 0, "(m^2 - m + 2)(2m - 3) is always even");
    Ok(product / 2)
}

/// A `(m, n)` cell of the bound table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub m: usize,
    pub n: usize,
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
    /// Sources achieving the lower bound, in fixed enum order.
    pub lower_sources: Vec<Source>,
    /// Sources achieving the upper bound, in fixed enum order.
    pub upper_sources: Vec<Source>,
}

impl BoundEntry {
    pub fn lower_src(&self) -> String {
        join_sources(&self.lower_sources)
    }

    pub fn upper_src(&self) -> String {
        join_sources(&self.upper_sources)
    }
}

fn join_sources(sources: &[Source]) -> String {
    sources
        .iter()
        .map(|s| s.label())
        .collect::<Vec<_>>()
        .join("/")
}

/// Largest grid the table computes; keeps all arithmetic comfortably in u64.
pub const MAX_TABLE_DIM: usize = 20;

/// Best-known bounds for every cell `2 <= m <= m_max`, `2 <= n <= n_max`,
/// computed bottom-up so the recurrence always sees final sub-bounds.
#[derive(Clone, Debug)]
pub struct BoundTable {
    m_max: usize,
    n_max: usize,
    cells: Vec<BoundEntry>,
}

impl BoundTable {
    pub fn new(m_max: usize, n_max: usize) -> Result<BoundTable, BoundsError> {
        if !(2..=MAX_TABLE_DIM).contains(&m_max) || !(2..=MAX_TABLE_DIM).contains(&n_max) {
            return Err(domain(
                "BoundTable::new",
                format!("grid caps must be in 2..={MAX_TABLE_DIM}, got ({m_max}, {n_max})"),
            ));
        }
        let mut table = BoundTable {
            m_max,
            n_max,
            cells: Vec::with_capacity((m_max - 1) * (n_max - 1)),
        };
        for m in 2..=m_max {
            for n in 2..=n_max {
                let entry = table.compute_cell(m, n)?;
                table.cells.push(entry);
            }
        }
        Ok(table)
    }

    fn index(&self, m: usize, n: usize) -> usize {
        debug_assert!((2..=self.m_max).contains(&m) && (2..=self.n_max).contains(&n));
        (m - 2) * (self.n_max - 1) + (n - 2)
    }

    pub fn get(&self, m: usize, n: usize) -> &BoundEntry {
        &self.cells[self.index(m, n)]
    }

    pub fn entries(&self) -> &[BoundEntry] {
        &self.cells
    }

    fn upper_of(&self, m: usize, n: usize) -> u64 {
        // Sub-lookups outside the stored grid are the degenerate bases.
        if m <= 1 || n <= 1 {
            return 1;
        }
        self.cells[self.index(m, n)].upper
    }

    fn compute_cell(&self, m: usize, n: usize) -> Result<BoundEntry, BoundsError> {
        let mut uppers: Vec<(u64, Source)> = Vec::new();
        if let Some(v) = known_directed_exact(m, n) {
            uppers.push((v, Source::KnownValue));
        }
        if m >= 3 && n >= 3 {
            let v = recurrence_upper(m, n, |a, b| self.upper_of(a, b))?;
            uppers.push((v, Source::Recurrence));
        }
        if n == 3 && m >= 3 {
            uppers.push((quadratic_upper(m)?, Source::Quadratic));
        }
        if m == 2 {
            uppers.push((exponential_upper(n)?, Source::Exponential));
        }
        if n >= 3 {
            uppers.push((appendix_v(m, n)?, Source::AppendixFormula));
        }
        if n == 3 {
            if let Ok(v) = u64::try_from(asymptotic_upper_l3(m as u64)?) {
                uppers.push((v, Source::AsymptoticL3));
            }
        }
        if let Ok(v) = u64::try_from(asymptotic_upper_general(m as u64, n as u32)?) {
            uppers.push((v, Source::AsymptoticGeneral));
        }
        let sandwich = classical_sandwich(m, n);
        if let Some(v) = sandwich.upper {
            uppers.push((v, Source::ClassicalSandwich));
        }

        let mut lowers: Vec<(u64, Source)> = Vec::new();
        if let Some(v) = known_directed_exact(m, n) {
            lowers.push((v, Source::KnownValue));
        }
        if let Some(v) = witness_lower(m, n) {
            lowers.push((v, Source::Witness));
        }
        // The classical table is monotone in n, so the best tabulated column
        // at or below n is still a valid lower bound.
        if let Some(v) = (2..=n).filter_map(|t| known_classical(m, t)).max() {
            lowers.push((v, Source::ClassicalSandwich));
        }

        let upper = uppers.iter().map(|&(v, _)| v).min().expect("candidates");
        let lower = lowers.iter().map(|&(v, _)| v).max().expect("candidates");
        let mut upper_sources: Vec<Source> = uppers
            .iter()
            .filter(|&&(v, _)| v == upper)
            .map(|&(_, s)| s)
            .collect();
        upper_sources.sort_unstable();
        upper_sources.dedup();
        let mut lower_sources: Vec<Source> = lowers
            .iter()
            .filter(|&&(v, _)| v == lower)
            .map(|&(_, s)| s)
            .collect();
        lower_sources.sort_unstable();
        lower_sources.dedup();

        debug_assert!(lower <= upper, "bound inversion at ({m}, {n})");
        Ok(BoundEntry {
            m,
            n,
            lower,
            upper,
            exact: lower == upper,
            lower_sources,
            upper_sources,
        })
    }

    /// CSV export: `m,n,lower,upper,exact,lower_src,upper_src`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,n,lower,upper,exact,lower_src,upper_src\n");
        for e in &self.cells {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                e.m,
                e.n,
                e.lower,
                e.upper,
                e.exact,
                e.lower_src(),
                e.upper_src()
            ));
        }
        out
    }

    /// JSON export: an array of objects with the CSV fields.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.cells
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "m": e.m,
                        "n": e.n,
                        "lower": e.lower,
                        "upper": e.upper,
                        "exact": e.exact,
                        "lower_src": e.lower_src(),
                        "upper_src": e.upper_src(),
                    })
                })
                .collect(),
        )
    }
}

/// Best-known bounds for a single cell.
pub fn best_bounds(m: usize, n: usize) -> Result<BoundEntry, BoundsError> {
    Ok(BoundTable::new(m.max(2), n.max(2))?.get(m, n).clone())
}
