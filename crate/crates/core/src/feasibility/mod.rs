//! Counting conditions for 2-designs with prime replication number and the
//! order-based elimination engine.

pub mod tables;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{is_prime, primitive_prime_divisors, ArithError, FactoredInteger};
use crate::groups::{GroupError, GroupRef};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FeasibilityError {
    #[error("invalid design parameters: {0}")]
    InvalidParams(String),
    #[error("malformed row {row}: {why}")]
    MalformedRow { row: String, why: String },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DesignParams {
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub lambda: u64,
}

impl DesignParams {
    /// Checks the counting identities, nontriviality and Fisher's inequality.
    pub fn new(v: u64, b: u64, r: u64, k: u64, lambda: u64) -> Result<Self, FeasibilityError> {
        let p = Self { v, b, r, k, lambda };
        p.violations().map_or(Ok(p), |why| Err(FeasibilityError::InvalidParams(why)))
    }

    fn violations(&self) -> Option<String> {
        let Self { v, b, r, k, lambda } = *self;
        if v == 0 || k == 0 {
            return Some("v and k must be positive".into());
        }
        if r * (k - 1) != lambda * (v - 1) {
            return Some(format!("r(k-1) = {} but lambda(v-1) = {}", r * (k - 1), lambda * (v - 1)));
        }
        if b * k != v * r {
            return Some(format!("bk = {} but vr = {}", b * k, v * r));
        }
        if !(2 < k && k + 1 < v) {
            return Some(format!("k = {k} is trivial for v = {v}"));
        }
        if b < v {
            return Some(format!("b = {b} < v = {v}"));
        }
        None
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_none()
    }
}

impl fmt::Display for DesignParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.v, self.b, self.r, self.k, self.lambda)
    }
}

/// All `(v, b, r, k, lambda)` with the given `v` and prime `r`, sorted by lambda.
pub fn derive_params(v: u64, r: u64) -> Vec<DesignParams> {
    if v < 4 || !is_prime(r) || (v - 1) % r != 0 {
        return Vec::new();
    }
    let step = (v - 1) / r;
    let mut out = Vec::new();
    let mut lambda = 1u64;
    while lambda * v < r * r {
        let k = 1 + lambda * step;
        if 2 < k && k + 1 < v && k <= r && (v * r) % k == 0 {
            out.push(DesignParams { v, b: v * r / k, r, k, lambda });
        }
        lambda += 1;
    }
    out
}

/// Every parameter set with `v <= max_v`, `lambda <= max_lambda`, prime `r`
/// dividing `v - 1` and `lambda v < r^2`, ordered by `(v, r, lambda)`.
pub fn enumerate_feasible(max_v: u64, max_lambda: u64) -> Vec<DesignParams> {
    let mut out = Vec::new();
    for v in 4..=max_v {
        for r in (2..v).filter(|&r| is_prime(r) && (v - 1) % r == 0) {
            out.extend(derive_params(v, r).into_iter().filter(|p| p.lambda <= max_lambda));
        }
    }
    out
}

/// `|X| <= |H|^3`.
pub fn large_test(x_order: &FactoredInteger, h_order: &FactoredInteger) -> Result<bool, ArithError> {
    x_order.divide_exact(h_order)?;
    Ok(x_order.to_biguint() <= h_order.pow(3).to_biguint())
}

/// `|X| < |H| * (|H|_{p'})^2`; `false` eliminates.
pub fn coprime_test(
    x_order: &FactoredInteger,
    h_order: &FactoredInteger,
    p: u64,
) -> Result<bool, ArithError> {
    x_order.divide_exact(h_order)?;
    let rhs = h_order.multiply(&h_order.coprime_part(p).pow(2));
    Ok(x_order.to_biguint() < rhs.to_biguint())
}

/// For `v = (q^n - 1)/(q - 1)`: the primitive prime divisors `r` of `q^{n-1} - 1`
/// dividing `(q^{n-1} - 1)/(q - 1)`, each with its parameter sets.
pub fn primitive_divisor_candidates(
    n: u32,
    q: u64,
) -> Result<Vec<(u64, Vec<DesignParams>)>, FeasibilityError> {
    if n < 3 {
        return Err(FeasibilityError::InvalidParams(format!("n = {n} < 3")));
    }
    let overflow = || FeasibilityError::InvalidParams(format!("(q^n-1)/(q-1) overflows for q={q}, n={n}"));
    let qn = q.checked_pow(n).ok_or_else(overflow)?;
    let v = (qn - 1) / (q - 1);
    let w = (q.pow(n - 1) - 1) / (q - 1);
    Ok(primitive_prime_divisors(q, n - 1)?
        .into_iter()
        .filter(|r| w % r == 0)
        .map(|r| (r, derive_params(v, r)))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SourceTable {
    T3,
    T4,
    T5,
    T6,
    T7,
}

impl SourceTable {
    pub fn number(self) -> u8 {
        match self {
            SourceTable::T3 => 3,
            SourceTable::T4 => 4,
            SourceTable::T5 => 5,
            SourceTable::T6 => 6,
            SourceTable::T7 => 7,
        }
    }
}

/// Subgroup family of the point stabilizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassLabel {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C8,
    S,
    Parabolic,
    TableFour,
    /// Non-parabolic subgroups of exceptional groups.
    NonParabolic,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The number of points of a row: exact when the stabilizer order is known,
/// otherwise a lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowIndex {
    Exact(FactoredInteger),
    LowerBound(BigUint),
}

impl RowIndex {
    pub fn bound(&self) -> BigUint {
        match self {
            RowIndex::Exact(v) => v.to_biguint(),
            RowIndex::LowerBound(v) => v.clone(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RowIndex::Exact(_))
    }
}

impl fmt::Display for RowIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowIndex::Exact(v) => write!(f, "{v}"),
            RowIndex::LowerBound(v) => write!(f, ">={v}"),
        }
    }
}

/// Which primes may divide `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoolRule {
    /// Primes of the p'-part of the stabilizer order.
    CoprimePart(u64),
    /// Primes of the stabilizer order.
    WholeOrder,
    /// Any prime up to `u_r`.
    Unrestricted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrintedKind {
    Exact,
    LowerBound,
}

/// How the tabulated value compares with the recomputed one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrintedComparison {
    Equal,
    /// Printed lower bound strictly below the exact value.
    ValidBound,
    Mismatch,
    /// No independent recomputation (the row is itself a bound formula).
    Unchecked,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationRow {
    pub source_table: SourceTable,
    pub class_label: ClassLabel,
    pub group: GroupRef,
    pub stabilizer_label: String,
    pub stabilizer_order: Option<FactoredInteger>,
    pub q: Option<u64>,
    /// Dimension for rows parametrized by `n`.
    pub n: Option<u32>,
    pub v: RowIndex,
    pub printed_v: BigUint,
    pub printed_kind: PrintedKind,
    pub u_r: BigUint,
    pub pool: PoolRule,
    pub annotation: Option<String>,
    /// Documented disagreement between the tabulated and recomputed value.
    pub erratum: Option<String>,
}

impl EliminationRow {
    pub fn label(&self) -> String {
        let mut s = format!("T{} {} / {}", self.source_table.number(), self.group, self.stabilizer_label);
        if let Some(n) = self.n {
            s.push_str(&format!(" n={n}"));
        }
        s
    }

    pub fn printed_comparison(&self) -> PrintedComparison {
        match (&self.v, self.printed_kind) {
            (RowIndex::LowerBound(_), _) => PrintedComparison::Unchecked,
            (RowIndex::Exact(v), kind) => {
                let v = v.to_biguint();
                if v == self.printed_v {
                    PrintedComparison::Equal
                } else if kind == PrintedKind::LowerBound && self.printed_v < v {
                    PrintedComparison::ValidBound
                } else {
                    PrintedComparison::Mismatch
                }
            }
        }
    }

    fn malformed(&self, why: impl Into<String>) -> FeasibilityError {
        FeasibilityError::MalformedRow { row: self.label(), why: why.into() }
    }

    /// Checks `u_r >= 2` and, for exact rows, `v * |H| = |X|`.
    pub fn check_well_formed(&self) -> Result<(), FeasibilityError> {
        if self.u_r < BigUint::from(2u32) {
            return Err(self.malformed("u_r < 2"));
        }
        if let (RowIndex::Exact(v), Some(h)) = (&self.v, &self.stabilizer_order) {
            let x = self.group.order()?;
            if v.multiply(h) != x {
                return Err(self.malformed(format!("v * |H| = {} differs from |X| = {x}", v.multiply(h))));
            }
        }
        Ok(())
    }

    /// The candidate prime pool for `r` implied by the row.
    pub fn default_pool(&self) -> BTreeSet<u64> {
        let cap = self.u_r.to_u64().unwrap_or(u64::MAX);
        match (self.pool, &self.stabilizer_order) {
            (PoolRule::CoprimePart(p), Some(h)) => h.coprime_part(p).primes().collect(),
            (PoolRule::WholeOrder, Some(h)) => h.primes().collect(),
            _ => (2..=cap.min(1 << 20)).filter(|&r| is_prime(r)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub r: u64,
    pub params: Vec<DesignParams>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// `v >= u_r^2`, so `lambda v < r^2` fails.
    Eliminated { v: BigUint, u_r_squared: BigUint },
    SurvivesToParams(Vec<Candidate>),
    AnnotatedClosed { candidates: Vec<Candidate>, annotation: String },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Eliminated { .. } => "Eliminated",
            Verdict::SurvivesToParams(_) => "SurvivesToParams",
            Verdict::AnnotatedClosed { .. } => "AnnotatedClosed",
        }
    }

    pub fn is_eliminated(&self) -> bool {
        matches!(self, Verdict::Eliminated { .. })
    }

    pub fn candidates(&self) -> &[Candidate] {
        match self {
            Verdict::Eliminated { .. } => &[],
            Verdict::SurvivesToParams(c) => c,
            Verdict::AnnotatedClosed { candidates, .. } => candidates,
        }
    }
}

/// The inequality screen alone: eliminated, or the surviving parameter sets.
pub fn screen_row(row: &EliminationRow, pool: &BTreeSet<u64>) -> Result<Verdict, FeasibilityError> {
    row.check_well_formed()?;
    let v = row.v.bound();
    let u_r_squared = &row.u_r * &row.u_r;
    if v >= u_r_squared {
        return Ok(Verdict::Eliminated { v, u_r_squared });
    }
    let exact = match &row.v {
        RowIndex::Exact(v) => v.to_u64().ok_or_else(|| row.malformed("v exceeds u64"))?,
        RowIndex::LowerBound(_) => {
            return Err(row.malformed("lower bound below u_r^2; parameters cannot be derived"))
        }
    };
    let u_r = row.u_r.to_u64().ok_or_else(|| row.malformed("u_r exceeds u64"))?;
    let candidates = pool
        .iter()
        .copied()
        .filter(|&r| r <= u_r && is_prime(r) && (exact - 1) % r == 0)
        .map(|r| Candidate { r, params: derive_params(exact, r) })
        .collect();
    Ok(Verdict::SurvivesToParams(candidates))
}

/// Screens a row and, for survivors carrying an annotation, records the closure.
pub fn evaluate_row(row: &EliminationRow, pool: &BTreeSet<u64>) -> Result<Verdict, FeasibilityError> {
    let verdict = screen_row(row, pool)?;
    Ok(match (verdict, &row.annotation) {
        (Verdict::SurvivesToParams(candidates), Some(note)) => Verdict::AnnotatedClosed {
            candidates,
            annotation: note.clone(),
        },
        (v, _) => v,
    })
}

/// `evaluate_row` with the row's own prime pool.
pub fn evaluate_row_default(row: &EliminationRow) -> Result<Verdict, FeasibilityError> {
    // the pool is only needed by survivors, and building it can be costly
    match screen_row(row, &BTreeSet::new())? {
        v @ Verdict::Eliminated { .. } => Ok(v),
        _ => evaluate_row(row, &row.default_pool()),
    }
}

pub const CSV_HEADER: &str = "table,class,group,stabilizer,q,v,u_r,verdict";

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One CSV line (no trailing newline) for a row and its verdict.
pub fn csv_line(row: &EliminationRow, verdict: &Verdict) -> String {
    let mut group = row.group.label();
    if let Some(n) = row.n {
        group = format!("{group} [n={n}]");
    }
    [
        format!("T{}", row.source_table.number()),
        row.class_label.to_string(),
        csv_field(&group),
        csv_field(&row.stabilizer_label),
        row.q.map(|q| q.to_string()).unwrap_or_default(),
        row.v.to_string(),
        row.u_r.to_string(),
        verdict.name().to_string(),
    ]
    .join(",")
}

pub fn rows_to_csv(rows: &[(EliminationRow, Verdict)]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for (row, verdict) in rows {
        out.push_str(&csv_line(row, verdict));
        out.push('\n');
    }
    out
}
