//! Resource formulas and the measured-versus-formula tables built on them.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{ExcitationKind, ExcitationSpec};
use crate::synth::{synthesize, Method};

/// Angle used for structural measurements; gate counts do not depend on it.
const PROBE_THETA: f64 = 0.5;

/// Smallest `n` (qubits spanned) a fermionic kind admits.
pub fn min_span(kind: ExcitationKind) -> Result<usize> {
    match kind {
        ExcitationKind::SingleFermionic => Ok(2),
        ExcitationKind::DoubleFermionic => Ok(4),
        other => Err(Error::InvalidExcitation(format!(
            "resource tables are defined for fermionic kinds (sf, df), got {other}"
        ))),
    }
}

fn check_span(kind: ExcitationKind, n: usize) -> Result<()> {
    let min = min_span(kind)?;
    if n < min {
        return Err(Error::InvalidRange(format!(
            "{kind} needs n ≥ {min}, got {n}"
        )));
    }
    Ok(())
}

/// Predicted `(cnot_count, cnot_depth)` of the optimized circuit spanning `n` qubits.
pub fn optimized_formula(kind: ExcitationKind, n: usize) -> Result<(usize, usize)> {
    check_span(kind, n)?;
    Ok(match (kind, n) {
        (ExcitationKind::SingleFermionic, 2) => (3, 3),
        (ExcitationKind::SingleFermionic, n) => (2 * n - 1, (2 * n - 3).max(5)),
        (ExcitationKind::DoubleFermionic, 4) => (13, 11),
        (_, n) => (2 * n + 5, (2 * n - 1).max(13)),
    })
}

/// Predicted CNOT count (equal to the depth) of the staircase baseline.
pub fn standard_formula(kind: ExcitationKind, n: usize) -> Result<usize> {
    check_span(kind, n)?;
    Ok(match kind {
        ExcitationKind::SingleFermionic => 4 * (n - 1),
        _ => 16 * (n - 1),
    })
}

/// A representative excitation spanning exactly `n` qubits, in a register of `n`.
///
/// Singles use `(0, n−1)`; doubles split the `n−4` intermediate qubits as evenly
/// as possible between the two gaps, the lower gap taking the smaller half.
pub fn canonical_spec(kind: ExcitationKind, n: usize, theta: f64) -> Result<ExcitationSpec> {
    check_span(kind, n)?;
    match kind {
        ExcitationKind::SingleFermionic => ExcitationSpec::new(kind, &[0, n - 1], theta, n),
        _ => {
            let lower = (n - 2) / 2;
            let upper = n - 2 - lower;
            ExcitationSpec::new(kind, &[0, lower, lower + 1, lower + 1 + upper], theta, n)
        }
    }
}

fn validate_range(kind: ExcitationKind, range: &RangeInclusive<usize>) -> Result<()> {
    if range.is_empty() {
        return Err(Error::InvalidRange(format!(
            "empty range {}..={}",
            range.start(),
            range.end()
        )));
    }
    check_span(kind, *range.start())
}

fn measure(kind: ExcitationKind, n: usize, method: Method) -> Result<(usize, usize)> {
    let report = synthesize(&canonical_spec(kind, n, PROBE_THETA)?, method)?.resources();
    Ok((report.cnot_count, report.cnot_depth))
}

/// One row of the measured-versus-formula table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatsRow {
    pub n: usize,
    pub optimized_count: usize,
    pub optimized_depth: usize,
    pub standard_count: usize,
    pub standard_depth: usize,
    pub formula_count: usize,
    pub formula_depth: usize,
    /// Optimized and standard measurements both equal their formulas.
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Measure both constructions for every `n` in `range`.
pub fn stats(kind: ExcitationKind, range: RangeInclusive<usize>) -> Result<Vec<StatsRow>> {
    validate_range(kind, &range)?;
    range
        .map(|n| {
            let (optimized_count, optimized_depth) = measure(kind, n, Method::Optimized)?;
            let (standard_count, standard_depth) = measure(kind, n, Method::Standard)?;
            let (formula_count, formula_depth) = optimized_formula(kind, n)?;
            let baseline = standard_formula(kind, n)?;
            Ok(StatsRow {
                n,
                optimized_count,
                optimized_depth,
                standard_count,
                standard_depth,
                formula_count,
                formula_depth,
                matches: optimized_count == formula_count
                    && optimized_depth == formula_depth
                    && standard_count == baseline
                    && standard_depth == baseline,
            })
        })
        .collect()
}

/// Baseline-to-optimized CNOT ratio at one `n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareRow {
    pub n: usize,
    pub optimized_count: usize,
    pub standard_count: usize,
    pub ratio: f64,
}

/// Ratios over a range plus the asymptotic estimate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub rows: Vec<CompareRow>,
    /// The ratio at the largest `n` in the range.
    pub asymptotic_ratio: f64,
    /// The `n → ∞` limit of the formulas: 2 for singles, 8 for doubles.
    pub limit: f64,
    /// The ratio is strictly increasing in `n` over the range.
    pub monotone: bool,
    /// The optimized circuit uses strictly fewer CNOTs at every `n`.
    pub optimized_always_smaller: bool,
}

/// Measure the reduction factor for every `n` in `range`.
pub fn compare(kind: ExcitationKind, range: RangeInclusive<usize>) -> Result<Comparison> {
    validate_range(kind, &range)?;
    let rows = range
        .map(|n| {
            let (optimized_count, _) = measure(kind, n, Method::Optimized)?;
            let (standard_count, _) = measure(kind, n, Method::Standard)?;
            Ok(CompareRow {
                n,
                optimized_count,
                standard_count,
                ratio: standard_count as f64 / optimized_count as f64,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let asymptotic_ratio = rows.last().map_or(f64::NAN, |r| r.ratio);
    Ok(Comparison {
        monotone: rows.windows(2).all(|w| w[1].ratio > w[0].ratio),
        optimized_always_smaller: rows.iter().all(|r| r.optimized_count < r.standard_count),
        limit: if kind.is_double() { 8.0 } else { 2.0 },
        asymptotic_ratio,
        rows,
    })
}
