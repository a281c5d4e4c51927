//! Shared inputs for the criterion benchmarks.

use fermix_core::report::canonical_spec;
use fermix_core::{ExcitationKind, ExcitationSpec};

/// Angle used by every benchmark input.
pub const THETA: f64 = 0.73;

/// Canonical fermionic specs spanning each `n` in `spans`.
pub fn fermionic_specs(kind: ExcitationKind, spans: &[usize]) -> Vec<ExcitationSpec> {
    spans
        .iter()
        .map(|&n| canonical_spec(kind, n, THETA).expect("span within the kind's minimum"))
        .collect()
}
