use serde::Serialize;

use super::IterationRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// `J + K + L <= d`
    ClassSum,
    /// `X_i - X_{i-1} >= d - 2J - K - 3L`
    StepLowerBound,
    /// `X_i - X_{i-1} >= -2d`
    StepFloor,
    /// `L <= floor(sqrt(X_{i-1}))`
    BackEdgeSqrt,
    /// `X_{i-1} >= d (L + 1)` when `L >= 1`
    BackEdgeOpenCount,
    /// `X_i >= L (L - 1)`
    RemainingOpen,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantViolation {
    pub iteration: usize,
    pub kind: ViolationKind,
}

/// Checks the per-iteration inequalities. The three bounds on `L` rely on
/// every back edge hitting a distinct tree vertex, so they are only checked
/// when `simple` is set.
pub fn check_record(r: &IterationRecord, simple: bool) -> Vec<InvariantViolation> {
    let d = i64::from(r.open);
    let (j, k, l) = (i64::from(r.j), i64::from(r.k), i64::from(r.l));
    let x_prev = r.x_prev as i64;
    let x = r.x as i64;
    let step = x - x_prev;

    let mut failed = Vec::new();
    if j + k + l > d {
        failed.push(ViolationKind::ClassSum);
    }
    if step < d - 2 * j - k - 3 * l {
        failed.push(ViolationKind::StepLowerBound);
    }
    if step < -2 * d {
        failed.push(ViolationKind::StepFloor);
    }
    if simple {
        if l * l > x_prev {
            failed.push(ViolationKind::BackEdgeSqrt);
        }
        if l >= 1 && x_prev < d * (l + 1) {
            failed.push(ViolationKind::BackEdgeOpenCount);
        }
        if x < l * (l - 1) {
            failed.push(ViolationKind::RemainingOpen);
        }
    }
    failed
        .into_iter()
        .map(|kind| InvariantViolation {
            iteration: r.i,
            kind,
        })
        .collect()
}
