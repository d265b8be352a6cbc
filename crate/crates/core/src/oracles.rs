//! Naive reference implementations for differential testing.
//!
//! Nothing here goes through intervals, folds or the checked accessors; each
//! function is a plain loop or a library sort over the raw slice.

use crate::vector::VectorData;

/// Ascending accumulation over `low..=high`; 0 when `low > high`.
pub fn naive_sum(low: i64, high: i64) -> i64 {
    let mut total = 0;
    let mut i = low;
    while i <= high {
        total += i;
        if i == i64::MAX {
            break;
        }
        i += 1;
    }
    total
}

/// Position-wise product sum, `None` when the lengths differ.
pub fn naive_dot(v1: &VectorData, v2: &VectorData) -> Option<f64> {
    let (a, b) = (v1.as_slice(), v2.as_slice());
    if a.len() != b.len() {
        return None;
    }
    let mut total = 0.0;
    for k in 0..a.len() {
        total += a[k] * b[k];
    }
    Some(total)
}

pub fn sort_oracle(vec: &VectorData) -> VectorData {
    let mut out = vec.as_slice().to_vec();
    out.sort_by(f64::total_cmp);
    VectorData::new(out)
}

/// Sort of the concatenation; deliberately not a second merge.
pub fn merge_oracle(v1: &VectorData, v2: &VectorData) -> VectorData {
    let mut both = v1.as_slice().to_vec();
    both.extend_from_slice(v2.as_slice());
    sort_oracle(&VectorData::new(both))
}
