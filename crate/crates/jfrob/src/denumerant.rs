//! Representation counting.
//!
//! The denumerant d(n) of a tuple (a_1, …, a_k) is the number of coordinate
//! vectors (x_1, …, x_k) ≥ 0 with Σ a_i·x_i = n. The table form processes one
//! generator index at a time (`counts[n] += counts[n - a]` for n ascending),
//! which counts positional vectors and therefore handles duplicate generator
//! values correctly: (1,1,5) gives d(2) = 3, not 2.
//!
//! Counts grow polynomially of degree k-1, so the table saturates at a caller
//! -chosen cap (solvers only need to distinguish counts ≤ J from "more than
//! J"), while [`denumerant`] returns the exact count as a big integer.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::tuple::GeneratorTuple;

/// Default ceiling on table size, in entries. A table bigger than this is
/// almost certainly a runaway scan rather than a legitimate request.
pub const DEFAULT_TABLE_BUDGET: u64 = 1 << 28;

/// Saturated denumerant table for n = 0 ..= limit.
#[derive(Debug, Clone)]
pub struct DenumerantSeries {
    tuple: GeneratorTuple,
    limit: u64,
    cap: u32,
    counts: Vec<u32>,
}

impl DenumerantSeries {
    pub fn tuple(&self) -> &GeneratorTuple {
        &self.tuple
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// min(cap, d(n)). Panics if n > limit.
    pub fn count(&self, n: u64) -> u32 {
        self.counts[usize::try_from(n).expect("n fits usize")]
    }

    /// True when the stored count hit the cap, i.e. d(n) ≥ cap.
    pub fn is_saturated(&self, n: u64) -> bool {
        self.count(n) == self.cap
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }
}

/// Builds the saturated table with the default entry budget. cap must be ≥ 1
/// (a cap of 0 could not even store d(0) = 1).
pub fn denumerant_table(tuple: &GeneratorTuple, limit: u64, cap: u32) -> Result<DenumerantSeries> {
    denumerant_table_with_budget(tuple, limit, cap, DEFAULT_TABLE_BUDGET)
}

/// Same as [`denumerant_table`] with an explicit entry budget.
pub fn denumerant_table_with_budget(
    tuple: &GeneratorTuple,
    limit: u64,
    cap: u32,
    budget: u64,
) -> Result<DenumerantSeries> {
    assert!(cap >= 1, "cap must be positive");
    if limit >= budget {
        return Err(Error::LimitTooLarge { limit, budget });
    }
    let len = usize::try_from(limit + 1).expect("budget keeps table within usize");
    let mut counts = vec![0u32; len];
    counts[0] = 1.min(cap);
    for &a in tuple.generators() {
        let a = match usize::try_from(a) {
            Ok(a) if a <= limit as usize => a,
            _ => continue, // generator exceeds the table; contributes nothing
        };
        for n in a..len {
            let sum = counts[n].saturating_add(counts[n - a]);
            counts[n] = sum.min(cap);
        }
    }
    Ok(DenumerantSeries { tuple: tuple.clone(), limit, cap, counts })
}

/// Exact denumerant d(n) as an arbitrary-size integer.
pub fn denumerant(tuple: &GeneratorTuple, n: u64) -> BigUint {
    let len = usize::try_from(n + 1).expect("n fits usize");
    let mut counts = vec![BigUint::zero(); len];
    counts[0] = BigUint::one();
    for &a in tuple.generators() {
        let a = match usize::try_from(a) {
            Ok(a) if a < len => a,
            _ => continue,
        };
        for i in a..len {
            let prev = counts[i - a].clone();
            counts[i] += prev;
        }
    }
    counts.pop().expect("table is non-empty")
}

/// Number of strictly positive representations of n. A vector with all
/// x_i ≥ 1 exists iff (x_i - 1) is a nonnegative representation of n - K,
/// so this is d(n - K), and 0 for n < K.
pub fn positive_denumerant(tuple: &GeneratorTuple, n: u64) -> BigUint {
    let k_sum = tuple.sum();
    if n < k_sum {
        BigUint::zero()
    } else {
        denumerant(tuple, n - k_sum)
    }
}
