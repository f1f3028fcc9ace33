//! g_j and f_j by direct scan.
//!
//! For a tuple with gcd 1 and k ≥ 2 the denumerant tends to infinity, so for
//! every j there is a last integer with exactly j representations (or none at
//! all). The scan walks n upward over a saturated table (cap = J+1, enough to
//! distinguish every count ≤ J from "more than J") and stops once a_min
//! consecutive integers all have more than J representations: adding a copy
//! of any generator maps representations of n injectively into representations
//! of n + a_i, so counts are monotone along every generator step, and a full
//! window of a_min integers above J pins every larger n above J as well.
//!
//! f-values use the same table through the shift bijection: the positive
//! count of n equals d(n - K) with K = Σ a_i, so the positive scan is the
//! nonnegative scan displaced by K, with the integers 1 … K-1 having no
//! positive representation at all.
//!
//! The scan cannot know its stopping point in advance, so tables grow
//! geometrically until the window appears, bounded by a hard limit (default
//! [`default_hard_limit`]). The limit is a safety valve for contract
//! violations, not a tuning knob; hitting it reports `HardLimitExceeded`.

use serde::Serialize;

use crate::denumerant::denumerant_table;
use crate::error::{Error, Result};
use crate::tuple::{GeneratorTuple, JFrobeniusValue, ValueKind};

/// How a value was computed; carried on results so reports can say.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Dp,
    Reduced,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Dp => "dp",
            Method::Reduced => "reduced",
            Method::Oracle => "oracle",
        }
    }
}

impl Serialize for Method {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// All g_j (or f_j) for j = 0 ..= max_j from one scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceResult {
    pub tuple: GeneratorTuple,
    pub kind: ValueKind,
    pub max_j: u32,
    /// Indexed by j; exactly max_j + 1 entries.
    pub values: Vec<JFrobeniusValue>,
    /// Largest n the scan examined. Every Present value is ≤ this, and no
    /// n in (value, scan_limit] has the same count.
    pub scan_limit: u64,
    pub method: Method,
}

impl SequenceResult {
    pub fn value(&self, j: u32) -> JFrobeniusValue {
        self.values[j as usize]
    }
}

/// Default scan ceiling: 4·(J+2)·a_max² + K. Far beyond where the window
/// lands for any gcd-1 tuple; generous enough that reaching it means the
/// preconditions were violated.
pub fn default_hard_limit(tuple: &GeneratorTuple, max_j: u32) -> u64 {
    let a_max = tuple.max_generator();
    4u64.saturating_mul(u64::from(max_j) + 2)
        .saturating_mul(a_max)
        .saturating_mul(a_max)
        .saturating_add(tuple.sum())
}

/// Raw scan outcome: for each count c ≤ max_j, the greatest n in [0, W] with
/// exactly c representations, plus the window end W itself.
pub(crate) struct Scan {
    pub(crate) best: Vec<Option<u64>>,
    pub(crate) window_end: u64,
}

pub(crate) fn scan_counts(tuple: &GeneratorTuple, max_j: u32, hard_limit: u64) -> Result<Scan> {
    let cap = u64::from(max_j)
        .checked_add(1)
        .filter(|&c| c <= u64::from(u32::MAX))
        .expect("max_j leaves room for the cap") as u32;
    let a_min = tuple.min_generator();
    let mut limit = hard_limit.min(1024.max(tuple.max_generator().saturating_mul(8)));
    loop {
        let table = denumerant_table(tuple, limit, cap)?;
        let mut best = vec![None; max_j as usize + 1];
        let mut run = 0u64;
        for n in 0..=limit {
            let c = table.count(n);
            if u64::from(c) > u64::from(max_j) {
                run += 1;
                if run == a_min {
                    return Ok(Scan { best, window_end: n });
                }
            } else {
                best[c as usize] = Some(n);
                run = 0;
            }
        }
        if limit == hard_limit {
            return Err(Error::HardLimitExceeded { limit: hard_limit });
        }
        limit = limit.saturating_mul(2).min(hard_limit);
    }
}

fn require_gcd_one(tuple: &GeneratorTuple) -> Result<()> {
    match tuple.gcd() {
        1 => Ok(()),
        gcd => Err(Error::GcdNotOne { gcd }),
    }
}

/// With a single generator the tuple must be (1), every integer has exactly
/// one representation, and no j has a greatest witness: all values absent.
fn all_absent(tuple: &GeneratorTuple, kind: ValueKind, max_j: u32) -> SequenceResult {
    SequenceResult {
        tuple: tuple.clone(),
        kind,
        max_j,
        values: (0..=max_j).map(|j| JFrobeniusValue::absent(kind, j)).collect(),
        scan_limit: 0,
        method: Method::Dp,
    }
}

/// g_j for all j ≤ max_j with the default hard limit.
pub fn g_sequence(tuple: &GeneratorTuple, max_j: u32) -> Result<SequenceResult> {
    g_sequence_with_limit(tuple, max_j, default_hard_limit(tuple, max_j))
}

pub fn g_sequence_with_limit(
    tuple: &GeneratorTuple,
    max_j: u32,
    hard_limit: u64,
) -> Result<SequenceResult> {
    require_gcd_one(tuple)?;
    if tuple.k() == 1 {
        return Ok(all_absent(tuple, ValueKind::G, max_j));
    }
    let scan = scan_counts(tuple, max_j, hard_limit)?;
    let values = scan
        .best
        .iter()
        .enumerate()
        .map(|(j, &best)| match best {
            Some(n) if n >= 1 => JFrobeniusValue::present(ValueKind::G, j as u32, n),
            _ => JFrobeniusValue::absent(ValueKind::G, j as u32),
        })
        .collect();
    Ok(SequenceResult {
        tuple: tuple.clone(),
        kind: ValueKind::G,
        max_j,
        values,
        scan_limit: scan.window_end,
        method: Method::Dp,
    })
}

/// f_j for all j ≤ max_j: the scan over positive counts, which lives at
/// offset K from the nonnegative scan. The integers 1 … K-1 have no positive
/// representation, so f_0 is at least K-1 even when g_0 is absent.
pub fn f_sequence(tuple: &GeneratorTuple, max_j: u32) -> Result<SequenceResult> {
    f_sequence_with_limit(tuple, max_j, default_hard_limit(tuple, max_j))
}

pub fn f_sequence_with_limit(
    tuple: &GeneratorTuple,
    max_j: u32,
    hard_limit: u64,
) -> Result<SequenceResult> {
    require_gcd_one(tuple)?;
    if tuple.k() == 1 {
        return Ok(all_absent(tuple, ValueKind::F, max_j));
    }
    let k_sum = tuple.sum();
    let scan = scan_counts(tuple, max_j, hard_limit)?;
    let values = scan
        .best
        .iter()
        .enumerate()
        .map(|(j, &best)| {
            let candidate = match best {
                Some(m) => Some(m + k_sum),
                // no m ≥ 0 with count j; for j = 0 the positive scan still
                // sees 1 … K-1, all unrepresentable
                None if j == 0 && k_sum >= 2 => Some(k_sum - 1),
                None => None,
            };
            match candidate {
                Some(n) if n >= 1 => JFrobeniusValue::present(ValueKind::F, j as u32, n),
                _ => JFrobeniusValue::absent(ValueKind::F, j as u32),
            }
        })
        .collect();
    Ok(SequenceResult {
        tuple: tuple.clone(),
        kind: ValueKind::F,
        max_j,
        values,
        scan_limit: scan.window_end + k_sum,
        method: Method::Dp,
    })
}

/// Single g_j; delegates to the batch scan.
pub fn g_j(tuple: &GeneratorTuple, j: u32) -> Result<JFrobeniusValue> {
    Ok(g_sequence(tuple, j)?.value(j))
}

/// Single f_j; delegates to the batch scan.
pub fn f_j(tuple: &GeneratorTuple, j: u32) -> Result<JFrobeniusValue> {
    Ok(f_sequence(tuple, j)?.value(j))
}

/// Greatest integer (over all of ℤ) with exactly j representations, for
/// j = 0 ..= max_j. Negative integers have no representations, so entries are
/// None (no integer at all attains count j), or Some(m) with m ≥ 0, or
/// Some(-1) for j = 0 when every nonnegative integer is representable. This
/// sentinel-free form is what one reduction step transports exactly:
/// the public g_j is just "Some(m) with m ≥ 1".
pub(crate) fn g_extended(
    tuple: &GeneratorTuple,
    max_j: u32,
    hard_limit: u64,
) -> Result<Vec<Option<i64>>> {
    require_gcd_one(tuple)?;
    debug_assert!(tuple.k() >= 2, "extended values need a growing denumerant");
    let scan = scan_counts(tuple, max_j, hard_limit)?;
    Ok(scan
        .best
        .iter()
        .enumerate()
        .map(|(j, &best)| match best {
            Some(m) => Some(m as i64),
            None if j == 0 => Some(-1),
            None => None,
        })
        .collect())
}
