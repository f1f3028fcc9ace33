//! Tuple-space sweeps.
//!
//! Two phenomena worth hunting for. First, order inversions: pairs with
//! 0 < g_{j+1} < g_j, so that asking for one more representation lowers the
//! last witness instead of raising it. Second, the unsettled question of
//! whether g_1 > g_0 whenever both exist; a counterexample would be a
//! finding, so the conjecture sweep records and reports rather than erroring.
//!
//! Sweeps enumerate nondecreasing tuples only: g_j and f_j are invariant
//! under permuting generators, so each multiset is visited once. Tuples are
//! independent work units; per-tuple results are computed in parallel and
//! merged back in enumeration order, making reports deterministic for a
//! fixed space regardless of thread count or scheduling.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::solver;
use crate::tuple::GeneratorTuple;

/// One order inversion: both values exist and the later one is smaller.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InversionRecord {
    pub tuple: GeneratorTuple,
    pub j: u32,
    pub g_j: u64,
    pub g_j_plus_1: u64,
}

/// A tuple where g_0 and g_1 both exist but g_1 fails to exceed g_0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub tuple: GeneratorTuple,
    pub g_0: u64,
    pub g_1: u64,
}

/// Outcome of a sweep. `inversions` and `counterexamples` are each filled by
/// the sweep that looks for them and empty otherwise. Wall-clock time is
/// carried for logging but never serialized: reports must be byte-identical
/// across runs.
#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub k: usize,
    pub max_gen: u64,
    pub max_j: u32,
    pub inversions: Vec<InversionRecord>,
    pub counterexamples: Vec<Counterexample>,
    pub tuples_scanned: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// All nondecreasing tuples (a_1 ≤ … ≤ a_k ≤ max_gen) with gcd 1, in
/// lexicographic order, fully materialized. Duplicated values are allowed;
/// they carry distinct coordinates and change the counts.
pub fn enumerate_tuples(k: usize, max_gen: u64) -> Vec<GeneratorTuple> {
    fn extend(
        k: usize,
        max_gen: u64,
        lo: u64,
        prefix: &mut Vec<u64>,
        out: &mut Vec<GeneratorTuple>,
    ) {
        if prefix.len() == k {
            if prefix.iter().fold(0, |acc, &v| num_integer::gcd(acc, v)) == 1 {
                out.push(GeneratorTuple::new(prefix.clone()).expect("values start at 1"));
            }
            return;
        }
        for v in lo..=max_gen {
            prefix.push(v);
            extend(k, max_gen, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 && max_gen >= 1 {
        extend(k, max_gen, 1, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Every j ≤ max_j where g_j and g_{j+1} both exist and g_{j+1} < g_j.
pub fn scan_inversions(tuple: &GeneratorTuple, max_j: u32) -> Result<Vec<InversionRecord>> {
    let upper = max_j.checked_add(1).expect("max_j + 1 fits u32");
    let seq = solver::g_sequence(tuple, upper)?;
    Ok((0..=max_j)
        .filter_map(|j| {
            match (seq.value(j).value(), seq.value(j + 1).value()) {
                (Some(g_j), Some(g_j_plus_1)) if g_j_plus_1 < g_j => Some(InversionRecord {
                    tuple: tuple.clone(),
                    j,
                    g_j,
                    g_j_plus_1,
                }),
                _ => None,
            }
        })
        .collect())
}

/// Sweeps the whole (k, max_gen) space for inversions at j ≤ max_j.
pub fn search_inversions(k: usize, max_gen: u64, max_j: u32) -> Result<SearchReport> {
    let start = Instant::now();
    let tuples = enumerate_tuples(k, max_gen);
    let per_tuple = tuples
        .par_iter()
        .map(|t| scan_inversions(t, max_j))
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchReport {
        k,
        max_gen,
        max_j,
        inversions: per_tuple.into_iter().flatten().collect(),
        counterexamples: Vec::new(),
        tuples_scanned: tuples.len() as u64,
        elapsed: start.elapsed(),
    })
}

/// Sweeps the whole (k, max_gen) space for tuples where g_0 and g_1 both
/// exist yet g_1 ≤ g_0. Finding one is a result to surface, not a failure,
/// so the report always completes.
pub fn conjecture_g1_gt_g0(k: usize, max_gen: u64) -> Result<SearchReport> {
    let start = Instant::now();
    let tuples = enumerate_tuples(k, max_gen);
    let per_tuple = tuples
        .par_iter()
        .map(|t| {
            let seq = solver::g_sequence(t, 1)?;
            Ok(match (seq.value(0).value(), seq.value(1).value()) {
                (Some(g_0), Some(g_1)) if g_1 <= g_0 => Some(Counterexample {
                    tuple: t.clone(),
                    g_0,
                    g_1,
                }),
                _ => None,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchReport {
        k,
        max_gen,
        max_j: 1,
        inversions: Vec::new(),
        counterexamples: per_tuple.into_iter().flatten().collect(),
        tuples_scanned: tuples.len() as u64,
        elapsed: start.elapsed(),
    })
}
