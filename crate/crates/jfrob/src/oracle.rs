//! Brute-force reference implementations.
//!
//! Everything here counts representations by explicit recursion over
//! coefficient vectors and shares no arithmetic with the table-based solver,
//! so agreement between the two is evidence against bugs in either. Runtime
//! grows exponentially in k and polynomially in the target; keep inputs
//! small.
//!
//! The scan-based queries take an explicit `scan_to` ceiling and refuse to
//! answer (`ScanIncomplete`) when the stopping window has not appeared by
//! then. A reference implementation that silently truncated its scan could
//! report a non-maximal witness as the answer; the error keeps it honest.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::solver;
use crate::tuple::{GeneratorTuple, JFrobeniusValue, RepVector, ValueKind};

/// Every representation of one target, in lexicographic coefficient order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationList {
    pub tuple: GeneratorTuple,
    pub target: u64,
    pub positive_only: bool,
    pub representations: Vec<RepVector>,
}

impl RepresentationList {
    pub fn count(&self) -> usize {
        self.representations.len()
    }
}

fn collect_reps(
    generators: &[u64],
    remaining: u64,
    lo: u64,
    prefix: &mut Vec<u64>,
    target: u64,
    out: &mut Vec<RepVector>,
) {
    match generators {
        [] => unreachable!("tuples are never empty"),
        [last] => {
            if remaining.is_multiple_of(*last) && remaining / last >= lo {
                let mut coefficients = prefix.clone();
                coefficients.push(remaining / last);
                out.push(RepVector::new(coefficients, target));
            }
        }
        [first, rest @ ..] => {
            let mut x = lo;
            while let Some(used) = first.checked_mul(x) {
                if used > remaining {
                    break;
                }
                prefix.push(x);
                collect_reps(rest, remaining - used, lo, prefix, target, out);
                prefix.pop();
                x += 1;
            }
        }
    }
}

/// Lists every representation of `target`, with all coefficients ≥ 1 when
/// `positive_only` is set. Coefficient vectors come out in ascending
/// lexicographic order.
pub fn enumerate_representations(
    tuple: &GeneratorTuple,
    target: u64,
    positive_only: bool,
) -> RepresentationList {
    let lo = if positive_only { 1 } else { 0 };
    let mut representations = Vec::new();
    collect_reps(
        tuple.generators(),
        target,
        lo,
        &mut Vec::with_capacity(tuple.k()),
        target,
        &mut representations,
    );
    RepresentationList {
        tuple: tuple.clone(),
        target,
        positive_only,
        representations,
    }
}

/// Counts representations, giving up (and returning `cap`) as soon as `cap`
/// are found; enough to decide count = j versus count > j with cap = j + 1.
fn count_up_to(generators: &[u64], remaining: u64, lo: u64, cap: u64) -> u64 {
    if cap == 0 {
        return 0;
    }
    match generators {
        [] => unreachable!("tuples are never empty"),
        [last] => u64::from(remaining.is_multiple_of(*last) && remaining / last >= lo),
        [first, rest @ ..] => {
            let mut found = 0;
            let mut x = lo;
            while let Some(used) = first.checked_mul(x) {
                if used > remaining {
                    break;
                }
                found += count_up_to(rest, remaining - used, lo, cap - found);
                if found == cap {
                    break;
                }
                x += 1;
            }
            found
        }
    }
}

fn oracle_value(
    tuple: &GeneratorTuple,
    j: u32,
    scan_to: u64,
    kind: ValueKind,
) -> Result<JFrobeniusValue> {
    if tuple.gcd() != 1 {
        return Err(Error::GcdNotOne { gcd: tuple.gcd() });
    }
    if tuple.k() == 1 {
        // the tuple is (1): every n has exactly one representation of each
        // kind (shifted by one for the positive count), so no count has a
        // greatest witness
        return Ok(JFrobeniusValue::absent(kind, j));
    }
    let lo = match kind {
        ValueKind::G => 0,
        ValueKind::F => 1,
    };
    let window = tuple.min_generator();
    let cap = u64::from(j) + 1;
    let mut best = None;
    let mut run = 0;
    for n in 0..=scan_to {
        let c = count_up_to(tuple.generators(), n, lo, cap);
        if c > u64::from(j) {
            run += 1;
            if run == window {
                return Ok(match best {
                    Some(v) => JFrobeniusValue::present(kind, j, v),
                    None => JFrobeniusValue::absent(kind, j),
                });
            }
        } else {
            if c == u64::from(j) && n >= 1 {
                best = Some(n);
            }
            run = 0;
        }
    }
    Err(Error::ScanIncomplete { scanned: scan_to })
}

/// g_j by raw scan: the greatest n ≥ 1 in the window with exactly j
/// representations. Stops once min(a_i) consecutive integers exceed j, the
/// same soundness argument as the solver's but over independently computed
/// counts.
pub fn oracle_g_j(tuple: &GeneratorTuple, j: u32, scan_to: u64) -> Result<JFrobeniusValue> {
    oracle_value(tuple, j, scan_to, ValueKind::G)
}

/// f_j by raw scan over strictly positive representations.
pub fn oracle_f_j(tuple: &GeneratorTuple, j: u32, scan_to: u64) -> Result<JFrobeniusValue> {
    oracle_value(tuple, j, scan_to, ValueKind::F)
}

/// Result of checking that a present f_j is a positive combination of the
/// generators after the first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum WitnessOutcome {
    /// f_j together with positive coefficients over (a_2, …, a_k) reaching
    /// it; the witness vector is aligned with that trailing sub-tuple.
    Found { f_value: u64, witness: RepVector },
    /// f_j is absent; there is nothing to witness.
    NotApplicable,
    /// f_j is present but no positive combination of the trailing generators
    /// reaches it. This cannot happen for a correct f_j; seeing it means a
    /// bug upstream.
    Failed { f_value: u64 },
}

/// Checks the witness property on f_j as computed by this module's own scan:
/// whenever f_j exists, it is expressible as Σ a_i·x_i over i ≥ 2 with every
/// x_i ≥ 1 (peeling one copy of a_1 off a representation of f_j + a_1 must
/// land on a representation with first coordinate zero, else f_j would have
/// too many).
pub fn verify_lemma_witness(tuple: &GeneratorTuple, j: u32) -> Result<WitnessOutcome> {
    let scan_to = solver::default_hard_limit(tuple, j).saturating_add(tuple.sum());
    let f = oracle_f_j(tuple, j, scan_to)?;
    let Some(f_value) = f.value() else {
        return Ok(WitnessOutcome::NotApplicable);
    };
    let trailing = GeneratorTuple::new(tuple.generators()[1..].to_vec())
        .expect("k >= 2 whenever f_j is present");
    let reps = enumerate_representations(&trailing, f_value, true);
    Ok(match reps.representations.into_iter().next() {
        Some(witness) => WitnessOutcome::Found { f_value, witness },
        None => WitnessOutcome::Failed { f_value },
    })
}
