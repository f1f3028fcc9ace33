//! Divisor reduction.
//!
//! When the generators other than one pivot a_p share a divisor d > 1, every
//! representation of n splits along x_p mod d: writing r = (a_p⁻¹·n) mod d,
//! the representations of n by (…, a_p, …, d·b_i, …) biject with the
//! representations of (n - a_p·r)/d by (…, a_p, …, b_i, …). Maximising over
//! the residue r gives an exact transport of "greatest integer with exactly j
//! representations": v ↦ d·v + (d-1)·a_p. The transport is exact on the
//! *extended* value (the greatest integer over all of ℤ with count j, where
//! negative integers have none), which is why the solver exposes that form:
//! clamping to positive integers before transporting would lose the cases
//! where the reduced tuple's last count-j integer is 0 or below. A value of
//! -1 (every nonnegative integer representable) transports to d - 1 times
//! the pivot minus d, the two-generator Frobenius number of (a_p, d), which
//! the clamped form cannot see at all.
//!
//! f-values transport without the offset: the shift K also scales through
//! the bijection, so f_j of the original is exactly d times f_j of the
//! reduced tuple, absence matching absence.
//!
//! Repeatedly taking the best pivot terminates (the generator product
//! shrinks every step). Two distinct pivots can never offer the same
//! divisor q > 1: jointly they would put q under every generator,
//! contradicting gcd 1. The tie-break below is therefore defensive only.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::solver;
use crate::tuple::{GeneratorTuple, JFrobeniusValue, ValueKind};

/// v ↦ scale·v + offset over the extended (integer) values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AffineMap {
    pub scale: u64,
    pub offset: u64,
}

impl AffineMap {
    pub fn identity() -> Self {
        Self { scale: 1, offset: 0 }
    }

    pub fn is_identity(&self) -> bool {
        self.scale == 1 && self.offset == 0
    }

    /// Applies to a positive value.
    pub fn apply(&self, v: u64) -> u64 {
        self.scale
            .checked_mul(v)
            .and_then(|p| p.checked_add(self.offset))
            .expect("transformed value fits u64")
    }

    /// Applies to an extended value; None (no integer attains the count)
    /// passes through.
    pub fn apply_extended(&self, v: Option<i64>) -> Option<i64> {
        v.map(|m| {
            (self.scale as i64)
                .checked_mul(m)
                .and_then(|p| p.checked_add(self.offset as i64))
                .expect("transformed value fits i64")
        })
    }

    /// The map v ↦ self(inner(v)).
    pub fn compose_inner(&self, inner: &AffineMap) -> AffineMap {
        AffineMap {
            scale: self.scale.checked_mul(inner.scale).expect("scale fits u64"),
            offset: self
                .scale
                .checked_mul(inner.offset)
                .and_then(|p| p.checked_add(self.offset))
                .expect("offset fits u64"),
        }
    }
}

/// One reduction: divide every generator except the pivot by their common
/// divisor. `transform` maps values of the reduced tuple back to the
/// original's.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionStep {
    pub pivot_index: usize,
    pub divisor: u64,
    pub reduced: GeneratorTuple,
    pub transform: AffineMap,
}

/// A maximal sequence of reduction steps and the composed transform mapping
/// the final tuple's values back to the original's. Empty steps mean the
/// tuple was already fully reduced; the transform is then the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionChain {
    pub original: GeneratorTuple,
    pub steps: Vec<ReductionStep>,
    pub final_tuple: GeneratorTuple,
    pub transform: AffineMap,
}

impl ReductionChain {
    pub fn is_trivial(&self) -> bool {
        self.steps.is_empty()
    }

    /// Composed scale alone, the f-value transport.
    pub fn scale(&self) -> u64 {
        self.transform.scale
    }
}

fn divisor_at(tuple: &GeneratorTuple, pivot: usize) -> u64 {
    tuple
        .generators()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pivot)
        .fold(0u64, |acc, (_, &v)| num_integer::gcd(acc, v))
}

/// The reduction at one pivot, or None when the other generators are
/// already coprime.
pub fn find_reduction(tuple: &GeneratorTuple, pivot: usize) -> Result<Option<ReductionStep>> {
    if tuple.k() < 2 {
        return Err(Error::KTooSmall { len: tuple.k() });
    }
    if tuple.gcd() != 1 {
        return Err(Error::GcdNotOne { gcd: tuple.gcd() });
    }
    if pivot >= tuple.k() {
        return Err(Error::PivotOutOfRange { pivot, len: tuple.k() });
    }
    let divisor = divisor_at(tuple, pivot);
    if divisor <= 1 {
        return Ok(None);
    }
    let reduced = GeneratorTuple::new(
        tuple
            .generators()
            .iter()
            .enumerate()
            .map(|(i, &v)| if i == pivot { v } else { v / divisor })
            .collect(),
    )
    .expect("reduced generators stay positive");
    let pivot_value = tuple.generators()[pivot];
    let transform = AffineMap {
        scale: divisor,
        offset: (divisor - 1)
            .checked_mul(pivot_value)
            .expect("offset fits u64"),
    };
    Ok(Some(ReductionStep { pivot_index: pivot, divisor, reduced, transform }))
}

/// Applies the best available step (largest divisor, then lowest pivot
/// index) until no pivot admits a divisor above 1.
pub fn reduce_fully(tuple: &GeneratorTuple) -> Result<ReductionChain> {
    if tuple.k() < 2 {
        return Err(Error::KTooSmall { len: tuple.k() });
    }
    if tuple.gcd() != 1 {
        return Err(Error::GcdNotOne { gcd: tuple.gcd() });
    }
    let mut steps = Vec::new();
    let mut transform = AffineMap::identity();
    let mut current = tuple.clone();
    loop {
        let best = (0..current.k())
            .map(|p| (divisor_at(&current, p), p))
            .filter(|&(d, _)| d > 1)
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let Some((_, pivot)) = best else { break };
        let step = find_reduction(&current, pivot)?.expect("divisor above 1 was found");
        transform = transform.compose_inner(&step.transform);
        current = step.reduced.clone();
        steps.push(step);
    }
    Ok(ReductionChain { original: tuple.clone(), steps, final_tuple: current, transform })
}

/// g_j through the reduction chain: solve on the fully-reduced tuple and
/// transport the extended value back, clamping to a positive integer only at
/// the very end. Agrees with the direct scan on every input.
pub fn g_j_reduced(tuple: &GeneratorTuple, j: u32) -> Result<JFrobeniusValue> {
    if tuple.k() < 2 {
        return solver::g_j(tuple, j);
    }
    let chain = reduce_fully(tuple)?;
    if chain.is_trivial() {
        return solver::g_j(tuple, j);
    }
    let hard = solver::default_hard_limit(&chain.final_tuple, j);
    let ext = solver::g_extended(&chain.final_tuple, j, hard)?;
    Ok(match chain.transform.apply_extended(ext[j as usize]) {
        Some(v) if v >= 1 => JFrobeniusValue::present(ValueKind::G, j, v as u64),
        _ => JFrobeniusValue::absent(ValueKind::G, j),
    })
}

/// f_j through the reduction chain: scale only, no offset.
pub fn f_j_reduced(tuple: &GeneratorTuple, j: u32) -> Result<JFrobeniusValue> {
    if tuple.k() < 2 {
        return solver::f_j(tuple, j);
    }
    let chain = reduce_fully(tuple)?;
    if chain.is_trivial() {
        return solver::f_j(tuple, j);
    }
    let reduced_f = solver::f_j(&chain.final_tuple, j)?;
    Ok(match reduced_f.value() {
        Some(v) => JFrobeniusValue::present(
            ValueKind::F,
            j,
            chain.scale().checked_mul(v).expect("scaled value fits u64"),
        ),
        None => JFrobeniusValue::absent(ValueKind::F, j),
    })
}

/// Converts a g-value to the f-value it implies under the shift relation
/// f_j = g_j + K. Mechanical: on tuples where the count-j witness sits at or
/// below 0 (possible only for j ≤ 1), the true f_j can be Present while g_j
/// is Absent, and the scan in [`solver::f_sequence`] is the authority.
pub fn f_from_g(g_value: JFrobeniusValue, tuple_sum: u64) -> JFrobeniusValue {
    debug_assert_eq!(g_value.kind(), ValueKind::G);
    match g_value.value() {
        Some(v) => JFrobeniusValue::present(
            ValueKind::F,
            g_value.j(),
            v.checked_add(tuple_sum).expect("shifted value fits u64"),
        ),
        None => JFrobeniusValue::absent(ValueKind::F, g_value.j()),
    }
}

/// Inverse of [`f_from_g`]; errors when the subtraction would leave nothing
/// positive.
pub fn g_from_f(f_value: JFrobeniusValue, tuple_sum: u64) -> Result<JFrobeniusValue> {
    debug_assert_eq!(f_value.kind(), ValueKind::F);
    match f_value.value() {
        Some(v) if v > tuple_sum => {
            Ok(JFrobeniusValue::present(ValueKind::G, f_value.j(), v - tuple_sum))
        }
        Some(v) => Err(Error::InvalidShift { value: v, offset: tuple_sum }),
        None => Ok(JFrobeniusValue::absent(ValueKind::G, f_value.j())),
    }
}

/// Closed form for tuples (a1, a2, m·a1·a2) with a1, a2 coprime:
/// g_j = (j+1)·a1·a2 - a1 - a2 for j ≤ m, no value at j = m+1, and
/// (m+2)·a1·a2 - a1 - a2 at j = m+2. A closed-form value below 1 (only
/// possible with a1 = 1 at small j) means the value is absent. Beyond
/// j = m+2 there is no closed form; the general solver answers.
pub fn corollary_triple(a1: u64, a2: u64, m: u64, j: u32) -> Result<JFrobeniusValue> {
    assert!(a1 >= 1 && a2 >= 1 && m >= 1, "a1, a2, m must be positive");
    if num_integer::gcd(a1, a2) != 1 {
        return Err(Error::NotCoprime { a1, a2 });
    }
    let jj = u64::from(j);
    if jj <= m || jj == m + 2 {
        let coefficient = if jj <= m { jj + 1 } else { jj };
        let value = i128::from(coefficient) * i128::from(a1) * i128::from(a2)
            - i128::from(a1)
            - i128::from(a2);
        return Ok(if value >= 1 {
            JFrobeniusValue::present(ValueKind::G, j, u64::try_from(value).expect("fits u64"))
        } else {
            JFrobeniusValue::absent(ValueKind::G, j)
        });
    }
    if jj == m + 1 {
        return Ok(JFrobeniusValue::absent(ValueKind::G, j));
    }
    let third = a1
        .checked_mul(a2)
        .and_then(|p| p.checked_mul(m))
        .expect("generator fits u64");
    let tuple = GeneratorTuple::new(vec![a1, a2, third]).expect("generators are positive");
    solver::g_j(&tuple, j)
}
