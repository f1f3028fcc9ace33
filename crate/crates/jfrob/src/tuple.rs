//! Core domain types.
//!
//! A *generator tuple* (a_1, …, a_k) is an ordered list of positive integers.
//! A *representation* of n is a coordinate vector (x_1, …, x_k) of nonnegative
//! integers with Σ a_i·x_i = n; coordinates are positional, so duplicate
//! generator values contribute distinct representations. The j-Frobenius value
//! g_j is the greatest positive integer with exactly j representations, and
//! f_j is its analogue over strictly positive coordinates. Either may not
//! exist, which the literature encodes as the value 0; here absence is an
//! explicit state and 0 only appears when rendering that sentinel.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Ordered tuple of positive generators. Order is preserved and duplicates
/// are allowed; the gcd is computed once at construction. A gcd of 1 is not
/// required here (the solvers enforce it) so that reduction can talk about
/// sub-tuples with a common divisor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorTuple {
    generators: Vec<u64>,
    gcd: u64,
}

impl GeneratorTuple {
    /// Builds a tuple from raw values, rejecting empty input and any
    /// non-positive generator.
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyTuple);
        }
        if let Some(&bad) = values.iter().find(|&&v| v == 0) {
            return Err(Error::NonPositiveGenerator { value: bad });
        }
        let gcd = values.iter().fold(0u64, |acc, &v| num_integer::gcd(acc, v));
        Ok(Self { generators: values, gcd })
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Number of generators k.
    pub fn k(&self) -> usize {
        self.generators.len()
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    /// K = a_1 + … + a_k, the shift between f- and g-values.
    pub fn sum(&self) -> u64 {
        self.generators
            .iter()
            .try_fold(0u64, |acc, &v| acc.checked_add(v))
            .expect("generator sum overflows u64")
    }

    pub fn min_generator(&self) -> u64 {
        *self.generators.iter().min().expect("tuple is non-empty")
    }

    pub fn max_generator(&self) -> u64 {
        *self.generators.iter().max().expect("tuple is non-empty")
    }

    /// True when the smallest generator occurs exactly once.
    pub fn min_is_unique(&self) -> bool {
        let min = self.min_generator();
        self.generators.iter().filter(|&&v| v == min).count() == 1
    }

    pub fn contains(&self, value: u64) -> bool {
        self.generators.contains(&value)
    }

    /// Renders as comma-separated values, e.g. `3,5,8`.
    pub fn display_csv(&self) -> String {
        self.generators
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Renders as space-separated values, e.g. `3 5 8` (the quoted-field form
    /// used in CSV reports).
    pub fn display_spaced(&self) -> String {
        self.generators
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl std::fmt::Display for GeneratorTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.display_csv())
    }
}

impl Serialize for GeneratorTuple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.generators.serialize(serializer)
    }
}

/// One representation: coordinates aligned with the tuple, plus the value
/// they represent. Invariant: Σ a_i·x_i = target for the tuple it was built
/// against (checkable via [`RepVector::satisfies`]).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepVector {
    coefficients: Vec<u64>,
    target: u64,
}

impl RepVector {
    pub fn new(coefficients: Vec<u64>, target: u64) -> Self {
        Self { coefficients, target }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    /// All coordinates strictly positive.
    pub fn is_strictly_positive(&self) -> bool {
        self.coefficients.iter().all(|&x| x > 0)
    }

    /// Recomputes Σ a_i·x_i and compares against the stored target.
    pub fn satisfies(&self, tuple: &GeneratorTuple) -> bool {
        tuple.k() == self.coefficients.len()
            && tuple
                .generators()
                .iter()
                .zip(&self.coefficients)
                .try_fold(0u64, |acc, (&a, &x)| {
                    a.checked_mul(x).and_then(|p| acc.checked_add(p))
                })
                == Some(self.target)
    }
}

/// Which counting the value refers to: g-values count nonnegative
/// representations, f-values strictly positive ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValueKind {
    G,
    F,
}

impl ValueKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ValueKind::G => "g",
            ValueKind::F => "f",
        }
    }
}

impl Serialize for ValueKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Outcome of a g_j or f_j computation. `Present(v)` carries v ≥ 1; `Absent`
/// means no positive integer attains exactly j representations. The sentinel
/// rendering ([`JFrobeniusValue::sentinel`]) maps absence to 0 for
/// compatibility with the usual convention, and serialization emits both the
/// sentinel and an explicit `exists` flag so 0 stays unambiguous.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JFrobeniusValue {
    kind: ValueKind,
    j: u32,
    status: ValueStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueStatus {
    Absent,
    Present(u64),
}

impl JFrobeniusValue {
    pub fn present(kind: ValueKind, j: u32, value: u64) -> Self {
        debug_assert!(value >= 1, "present values are positive");
        Self { kind, j, status: ValueStatus::Present(value) }
    }

    pub fn absent(kind: ValueKind, j: u32) -> Self {
        Self { kind, j, status: ValueStatus::Absent }
    }

    pub fn kind(&self) -> ValueKind {
        self.kind
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn status(&self) -> ValueStatus {
        self.status
    }

    pub fn is_present(&self) -> bool {
        matches!(self.status, ValueStatus::Present(_))
    }

    pub fn value(&self) -> Option<u64> {
        match self.status {
            ValueStatus::Present(v) => Some(v),
            ValueStatus::Absent => None,
        }
    }

    /// The value with absence collapsed to 0.
    pub fn sentinel(&self) -> u64 {
        self.value().unwrap_or(0)
    }
}

impl Serialize for JFrobeniusValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("JFrobeniusValue", 4)?;
        s.serialize_field("kind", self.kind.as_str())?;
        s.serialize_field("j", &self.j)?;
        s.serialize_field("value", &self.sentinel())?;
        s.serialize_field("exists", &self.is_present())?;
        s.end()
    }
}
