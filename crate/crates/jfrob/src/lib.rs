//! Exact computation of generalized Frobenius numbers.
//!
//! For a tuple of positive generators (a_1, …, a_k) with gcd 1, the
//! denumerant d(n) counts the vectors (x_1, …, x_k) of nonnegative integers
//! with Σ a_i·x_i = n; coordinates are positional, so duplicated generator
//! values still give distinct representations. Because d(n) grows without
//! bound, for every j ≥ 0 there is a last positive integer with exactly j
//! representations, or no such integer at all. These j-Frobenius numbers g_j
//! generalize the classical Frobenius number g_0 (the largest non-
//! representable integer), and f_j is the analogue counting only strictly
//! positive coordinates.
//!
//! Everything is computed exactly in integer arithmetic:
//!
//! - [`denumerant`]: saturating count tables and arbitrary-precision counts.
//! - [`solver`]: g_j and f_j by direct scan with a provably sound stop rule.
//! - [`reduction`]: divisor reduction, which maps values of a smaller tuple
//!   affinely onto values of the original, plus a closed form for the
//!   (a_1, a_2, m·a_1·a_2) family.
//! - [`oracle`]: independent brute-force recomputation and witness checks.
//! - [`search`]: deterministic parallel sweeps for order inversions
//!   (g_{j+1} < g_j) and for counterexamples to the g_1 > g_0 conjecture.
//! - [`cli`]: the `jfrob` command-line tool over all of the above.
//!
//! ```
//! use jfrob::{solver, GeneratorTuple};
//!
//! let tuple = GeneratorTuple::new(vec![3, 5, 8]).unwrap();
//! assert_eq!(solver::g_j(&tuple, 0).unwrap().value(), Some(7));
//! assert_eq!(solver::g_j(&tuple, 14).unwrap().value(), Some(52));
//! assert_eq!(solver::g_j(&tuple, 15).unwrap().value(), Some(51));
//! ```

pub mod cli;
pub mod denumerant;
pub mod error;
pub mod oracle;
pub mod reduction;
pub mod search;
pub mod solver;
pub mod tuple;

pub use error::{Error, Result};
pub use tuple::{GeneratorTuple, JFrobeniusValue, RepVector, ValueKind, ValueStatus};
