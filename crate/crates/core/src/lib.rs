//! Integer representations of the generalized symmetric group `G(m,1,n)`.
//!
//! * [`mixed_radix`]: the `G_{m,n}` number system with weights `m^i i!`.
//! * [`group`]: colored permutations, generators, word length over
//!   `{t_1, s_1, ..., s_{n-1}}`.
//! * [`subexceedant`]: the integer representation `I(w)` through
//!   subexceedant functions.
//! * [`statistics`]: the `B_n^(m)` root system, length `L`, inversion tables,
//!   rank/unrank, flag-major index and Poincare polynomials.
//! * [`verify`]: the invariant sweep behind `gsg verify`.
//!
//! Whole-group sweeps run on rayon when the `parallel` feature is enabled
//! (the default); see [`par`].

pub mod error;
pub mod group;
pub mod mixed_radix;
pub mod par;
pub mod statistics;
pub mod subexceedant;
pub mod text;
pub mod verify;

pub use error::{Error, Result};
pub use group::{ColoredValue, GroupElement};
pub use mixed_radix::MixedRadixNumber;
pub use num_bigint::BigUint;
pub use par::Execution;
pub use statistics::{InversionTable, QPolynomial, Root, Statistic};
pub use subexceedant::SubexceedantFunction;

/// Default cap on the number of group elements any enumeration may touch.
pub const DEFAULT_BUDGET: u64 = 1_000_000;
