//! Exact combinatorial machinery for studying how much information
//! computations create or discard.
//!
//! The integer side of every routine is generic over [`Natural`], implemented
//! for `u64`, `u128` and [`num_bigint::BigUint`]. Information values are
//! binary logarithms carried as `f64` ([`Bits`]).

pub mod calculus;
pub mod cantor;
pub mod combinadics;
pub mod elastic;
mod error;
pub mod nat;
pub mod setcodec;
pub mod sorted;
pub mod verify;

pub use calculus::{
    delta_add, delta_mul, delta_spectrum, tree_delta, CompTree, DeltaMode, Expr, Op,
};
pub use cantor::{asymptote, delta_pi, info, pair, unpair, Asymptote, Cell, LimitError};
pub use combinadics::{
    bell, binom, catalan, computation_count, sigma_decode, sigma_encode, stirling2, FinSet,
    OperatorLaws,
};
pub use elastic::{
    chain_backward, chain_forward, elastic_apply, elastic_invert, surface_grid, ElasticSpec,
};
pub use error::Error;
pub use nat::{Bits, Natural};
pub use setcodec::{enumerate_sets, set_decode, set_encode, CodecMode};
pub use sorted::{
    column_height, nth_subset_with_sum, phi_sorted, subset_sum_decide, theta_alg1, theta_bucketed,
    zeta, SortKey, SortedCell,
};

/// Unbounded natural number.
pub type Nat = num_bigint::BigUint;
/// Cell of the plane with unbounded coordinates.
pub type NatCell = Cell<Nat>;
/// Finite set of unbounded naturals.
pub type NatSet = FinSet<Nat>;
/// Cell with machine-word coordinates, for desk-scale enumeration.
pub type Cell64 = Cell<u64>;
/// Finite set of machine words.
pub type Set64 = FinSet<u64>;
