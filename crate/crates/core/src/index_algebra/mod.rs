//! Exact combinatorics of MZV indices.

mod enumerate;
mod index;
mod products;

pub use enumerate::{c_partitions, compositions, indices_of_weight};
pub use index::{FormalIndexSum, FormalSignedSum, FormalSum, Index, SignedIndex};
pub use products::{
    admissible, circled_product, hoffman_dual, index_transform_mj, ky_expand, rev_slice_plus, star_expand,
    star_expand_signed, stuffle, stuffle_sums,
};

/// Exact rationals backing formal-sum coefficients and finite sums.
pub type Rational = num_rational::BigRational;
