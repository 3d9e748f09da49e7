//! Direct summation of every series object, each with a tail estimate.

pub mod accel;
mod harmonic;
mod special;
mod zeta;

pub use harmonic::{mhs, mhss, pmhss, pmhss_exact, HarmonicStream, Scalar, StreamKind};
pub use special::{
    bell_complete_explicit, bell_complete_recurrence, bernoulli_numbers, composition_mzv_sum, gf_binomial,
    gf_binomial_h, gf_binomial_h_partial, gf_binomial_partial, hurwitz_mzv, mzbsv, mzbsv_hweighted,
};
pub use zeta::{amzsv, amzv, ky_param_series, kyzv, mpl, mzv_direct};
