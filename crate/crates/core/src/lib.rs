//! Exact-arithmetic library for hook-length statistics of integer partitions.
//!
//! The central object is the weighted average
//!
//! ```text
//! phi_n(F) = (1/n!) * sum over partitions lambda of n of
//!            f_lambda^2 * F(h_u^2 : u in lambda)
//! ```
//!
//! where `f_lambda` counts standard Young tableaux of shape `lambda` and
//! `h_u` is the hook length of cell `u`. All computations are carried out
//! in arbitrary-precision integer/rational arithmetic, so identity checks
//! are exact equalities rather than floating-point comparisons.
//!
//! Module map:
//! - [`partitions`]: partition enumeration, hook lengths, tableau counts
//! - [`hook_statistics`]: symmetric statistics on squared hooks, `phi_n`,
//!   exact interpolation and finite-difference degree detection
//! - [`closed_forms`]: closed-form right-hand sides (Okada product formula,
//!   central factorial numbers, divisor sums, elementary-statistic formulas)
//! - [`rsk`]: the RSK correspondence, longest increasing subsequences,
//!   exhaustive permutation sums and a seeded Monte Carlo moment estimator
//! - [`series`]: truncated bivariate formal series over exact rationals and
//!   the generating-function identities relating all of the above

pub mod closed_forms;
pub mod hook_statistics;
pub mod partitions;
pub mod rsk;
pub mod series;

pub use closed_forms::{
    central_factorial, divisor_data, expand_power_in_q_basis, lemma1_value,
    okada_leading_coefficient, okada_rhs, phi_ej_corrected, phi_ej_paper, phi_pk_closed,
    q_basis_polynomial, sigma_over_m, CentralFactorialTable, DivisorData,
};
pub use hook_statistics::{
    detect_degree, interpolate, okada_lhs, phi, phi_batch, phi_elementary_all, r_poly_value,
    DegreeDetection, HookStatistic, RationalPolynomial,
};
pub use partitions::{enumerate_partitions, syt_count_oracle, Cell, Partition};
pub use rsk::{
    exact_hookpower_sum, exact_is_power_sum, for_each_permutation, longest_increasing,
    monte_carlo_is_moment, rsk, rsk_inverse, rsk_shape, MomentEstimate, Permutation,
    StandardTableau, TableauPair,
};
pub use series::{
    no_lhs_direct, no_rhs_product, phi_e_generating_lhs, phi_e_generating_rhs, series_equal,
    EjVariant, SeriesComparison, TPolynomial, TruncatedBivariateSeries,
};
