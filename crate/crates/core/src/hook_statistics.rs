//! Symmetric statistics of squared hook lengths and their partition
//! averages.
//!
//! For a statistic `F` evaluated on the multiset of squared hooks of a
//! shape, [`phi`] computes the exact rational
//!
//! ```text
//! phi_n(F) = (1/n!) * sum_{lambda of n} f_lambda^2 * F({h_u^2})
//! ```
//!
//! Everything here is exact: statistics evaluate to big integers, the
//! averages to big rationals. Floating point is deliberately absent so
//! that identity checks are equalities.

use crate::partitions::{enumerate_partitions, factorial, Partition};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A symmetric statistic applied to the squared hook lengths of a shape.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum HookStatistic {
    /// `sum_u prod_{i=1..r} (h_u^2 - i^2)`; the empty product (r = 0)
    /// contributes 1 per cell, so `QProduct(0)` counts cells.
    QProduct(usize),
    /// `sum_u h_u^(2k)`; `PowerSum(0)` counts cells.
    PowerSum(usize),
    /// The elementary symmetric function `e_j` of the multiset `{h_u^2}`.
    Elementary(usize),
    /// `prod_i sum_u h_u^(2 mu_i)` for a partition `mu`; the empty `mu`
    /// gives the empty product 1.
    PowerSumVector(Partition),
}

impl HookStatistic {
    /// Evaluates the statistic on the multiset of squared hooks of `lambda`.
    ///
    /// All four families take integer values on integer inputs, so the
    /// result is a [`BigInt`] (negative values occur for `QProduct` when
    /// hooks are smaller than the shifts).
    pub fn eval(&self, lambda: &Partition) -> BigInt {
        self.eval_on_hooks(&lambda.hook_lengths())
    }

    /// Same as [`HookStatistic::eval`], on a precomputed hook list.
    pub fn eval_on_hooks(&self, hooks: &[usize]) -> BigInt {
        match self {
            HookStatistic::QProduct(r) => hooks
                .iter()
                .map(|&h| {
                    let h2 = BigInt::from(h * h);
                    (1..=*r).fold(BigInt::one(), |acc, i| acc * (&h2 - BigInt::from(i * i)))
                })
                .sum(),
            HookStatistic::PowerSum(k) => hooks
                .iter()
                .map(|&h| BigInt::from(h * h).pow(*k as u32))
                .sum(),
            HookStatistic::Elementary(j) => elementary_all(hooks, *j)
                .pop()
                .expect("elementary table is never empty"),
            HookStatistic::PowerSumVector(mu) => mu
                .parts()
                .iter()
                .map(|&m| {
                    hooks
                        .iter()
                        .map(|&h| BigInt::from(h * h).pow(m as u32))
                        .sum::<BigInt>()
                })
                .product(),
        }
    }
}

impl fmt::Display for HookStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HookStatistic::QProduct(r) => write!(f, "q{}", r),
            HookStatistic::PowerSum(k) => write!(f, "p{}", k),
            HookStatistic::Elementary(j) => write!(f, "e{}", j),
            HookStatistic::PowerSumVector(mu) => write!(f, "p{}", mu),
        }
    }
}

/// Elementary symmetric functions `e_0..e_j` of `{h^2 : h in hooks}`,
/// by the usual one-pass triangular recurrence.
fn elementary_all(hooks: &[usize], j: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); j + 1];
    e[0] = BigInt::one();
    for &h in hooks {
        let h2 = BigInt::from(h * h);
        for t in (1..=j.min(hooks.len())).rev() {
            let add = &e[t - 1] * &h2;
            e[t] += add;
        }
    }
    e
}

/// The f^2-weighted partition average of `statistic` at `n`, exactly.
///
/// Enumerates all partitions of `n`, so it is intended for moderate `n`
/// (enumeration up to n = 40 is comfortable).
pub fn phi(statistic: &HookStatistic, n: usize) -> BigRational {
    phi_batch(std::slice::from_ref(statistic), n)
        .pop()
        .expect("batch of one")
}

/// Evaluates several statistics in one pass over the partitions of `n`.
///
/// Hook lists and squared tableau counts are computed once per shape and
/// shared across all statistics.
pub fn phi_batch(statistics: &[HookStatistic], n: usize) -> Vec<BigRational> {
    let mut sums = vec![BigInt::zero(); statistics.len()];
    let n_factorial = factorial(n);
    for lambda in enumerate_partitions(n) {
        let hooks = lambda.hook_lengths();
        let f = syt_count_from_hooks(&n_factorial, &hooks);
        let weight = BigInt::from(&f * &f);
        for (sum, statistic) in sums.iter_mut().zip(statistics) {
            *sum += &weight * statistic.eval_on_hooks(&hooks);
        }
    }
    let denom = BigInt::from(n_factorial);
    sums.into_iter()
        .map(|s| BigRational::new(s, denom.clone()))
        .collect()
}

/// `phi_n(e_j)` for every `0 <= j <= n`, sharing one elementary-function
/// sweep per shape.
pub fn phi_elementary_all(n: usize) -> Vec<BigRational> {
    let mut sums = vec![BigInt::zero(); n + 1];
    let n_factorial = factorial(n);
    for lambda in enumerate_partitions(n) {
        let hooks = lambda.hook_lengths();
        let f = syt_count_from_hooks(&n_factorial, &hooks);
        let weight = BigInt::from(&f * &f);
        for (sum, e) in sums.iter_mut().zip(elementary_all(&hooks, n)) {
            *sum += &weight * e;
        }
    }
    let denom = BigInt::from(n_factorial);
    sums.into_iter()
        .map(|s| BigRational::new(s, denom.clone()))
        .collect()
}

fn syt_count_from_hooks(n_factorial: &BigUint, hooks: &[usize]) -> BigUint {
    let mut hook_product = BigUint::one();
    for &h in hooks {
        hook_product *= BigUint::from(h);
    }
    n_factorial / hook_product
}

/// Left-hand side of the Okada identity: `phi_n` of the shifted product
/// statistic `sum_u prod_{i=1..r} (h_u^2 - i^2)`.
pub fn okada_lhs(r: usize, n: usize) -> BigRational {
    phi(&HookStatistic::QProduct(r), n)
}

/// `R_k(n)`: `phi_n` of the hook power sum `sum_u h_u^(2k)`.
pub fn r_poly_value(k: usize, n: usize) -> BigRational {
    phi(&HookStatistic::PowerSum(k), n)
}

/// A polynomial in one formal variable with exact rational coefficients,
/// kept canonical (no trailing zero coefficients).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    /// Builds from coefficients in ascending degree order, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of the given power (zero beyond the degree).
    pub fn coeff(&self, power: usize) -> BigRational {
        self.coeffs.get(power).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluation at an integer point.
    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    pub fn add(&self, other: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect();
        RationalPolynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        RationalPolynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, factor: &BigRational) -> RationalPolynomial {
        RationalPolynomial::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn mul(&self, other: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || other.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPolynomial::from_coeffs(coeffs)
    }

    /// Multiplies by the monic linear factor `(x - root)`.
    pub fn mul_linear(&self, root: &BigRational) -> RationalPolynomial {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] += c;
            coeffs[i] -= c * root;
        }
        RationalPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{}", c)?;
                first = false;
            } else if c.is_negative() {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {}", c)?;
            }
            match i {
                0 => {}
                1 => write!(f, "*n")?,
                _ => write!(f, "*n^{}", i)?,
            }
        }
        Ok(())
    }
}

/// Newton divided-difference interpolation through exact points.
///
/// Returns the unique polynomial of degree below the number of points
/// passing through all of them. Panics on duplicate abscissae or an
/// empty point list.
pub fn interpolate(points: &[(i64, BigRational)]) -> RationalPolynomial {
    assert!(!points.is_empty(), "interpolation needs at least one point");
    for (i, (x, _)) in points.iter().enumerate() {
        for (y, _) in &points[..i] {
            assert!(x != y, "duplicate abscissa {} in interpolation", x);
        }
    }
    // Divided differences: coeffs[j] becomes f[x_0, ..., x_j].
    let xs: Vec<BigRational> = points
        .iter()
        .map(|(x, _)| BigRational::from_integer(BigInt::from(*x)))
        .collect();
    let mut coeffs: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..coeffs.len() {
        for i in (j..coeffs.len()).rev() {
            let num = &coeffs[i] - &coeffs[i - 1];
            let den = &xs[i] - &xs[i - j];
            coeffs[i] = num / den;
        }
    }
    // Expand the Newton form into the monomial basis.
    let mut result = RationalPolynomial::zero();
    let mut basis = RationalPolynomial::from_coeffs(vec![BigRational::one()]);
    for (j, c) in coeffs.iter().enumerate() {
        result = result.add(&basis.scale(c));
        if j + 1 < coeffs.len() {
            basis = basis.mul_linear(&xs[j]);
        }
    }
    result
}

/// Outcome of finite-difference degree detection.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DegreeDetection {
    Degree(usize),
    /// Too few points to support a verdict, or the data is all zero.
    Inconclusive,
}

impl fmt::Display for DegreeDetection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeDetection::Degree(d) => write!(f, "{}", d),
            DegreeDetection::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Detects the polynomial degree of values sampled at consecutive integer
/// arguments, by forward differences.
///
/// Reports `Degree(d)` where `d` is the highest order whose difference row
/// is nonzero, and only when at least two higher-order differences are
/// available to witness the vanishing (that is, when there are at least
/// `d + 3` values). Anything less, or all-zero input, is `Inconclusive`:
/// finite data cannot certify a degree, it can only corroborate one under
/// the standing assumption that the sequence is polynomial. Panics on
/// empty input.
pub fn detect_degree(values: &[BigRational]) -> DegreeDetection {
    assert!(!values.is_empty(), "degree detection needs values");
    let mut row: Vec<BigRational> = values.to_vec();
    let mut highest_nonzero: Option<usize> = None;
    let mut order = 0;
    loop {
        if row.iter().any(|v| !v.is_zero()) {
            highest_nonzero = Some(order);
        }
        if row.len() <= 1 {
            break;
        }
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        order += 1;
    }
    match highest_nonzero {
        Some(d) if values.len() >= d + 3 => DegreeDetection::Degree(d),
        _ => DegreeDetection::Inconclusive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use proptest::prelude::*;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn ratq(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn eval_qproduct_examples() {
        // hooks of (2) are {2, 1}: (4-1) + (1-1) = 3
        assert_eq!(
            HookStatistic::QProduct(1).eval(&part(&[2])),
            BigInt::from(3)
        );
        // q_r annihilates every shape with at most r cells
        for r in 1..=6usize {
            for n in 1..=r {
                for lambda in enumerate_partitions(n) {
                    assert!(HookStatistic::QProduct(r).eval(&lambda).is_zero());
                }
            }
        }
        assert_eq!(
            HookStatistic::QProduct(0).eval(&part(&[3, 1])),
            BigInt::from(4)
        );
    }

    #[test]
    fn eval_power_sum_examples() {
        // hooks of (2,1) are {3, 1, 1}: 9 + 1 + 1
        assert_eq!(
            HookStatistic::PowerSum(1).eval(&part(&[2, 1])),
            BigInt::from(11)
        );
        assert_eq!(
            HookStatistic::PowerSum(0).eval(&part(&[2, 1])),
            BigInt::from(3)
        );
    }

    #[test]
    fn eval_conventions_on_the_empty_partition() {
        let empty = Partition::empty();
        assert_eq!(HookStatistic::Elementary(0).eval(&empty), BigInt::one());
        assert_eq!(HookStatistic::Elementary(2).eval(&empty), BigInt::zero());
        assert_eq!(HookStatistic::PowerSum(1).eval(&empty), BigInt::zero());
        assert_eq!(HookStatistic::QProduct(3).eval(&empty), BigInt::zero());
        assert_eq!(
            HookStatistic::PowerSumVector(Partition::empty()).eval(&empty),
            BigInt::one()
        );
        assert_eq!(
            HookStatistic::PowerSumVector(part(&[2, 1])).eval(&empty),
            BigInt::zero()
        );
    }

    #[test]
    fn phi_brute_force_spot_values() {
        assert_eq!(phi(&HookStatistic::PowerSum(1), 3), rat(12));
        assert_eq!(phi(&HookStatistic::PowerSum(2), 2), rat(17));
        assert_eq!(phi(&HookStatistic::Elementary(2), 2), rat(4));
        assert_eq!(phi(&HookStatistic::QProduct(2), 3), rat(40));
    }

    #[test]
    fn phi_at_zero_is_the_empty_evaluation() {
        assert_eq!(phi(&HookStatistic::Elementary(0), 0), rat(1));
        assert_eq!(phi(&HookStatistic::PowerSum(2), 0), rat(0));
    }

    #[test]
    fn okada_lhs_examples() {
        assert_eq!(okada_lhs(1, 2), rat(3));
        assert_eq!(okada_lhs(2, 2), rat(0));
        for n in 0..=8 {
            assert_eq!(okada_lhs(0, n), rat(n as i64), "P_0(n) = n");
        }
    }

    #[test]
    fn r_poly_examples() {
        assert_eq!(r_poly_value(1, 3), rat(12));
        assert_eq!(r_poly_value(2, 3), rat(88));
        for n in 0..=8 {
            assert_eq!(r_poly_value(0, n), rat(n as i64), "R_0(n) = n");
        }
    }

    #[test]
    fn elementary_one_equals_power_sum_one() {
        for n in 0..=10 {
            assert_eq!(
                phi(&HookStatistic::Elementary(1), n),
                phi(&HookStatistic::PowerSum(1), n),
                "e_1 = p_1 failed at n = {}",
                n
            );
        }
    }

    #[test]
    fn single_part_vector_degenerates_to_power_sum() {
        for n in 0..=10 {
            for k in 1..=3 {
                assert_eq!(
                    phi(&HookStatistic::PowerSumVector(part(&[k])), n),
                    phi(&HookStatistic::PowerSum(k), n)
                );
            }
        }
    }

    #[test]
    fn phi_batch_matches_individual_calls() {
        let stats = vec![
            HookStatistic::QProduct(2),
            HookStatistic::PowerSum(3),
            HookStatistic::Elementary(2),
            HookStatistic::PowerSumVector(part(&[2, 1])),
        ];
        for n in 0..=7 {
            let batch = phi_batch(&stats, n);
            for (s, v) in stats.iter().zip(&batch) {
                assert_eq!(v, &phi(s, n));
            }
        }
    }

    #[test]
    fn phi_elementary_all_matches_individual_calls() {
        for n in 0..=8 {
            let all = phi_elementary_all(n);
            assert_eq!(all.len(), n + 1);
            for (j, v) in all.iter().enumerate() {
                assert_eq!(v, &phi(&HookStatistic::Elementary(j), n));
            }
        }
    }

    #[test]
    fn interpolate_r1_values() {
        // R_1 at n = 1..4; the interpolant is (3n^2 - n)/2.
        let pts = vec![(1, rat(1)), (2, rat(5)), (3, rat(12)), (4, rat(22))];
        let poly = interpolate(&pts);
        assert_eq!(
            poly,
            RationalPolynomial::from_coeffs(vec![rat(0), ratq(-1, 2), ratq(3, 2)])
        );
        for (x, y) in &pts {
            assert_eq!(poly.eval_int(*x), *y);
        }
    }

    #[test]
    fn interpolate_single_zero_point_gives_zero_polynomial() {
        let poly = interpolate(&[(0, rat(0))]);
        assert!(poly.is_zero());
        assert_eq!(poly.degree(), None);
    }

    #[test]
    fn interpolate_p1_values() {
        // P_1 at n = 1, 2, 3 is 0, 3, 9 (brute force); interpolant (3/2)n(n-1).
        for n in 1..=3i64 {
            assert_eq!(
                okada_lhs(1, n as usize),
                ratq(3, 2) * rat(n) * rat(n - 1),
                "P_1({}) oracle",
                n
            );
        }
        let pts = vec![(1, rat(0)), (2, rat(3)), (3, rat(9))];
        let poly = interpolate(&pts);
        assert_eq!(
            poly,
            RationalPolynomial::from_coeffs(vec![rat(0), ratq(-3, 2), ratq(3, 2)])
        );
    }

    #[test]
    #[should_panic(expected = "duplicate abscissa")]
    fn interpolate_rejects_duplicate_abscissae() {
        interpolate(&[(1, rat(1)), (1, rat(2))]);
    }

    #[test]
    fn detect_degree_of_r1_values() {
        let values: Vec<_> = [1, 5, 12, 22, 35, 51].iter().map(|&v| rat(v)).collect();
        assert_eq!(detect_degree(&values), DegreeDetection::Degree(2));
    }

    #[test]
    fn detect_degree_of_constant_values() {
        let values = vec![rat(7); 4];
        assert_eq!(detect_degree(&values), DegreeDetection::Degree(0));
    }

    #[test]
    fn detect_degree_of_p2_values() {
        let values: Vec<_> = (1..=7).map(|n| okada_lhs(2, n)).collect();
        assert_eq!(detect_degree(&values), DegreeDetection::Degree(3));
    }

    #[test]
    fn detect_degree_needs_two_vanishing_differences() {
        // Quadratic sampled at 4 points: only one second..third difference
        // pair available, so no verdict.
        let quad: Vec<_> = (1..=4).map(|n| rat(n * n)).collect();
        assert_eq!(detect_degree(&quad), DegreeDetection::Inconclusive);
        let quad5: Vec<_> = (1..=5).map(|n| rat(n * n)).collect();
        assert_eq!(detect_degree(&quad5), DegreeDetection::Degree(2));
    }

    #[test]
    fn detect_degree_all_zero_is_inconclusive() {
        assert_eq!(
            detect_degree(&vec![rat(0); 6]),
            DegreeDetection::Inconclusive
        );
    }

    #[test]
    fn leading_coefficient_of_interpolated_okada_values() {
        // Through r+2 consecutive points beyond the roots, the interpolant
        // recovers degree r+1 with the closed-form leading coefficient.
        for r in 0..=4usize {
            let pts: Vec<(i64, BigRational)> = ((r + 1)..=(2 * r + 2))
                .map(|n| (n as i64, okada_lhs(r, n)))
                .collect();
            let poly = interpolate(&pts);
            assert_eq!(poly.degree(), Some(r + 1));
            let c = crate::closed_forms::okada_leading_coefficient(r);
            assert_eq!(poly.leading_coefficient(), Some(&c), "r = {}", r);
        }
    }

    proptest! {
        #[test]
        fn prop_interpolation_reproduces_polynomials(
            coeffs in proptest::collection::vec(-20i64..=20, 1..=6),
            offset in -5i64..=5,
        ) {
            let poly = RationalPolynomial::from_coeffs(
                coeffs.iter().map(|&c| rat(c)).collect(),
            );
            let m = coeffs.len() + 1;
            let pts: Vec<(i64, BigRational)> = (0..m as i64)
                .map(|i| (offset + i, poly.eval_int(offset + i)))
                .collect();
            prop_assert_eq!(interpolate(&pts), poly);
        }

        #[test]
        fn prop_detect_degree_recovers_true_degree(
            low in proptest::collection::vec(-9i64..=9, 0..=4),
            lead in prop_oneof![-9i64..=-1, 1i64..=9],
            extra in 0usize..=3,
        ) {
            let mut coeffs: Vec<BigRational> = low.iter().map(|&c| rat(c)).collect();
            coeffs.push(rat(lead));
            let poly = RationalPolynomial::from_coeffs(coeffs);
            let d = poly.degree().unwrap();
            let m = d + 3 + extra;
            let values: Vec<_> = (0..m as i64).map(|x| poly.eval_int(x)).collect();
            prop_assert_eq!(detect_degree(&values), DegreeDetection::Degree(d));
        }
    }
}
