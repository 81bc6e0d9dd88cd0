//! Truncated bivariate formal series over exact rationals, and the two
//! generating-function identities for hook products.
//!
//! A series is stored as a vector of inner-variable coefficients indexed
//! by the outer degree, truncated at a fixed order. Inner coefficients are
//! sparse Laurent polynomials, because intermediate factors like
//! `(1 - 1/t)^u` genuinely need negative exponents even though every
//! finished coefficient is an honest polynomial.

use crate::closed_forms::{divisor_data, sigma_over_m};
use crate::hook_statistics::phi_elementary_all;
use crate::partitions::{enumerate_partitions, factorial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A sparse Laurent polynomial in one inner variable with exact rational
/// coefficients. No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TPolynomial {
    terms: BTreeMap<i64, BigRational>,
}

impl TPolynomial {
    pub fn zero() -> Self {
        TPolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        TPolynomial::monomial(0, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        TPolynomial::monomial(0, c)
    }

    pub fn monomial(exponent: i64, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        TPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> BigRational {
        self.terms
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no negative exponent is present (the zero polynomial
    /// counts as one).
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    fn accumulate(terms: &mut BTreeMap<i64, BigRational>, exponent: i64, value: BigRational) {
        if value.is_zero() {
            return;
        }
        let entry = terms.entry(exponent).or_insert_with(BigRational::zero);
        *entry += value;
        if entry.is_zero() {
            terms.remove(&exponent);
        }
    }

    pub fn add(&self, other: &TPolynomial) -> TPolynomial {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::accumulate(&mut terms, *e, c.clone());
        }
        TPolynomial { terms }
    }

    pub fn sub(&self, other: &TPolynomial) -> TPolynomial {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::accumulate(&mut terms, *e, -c.clone());
        }
        TPolynomial { terms }
    }

    pub fn neg(&self) -> TPolynomial {
        TPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> TPolynomial {
        if factor.is_zero() {
            return TPolynomial::zero();
        }
        TPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &TPolynomial) -> TPolynomial {
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                Self::accumulate(&mut terms, ea + eb, ca * cb);
            }
        }
        TPolynomial { terms }
    }

    /// Renders with the given variable symbol, ascending by exponent.
    pub fn format_with(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            match (*e, magnitude.is_one()) {
                (0, _) => out.push_str(&magnitude.to_string()),
                (1, true) => out.push_str(var),
                (1, false) => {
                    out.push_str(&magnitude.to_string());
                    out.push('*');
                    out.push_str(var);
                }
                (_, true) => out.push_str(&format!("{}^{}", var, e)),
                (_, false) => out.push_str(&format!("{}*{}^{}", magnitude, var, e)),
            }
        }
        out
    }
}

impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("z"))
    }
}

/// A formal series in an outer variable, truncated at a fixed order, whose
/// coefficients are [`TPolynomial`]s in an inner variable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedBivariateSeries {
    order: usize,
    coeffs: Vec<TPolynomial>,
}

impl TruncatedBivariateSeries {
    /// The zero series truncated at `order`.
    pub fn new(order: usize) -> Self {
        TruncatedBivariateSeries {
            order,
            coeffs: vec![TPolynomial::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = TruncatedBivariateSeries::new(order);
        s.coeffs[0] = TPolynomial::one();
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, degree: usize) -> &TPolynomial {
        &self.coeffs[degree]
    }

    pub fn set_coeff(&mut self, degree: usize, poly: TPolynomial) {
        self.coeffs[degree] = poly;
    }

    pub fn add(&self, other: &TruncatedBivariateSeries) -> TruncatedBivariateSeries {
        assert_eq!(self.order, other.order, "orders must match");
        TruncatedBivariateSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// Product truncated at the common order.
    pub fn mul(&self, other: &TruncatedBivariateSeries) -> TruncatedBivariateSeries {
        assert_eq!(self.order, other.order, "orders must match");
        let mut result = TruncatedBivariateSeries::new(self.order);
        for i in 0..=self.order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(self.order - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let product = self.coeffs[i].mul(&other.coeffs[j]);
                result.coeffs[i + j] = result.coeffs[i + j].add(&product);
            }
        }
        result
    }

    /// Multiplies every coefficient by one inner polynomial.
    pub fn mul_inner(&self, poly: &TPolynomial) -> TruncatedBivariateSeries {
        TruncatedBivariateSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.mul(poly)).collect(),
        }
    }

    /// The exponential of a series with zero constant term, from the
    /// derivative recurrence `n E_n = sum_{j=1..n} j A_j E_{n-j}`.
    pub fn exp(&self) -> TruncatedBivariateSeries {
        assert!(
            self.coeffs[0].is_zero(),
            "exponential needs a zero constant term"
        );
        let mut result = TruncatedBivariateSeries::new(self.order);
        result.coeffs[0] = TPolynomial::one();
        for n in 1..=self.order {
            let mut acc = TPolynomial::zero();
            for j in 1..=n {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                let weighted = self.coeffs[j].scale(&BigRational::from_integer(BigInt::from(j)));
                acc = acc.add(&weighted.mul(&result.coeffs[n - j]));
            }
            result.coeffs[n] = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(n)));
        }
        result
    }
}

/// Outcome of comparing two series coefficient by coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SeriesComparison {
    Equal,
    /// The first differing coefficient in lexicographic
    /// (outer degree, inner exponent) order.
    Mismatch {
        outer_degree: usize,
        inner_exponent: i64,
        left: BigRational,
        right: BigRational,
    },
}

/// Compares two series of the same order, reporting the first mismatch.
/// Panics when the orders differ.
pub fn series_equal(
    left: &TruncatedBivariateSeries,
    right: &TruncatedBivariateSeries,
) -> SeriesComparison {
    assert_eq!(
        left.order(),
        right.order(),
        "comparison needs equal truncation orders"
    );
    for n in 0..=left.order() {
        let l = left.coeff(n);
        let r = right.coeff(n);
        let exponents: BTreeSet<i64> = l.exponents().chain(r.exponents()).collect();
        for e in exponents {
            let lc = l.coeff(e);
            let rc = r.coeff(e);
            if lc != rc {
                return SeriesComparison::Mismatch {
                    outer_degree: n,
                    inner_exponent: e,
                    left: lc,
                    right: rc,
                };
            }
        }
    }
    SeriesComparison::Equal
}

/// Left side of the hook product identity, expanded shape by shape:
/// the coefficient of `x^n` is
/// `sum over lambda of n of (f_lambda / n!)^2 prod_u (h_u^2 - z)`.
pub fn no_lhs_direct(order: usize) -> TruncatedBivariateSeries {
    let mut series = TruncatedBivariateSeries::new(order);
    for n in 0..=order {
        let n_factorial = BigInt::from(factorial(n));
        let mut poly = TPolynomial::zero();
        for lambda in enumerate_partitions(n) {
            let f = BigInt::from(lambda.syt_count());
            let weight = BigRational::new(&f * &f, &n_factorial * &n_factorial);
            let mut product = TPolynomial::one();
            for h in lambda.hook_lengths() {
                let factor = TPolynomial::constant(BigRational::from_integer(BigInt::from(
                    (h * h) as u64,
                )))
                .sub(&TPolynomial::monomial(1, BigRational::one()));
                product = product.mul(&factor);
            }
            poly = poly.add(&product.scale(&weight));
        }
        series.set_coeff(n, poly);
    }
    series
}

/// Right side of the hook product identity, `prod_k (1 - x^k)^(z-1)`,
/// expanded as the exponential of its literal logarithm
/// `(1 - z) sum_{k, i with ki <= order} x^(ki) / i`.
pub fn no_rhs_product(order: usize) -> TruncatedBivariateSeries {
    let one_minus_z = TPolynomial::one().sub(&TPolynomial::monomial(1, BigRational::one()));
    let mut log = TruncatedBivariateSeries::new(order);
    for k in 1..=order {
        for i in 1..=(order / k) {
            let updated = log
                .coeff(k * i)
                .add(&TPolynomial::constant(BigRational::new(
                    BigInt::one(),
                    BigInt::from(i),
                )));
            log.set_coeff(k * i, updated);
        }
    }
    log.mul_inner(&one_minus_z).exp()
}

/// Which logarithm expansion the product side of the elementary-statistic
/// identity uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EjVariant {
    /// `-log(1 - w) = sum w^i / i`, giving weight `sigma(m)/m`.
    Corrected,
    /// The published expansion, which drops the `1/i` and weights by the
    /// divisor count `tau(m)`; wrong from the `y^2 t` coefficient on.
    AsPrinted,
}

/// Left side of the elementary-statistic identity: the coefficient of
/// `y^n` is `(1/n!) sum_j (-1)^(n-j) phi_n(e_j) t^j`, computed from the
/// partition averages.
pub fn phi_e_generating_lhs(order: usize) -> TruncatedBivariateSeries {
    let mut series = TruncatedBivariateSeries::new(order);
    for n in 0..=order {
        let n_factorial = BigRational::from_integer(BigInt::from(factorial(n)));
        let mut poly = TPolynomial::zero();
        for (j, value) in phi_elementary_all(n).iter().enumerate() {
            let signed = if (n - j) % 2 == 0 {
                value.clone()
            } else {
                -value.clone()
            };
            poly = poly.add(&TPolynomial::monomial(j as i64, signed / n_factorial.clone()));
        }
        series.set_coeff(n, poly);
    }
    series
}

/// Right side of the elementary-statistic identity,
/// `prod_k (1 - (yt)^k)^(1/t - 1)`, expanded through the composition sum
/// `sum_u (1 - 1/t)^u / u! * (sum_m weight(m) (yt)^m)^u`.
///
/// The factors `(1 - 1/t)^u` carry negative exponents; homogeneity of the
/// weight series in `yt` cancels them all, which is asserted before
/// returning.
pub fn phi_e_generating_rhs(order: usize, variant: EjVariant) -> TruncatedBivariateSeries {
    let weight = |m: usize| -> BigRational {
        match variant {
            EjVariant::Corrected => sigma_over_m(m as u64),
            EjVariant::AsPrinted => {
                BigRational::from_integer(BigInt::from(divisor_data(m as u64).count))
            }
        }
    };
    let mut base = TruncatedBivariateSeries::new(order);
    for m in 1..=order {
        base.set_coeff(m, TPolynomial::monomial(m as i64, weight(m)));
    }
    let one_minus_inv_t = TPolynomial::one().sub(&TPolynomial::monomial(-1, BigRational::one()));
    let mut total = TruncatedBivariateSeries::new(order);
    let mut power = TruncatedBivariateSeries::one(order);
    let mut laurent = TPolynomial::one();
    let mut u_factorial = BigRational::one();
    for u in 0..=order {
        if u > 0 {
            power = power.mul(&base);
            laurent = laurent.mul(&one_minus_inv_t);
            u_factorial *= BigRational::from_integer(BigInt::from(u));
        }
        let term = power.mul_inner(&laurent.scale(&u_factorial.recip()));
        total = total.add(&term);
    }
    for n in 0..=order {
        let poly = total.coeff(n);
        assert!(
            poly.is_polynomial(),
            "negative inner exponents must cancel at outer degree {}",
            n
        );
        assert!(
            poly.max_exp().is_none_or(|e| e <= n as i64),
            "inner degree exceeds outer degree {}",
            n
        );
    }
    total
}
