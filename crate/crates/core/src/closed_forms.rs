//! Closed forms for the partition averages in [`crate::hook_statistics`]:
//! the product formula for the shifted statistic, its special values, the
//! central-factorial expansion of hook power sums, and two explicit
//! expressions for the elementary statistic.
//!
//! Every function here is a formula evaluation, with no sum over
//! partitions, so each one serves as an independent counterpart to the
//! brute-force averages.

use crate::hook_statistics::RationalPolynomial;
use crate::partitions::factorial;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

fn rational(value: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(value.into())
}

/// Leading coefficient of the product formula:
/// `C(2r, r) * C(2r+2, r+1) / (2 (r+1)^2)`.
pub fn okada_leading_coefficient(r: usize) -> BigRational {
    let numer = binomial(2 * r, r) * binomial(2 * r + 2, r + 1);
    let denom = BigUint::from(2 * (r + 1) * (r + 1));
    BigRational::new(numer.into(), denom.into())
}

/// The product formula for the shifted statistic:
/// `okada_leading_coefficient(r) * n (n-1) ... (n-r)`.
///
/// This is the closed-form side of the identity whose brute-force side is
/// [`crate::hook_statistics::okada_lhs`].
pub fn okada_rhs(r: usize, n: usize) -> BigRational {
    let falling = (0..=r)
        .map(|j| BigInt::from(n as i64) - BigInt::from(j as i64))
        .product::<BigInt>();
    okada_leading_coefficient(r) * rational(falling)
}

/// Special value `P_r(r+1)` or `P_r(r+2)`: the leading coefficient times
/// `(r+1)!` or `(r+2)!`. Panics unless `which` is `r + 1` or `r + 2`.
pub fn lemma1_value(r: usize, which: usize) -> BigRational {
    assert!(
        which == r + 1 || which == r + 2,
        "special values exist at r + 1 and r + 2 only, got {} for r = {}",
        which,
        r
    );
    okada_leading_coefficient(r) * rational(BigInt::from(factorial(which)))
}

/// Triangle of central factorial numbers `T(n, k)` for
/// `T(n, k) = k^2 T(n-1, k) + T(n-1, k-1)`, `T(0, 0) = 1`, and zero
/// boundary (`T(n, 0) = 0` for `n > 0`, `T(0, k) = 0` for `k > 0`).
pub struct CentralFactorialTable {
    rows: Vec<Vec<BigInt>>,
}

impl CentralFactorialTable {
    /// Builds rows `0..=max_n`.
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let at = |k: usize| prev.get(k).cloned().unwrap_or_else(BigInt::zero);
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigInt::zero());
            for k in 1..=n {
                row.push(BigInt::from((k * k) as u64) * at(k) + at(k - 1));
            }
            rows.push(row);
        }
        CentralFactorialTable { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `T(n, k)`; zero when `k > n`. Panics when `n` exceeds the table.
    pub fn value(&self, n: usize, k: usize) -> BigInt {
        assert!(
            n <= self.max_n(),
            "row {} beyond table built to {}",
            n,
            self.max_n()
        );
        self.rows[n].get(k).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// One-off `T(n, k)` without keeping the table.
pub fn central_factorial(n: usize, k: usize) -> BigInt {
    CentralFactorialTable::new(n).value(n, k)
}

/// The monic basis polynomial `q_i(x) = prod_{j=1..i} (x - j^2)`.
pub fn q_basis_polynomial(i: usize) -> RationalPolynomial {
    let mut poly = RationalPolynomial::from_coeffs(vec![BigRational::one()]);
    for j in 1..=i {
        poly = poly.mul_linear(&rational(BigInt::from((j * j) as u64)));
    }
    poly
}

/// Coefficients `A(k, i)` of `x^k = sum_i A(k, i) q_i(x)`, found by
/// triangular elimination against the monic basis.
///
/// This route never touches the central factorial recurrence, so equality
/// with `T(k+1, i+1)` is a genuine cross-check rather than a restatement.
pub fn expand_power_in_q_basis(k: usize) -> Vec<BigRational> {
    let mut monomial = vec![BigRational::zero(); k + 1];
    monomial[k] = BigRational::one();
    let mut residual = RationalPolynomial::from_coeffs(monomial);
    let mut coeffs = vec![BigRational::zero(); k + 1];
    for i in (0..=k).rev() {
        let a = residual.coeff(i);
        residual = residual.sub(&q_basis_polynomial(i).scale(&a));
        coeffs[i] = a;
    }
    assert!(residual.is_zero(), "elimination against a monic basis is exact");
    coeffs
}

/// Closed form for the hook power-sum average:
/// `sum_{i=0..k} T(k+1, i+1) * P_i(n)` with `P_i` the product formula.
pub fn phi_pk_closed(k: usize, n: usize) -> BigRational {
    let table = CentralFactorialTable::new(k + 1);
    (0..=k)
        .map(|i| rational(table.value(k + 1, i + 1)) * okada_rhs(i, n))
        .sum()
}

/// Divisor count and divisor sum of a positive integer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DivisorData {
    pub count: u64,
    pub sum: u64,
}

/// `tau(m)` and `sigma(m)` by trial division. Panics for `m = 0`.
pub fn divisor_data(m: u64) -> DivisorData {
    assert!(m >= 1, "divisors are defined for positive integers");
    let mut count = 0;
    let mut sum = 0;
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            count += 1;
            sum += d;
            let co = m / d;
            if co != d {
                count += 1;
                sum += co;
            }
        }
        d += 1;
    }
    DivisorData { count, sum }
}

/// `sigma(m) / m`, the weight attached to `m` in the corrected logarithm
/// expansion `-log(1 - w) = sum_{i >= 1} w^i / i`.
pub fn sigma_over_m(m: u64) -> BigRational {
    BigRational::new(BigInt::from(divisor_data(m).sum), BigInt::from(m))
}

/// The published composition formula for the elementary average, evaluated
/// literally with divisor counts:
///
/// ```text
/// C(n, j) sum_{q=0..j} j!/(j-q)! sum_{p=0..q} C(n-q, p)
///         sum_{b_1+..+b_p = q, b_i >= 1} tau(b_1 + 1) ... tau(b_p + 1)
/// ```
///
/// As printed this overcounts: it drops the `1/i` from the logarithm
/// series, weighting each part by `tau(m)` where `sigma(m)/m` is needed.
/// The first wrong value is at `j = 1, n = 2` (6 instead of 5). Kept so
/// the discrepancy stays reproducible; [`phi_ej_corrected`] is the
/// repaired version.
pub fn phi_ej_paper(j: usize, n: usize) -> BigRational {
    assert!(j <= n, "elementary index {} exceeds n = {}", j, n);
    let tau: Vec<BigInt> = (0..=j)
        .map(|b| BigInt::from(divisor_data(b as u64 + 1).count))
        .collect();
    // compositions[p][q]: sum over compositions of q into p positive parts
    // of the product of tau(part + 1)
    let mut compositions = vec![vec![BigInt::zero(); j + 1]; j + 1];
    compositions[0][0] = BigInt::one();
    for p in 1..=j {
        for q in p..=j {
            let mut acc = BigInt::zero();
            for b in 1..=(q - p + 1) {
                acc += &tau[b] * &compositions[p - 1][q - b];
            }
            compositions[p][q] = acc;
        }
    }
    let mut total = BigInt::zero();
    for q in 0..=j {
        let falling = BigInt::from(factorial(j) / factorial(j - q));
        let mut inner = BigInt::zero();
        for (p, row) in compositions.iter().enumerate().take(q + 1) {
            inner += BigInt::from(binomial(n - q, p)) * &row[q];
        }
        total += falling * inner;
    }
    rational(BigInt::from(binomial(n, j)) * total)
}

/// Corrected closed form for the elementary average:
///
/// ```text
/// n! sum_{u = n-j .. n} (1/u!) C(u, n-j) W(u, n)
/// ```
///
/// where `W(u, n)` is the coefficient of `y^n` in
/// `(sum_{m >= 1} (sigma(m)/m) y^m)^u`. This is what the composition
/// expansion of the product side yields once the logarithm series keeps
/// its `1/i` factors.
pub fn phi_ej_corrected(j: usize, n: usize) -> BigRational {
    assert!(j <= n, "elementary index {} exceeds n = {}", j, n);
    let weights: Vec<BigRational> = (1..=n).map(|m| sigma_over_m(m as u64)).collect();
    // power holds the coefficients of the u-th power of the weight series,
    // truncated at y^n; the series has no constant term, so the power is
    // supported on degrees >= u.
    let mut power = vec![BigRational::zero(); n + 1];
    power[0] = BigRational::one();
    let mut total = BigRational::zero();
    for u in 0..=n {
        if u + j >= n {
            let c = rational(BigInt::from(binomial(u, n - j)));
            let u_factorial = rational(BigInt::from(factorial(u)));
            total += c * &power[n] / u_factorial;
        }
        if u < n {
            let mut next = vec![BigRational::zero(); n + 1];
            for (e, coeff) in next.iter_mut().enumerate().skip(u + 1) {
                for m in 1..=(e - u) {
                    *coeff += &weights[m - 1] * &power[e - m];
                }
            }
            power = next;
        }
    }
    total * rational(BigInt::from(factorial(n)))
}
