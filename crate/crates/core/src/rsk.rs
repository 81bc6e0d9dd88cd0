//! The RSK correspondence and the permutation statistics it connects to
//! hook averages: exhaustive sums over symmetric groups and a seeded Monte
//! Carlo estimator for moments of the longest increasing subsequence.
//!
//! Row insertion sends a permutation `w` to a pair `(P, Q)` of standard
//! Young tableaux of a common shape `sh(w)`; the number of permutations
//! landing on shape `lambda` is `f_lambda^2`, which is exactly the weight
//! in `phi_n`. The first row length of `sh(w)` equals the length of the
//! longest increasing subsequence of `w`.

use crate::partitions::Partition;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    /// Builds from one-line notation. Panics unless the word is a
    /// rearrangement of `1..=n`.
    pub fn new(word: Vec<usize>) -> Self {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            assert!(x >= 1 && x <= n, "letter {} outside 1..={}", x, n);
            assert!(!seen[x], "letter {} repeated", x);
            seen[x] = true;
        }
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The group inverse: `inverse()[w(i) - 1] == i`.
    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.word.len()];
        for (i, &x) in self.word.iter().enumerate() {
            word[x - 1] = i + 1;
        }
        Permutation { word }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        for x in &self.word {
            write!(f, "{}{}", sep, x)?;
            sep = " ";
        }
        Ok(())
    }
}

/// A standard Young tableau: partition-shaped rows filled bijectively with
/// `1..=n`, increasing along rows and down columns.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Validates and wraps row data. Panics on any violation.
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        assert!(
            rows.iter().all(|r| !r.is_empty()),
            "rows must be nonempty"
        );
        for w in rows.windows(2) {
            assert!(
                w[0].len() >= w[1].len(),
                "row lengths must weakly decrease"
            );
        }
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &e in row {
                assert!(e >= 1 && e <= n, "entry {} outside 1..={}", e, n);
                assert!(!seen[e], "entry {} repeated", e);
                seen[e] = true;
            }
            for w in row.windows(2) {
                assert!(w[0] < w[1], "row entries must increase");
            }
        }
        for pair in rows.windows(2) {
            for (upper, lower) in pair[0].iter().zip(&pair[1]) {
                assert!(upper < lower, "column entries must increase");
            }
        }
        StandardTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut sep = "";
            for e in row {
                write!(f, "{}{}", sep, e)?;
                sep = " ";
            }
        }
        Ok(())
    }
}

/// An insertion/recording pair of equal shape.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TableauPair {
    insertion: StandardTableau,
    recording: StandardTableau,
}

impl TableauPair {
    /// Panics unless both tableaux have the same shape.
    pub fn new(insertion: StandardTableau, recording: StandardTableau) -> Self {
        assert!(
            insertion.shape() == recording.shape(),
            "tableaux must share a shape, got {} and {}",
            insertion.shape(),
            recording.shape()
        );
        TableauPair {
            insertion,
            recording,
        }
    }

    pub fn insertion(&self) -> &StandardTableau {
        &self.insertion
    }

    pub fn recording(&self) -> &StandardTableau {
        &self.recording
    }

    pub fn shape(&self) -> Partition {
        self.insertion.shape()
    }
}

/// Row-inserts the word, returning only the row lengths of the resulting
/// shape. Letters must be distinct.
fn insertion_row_lengths(word: &[usize]) -> Vec<usize> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in word {
        let mut value = x;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![value]);
                break;
            }
            let idx = rows[r].partition_point(|&e| e < value);
            if idx == rows[r].len() {
                rows[r].push(value);
                break;
            }
            value = std::mem::replace(&mut rows[r][idx], value);
            r += 1;
        }
    }
    rows.into_iter().map(|r| r.len()).collect()
}

/// The common shape of `rsk(w)` without building the recording tableau.
pub fn rsk_shape(w: &Permutation) -> Partition {
    Partition::new(insertion_row_lengths(w.word()))
}

/// The RSK correspondence by row insertion.
pub fn rsk(w: &Permutation) -> TableauPair {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in w.word().iter().enumerate() {
        let mut value = x;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![value]);
                q.push(vec![step + 1]);
                break;
            }
            let idx = p[r].partition_point(|&e| e < value);
            if idx == p[r].len() {
                p[r].push(value);
                q[r].push(step + 1);
                break;
            }
            value = std::mem::replace(&mut p[r][idx], value);
            r += 1;
        }
    }
    TableauPair::new(StandardTableau::new(p), StandardTableau::new(q))
}

/// Inverts [`rsk`] by reverse bumping, recovering the permutation.
pub fn rsk_inverse(pair: &TableauPair) -> Permutation {
    let mut p: Vec<Vec<usize>> = pair.insertion().rows().to_vec();
    let mut q: Vec<Vec<usize>> = pair.recording().rows().to_vec();
    let n = pair.insertion().n();
    let mut word = vec![0; n];
    for step in (1..=n).rev() {
        // The maximal remaining entry of a standard tableau ends its row;
        // among equal-length rows only the lowest can end in the maximum,
        // so the first match is the corner to vacate.
        let row = q
            .iter()
            .position(|r| r.last() == Some(&step))
            .expect("recording tableau contains each step");
        q[row].pop();
        let mut value = p[row].pop().expect("shapes agree");
        if p[row].is_empty() {
            p.remove(row);
            q.remove(row);
        }
        for upper in (0..row).rev() {
            let idx = p[upper].partition_point(|&e| e < value);
            assert!(idx > 0, "reverse bump always has a smaller entry above");
            value = std::mem::replace(&mut p[upper][idx - 1], value);
        }
        word[step - 1] = value;
    }
    Permutation::new(word)
}

/// Length of the longest strictly increasing subsequence, by patience
/// sorting on the pile tops.
pub fn longest_increasing(word: &[usize]) -> usize {
    let mut tops: Vec<usize> = Vec::new();
    for &x in word {
        let idx = tops.partition_point(|&t| t < x);
        if idx == tops.len() {
            tops.push(x);
        } else {
            tops[idx] = x;
        }
    }
    tops.len()
}

/// Visits every rearrangement of `1..=n` exactly once (Heap's algorithm).
/// The empty word is visited once for `n = 0`.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut word: Vec<usize> = (1..=n).collect();
    visit(&word);
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                word.swap(0, i);
            } else {
                word.swap(c[i], i);
            }
            visit(&word);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// `sum over w in S_n of sum over u in sh(w) of h_u^(2k)`, exactly, by
/// running every permutation through row insertion.
///
/// This is the permutation-side route to `n! * R_k(n)`; the partition-side
/// route weights each shape by its squared tableau count instead.
pub fn exact_hookpower_sum(k: usize, n: usize) -> BigInt {
    let mut total = BigInt::zero();
    for_each_permutation(n, |word| {
        let shape = Partition::new(insertion_row_lengths(word));
        for h in shape.hook_lengths() {
            total += BigInt::from(h * h).pow(k as u32);
        }
    });
    total
}

/// `sum over w in S_n of is(w)^p`, exactly, where `is` is the longest
/// increasing subsequence length.
pub fn exact_is_power_sum(p: u32, n: usize) -> BigInt {
    let mut total = BigInt::zero();
    for_each_permutation(n, |word| {
        total += BigInt::from(longest_increasing(word)).pow(p);
    });
    total
}

/// A Monte Carlo estimate of `E[(is(w)/sqrt(n))^p]` for uniform `w` in
/// `S_n`, with its standard error.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct MomentEstimate {
    pub n: usize,
    pub power: u32,
    pub samples: u64,
    pub seed: u64,
    pub mean: f64,
    pub std_error: f64,
}

/// Estimates the `p`-th moment of `is(w)/sqrt(n)` from `samples` uniform
/// permutations drawn from a ChaCha stream cipher seeded with `seed`.
///
/// Identical arguments give bitwise-identical estimates on every platform.
/// Panics for `n = 0` or fewer than two samples (the standard error needs
/// a variance).
pub fn monte_carlo_is_moment(n: usize, p: u32, samples: u64, seed: u64) -> MomentEstimate {
    assert!(n >= 1, "moments need at least one letter");
    assert!(samples >= 2, "standard error needs at least two samples");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut word: Vec<usize> = (1..=n).collect();
    let scale = (n as f64).sqrt();
    // Welford running mean and second central moment.
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for count in 1..=samples {
        word.shuffle(&mut rng);
        let x = (longest_increasing(&word) as f64 / scale).powi(p as i32);
        let delta = x - mean;
        mean += delta / count as f64;
        m2 += delta * (x - mean);
    }
    let variance = m2 / (samples - 1) as f64;
    MomentEstimate {
        n,
        power: p,
        samples,
        seed,
        mean,
        std_error: (variance / samples as f64).sqrt(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hook_statistics::r_poly_value;
    use crate::partitions::{enumerate_partitions, factorial};
    use num_rational::BigRational;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn perm(word: &[usize]) -> Permutation {
        Permutation::new(word.to_vec())
    }

    #[test]
    fn permutation_accessors() {
        let w = perm(&[2, 1, 3]);
        assert_eq!(w.n(), 3);
        assert_eq!(w.word(), &[2, 1, 3]);
        assert_eq!(w.to_string(), "2 1 3");
        assert_eq!(w.inverse(), perm(&[2, 1, 3]));
        assert_eq!(perm(&[3, 1, 2]).inverse(), perm(&[2, 3, 1]));
        assert_eq!(Permutation::identity(4), perm(&[1, 2, 3, 4]));
        assert_eq!(Permutation::identity(0).n(), 0);
    }

    #[test]
    #[should_panic(expected = "letter 3 outside 1..=2")]
    fn permutation_rejects_out_of_range() {
        perm(&[1, 3]);
    }

    #[test]
    #[should_panic(expected = "letter 2 repeated")]
    fn permutation_rejects_repeats() {
        perm(&[2, 2, 1]);
    }

    #[test]
    fn tableau_validation() {
        let t = StandardTableau::new(vec![vec![1, 3], vec![2]]);
        assert_eq!(t.n(), 3);
        assert_eq!(t.shape(), Partition::new(vec![2, 1]));
        assert_eq!(t.to_string(), "1 3\n2");
        assert_eq!(StandardTableau::new(vec![]).shape(), Partition::empty());
    }

    #[test]
    #[should_panic(expected = "row lengths must weakly decrease")]
    fn tableau_rejects_non_partition_shape() {
        StandardTableau::new(vec![vec![1], vec![2, 3]]);
    }

    #[test]
    #[should_panic(expected = "row entries must increase")]
    fn tableau_rejects_decreasing_row() {
        StandardTableau::new(vec![vec![2, 1]]);
    }

    #[test]
    #[should_panic(expected = "column entries must increase")]
    fn tableau_rejects_decreasing_column() {
        StandardTableau::new(vec![vec![2, 3], vec![1]]);
    }

    #[test]
    #[should_panic(expected = "entry 4 outside 1..=3")]
    fn tableau_rejects_bad_entries() {
        StandardTableau::new(vec![vec![1, 4], vec![2]]);
    }

    #[test]
    #[should_panic(expected = "tableaux must share a shape")]
    fn pair_rejects_shape_mismatch() {
        TableauPair::new(
            StandardTableau::new(vec![vec![1, 2]]),
            StandardTableau::new(vec![vec![1], vec![2]]),
        );
    }

    #[test]
    fn rsk_worked_example() {
        let pair = rsk(&perm(&[2, 1, 3]));
        assert_eq!(pair.insertion().rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(pair.recording().rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(pair.shape(), Partition::new(vec![2, 1]));

        let pair = rsk(&perm(&[3, 1, 2]));
        assert_eq!(pair.insertion().rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(pair.recording().rows(), &[vec![1, 3], vec![2]]);
    }

    #[test]
    fn rsk_of_identity_and_reversal() {
        let pair = rsk(&Permutation::identity(5));
        assert_eq!(pair.shape(), Partition::new(vec![5]));
        let pair = rsk(&perm(&[5, 4, 3, 2, 1]));
        assert_eq!(pair.shape(), Partition::new(vec![1, 1, 1, 1, 1]));
        let pair = rsk(&perm(&[]));
        assert_eq!(pair.shape(), Partition::empty());
        assert_eq!(rsk_inverse(&pair), perm(&[]));
    }

    #[test]
    fn rsk_roundtrip_on_small_symmetric_groups() {
        for n in 0..=6 {
            for_each_permutation(n, |word| {
                let w = Permutation::new(word.to_vec());
                let pair = rsk(&w);
                assert_eq!(pair.shape(), rsk_shape(&w));
                assert_eq!(rsk_inverse(&pair), w, "roundtrip failed for {}", w);
            });
        }
    }

    #[test]
    fn rsk_is_injective_with_squared_count_fibers() {
        for n in 0..=6usize {
            let mut by_pair: HashMap<TableauPair, usize> = HashMap::new();
            let mut by_shape: HashMap<Partition, usize> = HashMap::new();
            for_each_permutation(n, |word| {
                let pair = rsk(&Permutation::new(word.to_vec()));
                *by_shape.entry(pair.shape()).or_insert(0) += 1;
                *by_pair.entry(pair).or_insert(0) += 1;
            });
            let total: usize = by_pair.values().sum();
            assert_eq!(BigInt::from(total), BigInt::from(factorial(n)));
            assert!(by_pair.values().all(|&c| c == 1), "collision at n = {}", n);
            for lambda in enumerate_partitions(n) {
                let f = lambda.syt_count();
                assert_eq!(
                    BigInt::from(by_shape.get(&lambda).copied().unwrap_or(0)),
                    BigInt::from(&f * &f),
                    "fiber size at {}",
                    lambda
                );
            }
        }
    }

    #[test]
    fn first_row_is_longest_increasing_subsequence() {
        for n in 0..=7 {
            for_each_permutation(n, |word| {
                let shape = Partition::new(insertion_row_lengths(word));
                assert_eq!(shape.first_part(), longest_increasing(word));
                let mut reversed = word.to_vec();
                reversed.reverse();
                assert_eq!(shape.num_parts(), longest_increasing(&reversed));
            });
        }
    }

    #[test]
    fn longest_increasing_examples() {
        assert_eq!(longest_increasing(&[]), 0);
        assert_eq!(longest_increasing(&[1, 2, 3]), 3);
        assert_eq!(longest_increasing(&[3, 2, 1]), 1);
        assert_eq!(longest_increasing(&[4, 1, 3, 2]), 2);
        assert_eq!(longest_increasing(&[2, 7, 1, 5, 6, 4, 3]), 3);
    }

    fn brute_force_lis(word: &[usize]) -> usize {
        let n = word.len();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let picked: Vec<usize> = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| word[i])
                .collect();
            if picked.windows(2).all(|w| w[0] < w[1]) {
                best = best.max(picked.len());
            }
        }
        best
    }

    #[test]
    fn longest_increasing_matches_brute_force() {
        for_each_permutation(5, |word| {
            assert_eq!(longest_increasing(word), brute_force_lis(word));
        });
    }

    #[test]
    fn heap_visits_each_word_once() {
        for n in 0..=5usize {
            let mut seen = std::collections::HashSet::new();
            let mut count = 0usize;
            for_each_permutation(n, |word| {
                seen.insert(word.to_vec());
                count += 1;
            });
            assert_eq!(BigInt::from(count), BigInt::from(factorial(n)));
            assert_eq!(seen.len(), count);
        }
    }

    #[test]
    fn hookpower_sum_spot_values() {
        assert_eq!(exact_hookpower_sum(0, 2), BigInt::from(4));
        assert_eq!(exact_hookpower_sum(1, 3), BigInt::from(72));
        assert_eq!(exact_hookpower_sum(1, 4), BigInt::from(528));
    }

    #[test]
    fn permutation_route_matches_partition_route() {
        for n in 0..=6 {
            for k in 0..=2 {
                let lhs = BigRational::from_integer(exact_hookpower_sum(k, n));
                let rhs = BigRational::from_integer(BigInt::from(factorial(n)))
                    * r_poly_value(k, n);
                assert_eq!(lhs, rhs, "n = {}, k = {}", n, k);
            }
        }
    }

    #[test]
    fn is_power_sum_spot_values() {
        assert_eq!(exact_is_power_sum(1, 4), BigInt::from(58));
        assert_eq!(exact_is_power_sum(0, 4), BigInt::from(24));
    }

    #[test]
    fn subsequence_moments_sandwich_the_hook_sum() {
        for n in 1..=6usize {
            for k in 0..=2usize {
                let lower = exact_is_power_sum(2 * k as u32, n);
                let middle = exact_hookpower_sum(k, n);
                let upper =
                    BigInt::from(2u64.pow(2 * k as u32 + 1) * n as u64) * &lower;
                assert!(lower <= middle, "lower bound at n = {}, k = {}", n, k);
                assert!(middle <= upper, "upper bound at n = {}, k = {}", n, k);
            }
        }
    }

    #[test]
    fn monte_carlo_is_deterministic() {
        let a = monte_carlo_is_moment(4, 1, 500, 7);
        let b = monte_carlo_is_moment(4, 1, 500, 7);
        assert_eq!(a, b);
        let c = monte_carlo_is_moment(4, 1, 500, 8);
        assert_ne!(a.mean, c.mean);
    }

    #[test]
    fn monte_carlo_agrees_with_exhaustive_mean() {
        // E[is(w)/2] over S_4 is 58/24/2 = 29/24.
        let exact = 29.0 / 24.0;
        let estimate = monte_carlo_is_moment(4, 1, 4000, 42);
        assert!(estimate.std_error > 0.0);
        assert!(
            (estimate.mean - exact).abs() <= 4.0 * estimate.std_error,
            "estimate {} +- {} vs exact {}",
            estimate.mean,
            estimate.std_error,
            exact
        );
    }

    proptest! {
        #[test]
        fn prop_rsk_roundtrip(word in (2usize..=30).prop_flat_map(|n| {
            Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
        })) {
            let w = Permutation::new(word);
            let pair = rsk(&w);
            prop_assert_eq!(pair.shape(), rsk_shape(&w));
            prop_assert_eq!(rsk_inverse(&pair), w);
        }

        #[test]
        fn prop_inverse_swaps_tableaux(word in (2usize..=20).prop_flat_map(|n| {
            Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
        })) {
            let w = Permutation::new(word);
            let pair = rsk(&w);
            let swapped = rsk(&w.inverse());
            prop_assert_eq!(pair.insertion(), swapped.recording());
            prop_assert_eq!(pair.recording(), swapped.insertion());
        }

        #[test]
        fn prop_schensted(word in (2usize..=30).prop_flat_map(|n| {
            Just((1..=n).collect::<Vec<usize>>()).prop_shuffle()
        })) {
            let w = Permutation::new(word.clone());
            prop_assert_eq!(rsk_shape(&w).first_part(), longest_increasing(&word));
        }
    }
}
