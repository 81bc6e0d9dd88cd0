//! Integer partitions, hook lengths and standard-Young-tableau counts.
//!
//! A [`Partition`] is stored as its weakly decreasing list of positive
//! parts; the empty list is the unique partition of 0. Tableau counts are
//! exact [`BigUint`] values, computed by the hook-length formula and,
//! independently, by corner-removal recursion ([`syt_count_oracle`]).

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;

/// A cell of a Young diagram, in matrix coordinates. Both indices are
/// 1-based: `(1, 1)` is the top-left corner cell.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-based");
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from its parts. Panics unless the parts are
    /// positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {:?}",
            parts
        );
        assert!(
            parts.last().is_none_or(|&p| p >= 1),
            "parts must be positive: {:?}",
            parts
        );
        Partition { parts }
    }

    /// The empty partition, the unique partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number being partitioned (the number of cells of the diagram).
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The number of parts.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// The first (largest) part, 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition: column lengths of the diagram. An involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part();
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.parts.iter().take_while(|&&p| p >= j).count());
        }
        Partition { parts }
    }

    /// True if `cell` lies inside the diagram.
    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.row <= self.parts.len()
            && cell.col <= self.parts[cell.row - 1]
    }

    /// Iterates over the cells of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    /// Hook length of `cell`: the arm (cells to the right), the leg (cells
    /// below) and the cell itself. Panics if `cell` is outside the diagram.
    pub fn hook_length(&self, cell: Cell) -> usize {
        assert!(
            self.contains(cell),
            "cell {} outside partition {}",
            cell,
            self
        );
        let arm = self.parts[cell.row - 1] - cell.col;
        let leg = self.parts[cell.row..]
            .iter()
            .take_while(|&&p| p >= cell.col)
            .count();
        arm + leg + 1
    }

    /// All hook lengths in row-major cell order.
    ///
    /// Computes the conjugate once, so this is the preferred entry point
    /// when every hook of the diagram is needed.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.n());
        for (i, &p) in self.parts.iter().enumerate() {
            for j in 1..=p {
                hooks.push(p - j + conj.parts[j - 1] - (i + 1) + 1);
            }
        }
        hooks
    }

    /// The number of standard Young tableaux of this shape, by the
    /// hook-length formula `n! / prod of hooks`.
    ///
    /// The division is checked: a nonzero remainder would mean the hook
    /// multiset is wrong, so it panics rather than rounding.
    pub fn syt_count(&self) -> BigUint {
        let mut hook_product = BigUint::one();
        for h in self.hook_lengths() {
            hook_product *= BigUint::from(h);
        }
        let numerator = factorial(self.n());
        let (quotient, remainder) = numerator.div_rem(&hook_product);
        assert!(
            remainder.is_zero(),
            "hook product does not divide n! for {}",
            self
        );
        quotient
    }

    /// Row indices (1-based) of removable corner cells: rows whose last
    /// cell can be deleted leaving a valid partition.
    pub fn corner_rows(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&i| i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1])
            .map(|i| i + 1)
            .collect()
    }

    /// The partition obtained by removing the corner cell at the end of
    /// `row` (1-based). Panics if that cell is not a removable corner.
    pub fn remove_corner(&self, row: usize) -> Partition {
        assert!(
            self.corner_rows().contains(&row),
            "row {} is not a corner of {}",
            row,
            self
        );
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.remove(row - 1);
        }
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{}", self)
    }
}

/// n! as an exact big integer.
pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// Iterator over all partitions of `n` in reverse-lexicographic order:
/// `(n)` first, `(1, 1, ..., 1)` last. For `n = 0` it yields exactly the
/// empty partition.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        current: Some(if n == 0 { Vec::new() } else { vec![n] }),
        first: true,
    }
}

pub struct Partitions {
    current: Option<Vec<usize>>,
    first: bool,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let mut parts = self.current.take()?;
        if self.first {
            self.first = false;
            let out = Partition::new(parts.clone());
            if !parts.is_empty() {
                self.current = Some(parts);
            }
            return Some(out);
        }
        // Strip trailing 1s, decrement the last remaining part, then greedily
        // redistribute the freed cells in parts as large as allowed.
        let mut rem = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            rem += 1;
        }
        if parts.is_empty() {
            return None;
        }
        let last = parts.len() - 1;
        parts[last] -= 1;
        rem += 1;
        let cap = parts[last];
        while rem > 0 {
            let take = cap.min(rem);
            parts.push(take);
            rem -= take;
        }
        let out = Partition::new(parts.clone());
        self.current = Some(parts);
        Some(out)
    }
}

/// Independent tableau count: `f` of a shape is the sum of `f` over all
/// shapes obtained by removing one corner cell, with `f` of the empty
/// shape equal to 1.
///
/// Memoizes on shape within the call; intended as an oracle for
/// [`Partition::syt_count`] on small shapes (say `n <= 25`).
pub fn syt_count_oracle(partition: &Partition) -> BigUint {
    fn go(parts: &Partition, memo: &mut HashMap<Partition, BigUint>) -> BigUint {
        if parts.is_empty() {
            return BigUint::one();
        }
        if let Some(v) = memo.get(parts) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        for row in parts.corner_rows() {
            total += go(&parts.remove_corner(row), memo);
        }
        memo.insert(parts.clone(), total.clone());
        total
    }
    let mut memo = HashMap::new();
    go(partition, &mut memo)
}
