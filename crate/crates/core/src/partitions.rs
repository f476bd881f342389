//! Integer partitions, hook-constrained partition families, standard Young
//! tableaux, and the closed forms for strip and hook sums.
//!
//! A partition is generated and consumed in reverse-lexicographic order
//! throughout (largest first part first, all-ones last), so every stream is
//! reproducible. Tableau counting has two independent routes: the hook-length
//! formula ([`syt_count`]) and brute-force enumeration ([`syt_enumerate`]).

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::combinat::{binomial, catalan, exact_div, factorial, factorial_table, Nat};

/// Default weight cap for [`syt_enumerate`]; larger shapes are refused.
pub const DEFAULT_SYT_ENUM_CAP: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionsError {
    #[error("partition parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("shape weight {weight} exceeds the tableau enumeration cap {cap}")]
    TableauCapExceeded { weight: usize, cap: usize },
    #[error("inexact division evaluating {context}: {value} is not divisible by {divisor}")]
    InexactDivision {
        context: &'static str,
        value: String,
        divisor: String,
    },
}

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing with positive entries.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionsError> {
        let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p >= 1);
        if ok {
            Ok(Self { parts })
        } else {
            Err(PartitionsError::InvalidPartition(parts))
        }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p >= 1));
        Self { parts }
    }

    /// The hook shape (n, 1, 1, ..., 1) with `n` trailing ones; weight 2n.
    pub fn one_one_hook(n: usize) -> Self {
        assert!(n >= 1, "the (n, 1^n) hook shape needs n >= 1");
        let mut parts = vec![1; n + 1];
        parts[0] = n;
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    fn conjugate(&self) -> Vec<usize> {
        let cols = self.parts.first().copied().unwrap_or(0);
        let mut conj = vec![0; cols];
        for &row in &self.parts {
            for c in conj.iter_mut().take(row) {
                *c += 1;
            }
        }
        conj
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The constraint cutting out a hook-shaped family of partitions: at most
/// `rows` rows may be wider than `width`, i.e. every part after the first
/// `rows` parts is at most `width`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HookConstraint {
    pub rows: usize,
    pub width: usize,
}

impl HookConstraint {
    pub fn new(rows: usize, width: usize) -> Self {
        Self { rows, width }
    }

    /// Whether `partition` satisfies the constraint.
    pub fn admits(&self, partition: &Partition) -> bool {
        partition.parts.get(self.rows).is_none_or(|&p| p <= self.width)
    }
}

impl fmt::Display for HookConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.rows, self.width)
    }
}

/// A standard Young tableau: the diagram of `shape` filled with 1..=n so that
/// rows and columns strictly increase.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Checks the defining invariants; enumeration produces only standard
    /// tableaux, this exists for tests and debugging.
    pub fn is_standard(&self) -> bool {
        let n = self.shape.weight();
        let mut seen = vec![false; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            if row.len() != self.shape.parts().get(r).copied().unwrap_or(0) {
                return false;
            }
            for (c, &v) in row.iter().enumerate() {
                if v < 1 || v > n || seen[v] {
                    return false;
                }
                seen[v] = true;
                if c > 0 && row[c - 1] >= v {
                    return false;
                }
                if r > 0 && self.rows[r - 1][c] >= v {
                    return false;
                }
            }
        }
        true
    }
}

/// All partitions of `n` in reverse-lexicographic order; `n = 0` yields the
/// single empty partition.
pub fn generate_partitions(n: usize) -> PartitionIter {
    let first = if n == 0 { vec![] } else { vec![n] };
    PartitionIter { next: Some(first) }
}

pub struct PartitionIter {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = next_partition(&current);
        Some(Partition::from_parts_unchecked(current))
    }
}

/// Successor in reverse-lexicographic order, or None after (1, 1, ..., 1).
fn next_partition(parts: &[usize]) -> Option<Vec<usize>> {
    let pivot = parts.iter().rposition(|&p| p > 1)?;
    // Everything after the pivot is a run of ones; redistribute it together
    // with the decremented pivot into parts of the new maximum size.
    let to_place = parts[pivot] + (parts.len() - 1 - pivot);
    let new_max = parts[pivot] - 1;
    let mut out = parts[..pivot].to_vec();
    out.extend(std::iter::repeat_n(new_max, to_place / new_max));
    if !to_place.is_multiple_of(new_max) {
        out.push(to_place % new_max);
    }
    Some(out)
}

/// The members of the hook family cut out by `constraint` among partitions
/// of `n`, generated directly (not by filtering) in the same
/// reverse-lexicographic order as [`generate_partitions`].
pub fn generate_hook_partitions(constraint: HookConstraint, n: usize) -> HookPartitionIter {
    HookPartitionIter {
        constraint,
        remaining: n,
        parts: Vec::new(),
        state: IterState::Start,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IterState {
    Start,
    Mid,
    Done,
}

pub struct HookPartitionIter {
    constraint: HookConstraint,
    remaining: usize,
    parts: Vec<usize>,
    state: IterState,
}

impl HookPartitionIter {
    /// Largest part allowed at the current depth.
    fn bound(&self) -> usize {
        let depth = self.parts.len();
        let prev = if depth == 0 { usize::MAX } else { self.parts[depth - 1] };
        let structural = if depth >= self.constraint.rows {
            self.constraint.width
        } else {
            usize::MAX
        };
        prev.min(structural).min(self.remaining)
    }

    /// Whether placing `part` at the current depth leaves a completable rest.
    fn completable(&self, part: usize) -> bool {
        let rest = self.remaining - part;
        if rest == 0 {
            return true;
        }
        if self.constraint.width >= 1 {
            // Rows of width >= 1 are unlimited in number, so any rest fits.
            return true;
        }
        let depth = self.parts.len();
        if depth + 1 >= self.constraint.rows {
            false
        } else {
            rest <= part * (self.constraint.rows - depth - 1)
        }
    }

    fn place(&mut self, part: usize) {
        self.remaining -= part;
        self.parts.push(part);
    }

    fn unplace(&mut self) -> usize {
        let part = self.parts.pop().expect("unplace on empty prefix");
        self.remaining += part;
        part
    }

    /// Extends the current prefix, largest feasible part first, until the
    /// whole weight is placed. Returns false if no completion exists.
    fn descend(&mut self) -> bool {
        while self.remaining > 0 {
            let bound = self.bound();
            let Some(part) = (1..=bound).rev().find(|&p| self.completable(p)) else {
                return false;
            };
            self.place(part);
        }
        true
    }

    /// Backtracks to the next unexplored branch and completes it.
    fn advance(&mut self) -> bool {
        while !self.parts.is_empty() {
            let prev = self.unplace();
            let bound = self.bound().min(prev - 1);
            if let Some(part) = (1..=bound).rev().find(|&p| self.completable(p)) {
                self.place(part);
                if self.descend() {
                    return true;
                }
                // completable() is exact, so descend cannot fail here.
                unreachable!("descend failed after a completable placement");
            }
        }
        false
    }
}

impl Iterator for HookPartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let found = match self.state {
            IterState::Start => {
                self.state = IterState::Mid;
                self.descend()
            }
            IterState::Mid => self.advance(),
            IterState::Done => false,
        };
        if found {
            Some(Partition::from_parts_unchecked(self.parts.clone()))
        } else {
            self.state = IterState::Done;
            None
        }
    }
}

/// Number of standard Young tableaux of `shape`, by the hook-length formula:
/// n! divided by the product of all hook lengths. The division is exact.
pub fn syt_count(shape: &Partition) -> Nat {
    let conj = shape.conjugate();
    let mut hooks = Nat::one();
    for (i, &row) in shape.parts().iter().enumerate() {
        for (j, &col) in conj[..row].iter().enumerate() {
            let hook = (row - j) + (col - i) - 1;
            hooks *= hook as u64;
        }
    }
    exact_div(factorial(shape.weight()), &hooks, "hook length formula")
}

/// All standard Young tableaux of `shape`, by backtracking over the row in
/// which each of 1..=n is placed. Refuses shapes heavier than `cap`.
pub fn syt_enumerate(shape: &Partition, cap: usize) -> Result<SytIter, PartitionsError> {
    let weight = shape.weight();
    if weight > cap {
        return Err(PartitionsError::TableauCapExceeded { weight, cap });
    }
    Ok(SytIter {
        shape: shape.clone(),
        weight,
        rows: vec![Vec::new(); shape.parts().len()],
        choices: Vec::new(),
        state: IterState::Start,
    })
}

#[derive(Debug)]
pub struct SytIter {
    shape: Partition,
    weight: usize,
    rows: Vec<Vec<usize>>,
    choices: Vec<usize>,
    state: IterState,
}

impl SytIter {
    /// First row at index >= `from` where the next value may legally go.
    fn next_row(&self, from: usize) -> Option<usize> {
        (from..self.rows.len()).find(|&r| {
            self.rows[r].len() < self.shape.parts()[r]
                && (r == 0 || self.rows[r].len() < self.rows[r - 1].len())
        })
    }

    fn place(&mut self, row: usize) {
        let value = self.choices.len() + 1;
        self.rows[row].push(value);
        self.choices.push(row);
    }

    fn descend(&mut self) {
        while self.choices.len() < self.weight {
            // A partial standard filling always has an addable cell.
            let row = self.next_row(0).expect("partial tableau with no addable cell");
            self.place(row);
        }
    }

    fn advance(&mut self) -> bool {
        while let Some(row) = self.choices.pop() {
            self.rows[row].pop();
            if let Some(next) = self.next_row(row + 1) {
                self.place(next);
                self.descend();
                return true;
            }
        }
        false
    }
}

impl Iterator for SytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        let found = match self.state {
            IterState::Start => {
                self.state = IterState::Mid;
                self.descend();
                true
            }
            IterState::Mid => self.advance(),
            IterState::Done => false,
        };
        if found {
            Some(Tableau {
                shape: self.shape.clone(),
                rows: self.rows.clone(),
            })
        } else {
            self.state = IterState::Done;
            None
        }
    }
}

/// The hook sum: total count of standard Young tableaux over all partitions
/// of `n` admitted by `constraint`.
pub fn hook_sum(constraint: HookConstraint, n: usize) -> Nat {
    generate_hook_partitions(constraint, n)
        .map(|p| syt_count(&p))
        .sum()
}

/// Closed forms for the strip sums (hook width 0) with 2 to 5 rows.
///
/// Rows 2 and 3 are the classical central-binomial and Motzkin-sum forms;
/// rows 4 and 5 are the Catalan-product and weighted-Catalan forms.
///
/// Panics if `rows` is outside 2..=5.
pub fn strip_sum_closed(rows: usize, n: usize) -> Nat {
    match rows {
        2 => binomial(n, (n / 2) as isize),
        3 => (0..=n / 2)
            .map(|j| binomial(n, (2 * j) as isize) * catalan(j))
            .sum(),
        4 => catalan(n.div_ceil(2)) * catalan(n / 2 + 1),
        5 => five_row_strip_sum(n),
        _ => panic!("strip closed forms cover 2..=5 rows, got {rows}"),
    }
}

/// 6 * sum_j C(n, 2j) * C_j * (2j+2)! / ((j+2)! (j+3)!), evaluated in exact
/// integers over the common denominator (J+2)! (J+3)! for J = floor(n/2).
/// Individual terms are not integers; only the full sum is.
fn five_row_strip_sum(n: usize) -> Nat {
    let j_max = n / 2;
    let fact = factorial_table((2 * j_max + 2).max(j_max + 3));
    let mut numerator = Nat::zero();
    for j in 0..=j_max {
        let mut term = binomial(n, (2 * j) as isize) * catalan(j);
        term *= &fact[2 * j + 2];
        term *= exact_div(fact[j_max + 2].clone(), &fact[j + 2], "strip-5 scaling");
        term *= exact_div(fact[j_max + 3].clone(), &fact[j + 3], "strip-5 scaling");
        numerator += term;
    }
    let denominator = &fact[j_max + 2] * &fact[j_max + 3];
    exact_div(numerator * 6u32, &denominator, "strip-5 sum")
}

/// Closed form 2^(n-1) for the hook sum with one unconstrained row and
/// width-1 tail. Defined for n >= 1 only; the shape of the n = 0 value is a
/// convention this crate does not take a side on.
pub fn s11_closed(n: usize) -> Nat {
    assert!(n >= 1, "s11_closed is defined for n >= 1");
    Nat::one() << (n - 1)
}

/// Closed form for the hook sum with two unconstrained rows and width-1 tail:
///
/// ```text
/// 1/4 * ( sum_{r=0}^{n-1} C(n-r, floor((n-r)/2)) * C(n, r)
///       + sum_{k=1}^{floor(n/2)-1} n! / (k! (k+1)! (n-2k-2)! (n-k-1) (n-k)) ) + 1
/// ```
///
/// Every division is checked for exactness and reported as an error instead
/// of rounding. The formula first holds at n = 2; at n = 1 the outer
/// division by 4 fails and this returns the corresponding error.
pub fn s21_closed(n: usize) -> Result<Nat, PartitionsError> {
    assert!(n >= 1, "s21_closed is defined for n >= 1");
    let mut total = Nat::zero();
    for r in 0..n {
        total += binomial(n - r, ((n - r) / 2) as isize) * binomial(n, r as isize);
    }
    if n / 2 >= 2 {
        let fact = factorial_table(n);
        for k in 1..=(n / 2 - 1) {
            // n! / (k! (k+1)! (n-2k-2)!) is an exact integer chain.
            let mut term = exact_div(fact[n].clone(), &fact[k], "s21 inner term");
            term = exact_div(term, &fact[k + 1], "s21 inner term");
            term = exact_div(term, &fact[n - 2 * k - 2], "s21 inner term");
            let divisor = Nat::from(((n - k - 1) * (n - k)) as u64);
            let (quotient, remainder) = term.div_rem(&divisor);
            if !remainder.is_zero() {
                return Err(PartitionsError::InexactDivision {
                    context: "s21_closed inner sum",
                    value: term.to_string(),
                    divisor: divisor.to_string(),
                });
            }
            total += quotient;
        }
    }
    let four = Nat::from(4u32);
    let (quotient, remainder) = total.div_rem(&four);
    if !remainder.is_zero() {
        return Err(PartitionsError::InexactDivision {
            context: "s21_closed outer division",
            value: total.to_string(),
            divisor: four.to_string(),
        });
    }
    Ok(quotient + 1u32)
}
