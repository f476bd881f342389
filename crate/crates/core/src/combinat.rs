//! Exact arbitrary-precision combinatorial primitives: factorials, binomial
//! coefficients, Catalan and Motzkin numbers.
//!
//! Every count produced by this crate is a [`Nat`]. Nothing here touches
//! floating point and nothing overflows; divisions are performed only where
//! they are provably exact, and each one is checked.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Arbitrary-precision nonnegative integer, the value type of all counts.
pub type Nat = BigUint;

/// n! computed exactly.
pub fn factorial(n: usize) -> Nat {
    let mut acc = Nat::one();
    for i in 2..=n {
        acc *= i as u64;
    }
    acc
}

/// The table `[0!, 1!, ..., n!]`.
pub fn factorial_table(n: usize) -> Vec<Nat> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(Nat::one());
    for i in 1..=n {
        let next = table.last().unwrap() * (i as u64);
        table.push(next);
    }
    table
}

/// Binomial coefficient C(n, k), with C(n, k) = 0 whenever k < 0 or k > n.
///
/// The out-of-range convention makes the truncated sums in this crate
/// terminate naturally, mirroring how they are usually written on paper.
pub fn binomial(n: usize, k: isize) -> Nat {
    if k < 0 || k as usize > n {
        return Nat::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = Nat::one();
    for i in 0..k {
        // acc is C(n, i) here, so the division below is exact.
        acc *= (n - i) as u64;
        acc /= (i + 1) as u64;
    }
    acc
}

/// Catalan number C_n = C(2n, n) / (n + 1), by exact division.
pub fn catalan(n: usize) -> Nat {
    exact_div(binomial(2 * n, n as isize), &Nat::from(n as u64 + 1), "catalan")
}

/// The table `[C_0, C_1, ..., C_n]` of Catalan numbers.
pub fn catalan_table(n: usize) -> Vec<Nat> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(Nat::one());
    for i in 1..=n {
        // C_i = C_{i-1} * 2(2i - 1) / (i + 1)
        let num = table.last().unwrap() * (2 * (2 * i as u64 - 1));
        table.push(exact_div(num, &Nat::from(i as u64 + 1), "catalan table"));
    }
    table
}

/// Motzkin number M_n.
///
/// Computed by the first-return recurrence
/// `M_n = M_{n-1} + sum_{k=2}^{n} M_{k-2} * M_{n-k}` with `M_0 = M_1 = 1`.
pub fn motzkin(n: usize) -> Nat {
    motzkin_table(n).pop().unwrap()
}

/// The table `[M_0, M_1, ..., M_n]` of Motzkin numbers.
pub fn motzkin_table(n: usize) -> Vec<Nat> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(Nat::one());
    if n >= 1 {
        table.push(Nat::one());
    }
    for i in 2..=n {
        let mut next = table[i - 1].clone();
        for k in 2..=i {
            next += &table[k - 2] * &table[i - k];
        }
        table.push(next);
    }
    table
}

/// Divides exactly, panicking if a remainder shows up. A nonzero remainder
/// in any caller means a transcribed formula is wrong, not a rounding issue.
pub fn exact_div(value: Nat, divisor: &Nat, context: &str) -> Nat {
    let (quotient, remainder) = value.div_rem(divisor);
    assert!(
        remainder.is_zero(),
        "inexact division in {context}: remainder {remainder} dividing by {divisor}"
    );
    quotient
}
