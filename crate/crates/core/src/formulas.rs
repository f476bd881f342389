//! Closed forms and recurrences for the hump totals and the super-path
//! counts. Every quantity here has at least one independent second route
//! (recurrence, enumeration, or tableau count); the pairings are wired up
//! and range-checked in [`crate::verify`].
//!
//! Notation used in the doc comments below: C_n are the Catalan numbers,
//! M_n the Motzkin numbers, HC_n / HM_n the hump totals over all Dyck /
//! Motzkin paths of size n, SD_n / SM_n the super-path counts.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinat::{binomial, catalan, catalan_table, motzkin_table, Nat};
use crate::partitions::strip_sum_closed;

/// HC_n = C(2n-1, n), the total hump count over all Dyck paths of length 2n.
///
/// Defined for n >= 1. The n = 0 value is a convention clash: the recurrence
/// seed wants HC_0 = 1 while the empty path has 0 humps, so this closed form
/// refuses n = 0 and [`hc_recurrence`] documents its seed instead.
pub fn hc_closed(n: usize) -> Nat {
    assert!(n >= 1, "hc_closed is defined for n >= 1; hc_recurrence carries the n = 0 seed");
    binomial(2 * n - 1, n as isize)
}

/// HC_n by bottom-up dynamic programming over the first-return recurrence
/// `HC_n = HC_{n-1} + sum_{j=1}^{n-1} (HC_{j-1} C_{n-j} + C_{j-1} HC_{n-j})`
/// with seeds HC_0 = HC_1 = 1.
///
/// The value at n = 0 is the recurrence seed, not a path count: the empty
/// Dyck path has no humps.
pub fn hc_recurrence(n: usize) -> Nat {
    let c = catalan_table(n);
    let mut hc = Vec::with_capacity(n + 1);
    hc.push(Nat::one());
    if n >= 1 {
        hc.push(Nat::one());
    }
    for i in 2..=n {
        let mut next = hc[i - 1].clone();
        for j in 1..i {
            next += &hc[j - 1] * &c[i - j];
            next += &c[j - 1] * &hc[i - j];
        }
        hc.push(next);
    }
    hc[n].clone()
}

/// HM_n = (1/2) sum_{j>=1} C(n,j) C(n-j,j), the total hump count over all
/// Motzkin paths of length n. The sum is always even; this is asserted
/// rather than rounded.
pub fn hm_closed(n: usize) -> Nat {
    half_even(hump_half_sum(n), "hm_closed")
}

/// The table `[2*HM_0, ..., 2*HM_n]`, i.e. the un-halved sums
/// `sum_{j>=1} C(k,j) C(k-j,j)`, computed with incrementally updated
/// binomials so the whole table costs O(n^2) big-integer operations.
pub(crate) fn hump_half_sum_table(n: usize) -> Vec<Nat> {
    (0..=n).map(hump_half_sum).collect()
}

fn hump_half_sum(n: usize) -> Nat {
    // Terms vanish once j > n - j, i.e. past j = floor(n/2).
    let mut sum = Nat::zero();
    let mut outer = Nat::from(n as u64); // C(n, j), starting at j = 1
    let mut inner = Nat::from((n as u64).saturating_sub(1)); // C(n-j, j) at j = 1
    for j in 1..=n / 2 {
        sum += &outer * &inner;
        if 2 * (j + 1) > n {
            break;
        }
        // C(n, j) -> C(n, j+1)
        outer *= (n - j) as u64;
        outer /= (j + 1) as u64;
        // C(n-j, j) -> C(n-j-1, j+1) = prev * (n-2j)(n-2j-1) / ((j+1)(n-j))
        inner *= ((n - 2 * j) * (n - 2 * j - 1)) as u64;
        inner = crate::combinat::exact_div(
            inner,
            &Nat::from(((j + 1) * (n - j)) as u64),
            "half-sum increment",
        );
    }
    sum
}

fn half_even(sum: Nat, context: &str) -> Nat {
    let (half, parity) = sum.div_rem(&Nat::from(2u32));
    assert!(
        parity.is_zero(),
        "{context}: the sum {sum} must be even; an odd value is a bug, not a rounding choice"
    );
    half
}

/// HM_n by bottom-up dynamic programming over the first-return recurrence
/// `HM_n = HM_{n-1} + sum_{k=2}^{n} ((1 + HM_{k-2}) M_{n-k} + M_{k-2} HM_{n-k})`
/// with seeds HM_0 = HM_1 = 0.
pub fn hm_recurrence(n: usize) -> Nat {
    let m = motzkin_table(n);
    let mut hm = Vec::with_capacity(n + 1);
    hm.push(Nat::zero());
    if n >= 1 {
        hm.push(Nat::zero());
    }
    for i in 2..=n {
        let mut next = hm[i - 1].clone();
        for k in 2..=i {
            next += (Nat::one() + &hm[k - 2]) * &m[i - k];
            next += &m[k - 2] * &hm[i - k];
        }
        hm.push(next);
    }
    hm[n].clone()
}

/// SD_n = C(2n, n), the number of super Dyck paths of length 2n (Dyck paths
/// allowed below the axis). Equals 2 * HC_n.
pub fn sd_closed(n: usize) -> Nat {
    assert!(n >= 1, "sd_closed is defined for n >= 1");
    binomial(2 * n, n as isize)
}

/// SM_n = sum_{j>=0} C(n,j) C(n-j,j), the number of super Motzkin paths of
/// length n (the central trinomial coefficients). Equals 2 * HM_n + 1.
pub fn sm_closed(n: usize) -> Nat {
    hump_half_sum(n) + Nat::one()
}

/// SM_n by dynamic programming over
/// `SM_n = SM_{n-1} + 2 sum_{k=2}^{n} M_{k-2} SM_{n-k}` with seeds
/// SM_0 = SM_1 = 1 (the empty path and the single flat step).
pub fn sm_recurrence(n: usize) -> Nat {
    let m = motzkin_table(n);
    let mut sm = Vec::with_capacity(n + 1);
    sm.push(Nat::one());
    if n >= 1 {
        sm.push(Nat::one());
    }
    for i in 2..=n {
        let mut next = sm[i - 1].clone();
        for k in 2..=i {
            next += (&m[k - 2] * &sm[i - k]) * 2u32;
        }
        sm.push(next);
    }
    sm[n].clone()
}

/// Total hump count over all double-Dyck paths of size n, via the product
/// rule over the two halves:
/// `HC_a C_b + C_a HC_b` with a = floor((n+1)/2), b = ceil((n+1)/2).
pub fn hs40(n: usize) -> Nat {
    assert!(n >= 1, "hs40 is defined for n >= 1");
    let a = n.div_ceil(2);
    let b = n / 2 + 1;
    hc_closed(a) * catalan(b) + catalan(a) * hc_closed(b)
}

/// The same hump total in product-free form: `(n+3)/2 * S(4,0;n)` where
/// S(4,0;n) is the four-row strip sum. The product (n+3) * S(4,0;n) is
/// always even for n >= 1; asserted, never rounded.
pub fn hs40_closed(n: usize) -> Nat {
    assert!(n >= 1, "hs40_closed is defined for n >= 1");
    half_even(strip_sum_closed(4, n) * ((n + 3) as u64), "hs40_closed")
}
