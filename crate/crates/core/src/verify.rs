//! A registry of exactly checkable identities: every closed form, recurrence,
//! enumeration bridge, and tableau-sum bridge in this crate, each verifiable
//! over a range of n with big-integer equality on both sides.
//!
//! Each [`Identity`] records the smallest n at which it holds (`valid_from`,
//! determined empirically and frozen) and the largest n it may be checked at
//! (`max_n`, bounding runtime). [`check_all`] runs the whole registry;
//! reports serialize to JSON with values as decimal strings.

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::One;
use serde_json::json;
use thiserror::Error;

use crate::combinat::{binomial, catalan, catalan_table, exact_div, factorial_table, motzkin, motzkin_table, Nat};
use crate::formulas::{
    hc_closed, hc_recurrence, hm_closed, hm_recurrence, hs40, hs40_closed, hump_half_sum_table,
    sd_closed, sm_closed, sm_recurrence,
};
use crate::partitions::{
    hook_sum, s11_closed, s21_closed, strip_sum_closed, syt_count, HookConstraint, Partition,
};
use crate::paths::{enumerate, total_humps, EnumCaps, PathFamily};

/// Hard ceiling for formula-route checks; enumeration routes are bounded by
/// the per-family caps instead.
pub const FORMULA_ROUTE_LIMIT: usize = 500;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("identity {id} only holds from n = {valid_from}, cannot check from n = {lo}")]
    BelowValidFrom { id: String, lo: usize, valid_from: usize },
    #[error("empty range for identity {id}: lo = {lo} > hi = {hi}")]
    EmptyRange { id: String, lo: usize, hi: usize },
    #[error("identity {id} is capped at n = {max_n}, cannot check up to n = {hi}")]
    CapExceeded { id: String, hi: usize, max_n: usize },
}

/// Whether an identity evaluates by formulas alone or walks a path family.
/// [`check_all`] picks its range bound per class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RouteClass {
    Formula,
    Enumeration,
}

type Side = Box<dyn Fn(usize) -> Nat + Send + Sync>;

/// One named identity: two exact routes to the same number.
pub struct Identity {
    id: &'static str,
    description: &'static str,
    class: RouteClass,
    valid_from: usize,
    max_n: usize,
    lhs: Side,
    rhs: Side,
}

impl Identity {
    pub fn new(
        id: &'static str,
        description: &'static str,
        class: RouteClass,
        valid_from: usize,
        max_n: usize,
        lhs: Side,
        rhs: Side,
    ) -> Self {
        Self { id, description, class, valid_from, max_n, lhs, rhs }
    }

    pub fn id(&self) -> &'static str {
        self.id
    }

    pub fn description(&self) -> &'static str {
        self.description
    }

    pub fn class(&self) -> RouteClass {
        self.class
    }

    /// Smallest n the identity holds at, frozen after empirical probing.
    pub fn valid_from(&self) -> usize {
        self.valid_from
    }

    /// Largest n this identity may be checked at.
    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn lhs(&self, n: usize) -> Nat {
        (self.lhs)(n)
    }

    pub fn rhs(&self, n: usize) -> Nat {
        (self.rhs)(n)
    }

    /// Evaluates both sides for every n in `[lo, hi]` and reports every
    /// mismatch. Rejects ranges outside `[valid_from, max_n]`.
    pub fn check(&self, lo: usize, hi: usize) -> Result<IdentityReport, VerifyError> {
        if lo < self.valid_from {
            return Err(VerifyError::BelowValidFrom {
                id: self.id.to_string(),
                lo,
                valid_from: self.valid_from,
            });
        }
        if hi < lo {
            return Err(VerifyError::EmptyRange { id: self.id.to_string(), lo, hi });
        }
        if hi > self.max_n {
            return Err(VerifyError::CapExceeded {
                id: self.id.to_string(),
                hi,
                max_n: self.max_n,
            });
        }
        Ok(self.run(lo, hi))
    }

    /// Unvalidated core loop; an inverted range yields a trivially passing
    /// report (used by [`check_all`] when a cap clamps below `valid_from`).
    fn run(&self, lo: usize, hi: usize) -> IdentityReport {
        let start = Instant::now();
        let mut failures = Vec::new();
        if lo <= hi {
            for n in lo..=hi {
                let lhs = self.lhs(n);
                let rhs = self.rhs(n);
                if lhs != rhs {
                    failures.push(Failure { n, lhs, rhs });
                }
            }
        }
        IdentityReport {
            id: self.id.to_string(),
            lo,
            hi,
            failures,
            elapsed: start.elapsed(),
        }
    }
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("class", &self.class)
            .field("valid_from", &self.valid_from)
            .field("max_n", &self.max_n)
            .finish_non_exhaustive()
    }
}

/// One mismatch: both side values at a given n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub n: usize,
    pub lhs: Nat,
    pub rhs: Nat,
}

/// Result of checking one identity over a range.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub id: String,
    pub lo: usize,
    pub hi: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    /// JSON form with big integers rendered as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "id": self.id,
            "lo": self.lo,
            "hi": self.hi,
            "pass": self.pass(),
            "failures": self.failures.iter().map(|f| json!({
                "n": f.n,
                "lhs": f.lhs.to_string(),
                "rhs": f.rhs.to_string(),
            })).collect::<Vec<_>>(),
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }
}

fn formula(
    id: &'static str,
    description: &'static str,
    valid_from: usize,
    max_n: usize,
    lhs: Side,
    rhs: Side,
) -> Identity {
    Identity::new(id, description, RouteClass::Formula, valid_from, max_n, lhs, rhs)
}

fn enumeration(
    id: &'static str,
    description: &'static str,
    valid_from: usize,
    max_n: usize,
    lhs: Side,
    rhs: Side,
) -> Identity {
    Identity::new(id, description, RouteClass::Enumeration, valid_from, max_n, lhs, rhs)
}

/// The hump-total closed form extended by its recurrence seed: the value is
/// 1 at n = 0 (where the plain binomial form is undefined) and C(2n-1, n)
/// afterwards.
fn hc_term(n: usize) -> Nat {
    if n == 0 {
        Nat::one()
    } else {
        binomial(2 * n - 1, n as isize)
    }
}

/// Halved table of `sum_{j>=1} C(k,j) C(k-j,j)` for k = 0..=n.
fn b_table(n: usize) -> Vec<Nat> {
    hump_half_sum_table(n)
        .into_iter()
        .map(|s| exact_div(s, &Nat::from(2u32), "hump half-sum parity"))
        .collect()
}

/// Number of paths in a family, as a count.
fn family_count(family: PathFamily) -> Nat {
    Nat::from(enumerate(family).count() as u64)
}

/// The full identity registry, with enumeration routes bounded by the
/// default caps.
pub fn registry() -> Vec<Identity> {
    registry_with_caps(&EnumCaps::default())
}

/// The full identity registry, with enumeration routes bounded by `caps`.
pub fn registry_with_caps(caps: &EnumCaps) -> Vec<Identity> {
    let caps = *caps;
    vec![
        formula(
            "catalan-convolution",
            "Catalan numbers satisfy their defining convolution C_n = sum C_{j-1} C_{n-j}",
            1,
            FORMULA_ROUTE_LIMIT,
            Box::new(catalan),
            Box::new(|n| {
                let c = catalan_table(n);
                (1..=n).map(|j| &c[j - 1] * &c[n - j]).sum()
            }),
        ),
        formula(
            "half-catalan-binomial",
            "2 C(2n-1, n) = (n+1) C_n",
            1,
            FORMULA_ROUTE_LIMIT,
            Box::new(|n| binomial(2 * n - 1, n as isize) * 2u32),
            Box::new(|n| catalan(n) * (n as u64 + 1)),
        ),
        formula(
            "dyck-humps-31",
            "the Dyck hump closed form C(2n-1, n) satisfies the first-return recurrence",
            1,
            FORMULA_ROUTE_LIMIT,
            Box::new(|n| binomial(2 * n - 1, n as isize)),
            Box::new(|n| {
                let c = catalan_table(n);
                let mut sum = hc_term(n - 1);
                for j in 1..n {
                    sum += hc_term(j - 1) * &c[n - j];
                    sum += &c[j - 1] * hc_term(n - j);
                }
                sum
            }),
        ),
        formula(
            "recurrence-motzkin-011",
            "the Motzkin hump closed form satisfies the first-return recurrence",
            1,
            FORMULA_ROUTE_LIMIT,
            Box::new(hm_closed),
            Box::new(|n| {
                let b = b_table(n);
                let m = motzkin_table(n);
                let mut sum = b[n - 1].clone();
                for k in 2..=n {
                    sum += (Nat::one() + &b[k - 2]) * &m[n - k];
                    sum += &m[k - 2] * &b[n - k];
                }
                sum
            }),
        ),
        formula(
            "motzkin-path-222",
            "twice the trinomial half-sum equals the two-row hook-sum expansion",
            2,
            FORMULA_ROUTE_LIMIT,
            Box::new(|n| {
                (1..=n)
                    .map(|j| binomial(n, j as isize) * binomial(n - j, j as isize))
                    .sum::<Nat>()
                    * 2u32
            }),
            Box::new(|n| {
                let mut sum = Nat::from(0u32);
                for r in 0..n {
                    sum += binomial(n - r, ((n - r) / 2) as isize) * binomial(n, r as isize);
                }
                if n / 2 >= 2 {
                    let fact = factorial_table(n);
                    for k in 1..=(n / 2 - 1) {
                        let mut term = exact_div(fact[n].clone(), &fact[k], "identity term");
                        term = exact_div(term, &fact[k + 1], "identity term");
                        term = exact_div(term, &fact[n - 2 * k - 2], "identity term");
                        term = exact_div(
                            term,
                            &Nat::from(((n - k - 1) * (n - k)) as u64),
                            "identity term",
                        );
                        sum += term;
                    }
                }
                sum
            }),
        ),
        formula(
            "hc-closed-matches-recurrence",
            "Dyck hump totals: closed form and dynamic programming agree",
            1,
            FORMULA_ROUTE_LIMIT,
            Box::new(hc_closed),
            Box::new(hc_recurrence),
        ),
        formula(
            "hm-closed-matches-recurrence",
            "Motzkin hump totals: closed form and dynamic programming agree",
            0,
            FORMULA_ROUTE_LIMIT,
            Box::new(hm_closed),
            Box::new(hm_recurrence),
        ),
        formula(
            "sm-closed-matches-recurrence",
            "super Motzkin counts: closed form and dynamic programming agree",
            0,
            FORMULA_ROUTE_LIMIT,
            Box::new(sm_closed),
            Box::new(sm_recurrence),
        ),
        formula(
            "motzkin-recurrence-matches-strip-closed",
            "Motzkin numbers equal the three-row strip closed form",
            0,
            FORMULA_ROUTE_LIMIT,
            Box::new(motzkin),
            Box::new(|n| strip_sum_closed(3, n)),
        ),
        formula(
            "hs40-product-matches-closed",
            "double-Dyck hump totals: two-half product form equals (n+3)/2 times the strip sum",
            1,
            FORMULA_ROUTE_LIMIT,
            Box::new(hs40),
            Box::new(hs40_closed),
        ),
        formula(
            "hc-equals-hook-shape-syt",
            "Dyck hump totals count the standard tableaux of the (n, 1^n) hook shape",
            1,
            FORMULA_ROUTE_LIMIT,
            Box::new(hc_closed),
            Box::new(|n| syt_count(&Partition::one_one_hook(n))),
        ),
        formula(
            "hm-equals-s21-closed-minus-1",
            "Motzkin hump totals are one less than the (2,1) hook-sum closed form",
            2,
            FORMULA_ROUTE_LIMIT,
            Box::new(|n| hm_closed(n) + 1u32),
            Box::new(|n| s21_closed(n).expect("valid_from guards the formula domain")),
        ),
        formula(
            "sd-equals-twice-hc",
            "super Dyck counts are twice the Dyck hump totals",
            1,
            FORMULA_ROUTE_LIMIT,
            Box::new(sd_closed),
            Box::new(|n| hc_closed(n) * 2u32),
        ),
        formula(
            "sm-equals-2hm-plus-1",
            "super Motzkin counts are twice the Motzkin hump totals plus one",
            0,
            FORMULA_ROUTE_LIMIT,
            Box::new(sm_closed),
            Box::new(|n| hm_closed(n) * 2u32 + 1u32),
        ),
        formula(
            "motzkin-equals-strip-sum",
            "Motzkin numbers equal the tableau sum over three-row strips",
            0,
            25,
            Box::new(motzkin),
            Box::new(|n| hook_sum(HookConstraint::new(3, 0), n)),
        ),
        formula(
            "strip-2-closed-matches-hook-sum",
            "two-row strip sum: central binomial closed form vs tableau enumeration",
            0,
            25,
            Box::new(|n| strip_sum_closed(2, n)),
            Box::new(|n| hook_sum(HookConstraint::new(2, 0), n)),
        ),
        formula(
            "strip-3-closed-matches-hook-sum",
            "three-row strip sum: Motzkin-style closed form vs tableau enumeration",
            0,
            25,
            Box::new(|n| strip_sum_closed(3, n)),
            Box::new(|n| hook_sum(HookConstraint::new(3, 0), n)),
        ),
        formula(
            "strip-4-closed-matches-hook-sum",
            "four-row strip sum: Catalan-product closed form vs tableau enumeration",
            0,
            25,
            Box::new(|n| strip_sum_closed(4, n)),
            Box::new(|n| hook_sum(HookConstraint::new(4, 0), n)),
        ),
        formula(
            "strip-5-closed-matches-hook-sum",
            "five-row strip sum: weighted-Catalan closed form vs tableau enumeration",
            0,
            25,
            Box::new(|n| strip_sum_closed(5, n)),
            Box::new(|n| hook_sum(HookConstraint::new(5, 0), n)),
        ),
        formula(
            "s11-closed-matches-hook-sum",
            "(1,1) hook sum equals 2^(n-1)",
            1,
            25,
            Box::new(s11_closed),
            Box::new(|n| hook_sum(HookConstraint::new(1, 1), n)),
        ),
        formula(
            "hm-equals-s21-minus-1",
            "Motzkin hump totals are one less than the (2,1) hook sum",
            0,
            60,
            Box::new(|n| hm_closed(n) + 1u32),
            Box::new(|n| hook_sum(HookConstraint::new(2, 1), n)),
        ),
        formula(
            "s21-closed-matches-hook-sum",
            "(2,1) hook sum: closed form vs tableau enumeration (closed form starts at n = 2)",
            2,
            60,
            Box::new(|n| s21_closed(n).expect("valid_from guards the formula domain")),
            Box::new(|n| hook_sum(HookConstraint::new(2, 1), n)),
        ),
        enumeration(
            "dyck-count-matches-catalan",
            "exhaustive Dyck enumeration count equals the Catalan number",
            0,
            caps.dyck,
            Box::new(move |n| family_count(PathFamily::dyck(n))),
            Box::new(catalan),
        ),
        enumeration(
            "motzkin-count-matches-recurrence",
            "exhaustive Motzkin enumeration count equals the Motzkin number",
            0,
            caps.motzkin,
            Box::new(move |n| family_count(PathFamily::motzkin(n))),
            Box::new(motzkin),
        ),
        enumeration(
            "super-dyck-count-matches-central-binomial",
            "exhaustive super Dyck enumeration count equals C(2n, n)",
            0,
            caps.super_dyck,
            Box::new(move |n| family_count(PathFamily::super_dyck(n))),
            Box::new(|n| binomial(2 * n, n as isize)),
        ),
        enumeration(
            "super-motzkin-count-matches-closed",
            "exhaustive super Motzkin enumeration count equals the trinomial closed form",
            0,
            caps.super_motzkin,
            Box::new(move |n| family_count(PathFamily::super_motzkin(n))),
            Box::new(sm_closed),
        ),
        enumeration(
            "double-dyck-count-matches-catalan-product",
            "exhaustive double-Dyck enumeration count equals the Catalan product",
            0,
            caps.double_dyck,
            Box::new(move |n| family_count(PathFamily::double_dyck(n))),
            Box::new(|n| strip_sum_closed(4, n)),
        ),
        enumeration(
            "hc-matches-enumeration",
            "Dyck hump totals: closed form vs exhaustive enumeration",
            1,
            caps.dyck,
            Box::new(hc_closed),
            Box::new(move |n| {
                total_humps(PathFamily::dyck(n), &caps).expect("n is within the cap")
            }),
        ),
        enumeration(
            "hm-matches-enumeration",
            "Motzkin hump totals: closed form vs exhaustive enumeration",
            0,
            caps.motzkin,
            Box::new(hm_closed),
            Box::new(move |n| {
                total_humps(PathFamily::motzkin(n), &caps).expect("n is within the cap")
            }),
        ),
        enumeration(
            "hs40-matches-enumeration",
            "double-Dyck hump totals: product form vs exhaustive enumeration",
            1,
            caps.double_dyck,
            Box::new(hs40),
            Box::new(move |n| {
                total_humps(PathFamily::double_dyck(n), &caps).expect("n is within the cap")
            }),
        ),
    ]
}

/// Looks an identity up in the default registry.
pub fn find(id: &str) -> Result<Identity, VerifyError> {
    registry()
        .into_iter()
        .find(|i| i.id == id)
        .ok_or_else(|| VerifyError::UnknownIdentity(id.to_string()))
}

/// Checks one identity from the default registry over `[lo, hi]`.
pub fn check(id: &str, lo: usize, hi: usize) -> Result<IdentityReport, VerifyError> {
    find(id)?.check(lo, hi)
}

/// Runs every registered identity from its `valid_from` up to its class cap
/// (`hi_formula` for formula routes, `hi_enum` for enumeration routes),
/// clamped to the identity's own `max_n`. Failures are data, not errors.
pub fn check_all(hi_formula: usize, hi_enum: usize) -> Vec<IdentityReport> {
    check_all_with_caps(hi_formula, hi_enum, &EnumCaps::default())
}

pub fn check_all_with_caps(
    hi_formula: usize,
    hi_enum: usize,
    caps: &EnumCaps,
) -> Vec<IdentityReport> {
    registry_with_caps(caps)
        .iter()
        .map(|identity| {
            let class_hi = match identity.class {
                RouteClass::Formula => hi_formula,
                RouteClass::Enumeration => hi_enum,
            };
            identity.run(identity.valid_from, class_hi.min(identity.max_n))
        })
        .collect()
}
