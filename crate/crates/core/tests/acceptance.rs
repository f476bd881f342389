//! Acceptance suite: every release criterion, one test per criterion, each
//! printing a single pass/fail line (visible with `--nocapture`). All checks
//! are exact big-integer equalities; there are no tolerances to tune.

use std::time::Instant;

use humplab_core::combinat::{binomial, factorial, Nat};
use humplab_core::formulas::{
    hc_closed, hc_recurrence, hm_closed, hm_recurrence, hs40, hs40_closed, sd_closed, sm_closed,
    sm_recurrence,
};
use humplab_core::partitions::{
    generate_partitions, hook_sum, s11_closed, s21_closed, strip_sum_closed, syt_count,
    syt_enumerate, HookConstraint,
};
use humplab_core::paths::{enumerate, total_humps, EnumCaps, PathFamily};
use humplab_core::verify;

fn criterion(number: u32, description: &str, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    match body() {
        Ok(()) => {
            println!(
                "criterion {number:2}: PASS ({:7.2} s) - {description}",
                start.elapsed().as_secs_f64()
            );
        }
        Err(message) => {
            println!("criterion {number:2}: FAIL - {description}: {message}");
            panic!("criterion {number} failed: {message}");
        }
    }
}

fn expect_eq(lhs: &Nat, rhs: &Nat, what: impl Fn() -> String) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}: {lhs} != {rhs}", what()))
    }
}

#[test]
fn c01_golden_hump_totals_by_all_three_routes() {
    criterion(1, "HC_2=3, HC_3=10, HM_2=1, HM_3=3 via closed, recurrence, enumeration", || {
        let caps = EnumCaps::default();
        for (n, expected) in [(2usize, 3u64), (3, 10)] {
            let expected = Nat::from(expected);
            expect_eq(&hc_closed(n), &expected, || format!("hc_closed({n})"))?;
            expect_eq(&hc_recurrence(n), &expected, || format!("hc_recurrence({n})"))?;
            let enumerated = total_humps(PathFamily::dyck(n), &caps).map_err(|e| e.to_string())?;
            expect_eq(&enumerated, &expected, || format!("total_humps(dyck, {n})"))?;
        }
        for (n, expected) in [(2usize, 1u64), (3, 3)] {
            let expected = Nat::from(expected);
            expect_eq(&hm_closed(n), &expected, || format!("hm_closed({n})"))?;
            expect_eq(&hm_recurrence(n), &expected, || format!("hm_recurrence({n})"))?;
            let enumerated =
                total_humps(PathFamily::motzkin(n), &caps).map_err(|e| e.to_string())?;
            expect_eq(&enumerated, &expected, || format!("total_humps(motzkin, {n})"))?;
        }
        Ok(())
    });
}

#[test]
fn c02_dyck_hump_totals_match_closed_form_to_14() {
    criterion(2, "total Dyck humps equal C(2n-1, n) for 1 <= n <= 14", || {
        let caps = EnumCaps::default();
        for n in 1..=14 {
            let enumerated = total_humps(PathFamily::dyck(n), &caps).map_err(|e| e.to_string())?;
            expect_eq(&enumerated, &hc_closed(n), || format!("n={n}"))?;
        }
        Ok(())
    });
}

#[test]
fn c03_motzkin_hump_totals_match_closed_form_to_16() {
    criterion(3, "total Motzkin humps equal the halved trinomial sum for 0 <= n <= 16", || {
        let caps = EnumCaps::default();
        for n in 0..=16 {
            let enumerated =
                total_humps(PathFamily::motzkin(n), &caps).map_err(|e| e.to_string())?;
            expect_eq(&enumerated, &hm_closed(n), || format!("n={n}"))?;
        }
        Ok(())
    });
}

#[test]
fn c04_motzkin_humps_bridge_to_hook_sums_to_60() {
    criterion(4, "HM_n = S(2,1;n) - 1 by hook sum (n >= 0) and closed form (n >= 2) up to 60", || {
        let constraint = HookConstraint::new(2, 1);
        for n in 0..=60 {
            expect_eq(&(hm_closed(n) + 1u32), &hook_sum(constraint, n), || {
                format!("hook-sum route at n={n}")
            })?;
        }
        // Empirical validity floor of the closed form: n = 1 trips its
        // exactness check, n >= 2 is exact everywhere.
        if s21_closed(1).is_ok() {
            return Err("s21_closed(1) unexpectedly succeeded".to_string());
        }
        for n in 2..=60 {
            let closed = s21_closed(n).map_err(|e| e.to_string())?;
            expect_eq(&(hm_closed(n) + 1u32), &closed, || format!("closed route at n={n}"))?;
        }
        Ok(())
    });
}

#[test]
fn c05_super_dyck_counts() {
    criterion(5, "super Dyck counts: enumeration to 12, SD_n = C(2n,n) = 2*HC_n to 200", || {
        for n in 1..=12 {
            let count = Nat::from(enumerate(PathFamily::super_dyck(n)).count() as u64);
            expect_eq(&count, &binomial(2 * n, n as isize), || format!("enumeration n={n}"))?;
            expect_eq(&count, &(hc_closed(n) * 2u32), || format!("2*HC at n={n}"))?;
        }
        for n in 1..=200 {
            expect_eq(&sd_closed(n), &(hc_closed(n) * 2u32), || format!("formula n={n}"))?;
        }
        Ok(())
    });
}

#[test]
fn c06_super_motzkin_counts() {
    criterion(6, "super Motzkin: recurrence = closed = enumeration to 12, SM_n = 2*HM_n + 1 to 200", || {
        for n in 0..=12 {
            let count = Nat::from(enumerate(PathFamily::super_motzkin(n)).count() as u64);
            expect_eq(&count, &sm_closed(n), || format!("enumeration vs closed n={n}"))?;
            expect_eq(&sm_recurrence(n), &sm_closed(n), || format!("recurrence n={n}"))?;
        }
        for n in 0..=200 {
            expect_eq(&sm_closed(n), &(hm_closed(n) * 2u32 + 1u32), || format!("n={n}"))?;
        }
        Ok(())
    });
}

#[test]
fn c07_double_dyck_hump_totals() {
    criterion(7, "double-Dyck humps: the 12 listed values, closed form to 200, enumeration to 12", || {
        let expected: [u64; 12] =
            [2, 5, 12, 35, 100, 315, 980, 3234, 10584, 36036, 121968, 424710];
        for (i, &value) in expected.iter().enumerate() {
            let n = i + 1;
            expect_eq(&hs40(n), &Nat::from(value), || format!("listed value n={n}"))?;
        }
        for n in 1..=200 {
            // hs40_closed panics internally if its evenness assertion fires;
            // reaching the comparison means it never did.
            expect_eq(&hs40(n), &hs40_closed(n), || format!("closed form n={n}"))?;
        }
        let caps = EnumCaps::default();
        for n in 1..=12 {
            let enumerated =
                total_humps(PathFamily::double_dyck(n), &caps).map_err(|e| e.to_string())?;
            expect_eq(&enumerated, &hs40(n), || format!("enumeration n={n}"))?;
        }
        Ok(())
    });
}

#[test]
fn c08_hook_sums_match_closed_forms() {
    criterion(8, "strip sums (2..5 rows) to 25 and the (1,1) hook sum to 25 match closed forms", || {
        for rows in 2..=5 {
            for n in 0..=25 {
                expect_eq(
                    &hook_sum(HookConstraint::new(rows, 0), n),
                    &strip_sum_closed(rows, n),
                    || format!("rows={rows}, n={n}"),
                )?;
            }
        }
        for n in 1..=25 {
            expect_eq(&hook_sum(HookConstraint::new(1, 1), n), &s11_closed(n), || {
                format!("(1,1) hook at n={n}")
            })?;
        }
        Ok(())
    });
}

#[test]
fn c09_hook_formula_against_brute_force() {
    criterion(9, "for every shape of weight <= 8: enumerated tableaux match the hook formula, and squared counts sum to n!", || {
        for n in 0..=8 {
            let mut square_sum = Nat::from(0u32);
            for shape in generate_partitions(n) {
                let counted = syt_count(&shape);
                let enumerated = syt_enumerate(&shape, 10).map_err(|e| e.to_string())?.count();
                expect_eq(&Nat::from(enumerated as u64), &counted, || format!("shape {shape}"))?;
                square_sum += &counted * &counted;
            }
            expect_eq(&square_sum, &factorial(n), || format!("sum of squares at n={n}"))?;
        }
        Ok(())
    });
}

#[test]
fn c10_full_identity_suite() {
    criterion(10, "verify::check_all(200, 12) passes with zero failures in under 5 minutes", || {
        let start = Instant::now();
        let reports = verify::check_all(200, 12);
        let elapsed = start.elapsed();
        for report in &reports {
            if !report.pass() {
                let first = &report.failures[0];
                return Err(format!(
                    "{} failed {} time(s); first at n={}: {} != {}",
                    report.id,
                    report.failures.len(),
                    first.n,
                    first.lhs,
                    first.rhs
                ));
            }
        }
        if reports.len() < 14 {
            return Err(format!("registry holds only {} identities", reports.len()));
        }
        if elapsed.as_secs() >= 300 {
            return Err(format!("suite took {:.1} s, budget is 300 s", elapsed.as_secs_f64()));
        }
        Ok(())
    });
}
