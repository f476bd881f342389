use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use humplab_core::combinat::motzkin;
use humplab_core::formulas::{hc_closed, hc_recurrence, hm_closed, hm_recurrence};
use humplab_core::partitions::{hook_sum, s21_closed, HookConstraint};
use humplab_core::paths::{enumerate, total_humps, EnumCaps, PathFamily};
use humplab_core::verify;

fn dyck_hump_routes(c: &mut Criterion) {
    let caps = EnumCaps::default();
    let mut group = c.benchmark_group("dyck_hump_total");
    for n in [8usize, 10, 12] {
        group.bench_with_input(BenchmarkId::new("closed", n), &n, |b, &n| {
            b.iter(|| black_box(hc_closed(n)))
        });
        group.bench_with_input(BenchmarkId::new("recurrence", n), &n, |b, &n| {
            b.iter(|| black_box(hc_recurrence(n)))
        });
        group.sample_size(10).bench_with_input(
            BenchmarkId::new("enumeration", n),
            &n,
            |b, &n| b.iter(|| black_box(total_humps(PathFamily::dyck(n), &caps).unwrap())),
        );
    }
    group.finish();
}

fn motzkin_hump_routes(c: &mut Criterion) {
    let caps = EnumCaps::default();
    let mut group = c.benchmark_group("motzkin_hump_total");
    for n in [8usize, 12] {
        group.bench_with_input(BenchmarkId::new("closed", n), &n, |b, &n| {
            b.iter(|| black_box(hm_closed(n)))
        });
        group.bench_with_input(BenchmarkId::new("recurrence", n), &n, |b, &n| {
            b.iter(|| black_box(hm_recurrence(n)))
        });
        group.sample_size(10).bench_with_input(
            BenchmarkId::new("enumeration", n),
            &n,
            |b, &n| b.iter(|| black_box(total_humps(PathFamily::motzkin(n), &caps).unwrap())),
        );
    }
    group.finish();
}

fn hook_sum_routes(c: &mut Criterion) {
    let mut group = c.benchmark_group("two_one_hook_sum");
    for n in [20usize, 40] {
        group.bench_with_input(BenchmarkId::new("tableau_sum", n), &n, |b, &n| {
            b.iter(|| black_box(hook_sum(HookConstraint::new(2, 1), n)))
        });
        group.bench_with_input(BenchmarkId::new("closed", n), &n, |b, &n| {
            b.iter(|| black_box(s21_closed(n).unwrap()))
        });
    }
    group.finish();
}

fn enumeration_throughput(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    group.sample_size(10);
    group.bench_function("dyck_12_count", |b| {
        b.iter(|| black_box(enumerate(PathFamily::dyck(12)).count()))
    });
    group.bench_function("super_motzkin_10_count", |b| {
        b.iter(|| black_box(enumerate(PathFamily::super_motzkin(10)).count()))
    });
    group.finish();
}

fn sequences_and_identities(c: &mut Criterion) {
    c.bench_function("motzkin_200", |b| b.iter(|| black_box(motzkin(200))));
    let mut group = c.benchmark_group("identity_check");
    group.sample_size(20);
    group.bench_function("dyck-humps-31_to_60", |b| {
        b.iter(|| {
            let report = verify::check("dyck-humps-31", 1, 60).unwrap();
            assert!(report.pass());
            black_box(report)
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    dyck_hump_routes,
    motzkin_hump_routes,
    hook_sum_routes,
    enumeration_throughput,
    sequences_and_identities
);
criterion_main!(benches);
