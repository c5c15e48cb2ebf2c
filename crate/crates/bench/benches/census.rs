use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nlspec_core::census::{canonical_form, enumerate_connected, run_census, Filter, Source};
use nlspec_core::graph::parse_graph6;

fn canonical(c: &mut Criterion) {
    let g = parse_graph6("GmtbJK").unwrap();
    c.bench_function("canonical_form/8", |b| b.iter(|| black_box(canonical_form(&g))));
}

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_connected");
    group.sample_size(10);
    for n in [5, 6, 7] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| black_box(enumerate_connected(n).unwrap()))
        });
    }
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_census");
    group.sample_size(10);
    group.bench_function("7", |b| {
        b.iter(|| black_box(run_census(&Source::Enumerate, 7, &Filter::default(), 1).unwrap()))
    });
    group.finish();
}

criterion_group!(benches, canonical, enumerate, census);
criterion_main!(benches);
