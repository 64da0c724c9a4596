use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rainbow::{ars, enumerate_rpms, family, normalize, schedule_from_rpm, t_matching, Variant};

fn constructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct");
    for n in [33usize, 1025, 10001] {
        group.bench_with_input(BenchmarkId::new("ars", n), &n, |b, &n| {
            b.iter(|| ars(black_box(n)))
        });
        group.bench_with_input(BenchmarkId::new("t", n - 1), &(n - 1), |b, &n| {
            b.iter(|| t_matching(black_box(n)))
        });
    }
    group.finish();
}

fn families(c: &mut Criterion) {
    let mut group = c.benchmark_group("family");
    group.sample_size(20);
    for n in [33usize, 513, 2049] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| family(black_box(n)))
        });
    }
    group.finish();
}

fn canon(c: &mut Criterion) {
    let xi = ars(10001).unwrap().rotate(4321);
    c.bench_function("normalize/10001", |b| b.iter(|| normalize(black_box(&xi))));
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    for n in [11usize, 15, 16] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| enumerate_rpms(black_box(n), None))
        });
    }
    group.finish();
}

fn schedules(c: &mut Criterion) {
    let seed = ars(1023).unwrap();
    c.bench_function("schedule/1024", |b| {
        b.iter(|| schedule_from_rpm(black_box(&seed), Variant::Direct))
    });
}

criterion_group!(benches, constructions, families, canon, oracle, schedules);
criterion_main!(benches);
