use criterion::{black_box, criterion_group, criterion_main, Criterion};
use tamari::flows::enumerate_closed_flows;
use tamari::verify::{enumerate_forests, enumerate_interval_posets, phi};
use tamari::{beta, beta_inverse};

fn enumeration(c: &mut Criterion) {
    c.bench_function("interval-posets n=6", |b| {
        b.iter(|| enumerate_interval_posets(black_box(6)))
    });
    c.bench_function("phi up to 6", |b| b.iter(|| phi(black_box(6))));
}

fn bijections(c: &mut Criterion) {
    let posets = enumerate_interval_posets(6);
    c.bench_function("beta n=6", |b| b.iter(|| posets.iter().map(beta).count()));
    c.bench_function("beta inverse n=6", |b| {
        b.iter(|| posets.iter().map(beta_inverse).count())
    });
}

fn flows(c: &mut Criterion) {
    let forests = enumerate_forests(5);
    c.bench_function("closed flows n=5", |b| {
        b.iter(|| {
            forests
                .iter()
                .map(|f| enumerate_closed_flows(f).len())
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, enumeration, bijections, flows);
criterion_main!(benches);
