//! Oracle scan: sequential baseline vs. the rayon path.

use criterion::{criterion_group, criterion_main, Criterion};
use std::time::Duration;

fn bench_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_scan");
    group.sample_size(10);
    group.measurement_time(Duration::from_secs(4));

    group.bench_function("seq_2_to_300k", |b| {
        b.iter(|| hall_core::oracle::scan_seq(2, 300_000))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("par_2_to_300k", |b| {
        b.iter(|| hall_core::oracle::scan_par(2, 300_000))
    });

    group.finish();
}

criterion_group!(benches, bench_scan);
criterion_main!(benches);
