//! Quadruple sieve: one worker vs. a full pool over the same q range.

use criterion::{criterion_group, criterion_main, Criterion};
use std::time::Duration;

fn bench_sieve(c: &mut Criterion) {
    let mut group = c.benchmark_group("sieve_search");
    group.sample_size(10);
    group.measurement_time(Duration::from_secs(6));

    group.bench_function("q_2_to_20_seq", |b| {
        b.iter(|| hall_core::sieve::search_range(2, 20, 20, 1, |_| {}))
    });
    #[cfg(feature = "parallel")]
    {
        let workers = std::thread::available_parallelism().map_or(2, |n| n.get().max(2));
        group.bench_function("q_2_to_20_par", |b| {
            b.iter(|| hall_core::sieve::search_range(2, 20, 20, workers, |_| {}))
        });
    }

    group.finish();
}

criterion_group!(benches, bench_sieve);
criterion_main!(benches);
