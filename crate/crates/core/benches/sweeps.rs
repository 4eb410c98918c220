use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gsg_core::mixed_radix::{encode, encode_width};
use gsg_core::statistics::{histogram_with, rank, unrank, Statistic};
use gsg_core::verify::verify_group;
use gsg_core::{BigUint, Execution, GroupElement};

fn label(exec: Execution) -> &'static str {
    match exec {
        Execution::Sequential => "sequential",
        #[cfg(feature = "parallel")]
        Execution::Parallel => "parallel",
    }
}

fn histograms(c: &mut Criterion) {
    let mut group = c.benchmark_group("histogram");
    group.sample_size(10);
    for (stat, m, n) in [
        (Statistic::Inv, 4, 5),
        (Statistic::Fmaj, 4, 5),
        (Statistic::Length, 3, 5),
    ] {
        for &exec in Execution::available() {
            group.bench_with_input(
                BenchmarkId::new(format!("{stat}/G({m},1,{n})"), label(exec)),
                &exec,
                |b, &exec| {
                    b.iter(|| histogram_with(exec, stat, m, n, u64::MAX).unwrap());
                },
            );
        }
    }
    group.finish();
}

fn verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for &exec in Execution::available() {
        group.bench_with_input(
            BenchmarkId::new("G(3,1,4)", label(exec)),
            &exec,
            |b, &exec| {
                b.iter(|| verify_group(3, 4, u64::MAX, exec).unwrap());
            },
        );
    }
    group.finish();
}

fn codec(c: &mut Criterion) {
    let big: BigUint =
        "84726932818573677532668279877832707988327485778083327986698232847269327665908932687971"
            .parse()
            .unwrap();
    c.bench_function("encode 86-digit integer, m=7", |b| {
        b.iter(|| encode(black_box(&big), 7).unwrap())
    });
    c.bench_function("encode_width 4321327, G(5,1,6)", |b| {
        let x = BigUint::from(4_321_327u32);
        b.iter(|| encode_width(black_box(&x), 5, 6).unwrap())
    });
    let w = GroupElement::parse("[2]3 [4]1 [1]6 5 [1]4 [2]2", 5).unwrap();
    c.bench_function("rank G(5,1,6)", |b| b.iter(|| rank(black_box(&w))));
    c.bench_function("unrank G(5,1,6)", |b| {
        let r = BigUint::from(4_321_328u32);
        b.iter(|| unrank(black_box(&r), 5, 6).unwrap())
    });
}

criterion_group!(benches, histograms, verification, codec);
criterion_main!(benches);
