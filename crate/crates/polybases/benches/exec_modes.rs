//! Compares the rayon-backed parallel sweeps against the sequential
//! fallback on representative verification workloads. With the `parallel`
//! feature disabled both series coincide.

use criterion::{criterion_group, criterion_main, Criterion};
use polybases::exec::ExecMode;
use polybases::verify::{run_check, VerifyOpts};
use std::hint::black_box;

fn bench_check(c: &mut Criterion, name: &'static str, opts: VerifyOpts) {
    let mut group = c.benchmark_group(name);
    group.sample_size(10);
    for (label, mode) in [
        ("parallel", ExecMode::Parallel),
        ("sequential", ExecMode::Sequential),
    ] {
        group.bench_function(label, |b| {
            b.iter(|| {
                let report = run_check(black_box(name), &opts, mode).unwrap();
                assert!(report.passed());
                report.cases
            })
        });
    }
    group.finish();
}

fn benches(c: &mut Criterion) {
    bench_check(
        c,
        "key-routes",
        VerifyOpts {
            n: Some(3),
            max_len: None,
            max_size: Some(6),
        },
    );
    bench_check(
        c,
        "duality",
        VerifyOpts {
            n: Some(4),
            max_len: None,
            max_size: Some(5),
        },
    );
    bench_check(
        c,
        "key-ykey",
        VerifyOpts {
            n: Some(3),
            max_len: None,
            max_size: Some(6),
        },
    );
}

criterion_group!(exec_modes, benches);
criterion_main!(exec_modes);
