//! Sequential vs pooled scans of the same parameter spaces.

use apery_cong::harness::{scan_claim, ClaimDescriptor, ParamDomain, ParamSet};
use apery_cong::par::available_threads;
use apery_cong::sequences::{build_table, Method, SequenceKind};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn grid(id: &str, dims: &[(&str, &str)]) -> ClaimDescriptor {
    let dims = dims
        .iter()
        .map(|(n, s)| {
            (
                n.to_string(),
                ParamDomain::Scalar(ParamSet::parse(s).unwrap()),
            )
        })
        .collect();
    ClaimDescriptor::with_overrides(id, dims).unwrap()
}

fn scans(c: &mut Criterion) {
    let cases = [
        (
            "thm1.1a",
            grid("thm1.1a", &[("n", "1..120"), ("r", "0..4")]),
        ),
        (
            "lem2.2",
            grid("lem2.2", &[("n", "1..30"), ("k", "0..n-1"), ("a", "0..6")]),
        ),
        ("thm5.4", grid("thm5.4", &[("n", "1..20")])),
        (
            "conj5.gen",
            ClaimDescriptor::default_for("conj5.gen").unwrap(),
        ),
    ];
    let threads = available_threads().max(2);
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    for (name, desc) in &cases {
        for par in [1, threads] {
            group.bench_with_input(BenchmarkId::new(*name, par), &par, |b, &par| {
                b.iter(|| scan_claim(desc, par).unwrap())
            });
        }
    }
    group.finish();
}

fn tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("table");
    group.sample_size(10);
    for method in [Method::DefiningSum, Method::RecurrenceOracle] {
        group.bench_function(format!("apery-300-{method:?}"), |b| {
            b.iter(|| build_table(SequenceKind::Apery, 300, method).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, scans, tables);
criterion_main!(benches);
