//! Sequential vs parallel timings for the exhaustive scans.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use semilex::iterated::verify_lex_correspondence_with;
use semilex::order::check_b_axioms_with;
use semilex::semigroup::{check_associative_with, equal_under_relabeling_with, same_labels};
use semilex::*;
use std::hint::black_box;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn associativity(c: &mut Criterion) {
    let mut g = c.benchmark_group("check_associative");
    for (n, b) in [(1usize, 128usize), (2, 16)] {
        let t = build_tn(n, b, CarrierLimit::default()).unwrap();
        let s = t.underlying();
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, s.len()), s, |bch, s| {
                bch.iter(|| black_box(check_associative_with(s, exec).is_pass()))
            });
        }
    }
    g.finish();
}

fn b_axioms(c: &mut Criterion) {
    let mut g = c.benchmark_group("check_b_axioms");
    let v = build_vn(2, 6, CarrierLimit::default()).unwrap();
    let s = v.underlying();
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, s.len()), s, |bch, s| {
            bch.iter(|| black_box(check_b_axioms_with(s, exec).is_pass()))
        });
    }
    g.finish();
}

fn lex_correspondence(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_lex_correspondence");
    let t = build_tn(3, 8, CarrierLimit::default()).unwrap();
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, t.len()), &t, |bch, t| {
            bch.iter(|| black_box(verify_lex_correspondence_with(t, exec).is_pass()))
        });
    }
    g.finish();
}

fn relabeling(c: &mut Criterion) {
    let mut g = c.benchmark_group("equal_under_relabeling");
    let t = build_tn(2, 24, CarrierLimit::default()).unwrap();
    let s = t.underlying();
    let direct = min_semigroup(&lex_box_order(2, 0, 23).unwrap());
    let map = same_labels(s);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, s.len()), |bch| {
            bch.iter(|| black_box(equal_under_relabeling_with(s, &direct, &map, exec).unwrap()))
        });
    }
    g.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = associativity, b_axioms, lex_correspondence, relabeling
}
criterion_main!(benches);
