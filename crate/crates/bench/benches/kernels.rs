use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use sgring::graded::{minimal_resolution, presentation_of_ideal, GradedRing, Presentation};
use sgring::harness::ord_by_power_membership;
use sgring::ideal::MonomialFractionalIdeal as Ideal;
use sgring::semigroup::{enumerate_semigroups, EnumerationFilter, NumericalSemigroup};

fn sgp(gens: &[u64]) -> Arc<NumericalSemigroup> {
    Arc::new(NumericalSemigroup::from_generators(gens).unwrap())
}

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate_genus_8", |b| {
        b.iter(|| {
            let n = enumerate_semigroups(&EnumerationFilter::by_genus(black_box(8)))
                .unwrap()
                .count();
            black_box(n)
        })
    });
}

fn bench_conductor_orders(c: &mut Criterion) {
    let semigroups: Vec<_> = enumerate_semigroups(&EnumerationFilter::by_genus(8))
        .unwrap()
        .collect();
    c.bench_function("conductor_ord_sweep_genus_8", |b| {
        b.iter(|| {
            for s in &semigroups {
                let ord = Ideal::conductor(s.clone()).ord().unwrap();
                black_box(ord);
            }
        })
    });
}

fn bench_colon_and_trace(c: &mut Criterion) {
    let s = sgp(&[4, 9]);
    let ideal = Ideal::new(s.clone(), &[8, 13, 22]);
    c.bench_function("trace_via_colon_4_9", |b| {
        b.iter(|| black_box(ideal.trace().unwrap()))
    });
    let conductor = Ideal::conductor(s);
    c.bench_function("ord_by_power_membership_4_9", |b| {
        b.iter(|| black_box(ord_by_power_membership(&conductor)))
    });
}

fn bench_resolution(c: &mut Criterion) {
    let s = sgp(&[3, 5]);
    let ring = GradedRing::new(s.clone());
    let m = Ideal::maximal(s.clone());
    c.bench_function("resolve_k_3_5_depth_5", |b| {
        b.iter(|| {
            let p = Presentation::of_quotient(ring.clone(), &m).unwrap();
            let res = minimal_resolution(&p, 5, None).unwrap();
            black_box(res.betti())
        })
    });
    c.bench_function("first_syzygies_conductor_4_9", |b| {
        let s49 = sgp(&[4, 9]);
        let ring49 = GradedRing::new(s49.clone());
        let c49 = Ideal::conductor(s49);
        b.iter(|| {
            let p = presentation_of_ideal(&ring49, &c49, None).unwrap();
            black_box(p.map.source().rank())
        })
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_conductor_orders,
    bench_colon_and_trace,
    bench_resolution
);
criterion_main!(benches);
