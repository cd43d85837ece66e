use cdgraph_bench::{fresh, group, layered_spec};
use cdgraph_core::algebra::{minimal_order_search, zsigmondy_ppd};
use cdgraph_core::characters::degree_oracle;
use cdgraph_core::cliffordcd::clifford_degrees;
use cdgraph_core::graphkit::Structure;
use cdgraph_core::semilin::{admissible_deltas, check_semilinear0, field_table, module_lemma_sweep, SemilinearGroup};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn schreier_sims(c: &mut Criterion) {
    let mut g = c.benchmark_group("schreier_sims");
    for id in ["heis8", "aff32", "suz16"] {
        let base = group(id);
        g.bench_function(id, |b| b.iter(|| fresh(black_box(&base)).size().unwrap()));
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("degree_oracle");
    g.sample_size(10);
    for id in ["sl23", "suz8", "aff25"] {
        let base = group(id);
        g.bench_function(id, |b| b.iter(|| degree_oracle(&fresh(black_box(&base))).unwrap()));
    }
    g.finish();
}

fn structure(c: &mut Criterion) {
    let base = group("suz8");
    c.bench_function("structure/suz8", |b| b.iter(|| Structure::compute(&fresh(black_box(&base))).unwrap()));
}

fn clifford(c: &mut Criterion) {
    let spec = layered_spec();
    c.bench_function("clifford_degrees/layered", |b| b.iter(|| clifford_degrees(black_box(&spec)).unwrap()));
}

fn arithmetic(c: &mut Criterion) {
    c.bench_function("zsigmondy/a50_n24", |b| {
        b.iter(|| {
            for a in 2..=50u64 {
                for n in 1..=24u32 {
                    black_box(zsigmondy_ppd(a, n).unwrap());
                }
            }
        })
    });
    c.bench_function("minimal_order_search/2^60", |b| b.iter(|| minimal_order_search(black_box(1u128 << 60)).unwrap()));
}

fn semilinear(c: &mut Criterion) {
    let mut g = c.benchmark_group("semilinear");
    g.sample_size(10);
    let t = field_table(2, 6).unwrap();
    let subs = SemilinearGroup::all_subgroups(&t).unwrap();
    g.bench_function("hall_conjugacy/GF(64)", |b| {
        b.iter(|| {
            for h in &subs {
                for d in admissible_deltas(h) {
                    black_box(check_semilinear0(h, &d).unwrap());
                }
            }
        })
    });
    g.bench_function("module_sweep/4096", |b| b.iter(|| module_lemma_sweep(black_box(4096)).unwrap()));
    g.finish();
}

criterion_group!(benches, schreier_sims, oracle, structure, clifford, arithmetic, semilinear);
criterion_main!(benches);
