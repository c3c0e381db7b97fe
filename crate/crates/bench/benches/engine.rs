use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use tilecount::exactlinalg::{count_spp_pf, det_exact, macmahon_matrix, pp_det_count};
use tilecount::lattice::{build_flashlight, build_hexagon, count_matchings_free, count_matchings_profile};
use tilecount::ppcore::enumerate_spp;
use tilecount::shapes::{make_shape, ShapeFamily};
use tilecount::{Budget, FlashlightParams, Partition, StrictPartition};

fn sds(n: usize, k: usize) -> StrictPartition {
    make_shape(&ShapeFamily::ShiftedDoubleStaircase { n, k })
        .unwrap()
        .to_strict()
        .unwrap()
}

fn matchings(c: &mut Criterion) {
    let mut g = c.benchmark_group("matchings");
    let budget = Budget::default();
    for p in [FlashlightParams::new(2, 2, 1, 1), FlashlightParams::new(2, 2, 2, 0)] {
        let graph = build_flashlight(&p).dual_graph();
        g.bench_with_input(BenchmarkId::new("memo/flashlight", p), &graph, |b, graph| {
            b.iter(|| count_matchings_free(black_box(graph), &budget).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("profile/flashlight", p), &graph, |b, graph| {
            b.iter(|| count_matchings_profile(black_box(graph)).unwrap())
        });
    }
    let big = build_hexagon(4, 4, 4).dual_graph();
    g.bench_function("profile/hex 4,4,4", |b| b.iter(|| count_matchings_profile(black_box(&big)).unwrap()));
    g.finish();
}

fn determinants(c: &mut Criterion) {
    let mut g = c.benchmark_group("determinant");
    for n in [4, 8, 12] {
        let m = macmahon_matrix(&Partition::rectangle(n, n), n as u64);
        g.bench_with_input(BenchmarkId::new("macmahon", n), &m, |b, m| b.iter(|| det_exact(black_box(m))));
    }
    let stair = Partition::new(vec![6, 5, 4, 3, 2, 1]).unwrap();
    g.bench_function("pp count staircase 6", |b| b.iter(|| pp_det_count(black_box(&stair), 6).unwrap()));
    g.finish();
}

fn pfaffians(c: &mut Criterion) {
    let mut g = c.benchmark_group("pfaffian");
    for n in [3, 6, 9] {
        let lambda = sds(n, n / 2);
        g.bench_with_input(BenchmarkId::new("stembridge sds", n), &lambda, |b, l| {
            b.iter(|| count_spp_pf(black_box(l), 5).unwrap())
        });
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let lambda = sds(3, 2);
    c.bench_function("enumerate spp sds 3,2 m=3", |b| b.iter(|| enumerate_spp(black_box(&lambda), 3).count()));
}

criterion_group!(benches, matchings, determinants, pfaffians, enumeration);
criterion_main!(benches);
