use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use layerq::layout::{assign_queues_by_depth, planar_pipeline, tree_decomposition_layout, Assign};
use layerq::oracle::exact_queue_number;
use layerq::partition::{partition_planar, Mode};
use layerq_bench::{grid, triangulation};

fn pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    for n in [100usize, 1000, 10_000] {
        let g = triangulation(n, 1);
        for mode in [Mode::Width1, Mode::Tripod] {
            group.bench_with_input(BenchmarkId::new(mode.to_string(), n), &g, |b, g| {
                b.iter(|| planar_pipeline(g, mode, Assign::Depth).unwrap())
            });
        }
    }
    group.finish();
}

fn stages(c: &mut Criterion) {
    let g = triangulation(5000, 2);
    let pp = partition_planar(&g, Mode::Width1).unwrap();
    let q = pp.partition.quotient();
    c.bench_function("partition/5000", |b| b.iter(|| partition_planar(&g, Mode::Width1).unwrap()));
    c.bench_function("host_layout/5000", |b| {
        b.iter(|| tree_decomposition_layout(q, &pp.decomposition).unwrap())
    });
    let g = grid(100);
    let ord: Vec<usize> = (0..g.vertex_count()).collect();
    c.bench_function("depth_assignment/grid100", |b| b.iter(|| assign_queues_by_depth(&g, &ord).unwrap()));
}

fn exact(c: &mut Criterion) {
    let g = triangulation(9, 3);
    c.bench_function("exact_queue_number/9", |b| b.iter(|| exact_queue_number(&g).unwrap()));
}

criterion_group!(benches, pipeline, stages, exact);
criterion_main!(benches);
