use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use wforge_core::gates::{hierarchy_level, GateSpec};
use wforge_core::sim::{apply_circuit, circuit_unitary, PureState, StateKind, DEFAULT_TOL};
use wforge_core::synth;

fn bench_tree_synthesis(c: &mut Criterion) {
    let mut group = c.benchmark_group("synth_wtree");
    for (d, n) in [(2usize, 4u32), (3, 3), (5, 2)] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("d{d}_n{n}")), &(d, n), |b, &(d, n)| {
            b.iter(|| synth::synth_spread_tree(d, n).unwrap())
        });
    }
    group.finish();
}

fn bench_sparse_simulation(c: &mut Criterion) {
    let mut group = c.benchmark_group("sparse_sim");
    for (d, n) in [(2usize, 4u32), (3, 2), (3, 3)] {
        let tree = synth::synth_spread_tree(d, n).unwrap();
        let reg = tree.expanded.register.clone();
        group.bench_with_input(BenchmarkId::from_parameter(format!("wtree_d{d}_n{n}")), &tree, |b, tree| {
            b.iter(|| apply_circuit(&PureState::zero(&reg), &tree.expanded).unwrap())
        });
    }
    let qtree = synth::synth_qudit_w_tree(3, 2).unwrap();
    let qreg = qtree.expanded.register.clone();
    group.bench_function("qwtree_d3_n2", |b| {
        let input = PureState::make(&StateKind::Resource { wire: 0 }, &qreg).unwrap();
        b.iter(|| apply_circuit(&input, &qtree.expanded).unwrap())
    });
    group.finish();
}

fn bench_dense_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("dense_oracle");
    let zcx = synth::synth_zcx(5, 0, 1, true).unwrap();
    group.bench_function("zcx_exact_d5_unitary", |b| {
        b.iter(|| circuit_unitary(&zcx.expanded).unwrap())
    });
    let ch = synth::synth_controlled_h(5, synth::ChMode::Subspace).unwrap();
    group.bench_function("ch_subspace_d5_unitary", |b| {
        b.iter(|| circuit_unitary(&ch.expanded).unwrap())
    });
    group.finish();
}

fn bench_hierarchy(c: &mut Criterion) {
    let mut group = c.benchmark_group("hierarchy");
    for d in [3usize, 5, 7] {
        let m = GateSpec::sqrt_z(d).matrix().unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(format!("sqrtz_d{d}")), &m, |b, m| {
            b.iter(|| hierarchy_level(m, d, 8, DEFAULT_TOL).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_tree_synthesis, bench_sparse_simulation, bench_dense_oracle, bench_hierarchy);
criterion_main!(benches);
