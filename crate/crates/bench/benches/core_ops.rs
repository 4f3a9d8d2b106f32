use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qfikit::constructions::{asymmetric_toric_bundle, bfs_cascade_bundle, ghz_bundle};
use qfikit::graph::Graph;
use qfikit::lightcone::{random_clifford_circuit, ConnectivityModel};
use qfikit::qfi::qfi_stabilizer;
use qfikit::state::StabilizerState;
use qfikit_bench::mixed_pauli;
use std::hint::black_box;

fn pauli_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("pauli");
    for n in [64usize, 1024, 4096] {
        let a = mixed_pauli(n, 1);
        let b = mixed_pauli(n, 2);
        group.bench_with_input(BenchmarkId::new("mul", n), &n, |bench, _| {
            bench.iter(|| black_box(a.mul(&b).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("commutes", n), &n, |bench, _| {
            bench.iter(|| black_box(a.commutes_with(&b).unwrap()))
        });
    }
    group.finish();
}

fn expectation_solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("expectation");
    for n in [64usize, 256] {
        let bundle = ghz_bundle(n).unwrap();
        let op = qfikit::pauli::PauliOperator::z_on(n, &[0, n / 2]);
        group.bench_with_input(BenchmarkId::new("ghz_zz", n), &n, |bench, _| {
            bench.iter(|| black_box(bundle.state.expectation(&op).unwrap()))
        });
    }
    group.finish();
}

fn qfi_families(c: &mut Criterion) {
    let mut group = c.benchmark_group("qfi");
    group.sample_size(20);
    for n in [64usize, 256] {
        let bundle = ghz_bundle(n).unwrap();
        group.bench_with_input(BenchmarkId::new("ghz", n), &n, |bench, _| {
            bench.iter(|| black_box(qfi_stabilizer(&bundle.state, &bundle.hamiltonian).unwrap().value))
        });
    }
    let asym = asymmetric_toric_bundle(2, 32).unwrap();
    group.bench_function("asym_toric_c2_lx32", |bench| {
        bench.iter(|| black_box(qfi_stabilizer(&asym.state, &asym.hamiltonian).unwrap().value))
    });
    let (cascade, _) = bfs_cascade_bundle(&Graph::cycle(128), 0, 1).unwrap();
    group.bench_function("cascade_cycle128", |bench| {
        bench.iter(|| black_box(qfi_stabilizer(&cascade.state, &cascade.hamiltonian).unwrap().value))
    });
    group.finish();
}

fn circuit_simulation(c: &mut Criterion) {
    let mut group = c.benchmark_group("circuits");
    group.sample_size(20);
    let model = ConnectivityModel::Grid { r: 1, kappa: 2 };
    for (n, t) in [(24usize, 4u32), (64, 8)] {
        let circuit = random_clifford_circuit(n, t, &model, 11);
        let zero = StabilizerState::computational_basis(n);
        group.bench_with_input(
            BenchmarkId::new("brickwork_apply", format!("n{n}_t{t}")),
            &n,
            |bench, _| bench.iter(|| black_box(circuit.apply_to(&zero).unwrap())),
        );
    }
    group.finish();
}

criterion_group!(benches, pauli_ops, expectation_solve, qfi_families, circuit_simulation);
criterion_main!(benches);
