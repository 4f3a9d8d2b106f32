#![allow(dead_code)]

//! Shared helpers for integration tests: an independent dense-matrix Pauli
//! oracle built by Kronecker products of 2x2 letter matrices, and random
//! state/Hamiltonian generators.

use nalgebra::DMatrix;
use num_complex::Complex64;
use qfikit::hamiltonian::PauliHamiltonian;
use qfikit::lightcone::{random_clifford_circuit, ConnectivityModel};
use qfikit::pauli::{PauliKind, PauliOperator};
use qfikit::state::StabilizerState;
use rand::Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn letter_matrix(x: bool, z: bool) -> DMatrix<Complex64> {
    let (a, b, cc, d) = match (x, z) {
        (false, false) => (c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)),
        (true, false) => (c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)),
        (true, true) => (c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)), // Y
        (false, true) => (c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)),
    };
    DMatrix::from_row_slice(2, 2, &[a, b, cc, d])
}

/// Independent oracle: phase * kron of Hermitian letter matrices, with the
/// phase read off relative to the letter form. Qubit 0 is the least
/// significant index bit, so it is the last Kronecker factor.
pub fn dense_pauli_oracle(op: &PauliOperator) -> DMatrix<Complex64> {
    let n = op.num_qubits();
    let y_count = op.x_bits().and_count(op.z_bits()) as u8;
    let rel = (4 + op.phase_exp() - (y_count & 3)) & 3;
    let phase = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)][rel as usize];
    let mut m = DMatrix::from_element(1, 1, phase);
    for q in (0..n).rev() {
        m = m.kronecker(&letter_matrix(op.x_bits().get(q), op.z_bits().get(q)));
    }
    m
}

pub fn random_pauli<R: Rng>(n: usize, rng: &mut R) -> PauliOperator {
    let mut op = PauliOperator::identity(n);
    for q in 0..n {
        let kind = match rng.random_range(0..4u8) {
            0 => continue,
            1 => PauliKind::X,
            2 => PauliKind::Y,
            _ => PauliKind::Z,
        };
        op = op.mul(&PauliOperator::single(n, q, kind)).unwrap();
    }
    if rng.random::<bool>() {
        op = op.mul_phase(2);
    }
    op
}

/// Random Hermitian Pauli on exactly the given distinct qubits.
pub fn random_term<R: Rng>(n: usize, qubits: &[usize], rng: &mut R) -> PauliOperator {
    let mut op = PauliOperator::identity(n);
    for &q in qubits {
        let kind = match rng.random_range(0..3u8) {
            0 => PauliKind::X,
            1 => PauliKind::Y,
            _ => PauliKind::Z,
        };
        op = op.mul(&PauliOperator::single(n, q, kind)).unwrap();
    }
    op
}

/// Random Hamiltonian with m terms of support size <= max_locality and
/// coefficients in [-1, 1].
pub fn random_hamiltonian<R: Rng>(
    n: usize,
    max_locality: usize,
    m: usize,
    rng: &mut R,
) -> PauliHamiltonian {
    let mut terms = Vec::with_capacity(m);
    for _ in 0..m {
        let size = rng.random_range(1..=max_locality.min(n));
        let mut qubits: Vec<usize> = Vec::with_capacity(size);
        while qubits.len() < size {
            let q = rng.random_range(0..n);
            if !qubits.contains(&q) {
                qubits.push(q);
            }
        }
        let coeff = rng.random_range(-1.0..=1.0);
        terms.push((coeff, random_term(n, &qubits, rng)));
    }
    PauliHamiltonian::new(n, terms).unwrap()
}

/// Random stabilizer state from a deep all-to-all random Clifford circuit.
pub fn random_stabilizer_state(n: usize, seed: u64) -> StabilizerState {
    let model = ConnectivityModel::AllToAll { kappa: 2 };
    let depth = (n as u32).max(4);
    let circuit = random_clifford_circuit(n, depth, &model, seed);
    circuit
        .apply_to(&StabilizerState::computational_basis(n))
        .unwrap()
}
