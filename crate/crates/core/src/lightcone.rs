//! Lightcones of layered local circuits, the operator-diffusion growth
//! function, the depth-dependent QFI upper bound, and an empirical verifier
//! over random shallow Clifford circuits.

use crate::clifford::{CliffordGate, PlacedGate};
use crate::error::{Error, Result};
use crate::hamiltonian::PauliHamiltonian;
use crate::qfi::qfi_stabilizer;
use crate::state::StabilizerState;
use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Gate connectivity model; `kappa` is the gate locality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectivityModel {
    AllToAll { kappa: u32 },
    Grid { r: u32, kappa: u32 },
}

impl ConnectivityModel {
    pub fn kappa(&self) -> u32 {
        match *self {
            ConnectivityModel::AllToAll { kappa } => kappa,
            ConnectivityModel::Grid { kappa, .. } => kappa,
        }
    }
}

/// Worst-case lightcone growth factor of a depth-t circuit:
/// kappa^t for all-to-all connectivity, (2(kappa-1)t + 1)^r on an r-dim grid.
pub fn g_function(model: &ConnectivityModel, t: u32) -> BigUint {
    match *model {
        ConnectivityModel::AllToAll { kappa } => BigUint::from(kappa).pow(t),
        ConnectivityModel::Grid { r, kappa } => {
            BigUint::from(2u32 * (kappa - 1) * t + 1u32).pow(r)
        }
    }
}

/// QFI upper bound m K^2 g(kappa, 2t) for a K-local Hamiltonian measured on a
/// state prepared by a depth-t circuit.
pub fn depth_qfi_bound(m: u64, k: u64, model: &ConnectivityModel, t: u32) -> BigUint {
    BigUint::from(m) * BigUint::from(k * k) * g_function(model, 2 * t)
}

/// Layered circuit; each layer's gate supports are pairwise disjoint.
#[derive(Debug, Clone, PartialEq)]
pub struct LayeredCircuit {
    pub n: usize,
    pub layers: Vec<Vec<PlacedGate>>,
}

impl LayeredCircuit {
    pub fn new(n: usize, layers: Vec<Vec<PlacedGate>>) -> Result<Self> {
        for layer in &layers {
            let mut seen = vec![false; n];
            for gate in layer {
                for &q in &gate.qubits {
                    if q >= n {
                        return Err(Error::DimensionMismatch(q, n));
                    }
                    if seen[q] {
                        return Err(Error::OverlappingSupports);
                    }
                    seen[q] = true;
                }
            }
        }
        Ok(LayeredCircuit { n, layers })
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn max_gate_size(&self) -> usize {
        self.layers
            .iter()
            .flatten()
            .map(|g| g.qubits.len())
            .max()
            .unwrap_or(0)
    }

    /// Apply to |0^n> (or any given state).
    pub fn apply_to(&self, state: &StabilizerState) -> Result<StabilizerState> {
        let mut st = state.clone();
        for layer in &self.layers {
            st = st.apply_layer(layer)?;
        }
        Ok(st)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Per-layer recursion LC(A) = A union { blocks B intersecting A }; backward
/// traverses the adjoint circuit (reversed layer order).
pub fn lightcone(
    circuit: &LayeredCircuit,
    initial: &BTreeSet<usize>,
    direction: Direction,
) -> BTreeSet<usize> {
    let mut set = initial.clone();
    let layers: Vec<&Vec<PlacedGate>> = match direction {
        Direction::Forward => circuit.layers.iter().collect(),
        Direction::Backward => circuit.layers.iter().rev().collect(),
    };
    for layer in layers {
        let mut grown = set.clone();
        for gate in layer {
            if gate.qubits.iter().any(|q| set.contains(q)) {
                grown.extend(gate.qubits.iter().copied());
            }
        }
        set = grown;
    }
    set
}

/// Pairs (j, j') of Hamiltonian terms whose forward lightcones through the
/// preparation circuit are disjoint; their correlation in the prepared state
/// is provably zero.
pub fn correlation_prune_pairs(
    circuit: &LayeredCircuit,
    h: &PauliHamiltonian,
) -> Vec<(usize, usize)> {
    let cones: Vec<BTreeSet<usize>> = h
        .terms()
        .iter()
        .map(|(_, op)| {
            let set: BTreeSet<usize> = op.support().into_iter().collect();
            lightcone(circuit, &set, Direction::Forward)
        })
        .collect();
    let mut pairs = Vec::new();
    for j in 0..cones.len() {
        for j2 in (j + 1)..cones.len() {
            if cones[j].is_disjoint(&cones[j2]) {
                pairs.push((j, j2));
            }
        }
    }
    pairs
}

/// Kind of random circuit: 1D brickwork (grid r=1, kappa=2) or random
/// disjoint pairings (all-to-all, kappa=2).
pub fn random_clifford_circuit(
    n: usize,
    t: u32,
    model: &ConnectivityModel,
    seed: u64,
) -> LayeredCircuit {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut layers = Vec::with_capacity(t as usize);
    for layer_idx in 1..=t {
        let pairs: Vec<(usize, usize)> = match model {
            ConnectivityModel::Grid { r: 1, kappa: 2 } => {
                // layer 1, 3, ... pair (2i, 2i+1); layer 2, 4, ... pair (2i+1, 2i+2)
                let start = if layer_idx % 2 == 1 { 0 } else { 1 };
                (start..n.saturating_sub(1))
                    .step_by(2)
                    .map(|q| (q, q + 1))
                    .collect()
            }
            ConnectivityModel::AllToAll { kappa: 2 } => {
                let mut order: Vec<usize> = (0..n).collect();
                order.shuffle(&mut rng);
                order.chunks_exact(2).map(|c| (c[0], c[1])).collect()
            }
            other => panic!("random circuits are only generated for 1D brickwork and all-to-all kappa=2 models, got {other:?}"),
        };
        let layer = pairs
            .into_iter()
            .map(|(a, b)| PlacedGate::new(vec![a, b], CliffordGate::random_two_qubit(&mut rng)))
            .collect();
        layers.push(layer);
    }
    LayeredCircuit::new(n, layers).expect("disjoint by construction")
}

#[derive(Debug, Clone)]
pub struct DepthBoundReport {
    pub bound: f64,
    pub max_qfi: f64,
    pub max_ratio: f64,
    pub trials: usize,
    pub violations: usize,
}

impl DepthBoundReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "bound": self.bound,
            "max_qfi": self.max_qfi,
            "max_ratio": self.max_ratio,
            "trials": self.trials,
            "violations": self.violations,
        })
    }
}

/// Prepare `trials` random depth-t states, compute their exact QFI, and check
/// each against m K^2 g(kappa, 2t). A violation is fatal: the bound is a
/// theorem, so exceeding it means the implementation is wrong.
pub fn verify_depth_bound(
    n: usize,
    t: u32,
    model: &ConnectivityModel,
    h: &PauliHamiltonian,
    trials: usize,
    seed: u64,
) -> Result<DepthBoundReport> {
    let profile = h.locality_profile();
    if h.max_abs_coeff() > 1.0 + 1e-12 {
        return Err(Error::InvalidTerm {
            index: 0,
            reason: "bound requires unit-norm terms".into(),
        });
    }
    let bound_big = depth_qfi_bound(profile.m as u64, profile.k() as u64, model, t);
    let bound: f64 = bound_big.to_string().parse().expect("bound fits in f64");
    let zero = StabilizerState::computational_basis(n);
    let mut max_qfi: f64 = 0.0;
    for trial in 0..trials {
        let circuit = random_clifford_circuit(n, t, model, seed.wrapping_add(trial as u64));
        let state = circuit.apply_to(&zero)?;
        let qfi = qfi_stabilizer(&state, h)?.value;
        if qfi > bound + 1e-9 {
            return Err(Error::BoundViolation { qfi, bound });
        }
        max_qfi = max_qfi.max(qfi);
    }
    Ok(DepthBoundReport {
        bound,
        max_qfi,
        max_ratio: if bound > 0.0 { max_qfi / bound } else { 0.0 },
        trials,
        violations: 0,
    })
}
