//! Bound verifiers behind `qfikit verify`.
//!
//! `verify 1` (depth bound) lives in the core lightcone module; this file
//! drives the code-state bounds: `verify 2` checks QFI <= m K^2 on
//! nondegenerate code states under random 1-local Hamiltonians, and
//! `verify 3-toric` checks the linear-QFI behavior of toric code states.

use crate::{CliError, CliResult};
use qfikit::constructions::{five_qubit_code, steane_code, toric_code};
use qfikit::dense::{qfi_pure_dense, statevector};
use qfikit::hamiltonian::{sum_z, PauliHamiltonian};
use qfikit::pauli::{PauliKind, PauliOperator};
use qfikit::qfi::qfi_stabilizer;
use qfikit::state::{LogicalBasis, StabilizerState};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One random single-qubit Hermitian term per qubit, |coeff| <= 1.
pub fn random_one_local<R: Rng>(n: usize, rng: &mut R) -> PauliHamiltonian {
    let terms = (0..n)
        .map(|q| {
            let kind = match rng.random_range(0..3u8) {
                0 => PauliKind::X,
                1 => PauliKind::Y,
                _ => PauliKind::Z,
            };
            let coeff = rng.random_range(-1.0..=1.0);
            (coeff, PauliOperator::single(n, q, kind))
        })
        .collect();
    PauliHamiltonian::new(n, terms).expect("valid by construction")
}

#[derive(Debug, Clone)]
pub struct CodeBoundReport {
    pub code: String,
    pub n: usize,
    pub m: usize,
    pub bound: f64,
    pub trials: usize,
    pub violations: usize,
    pub max_qfi: f64,
    pub max_dense_diff: Option<f64>,
}

impl CodeBoundReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "code": self.code,
            "n": self.n,
            "m": self.m,
            "bound": self.bound,
            "trials": self.trials,
            "violations": self.violations,
            "max_qfi": self.max_qfi,
            "max_dense_diff": self.max_dense_diff,
        })
    }
}

fn code_state(name: &str) -> CliResult<(usize, StabilizerState)> {
    match name {
        "five-qubit" => {
            let code = five_qubit_code();
            Ok((code.n, code.state(&[LogicalBasis::XPlus])?))
        }
        "steane" => {
            let code = steane_code();
            Ok((code.num_qubits(), code.state(&[LogicalBasis::XPlus])?))
        }
        other => Err(CliError::Input(format!(
            "unknown code {other:?} (expected five-qubit or steane)"
        ))),
    }
}

/// Random 1-local Hamiltonians (m = n terms, unit norms) on a nondegenerate
/// code state: QFI must stay below m K^2 = m; the dense statevector oracle
/// cross-checks every trial.
pub fn verify_code_bound(
    code_name: &str,
    trials: usize,
    seed: u64,
    dense_check: bool,
) -> CliResult<CodeBoundReport> {
    let (n, state) = code_state(code_name)?;
    let psi = if dense_check { Some(statevector(&state)) } else { None };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = n as f64;
    let mut max_qfi: f64 = 0.0;
    let mut max_dense_diff: Option<f64> = None;
    for trial in 0..trials {
        let h = random_one_local(n, &mut rng);
        let qfi = qfi_stabilizer(&state, &h)?.value;
        if qfi > bound + 1e-9 {
            return Err(CliError::AssertionMiss(format!(
                "{code_name} trial {trial}: QFI {qfi} exceeds m K^2 = {bound}"
            )));
        }
        max_qfi = max_qfi.max(qfi);
        if let Some(psi) = &psi {
            let dense = qfi_pure_dense(psi, &h)?;
            let diff = (qfi - dense).abs();
            if diff > 1e-9 {
                return Err(CliError::OracleMismatch(format!(
                    "{code_name} trial {trial}: stabilizer {qfi} vs dense {dense}"
                )));
            }
            max_dense_diff = Some(max_dense_diff.unwrap_or(0.0).max(diff));
        }
    }
    Ok(CodeBoundReport {
        code: code_name.to_string(),
        n,
        m: n,
        bound,
        trials,
        violations: 0,
        max_qfi,
        max_dense_diff,
    })
}

#[derive(Debug, Clone)]
pub struct ToricBoundReport {
    pub l: usize,
    pub n: usize,
    pub m: usize,
    pub uniform_z_qfi: f64,
    pub bound: f64,
    pub trials: usize,
    pub violations: usize,
    pub max_qfi: f64,
}

impl ToricBoundReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "L": self.l,
            "n": self.n,
            "m": self.m,
            "uniform_z_qfi": self.uniform_z_qfi,
            "bound": self.bound,
            "trials": self.trials,
            "violations": self.violations,
            "max_qfi": self.max_qfi,
        })
    }
}

/// Toric(L, L) code state under single-qubit Hamiltonians: with H = sum Z_i
/// every single-qubit expectation and cross-correlation vanishes, so QFI = m
/// exactly; random single-qubit Pauli mixtures stay below m.
pub fn verify_toric_local_bound(l: usize, trials: usize, seed: u64) -> CliResult<ToricBoundReport> {
    let code = toric_code(l, l)?;
    let state = code.state(&[LogicalBasis::XPlus, LogicalBasis::XPlus])?;
    let n = code.num_qubits();
    let h = sum_z(n);
    let report = qfi_stabilizer(&state, &h)?;
    for (_, op) in h.terms() {
        if state.expectation(op)? != 0 {
            return Err(CliError::AssertionMiss(format!(
                "toric({l},{l}): <{op}> is nonzero"
            )));
        }
    }
    if let Some(matrix) = &report.correlation_matrix {
        for (i, row) in matrix.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if i != j && v != 0.0 {
                    return Err(CliError::AssertionMiss(format!(
                        "toric({l},{l}): cross-correlation ({i},{j}) = {v}"
                    )));
                }
            }
        }
    }
    if report.value != n as f64 {
        return Err(CliError::AssertionMiss(format!(
            "toric({l},{l}): QFI {} != m = {n} for uniform Z",
            report.value
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = n as f64;
    let mut max_qfi: f64 = report.value;
    for trial in 0..trials {
        let h = random_one_local(n, &mut rng);
        let qfi = qfi_stabilizer(&state, &h)?.value;
        if qfi > bound + 1e-9 {
            return Err(CliError::AssertionMiss(format!(
                "toric({l},{l}) trial {trial}: QFI {qfi} exceeds m = {bound}"
            )));
        }
        max_qfi = max_qfi.max(qfi);
    }
    Ok(ToricBoundReport {
        l,
        n,
        m: n,
        uniform_z_qfi: report.value,
        bound,
        trials,
        violations: 0,
        max_qfi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_qubit_bound_holds_with_dense_check() {
        let report = verify_code_bound("five-qubit", 20, 7, true).unwrap();
        assert_eq!(report.violations, 0);
        assert!(report.max_qfi <= 5.0);
        assert!(report.max_dense_diff.unwrap() <= 1e-9);
    }

    #[test]
    fn steane_bound_holds() {
        let report = verify_code_bound("steane", 20, 11, true).unwrap();
        assert_eq!(report.violations, 0);
        assert!(report.max_qfi <= 7.0);
    }

    #[test]
    fn toric_two_and_three() {
        for l in [2, 3] {
            let report = verify_toric_local_bound(l, 20, 3).unwrap();
            assert_eq!(report.uniform_z_qfi, (2 * l * l) as f64);
            assert_eq!(report.violations, 0);
        }
    }

    #[test]
    fn unknown_code_rejected() {
        assert!(verify_code_bound("shor", 1, 0, false).is_err());
    }
}
