//! Exact QFI on stabilizer states via correlation-function sums.
//!
//! For a pure state, F(psi, H) = <H^2> - <H>^2
//!                             = sum_{j,j'} c_j c_j' Cor(op_j, op_j'),
//! and every Cor entry on a stabilizer state is an exact 0 or +-1 (minus the
//! product of +-1/0 single-term expectations), so the sum is exact. No
//! statevector is ever built. Convention: no factor 4.

use crate::error::Result;
use crate::hamiltonian::PauliHamiltonian;
use crate::pauli::PauliOperator;
use crate::state::StabilizerState;
use rayon::prelude::*;

/// Named bound recorded alongside a QFI value.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub name: String,
    pub value: f64,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct QfiReport {
    pub value: f64,
    pub m: usize,
    pub k_support: u32,
    pub k_degree: u32,
    /// Full m x m correlation matrix, materialized only for small m.
    pub correlation_matrix: Option<Vec<Vec<f64>>>,
    pub bounds: Vec<BoundCheck>,
}

impl QfiReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "value": self.value,
            "m": self.m,
            "K_support": self.k_support,
            "K_degree": self.k_degree,
            "bounds": self.bounds.iter().map(|b| serde_json::json!({
                "name": b.name,
                "value": b.value,
                "ok": b.ok,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Cor(P, Q) = Re<PQ> - <P><Q> for Hermitian P, Q. The real part is the piece
/// that survives in the symmetrized QFI sum; <PQ> itself is imaginary exactly
/// when P and Q anticommute and the product sits in the stabilizer group.
pub fn correlation(state: &StabilizerState, p: &PauliOperator, q: &PauliOperator) -> Result<f64> {
    let ep = state.expectation(p)? as f64;
    let eq = state.expectation(q)? as f64;
    Ok(state.product_expectation_real(p, q)? - ep * eq)
}

/// Matrix materialization threshold for [`qfi_stabilizer`].
pub const DEFAULT_MATRIX_THRESHOLD: usize = 512;

pub fn qfi_stabilizer(state: &StabilizerState, h: &PauliHamiltonian) -> Result<QfiReport> {
    qfi_stabilizer_with(state, h, DEFAULT_MATRIX_THRESHOLD)
}

/// QFI via the pairwise correlation sum; O(m^2) membership solves,
/// parallelized over pairs with a deterministic final reduction.
pub fn qfi_stabilizer_with(
    state: &StabilizerState,
    h: &PauliHamiltonian,
    matrix_threshold: usize,
) -> Result<QfiReport> {
    let profile = h.locality_profile();
    let terms = h.terms();
    let m = terms.len();
    let single: Vec<f64> = terms
        .iter()
        .map(|(_, op)| state.expectation(op).map(|e| e as f64))
        .collect::<Result<_>>()?;
    // Upper-triangle pairs, j < j'; the diagonal is 1 - <op_j>^2 exactly.
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|j| ((j + 1)..m).map(move |j2| (j, j2)))
        .collect();
    let upper: Vec<f64> = pairs
        .par_iter()
        .map(|&(j, j2)| {
            let re = state
                .product_expectation_real(&terms[j].1, &terms[j2].1)
                .expect("dimensions already validated");
            re - single[j] * single[j2]
        })
        .collect();
    let mut value = 0.0;
    for j in 0..m {
        value += terms[j].0 * terms[j].0 * (1.0 - single[j] * single[j]);
    }
    for (idx, &(j, j2)) in pairs.iter().enumerate() {
        value += 2.0 * terms[j].0 * terms[j2].0 * upper[idx];
    }
    let correlation_matrix = if m <= matrix_threshold {
        let mut mat = vec![vec![0.0; m]; m];
        for j in 0..m {
            mat[j][j] = 1.0 - single[j] * single[j];
        }
        for (idx, &(j, j2)) in pairs.iter().enumerate() {
            mat[j][j2] = upper[idx];
            mat[j2][j] = upper[idx];
        }
        Some(mat)
    } else {
        None
    };
    Ok(QfiReport {
        value,
        m,
        k_support: profile.k_support,
        k_degree: profile.k_degree,
        correlation_matrix,
        bounds: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::sum_z;
    use crate::state::{ghz_state, StabilizerState};

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn ghz_correlations() {
        let st = ghz_state(4);
        assert_eq!(correlation(&st, &p("ZIII"), &p("IZII")).unwrap(), 1.0);
        assert_eq!(correlation(&st, &p("ZIII"), &p("ZIII")).unwrap(), 1.0);
        let zero = StabilizerState::computational_basis(4);
        assert_eq!(correlation(&zero, &p("ZIII"), &p("IZII")).unwrap(), 0.0);
        // P = Q Hermitian: 1 - <P>^2
        assert_eq!(correlation(&zero, &p("ZIII"), &p("ZIII")).unwrap(), 0.0);
        assert_eq!(correlation(&zero, &p("XIII"), &p("XIII")).unwrap(), 1.0);
    }

    #[test]
    fn ghz_qfi_is_n_squared() {
        for n in 2..=8 {
            let st = ghz_state(n);
            let h = sum_z(n);
            let report = qfi_stabilizer(&st, &h).unwrap();
            assert_eq!(report.value, (n * n) as f64);
            assert_eq!(report.m, n);
        }
    }

    #[test]
    fn zero_state_qfi_vanishes() {
        let st = StabilizerState::computational_basis(6);
        let report = qfi_stabilizer(&st, &sum_z(6)).unwrap();
        assert_eq!(report.value, 0.0);
    }

    #[test]
    fn scaling_is_quadratic() {
        let st = ghz_state(4);
        let h = sum_z(4);
        let base = qfi_stabilizer(&st, &h).unwrap().value;
        for a in [2.0, -1.0, 0.5] {
            let scaled = qfi_stabilizer(&st, &h.scale(a)).unwrap().value;
            assert!((scaled - a * a * base).abs() < 1e-12);
        }
    }

    #[test]
    fn matrix_materialization_threshold() {
        let st = ghz_state(4);
        let h = sum_z(4);
        let with = qfi_stabilizer_with(&st, &h, 512).unwrap();
        let mat = with.correlation_matrix.unwrap();
        let total: f64 = mat.iter().flatten().sum();
        assert_eq!(total, with.value);
        let without = qfi_stabilizer_with(&st, &h, 2).unwrap();
        assert!(without.correlation_matrix.is_none());
        assert_eq!(without.value, with.value);
    }

    #[test]
    fn report_json_schema() {
        let st = ghz_state(3);
        let report = qfi_stabilizer(&st, &sum_z(3)).unwrap();
        let v = report.to_json();
        assert_eq!(v["value"], 9.0);
        assert_eq!(v["m"], 3);
        assert_eq!(v["K_support"], 1);
        assert_eq!(v["K_degree"], 1);
        assert!(v["bounds"].as_array().unwrap().is_empty());
    }
}
