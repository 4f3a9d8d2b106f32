//! Pauli-sum Hamiltonians with locality metadata.

use crate::error::{Error, Result};
use crate::pauli::PauliOperator;

/// Locality profile of a term list: max term support size, max per-qubit
/// degree, and term count. The K entering the theorem bounds is
/// `max(k_support, k_degree)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalityProfile {
    pub k_support: u32,
    pub k_degree: u32,
    pub m: usize,
}

impl LocalityProfile {
    pub fn k(&self) -> u32 {
        self.k_support.max(self.k_degree)
    }
}

/// H = sum_j coeff_j * op_j with Hermitian, traceless (non-identity) terms and
/// per-term norm |coeff_j| <= 1.
#[derive(Debug, Clone)]
pub struct PauliHamiltonian {
    n: usize,
    terms: Vec<(f64, PauliOperator)>,
}

impl PauliHamiltonian {
    pub fn new(n: usize, terms: Vec<(f64, PauliOperator)>) -> Result<Self> {
        for (index, (coeff, op)) in terms.iter().enumerate() {
            if op.num_qubits() != n {
                return Err(Error::DimensionMismatch(op.num_qubits(), n));
            }
            if !op.is_hermitian() {
                return Err(Error::InvalidTerm { index, reason: "term is not Hermitian".into() });
            }
            if op.is_identity_projective() {
                return Err(Error::InvalidTerm { index, reason: "identity term not allowed".into() });
            }
            if !coeff.is_finite() {
                return Err(Error::InvalidTerm { index, reason: "coefficient not finite".into() });
            }
            if coeff.abs() > 1.0 + 1e-12 {
                return Err(Error::InvalidTerm {
                    index,
                    reason: format!("|coeff| = {} exceeds the unit-norm bound", coeff.abs()),
                });
            }
        }
        Ok(PauliHamiltonian { n, terms })
    }

    /// a * H. Scaled coefficients may leave the unit-norm window, which is
    /// fine for QFI evaluation; bound verifiers re-check norms themselves.
    pub fn scale(&self, a: f64) -> PauliHamiltonian {
        PauliHamiltonian {
            n: self.n,
            terms: self.terms.iter().map(|(c, op)| (a * c, op.clone())).collect(),
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(f64, PauliOperator)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.iter().map(|(c, _)| c.abs()).fold(0.0, f64::max)
    }

    pub fn locality_profile(&self) -> LocalityProfile {
        let mut k_support = 0u32;
        let mut degree = vec![0u32; self.n];
        for (_, op) in &self.terms {
            let w = op.weight();
            k_support = k_support.max(w);
            for q in op.support() {
                degree[q] += 1;
            }
        }
        LocalityProfile {
            k_support,
            k_degree: degree.iter().copied().max().unwrap_or(0),
            m: self.terms.len(),
        }
    }
}

/// Descriptive K-locality validation; callers decide acceptability.
pub fn validate_k_local(h: &PauliHamiltonian) -> LocalityProfile {
    h.locality_profile()
}

/// H = sum_i Z_i.
pub fn sum_z(n: usize) -> PauliHamiltonian {
    let terms = (0..n)
        .map(|i| (1.0, PauliOperator::single(n, i, crate::pauli::PauliKind::Z)))
        .collect();
    PauliHamiltonian::new(n, terms).expect("valid by construction")
}
