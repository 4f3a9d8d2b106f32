//! Dense statevector / eigendecomposition oracles.
//!
//! Independent of the stabilizer fast path: states are reconstructed by
//! projector application, Hamiltonians act term-by-term on statevectors
//! (never as 2^n x 2^n Pauli matrices except in the mixed-state route),
//! and the mixed-state QFI comes from a full Hermitian eigendecomposition.
//! Qubit 0 is the least significant index bit.

use crate::error::{Error, Result};
use crate::hamiltonian::PauliHamiltonian;
use crate::pauli::PauliOperator;
use crate::state::StabilizerState;
pub use nalgebra::DMatrix;
pub use num_complex::Complex64;

pub const DEFAULT_DENSE_QUBITS: usize = 14;
pub const MIXED_DENSE_QUBITS: usize = 10;
pub const DEFAULT_EIGENCUT: f64 = 1e-12;

const PHASES: [Complex64; 4] = [
    Complex64::new(1.0, 0.0),
    Complex64::new(0.0, 1.0),
    Complex64::new(-1.0, 0.0),
    Complex64::new(0.0, -1.0),
];

/// P |v> for P = i^phi X^x Z^z: out[i ^ x] += i^phi (-1)^{z.i} v[i].
pub fn apply_pauli(op: &PauliOperator, v: &[Complex64]) -> Vec<Complex64> {
    let n = op.num_qubits();
    assert!(n <= 26, "statevector too large");
    assert_eq!(v.len(), 1 << n);
    let x_mask = op.x_bits().as_u64() as usize;
    let z_mask = op.z_bits().as_u64() as usize;
    let phase = PHASES[op.phase_exp() as usize];
    let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
    for (i, &amp) in v.iter().enumerate() {
        let sign = if ((z_mask & i).count_ones() & 1) == 1 { -1.0 } else { 1.0 };
        out[i ^ x_mask] += phase * sign * amp;
    }
    out
}

/// H |v> term by term.
pub fn apply_hamiltonian(h: &PauliHamiltonian, v: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); v.len()];
    for (c, op) in h.terms() {
        let term = apply_pauli(op, v);
        for (o, t) in out.iter_mut().zip(term) {
            *o += c * t;
        }
    }
    out
}

pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// <v| P |v> without materializing P.
pub fn expectation_dense(op: &PauliOperator, v: &[Complex64]) -> Complex64 {
    inner(v, &apply_pauli(op, v))
}

/// Reconstruct the statevector of a stabilizer state: find a computational
/// basis state with nonzero overlap by solving the Z-only subgroup sign
/// constraints, then apply the projectors (1 + s_i g_i)/2.
pub fn statevector(state: &StabilizerState) -> Vec<Complex64> {
    let n = state.num_qubits();
    assert!(n <= 26, "statevector too large");
    // Combinations a with sum_i a_i x_i = 0 give Z-only group elements.
    let x_rows = crate::bits::BitMatrix::from_rows(
        n,
        state.generators().iter().map(|g| g.x_bits().clone()).collect(),
    );
    let combos = x_rows.left_kernel_basis();
    let mut constraint_rows = Vec::with_capacity(combos.len());
    let mut rhs_bits = Vec::with_capacity(combos.len());
    for a in &combos {
        let mut prod = PauliOperator::identity(n);
        let mut sign = 1i8;
        for i in a.ones() {
            prod = prod.mul(&state.generators()[i]).expect("same width");
            sign *= state.signs()[i];
        }
        debug_assert!(prod.x_bits().is_zero());
        // prod = i^p Z^u with p even; eigenvalue on |x> is i^p (-1)^{u.x}.
        let extra_minus = prod.phase_exp() == 2;
        constraint_rows.push(prod.z_bits().clone());
        rhs_bits.push((sign == -1) ^ extra_minus);
    }
    let m = crate::bits::BitMatrix::from_rows(n, constraint_rows);
    let b = crate::bits::BitVec::from_bools(&rhs_bits);
    let x0 = m.solve(&b).expect("stabilizer state has a support basis state");
    let mut v = vec![Complex64::new(0.0, 0.0); 1 << n];
    v[x0.as_u64() as usize] = Complex64::new(1.0, 0.0);
    for (g, &s) in state.generators().iter().zip(state.signs()) {
        let gv = apply_pauli(g, &v);
        for (vi, gvi) in v.iter_mut().zip(gv) {
            *vi = 0.5 * (*vi + (s as f64) * gvi);
        }
    }
    let norm = inner(&v, &v).re.sqrt();
    assert!(norm > 1e-9, "projector cascade annihilated the start vector");
    for vi in v.iter_mut() {
        *vi /= norm;
    }
    v
}

/// Pure-state QFI <H^2> - |<H>|^2 by sparse term application.
pub fn qfi_pure_dense(psi: &[Complex64], h: &PauliHamiltonian) -> Result<f64> {
    qfi_pure_dense_with(psi, h, DEFAULT_DENSE_QUBITS)
}

pub fn qfi_pure_dense_with(psi: &[Complex64], h: &PauliHamiltonian, max_qubits: usize) -> Result<f64> {
    let n = h.num_qubits();
    if n > max_qubits || psi.len() != 1 << n {
        return Err(Error::BudgetExceeded { best: None });
    }
    let norm = inner(psi, psi).re.sqrt();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::NotNormalized(norm));
    }
    let hpsi = apply_hamiltonian(h, psi);
    let h2 = inner(&hpsi, &hpsi).re;
    let h1 = inner(psi, &hpsi);
    Ok(h2 - h1.norm_sqr())
}

/// Dense matrix of a Pauli (mixed-state oracle only).
pub fn pauli_matrix(op: &PauliOperator) -> DMatrix<Complex64> {
    let n = op.num_qubits();
    assert!(n <= MIXED_DENSE_QUBITS, "dense matrix too large");
    let dim = 1usize << n;
    let x_mask = op.x_bits().as_u64() as usize;
    let z_mask = op.z_bits().as_u64() as usize;
    let phase = PHASES[op.phase_exp() as usize];
    let mut m = DMatrix::zeros(dim, dim);
    for col in 0..dim {
        let sign = if ((z_mask & col).count_ones() & 1) == 1 { -1.0 } else { 1.0 };
        m[(col ^ x_mask, col)] = phase * sign;
    }
    m
}

pub fn hamiltonian_matrix(h: &PauliHamiltonian) -> DMatrix<Complex64> {
    let dim = 1usize << h.num_qubits();
    let mut m = DMatrix::zeros(dim, dim);
    for (c, op) in h.terms() {
        m += pauli_matrix(op) * Complex64::new(*c, 0.0);
    }
    m
}

pub fn density_from_pure(psi: &[Complex64]) -> DMatrix<Complex64> {
    let dim = psi.len();
    DMatrix::from_fn(dim, dim, |i, j| psi[i] * psi[j].conj())
}

/// Mixed-state QFI from the eigendecomposition of rho:
/// F = 1/2 sum_{l_i + l_j > eigencut} (l_i - l_j)^2 / (l_i + l_j) |<i|H|j>|^2.
pub fn qfi_mixed_dense(rho: &DMatrix<Complex64>, h: &PauliHamiltonian, eigencut: f64) -> Result<f64> {
    let dim = rho.nrows();
    if rho.ncols() != dim || dim != 1 << h.num_qubits() {
        return Err(Error::NotDensityMatrix("dimension mismatch with Hamiltonian".into()));
    }
    if h.num_qubits() > MIXED_DENSE_QUBITS {
        return Err(Error::BudgetExceeded { best: None });
    }
    let herm_err = (rho - rho.adjoint()).norm();
    if herm_err > 1e-10 {
        return Err(Error::NotDensityMatrix(format!("not Hermitian (residual {herm_err:.2e})")));
    }
    let trace = rho.trace();
    if (trace.re - 1.0).abs() > 1e-10 || trace.im.abs() > 1e-10 {
        return Err(Error::NotDensityMatrix(format!("trace = {trace}")));
    }
    let eig = nalgebra::linalg::SymmetricEigen::new(rho.clone());
    let lambdas = &eig.eigenvalues;
    if lambdas.iter().any(|&l| l < -1e-10) {
        return Err(Error::NotDensityMatrix(format!(
            "negative eigenvalue {}",
            lambdas.iter().cloned().fold(f64::INFINITY, f64::min)
        )));
    }
    // H in the eigenbasis.
    let hm = hamiltonian_matrix(h);
    let hv = eig.eigenvectors.adjoint() * hm * &eig.eigenvectors;
    let mut f = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            let s = lambdas[i] + lambdas[j];
            if s > eigencut {
                let d = lambdas[i] - lambdas[j];
                f += 0.5 * d * d / s * hv[(i, j)].norm_sqr();
            }
        }
    }
    Ok(f)
}

#[derive(Debug, Clone, Copy)]
pub struct ConvexityReport {
    pub lhs: f64,
    pub rhs: f64,
    pub ok: bool,
}

/// Check F(sum_i l_i |psi_i><psi_i|) <= sum_i l_i F(psi_i).
pub fn convexity_check(
    decomposition: &[(f64, Vec<Complex64>)],
    h: &PauliHamiltonian,
) -> Result<ConvexityReport> {
    if decomposition.is_empty() {
        return Err(Error::InvalidDecomposition("empty decomposition".into()));
    }
    let total: f64 = decomposition.iter().map(|(l, _)| l).sum();
    if decomposition.iter().any(|(l, _)| *l < -1e-12) || (total - 1.0).abs() > 1e-10 {
        return Err(Error::InvalidDecomposition(format!(
            "weights must be nonnegative and sum to 1 (sum = {total})"
        )));
    }
    let dim = 1usize << h.num_qubits();
    let mut rho = DMatrix::zeros(dim, dim);
    let mut rhs = 0.0;
    for (l, psi) in decomposition {
        if psi.len() != dim {
            return Err(Error::InvalidDecomposition("component dimension mismatch".into()));
        }
        let norm = inner(psi, psi).re.sqrt();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized(norm));
        }
        rho += density_from_pure(psi) * Complex64::new(*l, 0.0);
        rhs += l * qfi_pure_dense_with(psi, h, MIXED_DENSE_QUBITS)?;
    }
    let lhs = qfi_mixed_dense(&rho, h, DEFAULT_EIGENCUT)?;
    Ok(ConvexityReport { lhs, rhs, ok: lhs <= rhs + 1e-8 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::sum_z;
    use crate::pauli::PauliKind;
    use crate::state::ghz_state;

    fn ham(n: usize, terms: &[(f64, &str)]) -> PauliHamiltonian {
        PauliHamiltonian::new(
            n,
            terms.iter().map(|(c, s)| (*c, s.parse().unwrap())).collect(),
        )
        .unwrap()
    }

    #[test]
    fn plus_state_variance() {
        // |+> via statevector of the X-stabilized state
        let st = StabilizerState::new(
            vec![PauliOperator::single(1, 0, PauliKind::X)],
            vec![1],
        )
        .unwrap();
        let psi = statevector(&st);
        let h = ham(1, &[(1.0, "Z")]);
        assert!((qfi_pure_dense(&psi, &h).unwrap() - 1.0).abs() < 1e-12);
        // |0>: variance 0
        let zero = statevector(&StabilizerState::computational_basis(1));
        assert!(qfi_pure_dense(&zero, &h).unwrap().abs() < 1e-12);
    }

    #[test]
    fn ghz_statevector_matches_fast_path() {
        let st = ghz_state(3);
        let psi = statevector(&st);
        // amplitudes concentrated on |000> and |111>
        assert!((psi[0].norm() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((psi[7].norm() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        let h = sum_z(3);
        let dense = qfi_pure_dense(&psi, &h).unwrap();
        assert!((dense - 9.0).abs() < 1e-12);
    }

    #[test]
    fn statevector_of_negative_sign_state() {
        // -Z stabilizer = |1>
        let st = StabilizerState::new(
            vec![PauliOperator::single(1, 0, PauliKind::Z)],
            vec![-1],
        )
        .unwrap();
        let psi = statevector(&st);
        assert!((psi[1].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mixed_state_closed_form() {
        // rho = diag(0.75, 0.25), H = X: F = (2*0.75 - 1)^2 = 0.25
        let mut rho = DMatrix::zeros(2, 2);
        rho[(0, 0)] = Complex64::new(0.75, 0.0);
        rho[(1, 1)] = Complex64::new(0.25, 0.0);
        let h = ham(1, &[(1.0, "X")]);
        let f = qfi_mixed_dense(&rho, &h, DEFAULT_EIGENCUT).unwrap();
        assert!((f - 0.25).abs() < 1e-10);
        // maximally mixed: 0
        let mut half = DMatrix::zeros(2, 2);
        half[(0, 0)] = Complex64::new(0.5, 0.0);
        half[(1, 1)] = Complex64::new(0.5, 0.0);
        let f = qfi_mixed_dense(&half, &ham(1, &[(1.0, "Z")]), DEFAULT_EIGENCUT).unwrap();
        assert!(f.abs() < 1e-10);
    }

    #[test]
    fn mixed_reduces_to_pure() {
        let st = ghz_state(2);
        let psi = statevector(&st);
        let h = sum_z(2);
        let rho = density_from_pure(&psi);
        let fm = qfi_mixed_dense(&rho, &h, DEFAULT_EIGENCUT).unwrap();
        let fp = qfi_pure_dense(&psi, &h).unwrap();
        assert!((fm - fp).abs() < 1e-9);
    }

    #[test]
    fn convexity_simple_cases() {
        let h = ham(1, &[(1.0, "X")]);
        let zero = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
        let one = vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        // single pure component: lhs == rhs
        let rep = convexity_check(&[(1.0, zero.clone())], &h).unwrap();
        assert!(rep.ok && (rep.lhs - rep.rhs).abs() < 1e-9);
        // equal mixture of |0>, |1> with H = X: lhs 0 <= rhs 1
        let rep = convexity_check(&[(0.5, zero), (0.5, one)], &h).unwrap();
        assert!(rep.ok);
        assert!(rep.lhs.abs() < 1e-9);
        assert!((rep.rhs - 1.0).abs() < 1e-9);
    }

    #[test]
    fn pure_path_guards() {
        let h = ham(1, &[(1.0, "Z")]);
        let long = vec![Complex64::new(0.5, 0.0); 2];
        assert!(matches!(qfi_pure_dense(&long, &h), Err(Error::NotNormalized(_))));
        // budget: a 15-qubit Hamiltonian exceeds the default dense window
        let mut terms = Vec::new();
        terms.push((1.0, PauliOperator::single(15, 0, PauliKind::Z)));
        let big = PauliHamiltonian::new(15, terms).unwrap();
        let psi = vec![Complex64::new(0.0, 0.0); 1 << 15];
        assert!(matches!(
            qfi_pure_dense(&psi, &big),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn rejects_bad_density_matrices() {
        let h = ham(1, &[(1.0, "X")]);
        let mut rho = DMatrix::zeros(2, 2);
        rho[(0, 0)] = Complex64::new(0.9, 0.0);
        rho[(1, 1)] = Complex64::new(0.9, 0.0);
        assert!(matches!(
            qfi_mixed_dense(&rho, &h, DEFAULT_EIGENCUT),
            Err(Error::NotDensityMatrix(_))
        ));
        rho[(1, 1)] = Complex64::new(0.1, 0.0);
        rho[(0, 1)] = Complex64::new(0.5, 0.3);
        assert!(qfi_mixed_dense(&rho, &h, DEFAULT_EIGENCUT).is_err());
    }
}
