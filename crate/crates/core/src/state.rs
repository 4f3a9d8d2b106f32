//! Pure stabilizer states as full sign-tracked tableaus.
//!
//! A state is n independent, mutually commuting Hermitian Pauli generators
//! with signs; expectation values of arbitrary Paulis are computed exactly by
//! a GF(2) membership solve followed by an exact phase-tracked product.

use crate::bits::{BitVec, RowSpace};
use crate::clifford::PlacedGate;
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;

/// Eigenbasis choice for one logical qubit when assembling a code state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogicalBasis {
    XPlus,
    XMinus,
    ZPlus,
    ZMinus,
}

#[derive(Clone)]
pub struct StabilizerState {
    n: usize,
    gens: Vec<PauliOperator>,
    signs: Vec<i8>,
    solver: RowSpace,
}

/// Split a Hermitian Pauli into its phase-free canonical form and a sign.
pub(crate) fn canonical_split(p: &PauliOperator) -> Result<(PauliOperator, i8)> {
    if !p.is_hermitian() {
        return Err(Error::NonHermitian);
    }
    let y_count = (p.x_bits().and_count(p.z_bits()) & 3) as u8;
    let rel = (4 + p.phase_exp() - y_count) & 3;
    let canon = PauliOperator::from_parts(
        p.num_qubits(),
        p.x_bits().clone(),
        p.z_bits().clone(),
        y_count,
    );
    Ok((canon, if rel == 0 { 1 } else { -1 }))
}

impl StabilizerState {
    /// Build from Hermitian generators; any sign carried in a generator's
    /// phase is folded into the sign list.
    pub fn new(gens: Vec<PauliOperator>, signs: Vec<i8>) -> Result<Self> {
        let n = match gens.first() {
            Some(g) => g.num_qubits(),
            None => return Err(Error::RankDeficient { rank: 0, needed: 1 }),
        };
        if gens.len() != n || signs.len() != n {
            return Err(Error::RankDeficient { rank: gens.len(), needed: n });
        }
        let mut canon_gens = Vec::with_capacity(n);
        let mut canon_signs = Vec::with_capacity(n);
        for (g, &s) in gens.iter().zip(&signs) {
            if g.num_qubits() != n {
                return Err(Error::DimensionMismatch(g.num_qubits(), n));
            }
            if !(s == 1 || s == -1) {
                return Err(Error::InvalidDecomposition("signs must be +1 or -1".into()));
            }
            let (canon, fold) = canonical_split(g)?;
            canon_gens.push(canon);
            canon_signs.push(s * fold);
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if !canon_gens[i].commutes_with(&canon_gens[j])? {
                    return Err(Error::CommutationViolation);
                }
            }
        }
        let mut solver = RowSpace::new(2 * n);
        for g in &canon_gens {
            solver.insert(&g.symplectic());
        }
        if solver.dim() != n {
            return Err(Error::RankDeficient { rank: solver.dim(), needed: n });
        }
        Ok(StabilizerState { n, gens: canon_gens, signs: canon_signs, solver })
    }

    /// |0...0>: stabilized by +Z_i.
    pub fn computational_basis(n: usize) -> Self {
        let gens = (0..n)
            .map(|i| PauliOperator::single(n, i, crate::pauli::PauliKind::Z))
            .collect();
        StabilizerState::new(gens, vec![1; n]).expect("valid by construction")
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.gens
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// <psi| P |psi> for Hermitian P: +1/-1 if +-P is in the signed stabilizer
    /// group, 0 otherwise.
    pub fn expectation(&self, p: &PauliOperator) -> Result<i8> {
        if !p.is_hermitian() {
            return Err(Error::NonHermitian);
        }
        if p.num_qubits() != self.n {
            return Err(Error::DimensionMismatch(p.num_qubits(), self.n));
        }
        Ok(match self.expectation_phase(p) {
            None => 0,
            Some(0) => 1,
            Some(2) => -1,
            Some(_) => unreachable!("Hermitian expectation must be real"),
        })
    }

    /// <psi| P |psi> as i^t for arbitrary-phase Pauli P, None when 0.
    /// Non-Hermitian P (P = +-i * Hermitian) yields odd t.
    pub(crate) fn expectation_phase(&self, p: &PauliOperator) -> Option<u8> {
        debug_assert_eq!(p.num_qubits(), self.n);
        if p.is_identity_projective() {
            return Some(p.phase_exp());
        }
        let (residual, combo) = self.solver.reduce(&p.symplectic());
        if !residual.is_zero() {
            return None;
        }
        let mut prod = PauliOperator::identity(self.n);
        let mut sign = 1i8;
        for i in combo.ones() {
            prod = prod.mul(&self.gens[i]).expect("same width");
            sign *= self.signs[i];
        }
        let rel = p
            .phase_relative_to(&prod)
            .expect("membership solve yielded matching bits");
        Some((rel + if sign == 1 { 0 } else { 2 }) & 3)
    }

    /// Real part of <P Q>, the piece that enters the QFI sum.
    pub(crate) fn product_expectation_real(&self, p: &PauliOperator, q: &PauliOperator) -> Result<f64> {
        let r = p.mul(q)?;
        Ok(match self.expectation_phase(&r) {
            Some(0) => 1.0,
            Some(2) => -1.0,
            _ => 0.0,
        })
    }

    /// Apply one layer of Clifford gates with pairwise disjoint supports.
    pub fn apply_layer(&self, gates: &[PlacedGate]) -> Result<StabilizerState> {
        let mut seen = BitVec::zeros(self.n);
        for g in gates {
            for &q in &g.qubits {
                if q >= self.n {
                    return Err(Error::DimensionMismatch(q, self.n));
                }
                if seen.get(q) {
                    return Err(Error::OverlappingSupports);
                }
                seen.set(q, true);
            }
        }
        let mut gens = Vec::with_capacity(self.n);
        let mut signs = Vec::with_capacity(self.n);
        for (g, &s) in self.gens.iter().zip(&self.signs) {
            let mut cur = g.clone();
            for gate in gates {
                cur = gate.conjugate(&cur)?;
            }
            let (canon, fold) = canonical_split(&cur)?;
            gens.push(canon);
            signs.push(s * fold);
        }
        StabilizerState::new(gens, signs)
    }
}

impl std::fmt::Debug for StabilizerState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "StabilizerState(n={})", self.n)?;
        for (g, s) in self.gens.iter().zip(&self.signs) {
            writeln!(f, "  {}{}", if *s == 1 { '+' } else { '-' }, g)?;
        }
        Ok(())
    }
}

/// GHZ_n = (|0..0> + |1..1>)/sqrt(2): generators X^n and Z_i Z_{i+1}.
pub fn ghz_state(n: usize) -> StabilizerState {
    assert!(n >= 2);
    let mut gens = vec![PauliOperator::x_on(n, &(0..n).collect::<Vec<_>>())];
    for i in 0..n - 1 {
        gens.push(PauliOperator::z_on(n, &[i, i + 1]));
    }
    StabilizerState::new(gens, vec![1; n]).expect("valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::CliffordGate;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn zero_state_expectations() {
        let st = StabilizerState::computational_basis(3);
        assert_eq!(st.expectation(&p("ZII")).unwrap(), 1);
        assert_eq!(st.expectation(&p("XII")).unwrap(), 0);
        assert_eq!(st.expectation(&p("-ZZI")).unwrap(), -1);
        assert_eq!(st.expectation(&p("YII")).unwrap(), 0);
        assert!(st.expectation(&p("+iZII")).is_err());
    }

    #[test]
    fn ghz_expectations() {
        let st = ghz_state(3);
        assert_eq!(st.expectation(&p("ZZI")).unwrap(), 1);
        assert_eq!(st.expectation(&p("ZIZ")).unwrap(), 1);
        assert_eq!(st.expectation(&p("ZII")).unwrap(), 0);
        assert_eq!(st.expectation(&p("XXX")).unwrap(), 1);
        assert_eq!(st.expectation(&p("-XXX")).unwrap(), -1);
        assert_eq!(st.expectation(&p("XXI")).unwrap(), 0);
        assert_eq!(st.expectation(&p("YYX")).unwrap(), -1);
    }

    #[test]
    fn generator_signs_are_reproduced() {
        let gens = vec![p("XX"), p("ZZ")];
        let st = StabilizerState::new(gens.clone(), vec![1, -1]).unwrap();
        assert_eq!(st.expectation(&p("XX")).unwrap(), 1);
        assert_eq!(st.expectation(&p("ZZ")).unwrap(), -1);
        // product of the two generators: XX * ZZ = -YY
        assert_eq!(st.expectation(&p("YY")).unwrap(), 1);
    }

    #[test]
    fn rejects_bad_generator_sets() {
        // anticommuting pair
        assert!(matches!(
            StabilizerState::new(vec![p("XI"), p("ZI")], vec![1, 1]),
            Err(Error::CommutationViolation)
        ));
        // dependent set
        assert!(matches!(
            StabilizerState::new(vec![p("ZI"), p("ZI")], vec![1, 1]),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn bell_state_via_layers() {
        let st = StabilizerState::computational_basis(2);
        let st = st
            .apply_layer(&[PlacedGate::new(vec![0], CliffordGate::hadamard())])
            .unwrap();
        assert_eq!(st.expectation(&p("XI")).unwrap(), 1);
        let st = st
            .apply_layer(&[PlacedGate::new(vec![0, 1], CliffordGate::cnot())])
            .unwrap();
        assert_eq!(st.expectation(&p("XX")).unwrap(), 1);
        assert_eq!(st.expectation(&p("ZZ")).unwrap(), 1);
        assert_eq!(st.expectation(&p("YY")).unwrap(), -1);
        assert_eq!(st.expectation(&p("ZI")).unwrap(), 0);
    }

    #[test]
    fn overlapping_layer_rejected() {
        let st = StabilizerState::computational_basis(3);
        let gates = vec![
            PlacedGate::new(vec![0, 1], CliffordGate::cnot()),
            PlacedGate::new(vec![1, 2], CliffordGate::cnot()),
        ];
        assert!(matches!(st.apply_layer(&gates), Err(Error::OverlappingSupports)));
    }
}
