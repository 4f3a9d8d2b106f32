//! CSS and general stabilizer codes: construction from check matrices,
//! logical operator extraction over GF(2), and code-state assembly.

use crate::bits::{BitMatrix, BitVec, RowSpace};
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;
use crate::state::{LogicalBasis, StabilizerState};

/// One logical qubit: anticommuting X/Z representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicalPair {
    pub x: PauliOperator,
    pub z: PauliOperator,
}

/// CSS code: Z-checks `hz` and X-checks `hx` with `hz * hx^T = 0`.
///
/// The full (possibly redundant) check matrices are retained for Tanner-graph
/// work; ranks and an independent row subset are precomputed for tableau use.
#[derive(Debug, Clone)]
pub struct CssCode {
    n: usize,
    hz: BitMatrix,
    hx: BitMatrix,
    k: usize,
    logicals: Vec<LogicalPair>,
    independent_z_rows: Vec<usize>,
    independent_x_rows: Vec<usize>,
}

/// Budget for exact coset-leader search when picking logical representatives;
/// larger stabilizer sectors fall back to a greedy weight reduction.
const COSET_ENUM_BUDGET: usize = 1 << 16;

fn independent_rows(m: &BitMatrix) -> Vec<usize> {
    let mut space = RowSpace::new(m.num_cols());
    let mut keep = Vec::new();
    for (i, row) in m.rows().iter().enumerate() {
        if space.insert(row) {
            keep.push(i);
        }
    }
    keep
}

/// Deterministic minimum-weight representative of `v + span(rows)`:
/// exhaustive Gray-code scan when the span fits the budget, otherwise greedy.
fn minimize_over_span(v: &BitVec, rows: &[&BitVec]) -> BitVec {
    let dim = rows.len();
    if dim < 63 && (1usize << dim) <= COSET_ENUM_BUDGET {
        let mut best = v.clone();
        let mut cur = v.clone();
        let mut gray_prev = 0u64;
        for i in 1u64..(1 << dim) {
            let gray = i ^ (i >> 1);
            let flipped = (gray ^ gray_prev).trailing_zeros() as usize;
            gray_prev = gray;
            cur.xor_assign(rows[flipped]);
            if cur.cmp_weight_value(&best) == std::cmp::Ordering::Less {
                best = cur.clone();
            }
        }
        best
    } else {
        let mut best = v.clone();
        loop {
            let mut improved = false;
            for r in rows {
                let cand = best.xor(r);
                if cand.cmp_weight_value(&best) == std::cmp::Ordering::Less {
                    best = cand;
                    improved = true;
                }
            }
            if !improved {
                return best;
            }
        }
    }
}

/// Invert a k x k GF(2) matrix given as rows; panics if singular (the symplectic
/// pairing of a valid logical basis is always invertible).
fn invert_gf2(rows: &[BitVec]) -> Vec<BitVec> {
    let k = rows.len();
    let mut work: Vec<BitVec> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut aug = r.clone().concat(&BitVec::zeros(k));
            aug.set(k + i, true);
            aug
        })
        .collect();
    for c in 0..k {
        let pivot = (c..k).find(|&r| work[r].get(c)).expect("singular pairing matrix");
        work.swap(c, pivot);
        let row = work[c].clone();
        for (r, w) in work.iter_mut().enumerate() {
            if r != c && w.get(c) {
                w.xor_assign(&row);
            }
        }
    }
    work.iter().map(|w| w.slice(k, k)).collect()
}

impl CssCode {
    /// Construct from check matrices, extracting and normalizing logicals:
    /// X-representatives span ker(hz)/rowspace(hx), Z-representatives span
    /// ker(hx)/rowspace(hz), paired so that pair l anticommutes only with its
    /// partner.
    pub fn from_matrices(hz: BitMatrix, hx: BitMatrix) -> Result<Self> {
        let n = hz.num_cols();
        if hx.num_cols() != n {
            return Err(Error::DimensionMismatch(hx.num_cols(), n));
        }
        for zr in hz.rows() {
            for xr in hx.rows() {
                if zr.dot(xr) {
                    return Err(Error::CommutationViolation);
                }
            }
        }
        let independent_z_rows = independent_rows(&hz);
        let independent_x_rows = independent_rows(&hx);
        let rz = independent_z_rows.len();
        let rx = independent_x_rows.len();
        let k = n - rz - rx;

        // X-logical candidates: ker(hz) modulo rowspace(hx).
        let x_reps = quotient_basis(&hz, &hx, &independent_x_rows, k);
        // Z-logical candidates: ker(hx) modulo rowspace(hz).
        let z_reps = quotient_basis(&hx, &hz, &independent_z_rows, k);

        // Normalize the symplectic pairing to the identity: z'_b = sum_c Minv[c][b] z_c
        // with M[a][b] = x_a . z_b.
        let pairing: Vec<BitVec> = x_reps
            .iter()
            .map(|x| BitVec::from_bools(&z_reps.iter().map(|z| x.dot(z)).collect::<Vec<_>>()))
            .collect();
        let logicals = if k > 0 {
            let minv = invert_gf2(&pairing);
            let z_paired: Vec<BitVec> = (0..k)
                .map(|b| {
                    let mut acc = BitVec::zeros(n);
                    for c in 0..k {
                        if minv[c].get(b) {
                            acc.xor_assign(&z_reps[c]);
                        }
                    }
                    acc
                })
                .collect();
            // Minimize representative weights inside their stabilizer cosets;
            // this preserves the pairing.
            let hx_rows: Vec<&BitVec> = independent_x_rows.iter().map(|&i| hx.row(i)).collect();
            let hz_rows: Vec<&BitVec> = independent_z_rows.iter().map(|&i| hz.row(i)).collect();
            x_reps
                .iter()
                .zip(&z_paired)
                .map(|(x, z)| LogicalPair {
                    x: PauliOperator::from_parts(n, minimize_over_span(x, &hx_rows), BitVec::zeros(n), 0),
                    z: PauliOperator::from_parts(n, BitVec::zeros(n), minimize_over_span(z, &hz_rows), 0),
                })
                .collect()
        } else {
            Vec::new()
        };

        let code = CssCode { n, hz, hx, k, logicals, independent_z_rows, independent_x_rows };
        code.validate_logicals()?;
        Ok(code)
    }

    /// Construct with explicitly chosen logical representatives (validated).
    pub fn with_logicals(
        hz: BitMatrix,
        hx: BitMatrix,
        logical_x: Vec<BitVec>,
        logical_z: Vec<BitVec>,
    ) -> Result<Self> {
        let n = hz.num_cols();
        if hx.num_cols() != n {
            return Err(Error::DimensionMismatch(hx.num_cols(), n));
        }
        for zr in hz.rows() {
            for xr in hx.rows() {
                if zr.dot(xr) {
                    return Err(Error::CommutationViolation);
                }
            }
        }
        let independent_z_rows = independent_rows(&hz);
        let independent_x_rows = independent_rows(&hx);
        let k = n - independent_z_rows.len() - independent_x_rows.len();
        if logical_x.len() != k || logical_z.len() != k {
            return Err(Error::RankDeficient { rank: logical_x.len(), needed: k });
        }
        let logicals = logical_x
            .into_iter()
            .zip(logical_z)
            .map(|(x, z)| LogicalPair {
                x: PauliOperator::from_parts(n, x, BitVec::zeros(n), 0),
                z: PauliOperator::from_parts(n, BitVec::zeros(n), z, 0),
            })
            .collect();
        let code = CssCode { n, hz, hx, k, logicals, independent_z_rows, independent_x_rows };
        code.validate_logicals()?;
        Ok(code)
    }

    fn validate_logicals(&self) -> Result<()> {
        for (a, pa) in self.logicals.iter().enumerate() {
            for zr in self.hz.rows() {
                if pa.x.x_bits().dot(zr) {
                    return Err(Error::CommutationViolation);
                }
            }
            for xr in self.hx.rows() {
                if pa.z.z_bits().dot(xr) {
                    return Err(Error::CommutationViolation);
                }
            }
            for (b, pb) in self.logicals.iter().enumerate() {
                let pair = pa.x.x_bits().dot(pb.z.z_bits());
                if pair != (a == b) {
                    return Err(Error::CommutationViolation);
                }
            }
        }
        // No logical may lie in the stabilizer group.
        let zspace = RowSpace::from_rows(self.n, self.hz.rows().iter());
        let xspace = RowSpace::from_rows(self.n, self.hx.rows().iter());
        for p in &self.logicals {
            if xspace.contains(p.x.x_bits()) || zspace.contains(p.z.z_bits()) {
                return Err(Error::RankDeficient { rank: self.k, needed: self.k + 1 });
            }
        }
        Ok(())
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn num_logicals(&self) -> usize {
        self.k
    }

    pub fn hz(&self) -> &BitMatrix {
        &self.hz
    }

    pub fn hx(&self) -> &BitMatrix {
        &self.hx
    }

    pub fn logicals(&self) -> &[LogicalPair] {
        &self.logicals
    }

    pub fn rank_z(&self) -> usize {
        self.independent_z_rows.len()
    }

    pub fn rank_x(&self) -> usize {
        self.independent_x_rows.len()
    }

    /// Independent check generators as Hermitian Paulis (Z-checks then X-checks).
    pub fn check_generators(&self) -> Vec<PauliOperator> {
        let mut gens = Vec::with_capacity(self.rank_z() + self.rank_x());
        for &i in &self.independent_z_rows {
            gens.push(PauliOperator::from_parts(
                self.n,
                BitVec::zeros(self.n),
                self.hz.row(i).clone(),
                0,
            ));
        }
        for &i in &self.independent_x_rows {
            gens.push(PauliOperator::from_parts(
                self.n,
                self.hx.row(i).clone(),
                BitVec::zeros(self.n),
                0,
            ));
        }
        gens
    }

    /// View as a general stabilizer code.
    pub fn to_stabilizer_code(&self) -> StabilizerCode {
        StabilizerCode {
            n: self.n,
            generators: self.check_generators(),
            logicals: self.logicals.clone(),
        }
    }

    /// Assemble the stabilizer state fixed by all checks (+1) and one chosen
    /// logical eigenbasis per logical qubit.
    pub fn state(&self, choices: &[LogicalBasis]) -> Result<StabilizerState> {
        if choices.len() != self.k {
            return Err(Error::RankDeficient { rank: choices.len(), needed: self.k });
        }
        let mut gens = self.check_generators();
        let mut signs = vec![1i8; gens.len()];
        for (pair, &c) in self.logicals.iter().zip(choices) {
            let (op, sign) = match c {
                LogicalBasis::XPlus => (pair.x.clone(), 1),
                LogicalBasis::XMinus => (pair.x.clone(), -1),
                LogicalBasis::ZPlus => (pair.z.clone(), 1),
                LogicalBasis::ZMinus => (pair.z.clone(), -1),
            };
            gens.push(op);
            signs.push(sign);
        }
        StabilizerState::new(gens, signs)
    }
}

/// Basis of ker(constraint) modulo rowspace(quotient), `k` vectors.
fn quotient_basis(
    constraint: &BitMatrix,
    quotient: &BitMatrix,
    quotient_independent: &[usize],
    k: usize,
) -> Vec<BitVec> {
    let kernel = constraint.kernel_basis();
    let mut space = RowSpace::new(constraint.num_cols());
    for &i in quotient_independent {
        space.insert(quotient.row(i));
    }
    let mut reps = Vec::with_capacity(k);
    for v in kernel {
        if space.insert(&v) {
            reps.push(v);
        }
        if reps.len() == k {
            break;
        }
    }
    assert_eq!(reps.len(), k, "quotient dimension mismatch");
    reps
}

/// General (not necessarily CSS) stabilizer code.
#[derive(Debug, Clone)]
pub struct StabilizerCode {
    pub n: usize,
    /// Independent, mutually commuting Hermitian generators.
    pub generators: Vec<PauliOperator>,
    pub logicals: Vec<LogicalPair>,
}

impl StabilizerCode {
    pub fn num_logicals(&self) -> usize {
        self.logicals.len()
    }

    /// Code state with each logical fixed to the chosen eigenbasis.
    pub fn state(&self, choices: &[LogicalBasis]) -> Result<StabilizerState> {
        if choices.len() != self.logicals.len() {
            return Err(Error::RankDeficient {
                rank: choices.len(),
                needed: self.logicals.len(),
            });
        }
        let mut gens = self.generators.clone();
        let mut signs = vec![1i8; gens.len()];
        for (pair, &c) in self.logicals.iter().zip(choices) {
            let (op, sign) = match c {
                LogicalBasis::XPlus => (pair.x.clone(), 1),
                LogicalBasis::XMinus => (pair.x.clone(), -1),
                LogicalBasis::ZPlus => (pair.z.clone(), 1),
                LogicalBasis::ZMinus => (pair.z.clone(), -1),
            };
            gens.push(op);
            signs.push(sign);
        }
        StabilizerState::new(gens, signs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn repetition3() -> CssCode {
        let hz = BitMatrix::from_row_supports(3, &[vec![0, 1], vec![1, 2]]);
        let hx = BitMatrix::new(3);
        CssCode::from_matrices(hz, hx).unwrap()
    }

    #[test]
    fn repetition_code_logicals() {
        let code = repetition3();
        assert_eq!(code.num_logicals(), 1);
        let pair = &code.logicals()[0];
        assert_eq!(format!("{}", pair.x), "XXX");
        assert_eq!(pair.z.weight(), 1);
        assert!(!pair.x.commutes_with(&pair.z).unwrap());
    }

    #[test]
    fn trivial_code_two_qubits() {
        let code = CssCode::from_matrices(BitMatrix::new(2), BitMatrix::new(2)).unwrap();
        assert_eq!(code.num_logicals(), 2);
        for (a, pa) in code.logicals().iter().enumerate() {
            for (b, pb) in code.logicals().iter().enumerate() {
                assert_eq!(pa.x.commutes_with(&pb.z).unwrap(), a != b);
            }
        }
    }

    #[test]
    fn steane_code_parameters() {
        let hamming = vec![vec![3, 4, 5, 6], vec![1, 2, 5, 6], vec![0, 2, 4, 6]];
        let hz = BitMatrix::from_row_supports(7, &hamming);
        let hx = BitMatrix::from_row_supports(7, &hamming);
        let code = CssCode::from_matrices(hz, hx).unwrap();
        assert_eq!(code.num_logicals(), 1);
        assert_eq!(code.rank_z(), 3);
        assert_eq!(code.rank_x(), 3);
    }

    #[test]
    fn orthogonality_violation_detected() {
        let hz = BitMatrix::from_row_supports(3, &[vec![0, 1]]);
        let hx = BitMatrix::from_row_supports(3, &[vec![0]]);
        assert!(matches!(
            CssCode::from_matrices(hz, hx),
            Err(Error::CommutationViolation)
        ));
    }

    #[test]
    fn k_zero_code_has_no_logicals() {
        // Repetition checks plus the full X operator: a [[3,0]] state.
        let hz = BitMatrix::from_row_supports(3, &[vec![0, 1], vec![1, 2]]);
        let hx = BitMatrix::from_row_supports(3, &[vec![0, 1, 2]]);
        let code = CssCode::from_matrices(hz, hx).unwrap();
        assert_eq!(code.num_logicals(), 0);
        let st = code.state(&[]).unwrap();
        assert_eq!(st.expectation(&"XXX".parse().unwrap()).unwrap(), 1);
    }

    #[test]
    fn repetition_state_is_ghz() {
        let code = repetition3();
        let st = code.state(&[LogicalBasis::XPlus]).unwrap();
        let p = |s: &str| s.parse::<PauliOperator>().unwrap();
        assert_eq!(st.expectation(&p("XXX")).unwrap(), 1);
        assert_eq!(st.expectation(&p("ZZI")).unwrap(), 1);
        assert_eq!(st.expectation(&p("ZII")).unwrap(), 0);
    }

    #[test]
    fn z_minus_choice_flips_sign() {
        let code = CssCode::from_matrices(BitMatrix::new(1), BitMatrix::new(1)).unwrap();
        let st = code.state(&[LogicalBasis::ZPlus]).unwrap();
        assert_eq!(st.expectation(&"Z".parse().unwrap()).unwrap(), 1);
        let st = code.state(&[LogicalBasis::ZMinus]).unwrap();
        assert_eq!(st.expectation(&"Z".parse().unwrap()).unwrap(), -1);
    }
}
