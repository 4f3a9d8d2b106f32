//! Brute-force code distance and nondegeneracy checks.
//!
//! Enumeration is Gray-coded over generator subsets so each candidate costs
//! one row XOR; every search takes an explicit candidate budget and reports
//! the best upper bound found when it runs out.

use crate::bits::{BitVec, RowSpace};
use crate::css::{CssCode, StabilizerCode};
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceKind {
    X,
    Z,
    Full,
}

/// Minimum weight of a nontrivial logical operator of the requested type.
pub fn distance_bruteforce(code: &CssCode, kind: DistanceKind, budget: u64) -> Result<u32> {
    match kind {
        DistanceKind::Z => sector_distance(code.hx(), code.hz(), budget),
        DistanceKind::X => sector_distance(code.hz(), code.hx(), budget),
        DistanceKind::Full => {
            let dz = sector_distance(code.hx(), code.hz(), budget)?;
            let dx = sector_distance(code.hz(), code.hx(), budget)?;
            Ok(dz.min(dx))
        }
    }
}

/// Minimum weight over ker(constraint) \ rowspace(stabilizer).
fn sector_distance(constraint: &crate::bits::BitMatrix, stabilizer: &crate::bits::BitMatrix, budget: u64) -> Result<u32> {
    let kernel = constraint.kernel_basis();
    let dim = kernel.len();
    let stab_space = RowSpace::from_rows(constraint.num_cols(), stabilizer.rows().iter());
    if dim == 0 || dim == stab_space.dim() {
        return Err(Error::InvalidDecomposition(
            "code has no logical operators in this sector".into(),
        ));
    }
    let total: u64 = if dim >= 63 { u64::MAX } else { (1u64 << dim) - 1 };
    let mut best: Option<u32> = None;
    let mut cur = BitVec::zeros(constraint.num_cols());
    let mut gray_prev = 0u64;
    let cap = total.min(budget);
    for i in 1..=cap {
        let gray = i ^ (i >> 1);
        let flipped = (gray ^ gray_prev).trailing_zeros() as usize;
        gray_prev = gray;
        cur.xor_assign(&kernel[flipped]);
        let w = cur.count_ones();
        if best.is_some_and(|b| w >= b) {
            continue;
        }
        if !stab_space.contains(&cur) {
            best = Some(w);
        }
    }
    if total > budget {
        return Err(Error::BudgetExceeded { best });
    }
    best.ok_or(Error::BudgetExceeded { best: None })
}

/// Minimum weight of a logical operator of a general stabilizer code:
/// scans every logical class (products of logical representatives) against
/// the full stabilizer group.
pub fn distance_bruteforce_general(code: &StabilizerCode, budget: u64) -> Result<u32> {
    let k = code.logicals.len();
    let r = code.generators.len();
    assert!(k > 0, "distance undefined for k = 0");
    let gen_syms: Vec<BitVec> = code.generators.iter().map(|g| g.symplectic()).collect();
    let mut logical_syms = Vec::with_capacity(2 * k);
    for pair in &code.logicals {
        logical_syms.push(pair.x.symplectic());
        logical_syms.push(pair.z.symplectic());
    }
    let classes: u64 = (1 << (2 * k)) - 1;
    let per_class: u64 = if r >= 63 { u64::MAX } else { 1 << r };
    let mut best: Option<u32> = None;
    let mut spent: u64 = 0;
    let n = code.n;
    let weight_of = |v: &BitVec| -> u32 {
        let x = v.slice(0, n);
        let z = v.slice(n, n);
        x.or_count(&z)
    };
    for class in 1..=classes {
        let mut rep = BitVec::zeros(2 * n);
        for (b, sym) in logical_syms.iter().enumerate() {
            if class >> b & 1 == 1 {
                rep.xor_assign(sym);
            }
        }
        let mut cur = rep;
        let mut gray_prev = 0u64;
        for i in 0..per_class {
            if spent >= budget {
                return Err(Error::BudgetExceeded { best });
            }
            if i > 0 {
                let gray = i ^ (i >> 1);
                let flipped = (gray ^ gray_prev).trailing_zeros() as usize;
                gray_prev = gray;
                cur.xor_assign(&gen_syms[flipped]);
            }
            spent += 1;
            let w = weight_of(&cur);
            if best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        }
    }
    best.ok_or(Error::BudgetExceeded { best: None })
}

/// Minimum weight of a nonidentity stabilizer element, enumerating products of
/// the given generator set.
fn min_group_weight(gens: &[BitVec], weight_of: impl Fn(&BitVec) -> u32, budget: u64, width: usize) -> Result<Option<u32>> {
    let r = gens.len();
    if r == 0 {
        return Ok(None);
    }
    let total: u64 = if r >= 63 { u64::MAX } else { (1u64 << r) - 1 };
    if total > budget {
        return Err(Error::BudgetExceeded { best: None });
    }
    let mut best: Option<u32> = None;
    let mut cur = BitVec::zeros(width);
    let mut gray_prev = 0u64;
    for i in 1..=total {
        let gray = i ^ (i >> 1);
        let flipped = (gray ^ gray_prev).trailing_zeros() as usize;
        gray_prev = gray;
        cur.xor_assign(&gens[flipped]);
        let w = weight_of(&cur);
        if best.is_none_or(|b| w < b) {
            best = Some(w);
        }
    }
    Ok(best)
}

/// True iff no two distinct Hermitian Paulis of weight <= k_local multiply to
/// a nonidentity stabilizer element; equivalently, every nonidentity element
/// of the stabilizer group has weight > 2 * k_local.
///
/// For a stabilizer code the projective Knill-Laflamme condition
/// `Pi P P' Pi = delta_{P,P'} Pi` on weight-(<= K) errors reduces to exactly
/// this: P P' is supported on <= 2K qubits, and its projected matrix element
/// is nonzero iff P P' is (up to sign) in the stabilizer group.
pub fn is_nondegenerate(code: &CssCode, k_local: u32, budget: u64) -> Result<bool> {
    // CSS: a mixed element is never lighter than the lightest pure element,
    // so the two sectors can be scanned independently.
    let z_ind = independent_set(code.hz().rows(), code.num_qubits());
    let x_ind = independent_set(code.hx().rows(), code.num_qubits());
    let mut min_w: Option<u32> = None;
    for gens in [z_ind, x_ind] {
        if let Some(w) = min_group_weight(&gens, |v| v.count_ones(), budget, code.num_qubits())? {
            min_w = Some(min_w.map_or(w, |m: u32| m.min(w)));
        }
    }
    Ok(min_w.is_none_or(|w| w > 2 * k_local))
}

/// Nondegeneracy for a general stabilizer code.
pub fn is_nondegenerate_general(code: &StabilizerCode, k_local: u32, budget: u64) -> Result<bool> {
    let gens: Vec<BitVec> = code.generators.iter().map(|g| g.symplectic()).collect();
    let n = code.n;
    let weight_of = move |v: &BitVec| {
        let x = v.slice(0, n);
        let z = v.slice(n, n);
        x.or_count(&z)
    };
    let min_w = min_group_weight(&gens, weight_of, budget, 2 * n)?;
    Ok(min_w.is_none_or(|w| w > 2 * k_local))
}

fn independent_set(rows: &[BitVec], cols: usize) -> Vec<BitVec> {
    let mut space = RowSpace::new(cols);
    let mut keep = Vec::new();
    for r in rows {
        if space.insert(r) {
            keep.push(r.clone());
        }
    }
    keep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::BitMatrix;

    #[test]
    fn repetition_distances() {
        let hz = BitMatrix::from_row_supports(3, &[vec![0, 1], vec![1, 2]]);
        let code = CssCode::from_matrices(hz, BitMatrix::new(3)).unwrap();
        assert_eq!(distance_bruteforce(&code, DistanceKind::X, DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(distance_bruteforce(&code, DistanceKind::Z, DEFAULT_BUDGET).unwrap(), 1);
        assert_eq!(distance_bruteforce(&code, DistanceKind::Full, DEFAULT_BUDGET).unwrap(), 1);
    }

    #[test]
    fn steane_distance_is_three() {
        let hamming = vec![vec![3, 4, 5, 6], vec![1, 2, 5, 6], vec![0, 2, 4, 6]];
        let code = CssCode::from_matrices(
            BitMatrix::from_row_supports(7, &hamming),
            BitMatrix::from_row_supports(7, &hamming),
        )
        .unwrap();
        assert_eq!(distance_bruteforce(&code, DistanceKind::Full, DEFAULT_BUDGET).unwrap(), 3);
        assert!(is_nondegenerate(&code, 1, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn budget_exhaustion_reports_best() {
        let hamming = vec![vec![3, 4, 5, 6], vec![1, 2, 5, 6], vec![0, 2, 4, 6]];
        let code = CssCode::from_matrices(
            BitMatrix::from_row_supports(7, &hamming),
            BitMatrix::from_row_supports(7, &hamming),
        )
        .unwrap();
        match distance_bruteforce(&code, DistanceKind::Full, 3) {
            Err(Error::BudgetExceeded { best }) => assert!(best.is_some()),
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn trivial_code_vacuously_nondegenerate() {
        let code = CssCode::from_matrices(BitMatrix::new(3), BitMatrix::new(3)).unwrap();
        assert!(is_nondegenerate(&code, 2, DEFAULT_BUDGET).unwrap());
    }
}
