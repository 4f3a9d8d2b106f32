//! Tanner graphs of CSS codes, their qubit-side collapses (plain and relative
//! to an error pattern), error-equivalence-class partitioning of Hamiltonian
//! terms, and weak-expansion diagnostic profiles.

use crate::bits::{BitVec, RowSpace};
use crate::css::CssCode;
use crate::error::{Error, Result};
use crate::hamiltonian::PauliHamiltonian;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckSide {
    Z,
    X,
}

/// Bipartite check-qubit graph of a CSS code; keeps the full redundant check
/// rows, one node per matrix row.
#[derive(Debug, Clone)]
pub struct TannerGraph {
    pub n_qubits: usize,
    pub z_checks: Vec<BitVec>,
    pub x_checks: Vec<BitVec>,
}

impl TannerGraph {
    pub fn from_css(code: &CssCode) -> Self {
        TannerGraph {
            n_qubits: code.num_qubits(),
            z_checks: code.hz().rows().to_vec(),
            x_checks: code.hx().rows().to_vec(),
        }
    }

    fn side(&self, side: CheckSide) -> &[BitVec] {
        match side {
            CheckSide::Z => &self.z_checks,
            CheckSide::X => &self.x_checks,
        }
    }
}

/// Graph on the checks of one side; `edges` holds (u, v) with u < v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseGraph {
    pub num_checks: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl CollapseGraph {
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut comp: Vec<Option<usize>> = vec![None; self.num_checks];
        let mut adj = vec![Vec::new(); self.num_checks];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut components = Vec::new();
        for start in 0..self.num_checks {
            if comp[start].is_some() {
                continue;
            }
            let id = components.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = Some(id);
            while let Some(u) = stack.pop() {
                members.push(u);
                for &v in &adj[u] {
                    if comp[v].is_none() {
                        comp[v] = Some(id);
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        components
    }
}

/// Two checks are adjacent iff they touch a common qubit.
pub fn qubit_side_collapse(t: &TannerGraph, side: CheckSide) -> CollapseGraph {
    let checks = t.side(side);
    let mut edges = BTreeSet::new();
    for u in 0..checks.len() {
        for v in (u + 1)..checks.len() {
            if checks[u].overlaps(&checks[v]) {
                edges.insert((u, v));
            }
        }
    }
    CollapseGraph { num_checks: checks.len(), edges }
}

/// Collapse with a super node aggregating the error support: checks are
/// adjacent iff they share a qubit, or both touch the error support (a path
/// through the super node). An all-zero error reduces to the plain collapse.
pub fn collapse_with_respect_to(t: &TannerGraph, side: CheckSide, error: &BitVec) -> CollapseGraph {
    assert_eq!(error.len(), t.n_qubits);
    let checks = t.side(side);
    let mut collapse = qubit_side_collapse(t, side);
    let touching: Vec<usize> = (0..checks.len())
        .filter(|&i| checks[i].overlaps(error))
        .collect();
    for (a, &u) in touching.iter().enumerate() {
        for &v in &touching[a + 1..] {
            collapse.edges.insert((u, v));
        }
    }
    collapse
}

/// Partition of Hamiltonian term indices into error-equivalence classes.
#[derive(Debug, Clone)]
pub struct EquivalenceClasses {
    /// Disjoint blocks covering [0, m), each sorted ascending.
    pub classes: Vec<Vec<usize>>,
    /// Whether the block's members are themselves stabilizer elements.
    pub is_stabilizer_class: Vec<bool>,
}

/// Terms j, j' share a class iff op_j * op_j' is (up to sign) in the check
/// group of the code. Signs are deliberately ignored so the relation stays
/// transitive; the QFI engine consumes the sign separately.
pub fn partition_equivalence_classes(
    code: &CssCode,
    h: &PauliHamiltonian,
) -> Result<EquivalenceClasses> {
    if h.num_qubits() != code.num_qubits() {
        return Err(Error::DimensionMismatch(h.num_qubits(), code.num_qubits()));
    }
    let n = code.num_qubits();
    let mut group = RowSpace::new(2 * n);
    for g in code.check_generators() {
        group.insert(&g.symplectic());
    }
    let syms: Vec<BitVec> = h.terms().iter().map(|(_, op)| op.symplectic()).collect();
    let m = syms.len();
    let mut class_of: Vec<Option<usize>> = vec![None; m];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut is_stab: Vec<bool> = Vec::new();
    for j in 0..m {
        if class_of[j].is_some() {
            continue;
        }
        let id = classes.len();
        class_of[j] = Some(id);
        let mut block = vec![j];
        for j2 in (j + 1)..m {
            if class_of[j2].is_none() && group.contains(&syms[j].xor(&syms[j2])) {
                class_of[j2] = Some(id);
                block.push(j2);
            }
        }
        is_stab.push(group.contains(&syms[j]));
        classes.push(block);
    }
    Ok(EquivalenceClasses { classes, is_stabilizer_class: is_stab })
}

/// One envelope point: minimum operator weight achieved at a given minimal
/// generator count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfilePoint {
    pub generator_count: u32,
    pub min_weight: u32,
}

#[derive(Debug, Clone)]
pub struct ExpansionProfile {
    pub side: CheckSide,
    pub points: Vec<ProfilePoint>,
    pub exhaustive: bool,
}

impl ExpansionProfile {
    /// CSV rows: generator_count,min_weight,exhaustive_flag
    pub fn to_csv(&self) -> String {
        let mut out = String::from("generator_count,min_weight,exhaustive\n");
        for p in &self.points {
            out.push_str(&format!(
                "{},{},{}\n",
                p.generator_count, p.min_weight, self.exhaustive
            ));
        }
        out
    }
}

/// Scan check-generator combinations f and record, for each minimal generator
/// count over the coset f + (dependency kernel), the minimum weight of the
/// produced physical operator. Exhaustive when 2^(row count) fits the budget,
/// otherwise a seeded uniform sample.
pub fn expansion_profile(
    code: &CssCode,
    side: CheckSide,
    budget: u64,
    seed: u64,
) -> ExpansionProfile {
    let rows: Vec<BitVec> = match side {
        CheckSide::Z => code.hz().rows().to_vec(),
        CheckSide::X => code.hx().rows().to_vec(),
    };
    let nrows = rows.len();
    let n = code.num_qubits();
    let matrix = crate::bits::BitMatrix::from_rows(n, rows.clone());
    // Dependency kernel: combinations producing the identity operator.
    let dependency = matrix.left_kernel_basis();
    let dep_dim = dependency.len();
    let min_count_over_coset = |f: &BitVec| -> u32 {
        if dep_dim == 0 {
            return f.count_ones();
        }
        if dep_dim <= 16 {
            let mut best = f.count_ones();
            let mut cur = f.clone();
            let mut gray_prev = 0u64;
            for i in 1u64..(1 << dep_dim) {
                let gray = i ^ (i >> 1);
                let flipped = (gray ^ gray_prev).trailing_zeros() as usize;
                gray_prev = gray;
                cur.xor_assign(&dependency[flipped]);
                best = best.min(cur.count_ones());
            }
            best
        } else {
            // greedy reduction only
            let mut best = f.clone();
            loop {
                let mut improved = false;
                for d in &dependency {
                    let cand = best.xor(d);
                    if cand.count_ones() < best.count_ones() {
                        best = cand;
                        improved = true;
                    }
                }
                if !improved {
                    return best.count_ones();
                }
            }
        }
    };
    let mut envelope: std::collections::BTreeMap<u32, u32> = std::collections::BTreeMap::new();
    let record = |envelope: &mut std::collections::BTreeMap<u32, u32>, count: u32, weight: u32| {
        envelope
            .entry(count)
            .and_modify(|w| *w = (*w).min(weight))
            .or_insert(weight);
    };
    let exhaustive = nrows < 63 && (1u64 << nrows) <= budget;
    if exhaustive {
        let mut f = BitVec::zeros(nrows);
        let mut op = BitVec::zeros(n);
        record(&mut envelope, 0, 0);
        let mut gray_prev = 0u64;
        for i in 1u64..(1 << nrows) {
            let gray = i ^ (i >> 1);
            let flipped = (gray ^ gray_prev).trailing_zeros() as usize;
            gray_prev = gray;
            f.flip(flipped);
            op.xor_assign(&rows[flipped]);
            record(&mut envelope, min_count_over_coset(&f), op.count_ones());
        }
    } else {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        record(&mut envelope, 0, 0);
        for _ in 0..budget {
            let mut f = BitVec::zeros(nrows);
            let mut op = BitVec::zeros(n);
            for (i, row) in rows.iter().enumerate() {
                if rng.random::<bool>() {
                    f.set(i, true);
                    op.xor_assign(row);
                }
            }
            record(&mut envelope, min_count_over_coset(&f), op.count_ones());
        }
    }
    ExpansionProfile {
        side,
        points: envelope
            .into_iter()
            .map(|(generator_count, min_weight)| ProfilePoint { generator_count, min_weight })
            .collect(),
        exhaustive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::BitMatrix;

    fn shor_code() -> CssCode {
        let hz = BitMatrix::from_row_supports(
            9,
            &[vec![0, 1], vec![1, 2], vec![3, 4], vec![4, 5], vec![6, 7], vec![7, 8]],
        );
        let hx = BitMatrix::from_row_supports(9, &[vec![0, 1, 2, 3, 4, 5], vec![3, 4, 5, 6, 7, 8]]);
        CssCode::from_matrices(hz, hx).unwrap()
    }

    #[test]
    fn shor_z_collapse_is_three_pairs() {
        let t = TannerGraph::from_css(&shor_code());
        let c = qubit_side_collapse(&t, CheckSide::Z);
        // checks {0,1}, {2,3}, {4,5} share qubits inside each 3-qubit block
        let expected: BTreeSet<(usize, usize)> = [(0, 1), (2, 3), (4, 5)].into();
        assert_eq!(c.edges, expected);
        assert_eq!(c.connected_components().len(), 3);
    }

    #[test]
    fn empty_error_reduces_to_plain_collapse() {
        let code = shor_code();
        let t = TannerGraph::from_css(&code);
        let plain = qubit_side_collapse(&t, CheckSide::Z);
        let with = collapse_with_respect_to(&t, CheckSide::Z, &BitVec::zeros(9));
        assert_eq!(plain, with);
    }

    #[test]
    fn shor_collapse_with_error_pattern() {
        // error support {2, 4, 5}: checks touching it become mutually adjacent
        let code = shor_code();
        let t = TannerGraph::from_css(&code);
        let err = BitVec::from_indices(9, &[2, 4, 5]);
        let c = collapse_with_respect_to(&t, CheckSide::Z, &err);
        // touching checks: 1 ({1,2}), 2 ({3,4}), 3 ({4,5})
        let expected: BTreeSet<(usize, usize)> =
            [(0, 1), (2, 3), (4, 5), (1, 2), (1, 3)].into();
        assert_eq!(c.edges, expected);
        // blocks one and two merge through the error; block three stays apart
        assert_eq!(c.connected_components().len(), 2);
    }

    #[test]
    fn full_support_error_connects_everything() {
        let code = shor_code();
        let t = TannerGraph::from_css(&code);
        let err = BitVec::from_indices(9, &(0..9).collect::<Vec<_>>());
        let c = collapse_with_respect_to(&t, CheckSide::Z, &err);
        assert_eq!(c.edges.len(), 6 * 5 / 2);
    }

    #[test]
    fn disjoint_checks_collapse_edgeless() {
        let hz = BitMatrix::from_row_supports(4, &[vec![0, 1], vec![2, 3]]);
        let code = CssCode::from_matrices(hz, BitMatrix::new(4)).unwrap();
        let c = qubit_side_collapse(&TannerGraph::from_css(&code), CheckSide::Z);
        assert!(c.edges.is_empty());
    }

    #[test]
    fn duplicate_terms_share_a_class() {
        let code = shor_code();
        let z0 = crate::pauli::PauliOperator::single(9, 0, crate::pauli::PauliKind::Z);
        let h = PauliHamiltonian::new(9, vec![(1.0, z0.clone()), (0.5, z0)]).unwrap();
        let classes = partition_equivalence_classes(&code, &h).unwrap();
        assert_eq!(classes.classes.len(), 1);
        assert_eq!(classes.classes[0], vec![0, 1]);
        assert!(!classes.is_stabilizer_class[0]);
    }

    #[test]
    fn shor_z_pairs_within_block_are_equivalent() {
        // Z0 and Z1 differ by the weight-2 check Z0Z1; Z3 sits in another block.
        let code = shor_code();
        let z = |q| crate::pauli::PauliOperator::single(9, q, crate::pauli::PauliKind::Z);
        let h = PauliHamiltonian::new(9, vec![(1.0, z(0)), (1.0, z(1)), (1.0, z(3))]).unwrap();
        let classes = partition_equivalence_classes(&code, &h).unwrap();
        assert_eq!(classes.classes, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn expansion_profile_single_generator_point() {
        let code = shor_code();
        let profile = expansion_profile(&code, CheckSide::Z, 1 << 20, 0);
        assert!(profile.exhaustive);
        // a single generator achieves the minimum single-check weight (2)
        let p1 = profile.points.iter().find(|p| p.generator_count == 1).unwrap();
        assert_eq!(p1.min_weight, 2);
        let csv = profile.to_csv();
        assert!(csv.starts_with("generator_count,min_weight,exhaustive\n"));
    }
}
