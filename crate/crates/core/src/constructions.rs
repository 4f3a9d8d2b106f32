//! Builders for the state/Hamiltonian families under study: GHZ, toric and
//! asymmetric toric codes, classical-LDPC graph codes, the BFS-cascade
//! Hamiltonian family on graphs, and reference code fixtures.

use crate::bits::{BitMatrix, BitVec};
use crate::css::{CssCode, LogicalPair, StabilizerCode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamiltonian::{sum_z, PauliHamiltonian};
use crate::pauli::PauliOperator;
use crate::state::{LogicalBasis, StabilizerState};

/// A code, a concrete code state, a Hamiltonian, and the closed-form QFI the
/// pair is expected to reproduce exactly.
#[derive(Debug, Clone)]
pub struct ConstructionBundle {
    pub family: String,
    pub code: CssCode,
    pub state: StabilizerState,
    pub hamiltonian: PauliHamiltonian,
    pub predicted_qfi: f64,
    pub note: String,
}

/// Repetition code on n qubits: Z_i Z_{i+1} chain checks, no X checks,
/// logical X = X^n.
pub fn repetition_code(n: usize) -> CssCode {
    assert!(n >= 2);
    let supports: Vec<Vec<usize>> = (0..n - 1).map(|i| vec![i, i + 1]).collect();
    let hz = BitMatrix::from_row_supports(n, &supports);
    CssCode::from_matrices(hz, BitMatrix::new(n)).expect("valid by construction")
}

/// GHZ_n with H = sum_i Z_i; F = n^2.
pub fn ghz_bundle(n: usize) -> Result<ConstructionBundle> {
    if n < 2 {
        return Err(Error::InvalidDimensions(n, 1));
    }
    let code = repetition_code(n);
    let state = code.state(&[LogicalBasis::XPlus])?;
    Ok(ConstructionBundle {
        family: "ghz".into(),
        code,
        state,
        hamiltonian: sum_z(n),
        predicted_qfi: (n * n) as f64,
        note: format!("GHZ on {n} qubits; every <Z_i Z_j> = 1 and <Z_i> = 0, so F = n^2"),
    })
}

/// Edge orientation on the periodic square lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Along x: from (i, j) to (i+1, j).
    Horizontal,
    /// Along y: from (i, j) to (i, j+1).
    Vertical,
}

/// Lx x Ly periodic square lattice with one qubit per edge, n = 2 Lx Ly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ToricLayout {
    pub lx: usize,
    pub ly: usize,
}

impl ToricLayout {
    pub fn new(lx: usize, ly: usize) -> Result<Self> {
        if lx < 2 || ly < 1 {
            return Err(Error::InvalidDimensions(lx, ly));
        }
        Ok(ToricLayout { lx, ly })
    }

    pub fn num_qubits(&self) -> usize {
        2 * self.lx * self.ly
    }

    pub fn qubit(&self, i: usize, j: usize, o: Orientation) -> usize {
        debug_assert!(i < self.lx && j < self.ly);
        2 * (i * self.ly + j)
            + match o {
                Orientation::Horizontal => 0,
                Orientation::Vertical => 1,
            }
    }

    /// Plaquette with lower-left corner (i, j). Degenerate directions (length
    /// 1) make edge pairs coincide and cancel, shrinking the check weight.
    pub fn plaquette(&self, i: usize, j: usize) -> BitVec {
        let mut v = BitVec::zeros(self.num_qubits());
        v.flip(self.qubit(i, j, Orientation::Horizontal));
        v.flip(self.qubit(i, (j + 1) % self.ly, Orientation::Horizontal));
        v.flip(self.qubit(i, j, Orientation::Vertical));
        v.flip(self.qubit((i + 1) % self.lx, j, Orientation::Vertical));
        v
    }

    /// Star of edges incident to site (i, j).
    pub fn star(&self, i: usize, j: usize) -> BitVec {
        let mut v = BitVec::zeros(self.num_qubits());
        v.flip(self.qubit(i, j, Orientation::Horizontal));
        v.flip(self.qubit((i + self.lx - 1) % self.lx, j, Orientation::Horizontal));
        v.flip(self.qubit(i, j, Orientation::Vertical));
        v.flip(self.qubit(i, (j + self.ly - 1) % self.ly, Orientation::Vertical));
        v
    }
}

/// Toric code on the Lx x Ly periodic lattice: plaquette Z-checks, star
/// X-checks, k = 2, with homologically nontrivial logical representatives:
/// pair 1: X weight Ly (vertical), Z weight Lx (horizontal);
/// pair 2: X weight Lx (horizontal), Z weight Ly (vertical).
pub fn toric_code(lx: usize, ly: usize) -> Result<CssCode> {
    let layout = ToricLayout::new(lx, ly)?;
    let n = layout.num_qubits();
    let mut hz_rows = Vec::with_capacity(lx * ly);
    let mut hx_rows = Vec::with_capacity(lx * ly);
    for i in 0..lx {
        for j in 0..ly {
            hz_rows.push(layout.plaquette(i, j));
            hx_rows.push(layout.star(i, j));
        }
    }
    let hz = BitMatrix::from_rows(n, hz_rows);
    let hx = BitMatrix::from_rows(n, hx_rows);
    // Pair 1: Z along the horizontal cycle, X along a vertical cut.
    let z1 = BitVec::from_indices(
        n,
        &(0..lx).map(|i| layout.qubit(i, 0, Orientation::Horizontal)).collect::<Vec<_>>(),
    );
    let x1 = BitVec::from_indices(
        n,
        &(0..ly).map(|j| layout.qubit(0, j, Orientation::Horizontal)).collect::<Vec<_>>(),
    );
    // Pair 2: X along the horizontal dual cycle, Z along a vertical cycle.
    let x2 = BitVec::from_indices(
        n,
        &(0..lx).map(|i| layout.qubit(i, 0, Orientation::Vertical)).collect::<Vec<_>>(),
    );
    let z2 = BitVec::from_indices(
        n,
        &(0..ly).map(|j| layout.qubit(0, j, Orientation::Vertical)).collect::<Vec<_>>(),
    );
    CssCode::with_logicals(hz, hx, vec![x1, x2], vec![z1, z2])
}

/// Asymmetric toric code construction: toric(Lx, c) with the Hamiltonian
/// H = sum_{j=0}^{Lx-1} (Z on the vertical cycle of column j); each term is a
/// translate of the weight-c logical Z of pair 2. The state is the +1
/// eigenstate of both logical X operators, so <H_j> = 0 while every product
/// H_j H_j' is a +1 plaquette product: F = Lx^2 exactly.
pub fn asymmetric_toric_bundle(c: usize, lx: usize) -> Result<ConstructionBundle> {
    if lx < 2 || c < 1 {
        return Err(Error::InvalidDimensions(lx, c));
    }
    let layout = ToricLayout::new(lx, c)?;
    let code = toric_code(lx, c)?;
    let n = code.num_qubits();
    let terms: Vec<(f64, PauliOperator)> = (0..lx)
        .map(|j| {
            let support: Vec<usize> =
                (0..c).map(|l| layout.qubit(j, l, Orientation::Vertical)).collect();
            (1.0, PauliOperator::z_on(n, &support))
        })
        .collect();
    let hamiltonian = PauliHamiltonian::new(n, terms)?;
    let state = code.state(&[LogicalBasis::XPlus, LogicalBasis::XPlus])?;
    let predicted = (lx * lx) as f64;
    let reference = (n * n) as f64 / (c * c) as f64;
    Ok(ConstructionBundle {
        family: "asym_toric".into(),
        code,
        state,
        hamiltonian,
        predicted_qfi: predicted,
        note: format!(
            "correlation sum gives F = Lx^2 = {predicted}; the closed form n^2/c^2 = {reference} \
             is 4x larger and is reported for reference only (the computed value is authoritative)"
        ),
    })
}

/// Quantum code of a classical LDPC code presented as a graph: one qubit per
/// edge, one Z-check per vertex (the incidence vector, so every column has
/// weight exactly 2), no X-checks. Logical X operators span the cycle space.
pub fn classical_ldpc_code(g: &Graph) -> Result<CssCode> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    for v in 0..g.num_vertices() {
        if g.degree(v) < 2 {
            return Err(Error::DegreeViolation { vertex: v, degree: g.degree(v) });
        }
    }
    let hz = g.incidence_matrix();
    CssCode::from_matrices(hz, BitMatrix::new(g.num_edges()))
}

/// Diagnostics reported alongside a BFS-cascade bundle.
#[derive(Debug, Clone)]
pub struct CascadeReport {
    pub delta: usize,
    pub m: usize,
    pub tree_depth: usize,
    pub tree_width: usize,
    pub max_degree: usize,
    pub girth: Option<usize>,
    pub k_support: u32,
    /// Set when the tree width exceeds `width_limit`; the construction still
    /// runs (the flatness conditions are asymptotic, not per-instance).
    pub width_warning: bool,
}

pub const DEFAULT_WIDTH_LIMIT: usize = 8;

/// BFS-cascade construction (CLI family id `appendix-d`): on a graph code
/// with distinguished edge (v_s, v_t), the terms are
///   H_1 = Z_e,   H_{j+1} = H_j * Z_{L_{j-1}}   for j = 1..Delta,
/// where Z_L multiplies the vertex checks of BFS level L in the graph with e
/// removed and Delta is the v_s-v_t distance there. The products telescope to
/// single inter-level edge layers, every term is a Z-representative of the
/// same logical class up to checks, and the all-(X,+) logical eigenstate gives
/// F = (Delta + 1)^2.
pub fn bfs_cascade_bundle(
    g: &Graph,
    v_s: usize,
    v_t: usize,
) -> Result<(ConstructionBundle, CascadeReport)> {
    let edge = g.edge_between(v_s, v_t).ok_or(Error::EdgeMissing(v_s, v_t))?;
    let code = classical_ldpc_code(g)?;
    let n = code.num_qubits();
    let tree = g.bfs_tree_skipping(v_s, Some(edge));
    let delta = match tree.level_of[v_t] {
        Some(d) => d,
        None => return Err(Error::DisconnectedGraph),
    };
    // Some logical X must cover the distinguished edge; guaranteed because
    // removing it keeps v_s, v_t connected, so it lies on a cycle.
    assert!(
        code.logicals().iter().any(|p| p.x.x_bits().get(edge)),
        "distinguished edge not covered by the cycle space"
    );
    let mut terms: Vec<(f64, PauliOperator)> = Vec::with_capacity(delta + 1);
    let mut cur = PauliOperator::z_on(n, &[edge]);
    terms.push((1.0, cur.clone()));
    for j in 1..=delta {
        // multiply by the product of vertex checks over level j-1
        for &v in &tree.levels[j - 1] {
            let check = PauliOperator::from_parts(n, BitVec::zeros(n), code.hz().row(v).clone(), 0);
            cur = cur.mul(&check)?;
        }
        terms.push((1.0, cur.clone()));
        // telescoping identity: the running product is exactly the layer of
        // edges between BFS levels j-1 and j
        let mut layer = BitVec::zeros(n);
        for (id, &(a, b)) in g.edges().iter().enumerate() {
            if id == edge {
                continue;
            }
            let (la, lb) = (tree.level_of[a], tree.level_of[b]);
            if let (Some(la), Some(lb)) = (la, lb) {
                if (la.min(lb), la.max(lb)) == (j - 1, j) {
                    layer.set(id, true);
                }
            }
        }
        assert_eq!(
            cur.z_bits(),
            &layer,
            "cascade recursion diverged from the inter-level edge layer at step {j}"
        );
    }
    let hamiltonian = PauliHamiltonian::new(n, terms)?;
    let profile = hamiltonian.locality_profile();
    let state = code.state(&vec![LogicalBasis::XPlus; code.num_logicals()])?;
    let m = delta + 1;
    let report = CascadeReport {
        delta,
        m,
        tree_depth: tree.depth,
        tree_width: tree.width,
        max_degree: g.max_degree(),
        girth: g.girth(),
        k_support: profile.k_support,
        width_warning: tree.width > DEFAULT_WIDTH_LIMIT,
    };
    let bundle = ConstructionBundle {
        family: "appendix_d".into(),
        code,
        state,
        hamiltonian,
        predicted_qfi: (m * m) as f64,
        note: format!(
            "BFS cascade with Delta = {delta}: m = {m} commuting terms, each a Z logical \
             representative up to checks; F = (Delta+1)^2 = {}",
            m * m
        ),
    };
    Ok((bundle, report))
}

/// The [[5,1,3]] code (not CSS).
pub fn five_qubit_code() -> StabilizerCode {
    let p = |s: &str| s.parse::<PauliOperator>().unwrap();
    StabilizerCode {
        n: 5,
        generators: vec![p("XZZXI"), p("IXZZX"), p("XIXZZ"), p("ZXIXZ")],
        logicals: vec![LogicalPair { x: p("XXXXX"), z: p("ZZZZZ") }],
    }
}

/// Steane [[7,1,3]]: Hz = Hx = the [7,4] Hamming parity-check matrix.
pub fn steane_code() -> CssCode {
    let hamming = vec![vec![3, 4, 5, 6], vec![1, 2, 5, 6], vec![0, 2, 4, 6]];
    CssCode::from_matrices(
        BitMatrix::from_row_supports(7, &hamming),
        BitMatrix::from_row_supports(7, &hamming),
    )
    .expect("valid by construction")
}

/// Shor [[9,1,3]]: six weight-2 Z-checks in three triples, two weight-6 X-checks.
pub fn shor_code() -> CssCode {
    let hz = BitMatrix::from_row_supports(
        9,
        &[vec![0, 1], vec![1, 2], vec![3, 4], vec![4, 5], vec![6, 7], vec![7, 8]],
    );
    let hx = BitMatrix::from_row_supports(9, &[vec![0, 1, 2, 3, 4, 5], vec![3, 4, 5, 6, 7, 8]]);
    CssCode::from_matrices(hz, hx).expect("valid by construction")
}
