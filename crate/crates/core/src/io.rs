//! File formats: alist parity-check matrices, JSON matrices, graph files,
//! Hamiltonian/state JSON, bundle directories, and canonical JSON output.
//!
//! Canonical JSON pins byte-identical output across runs: keys keep their
//! construction order and floats are rounded to 12 significant digits before
//! shortest-form printing.

use crate::bits::BitMatrix;
use crate::constructions::ConstructionBundle;
use crate::css::CssCode;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hamiltonian::PauliHamiltonian;
use crate::pauli::PauliOperator;
use crate::state::StabilizerState;
use serde::{Deserialize, Serialize};
use std::path::Path;

// ---------------------------------------------------------------------------
// alist (standard LDPC text format, 1-indexed)

/// Write a binary matrix in alist format: `n m`, max column/row degrees,
/// per-column degrees, per-row degrees, then per-column and per-row index
/// lists (1-indexed, unpadded).
pub fn alist_write(m: &BitMatrix) -> String {
    let rows = m.num_rows();
    let cols = m.num_cols();
    let col_lists: Vec<Vec<usize>> = (0..cols)
        .map(|c| (0..rows).filter(|&r| m.get(r, c)).collect())
        .collect();
    let row_lists: Vec<Vec<usize>> = (0..rows)
        .map(|r| m.row(r).ones().collect())
        .collect();
    let max_col = col_lists.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = row_lists.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    out.push_str(&format!("{} {}\n{} {}\n", cols, rows, max_col, max_row));
    let degrees = |lists: &[Vec<usize>]| {
        lists
            .iter()
            .map(|l| l.len().to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    out.push_str(&degrees(&col_lists));
    out.push('\n');
    out.push_str(&degrees(&row_lists));
    out.push('\n');
    for list in col_lists.iter().chain(row_lists.iter()) {
        let line = list
            .iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Parse alist text; zero padding entries are accepted and ignored.
pub fn alist_parse(text: &str) -> Result<BitMatrix> {
    let mut nums = text
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad alist token {t:?}"))));
    let mut next = |what: &str| -> Result<usize> {
        nums.next()
            .ok_or_else(|| Error::Parse(format!("alist truncated before {what}")))?
    };
    let cols = next("n")?;
    let rows = next("m")?;
    let _max_col = next("max column degree")?;
    let _max_row = next("max row degree")?;
    let col_degs: Vec<usize> = (0..cols).map(|_| next("column degree")).collect::<Result<_>>()?;
    let row_degs: Vec<usize> = (0..rows).map(|_| next("row degree")).collect::<Result<_>>()?;
    let mut row_vecs = vec![crate::bits::BitVec::zeros(cols); rows];
    let set = |row_vecs: &mut Vec<crate::bits::BitVec>, r: usize, c: usize| -> Result<()> {
        if r >= rows || c >= cols {
            return Err(Error::Parse(format!("alist index ({r},{c}) out of range")));
        }
        row_vecs[r].set(c, true);
        Ok(())
    };
    for (c, &deg) in col_degs.iter().enumerate() {
        for _ in 0..deg {
            let r = next("column entry")?;
            if r == 0 {
                continue; // padding
            }
            set(&mut row_vecs, r - 1, c)?;
        }
    }
    for (r, &deg) in row_degs.iter().enumerate() {
        for _ in 0..deg {
            let c = next("row entry")?;
            if c == 0 {
                continue;
            }
            set(&mut row_vecs, r, c - 1)?;
        }
    }
    Ok(BitMatrix::from_rows(cols, row_vecs))
}

// ---------------------------------------------------------------------------
// JSON matrix form {"n": cols, "rows": [[0-indexed column indices], ...]}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    rows: Vec<Vec<usize>>,
}

pub fn matrix_to_json(m: &BitMatrix) -> String {
    let doc = MatrixJson {
        n: m.num_cols(),
        rows: m.rows().iter().map(|r| r.ones().collect()).collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn matrix_from_json(text: &str) -> Result<BitMatrix> {
    let doc: MatrixJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
    for row in &doc.rows {
        if row.iter().any(|&c| c >= doc.n) {
            return Err(Error::Parse("matrix JSON: column index out of range".into()));
        }
    }
    Ok(BitMatrix::from_row_supports(doc.n, &doc.rows))
}

// ---------------------------------------------------------------------------
// Graph files: edge list text ("u v" per line, 0-indexed) and JSON

pub fn graph_from_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut max_v = 0;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize> {
            tok.ok_or_else(|| Error::Parse(format!("edge list line {}: expected 'u v'", lineno + 1)))?
                .parse()
                .map_err(|_| Error::Parse(format!("edge list line {}: bad vertex", lineno + 1)))
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if u == v {
            return Err(Error::Parse(format!("edge list line {}: self-loop", lineno + 1)));
        }
        max_v = max_v.max(u).max(v);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(Error::Parse("edge list is empty".into()));
    }
    Ok(Graph::from_edges(max_v + 1, &edges))
}

pub fn graph_to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let doc: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph JSON: {e}")))?;
    for &(u, v) in &doc.edges {
        if u >= doc.vertices || v >= doc.vertices {
            return Err(Error::Parse("graph JSON: vertex out of range".into()));
        }
        if u == v {
            return Err(Error::Parse("graph JSON: self-loop".into()));
        }
    }
    Ok(Graph::from_edges(doc.vertices, &doc.edges))
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson {
        vertices: g.num_vertices(),
        edges: g.edges().to_vec(),
    })
    .expect("serializable")
}

// ---------------------------------------------------------------------------
// Hamiltonian JSON {"n": ..., "terms": [{"coeff": c, "pauli": "XIZ"}, ...]}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: f64,
    pauli: String,
}

#[derive(Serialize, Deserialize)]
struct HamiltonianJson {
    n: usize,
    terms: Vec<TermJson>,
}

pub fn hamiltonian_to_json(h: &PauliHamiltonian) -> String {
    let doc = HamiltonianJson {
        n: h.num_qubits(),
        terms: h
            .terms()
            .iter()
            .map(|(c, op)| TermJson { coeff: *c, pauli: op.to_string() })
            .collect(),
    };
    let mut value = serde_json::to_value(&doc).expect("serializable");
    canonicalize_numbers(&mut value);
    serde_json::to_string(&value).expect("serializable")
}

pub fn hamiltonian_from_json(text: &str) -> Result<PauliHamiltonian> {
    let doc: HamiltonianJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("hamiltonian JSON: {e}")))?;
    let terms = doc
        .terms
        .iter()
        .map(|t| Ok((t.coeff, t.pauli.parse::<PauliOperator>()?)))
        .collect::<Result<Vec<_>>>()?;
    PauliHamiltonian::new(doc.n, terms)
}

// ---------------------------------------------------------------------------
// State JSON {"n": ..., "generators": ["+XXXX", "-ZZII", ...]}

#[derive(Serialize, Deserialize)]
struct StateJson {
    n: usize,
    generators: Vec<String>,
}

pub fn state_to_json(state: &StabilizerState) -> String {
    let generators = state
        .generators()
        .iter()
        .zip(state.signs())
        .map(|(g, &s)| format!("{}{}", if s == 1 { "+" } else { "-" }, g))
        .collect();
    serde_json::to_string(&StateJson { n: state.num_qubits(), generators }).expect("serializable")
}

pub fn state_from_json(text: &str) -> Result<StabilizerState> {
    let doc: StateJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("state JSON: {e}")))?;
    let mut gens = Vec::with_capacity(doc.generators.len());
    for s in &doc.generators {
        let op: PauliOperator = s.parse()?;
        if op.num_qubits() != doc.n {
            return Err(Error::DimensionMismatch(op.num_qubits(), doc.n));
        }
        gens.push(op);
    }
    let signs = vec![1; gens.len()];
    StabilizerState::new(gens, signs)
}

// ---------------------------------------------------------------------------
// Bundle directory: code.alist (+ code.hx.alist), hamiltonian.json,
// state.json, prediction.json

#[derive(Serialize, Deserialize, Debug)]
pub struct PredictionJson {
    pub family: String,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub predicted_qfi: f64,
    pub note: String,
}

pub fn write_bundle(dir: &Path, bundle: &ConstructionBundle) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join("code.alist"), alist_write(bundle.code.hz()))?;
    if bundle.code.hx().num_rows() > 0 {
        std::fs::write(dir.join("code.hx.alist"), alist_write(bundle.code.hx()))?;
    }
    std::fs::write(dir.join("hamiltonian.json"), hamiltonian_to_json(&bundle.hamiltonian))?;
    std::fs::write(dir.join("state.json"), state_to_json(&bundle.state))?;
    let prediction = PredictionJson {
        family: bundle.family.clone(),
        n: bundle.code.num_qubits(),
        k: bundle.code.num_logicals(),
        m: bundle.hamiltonian.num_terms(),
        predicted_qfi: bundle.predicted_qfi,
        note: bundle.note.clone(),
    };
    let mut value = serde_json::to_value(&prediction).expect("serializable");
    canonicalize_numbers(&mut value);
    std::fs::write(dir.join("prediction.json"), serde_json::to_string(&value).expect("serializable"))?;
    Ok(())
}

/// Load the Z-check matrix (and X-check matrix if present) from a bundle dir.
pub fn read_bundle_code(dir: &Path) -> Result<CssCode> {
    let hz = alist_parse(&std::fs::read_to_string(dir.join("code.alist"))?)?;
    let hx_path = dir.join("code.hx.alist");
    let hx = if hx_path.exists() {
        alist_parse(&std::fs::read_to_string(hx_path)?)?
    } else {
        BitMatrix::new(hz.num_cols())
    };
    CssCode::from_matrices(hz, hx)
}

// ---------------------------------------------------------------------------
// Canonical JSON numbers

/// Round every float in the document to 12 significant digits so repeated
/// runs emit byte-identical JSON.
pub fn canonicalize_numbers(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if n.as_i64().is_none() && n.as_u64().is_none() {
                    let mut rounded: f64 = format!("{:.11e}", f).parse().expect("valid float");
                    if rounded == 0.0 {
                        rounded = 0.0; // collapse -0.0
                    }
                    *n = serde_json::Number::from_f64(rounded).expect("finite");
                }
            }
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(canonicalize_numbers),
        serde_json::Value::Object(map) => map.values_mut().for_each(canonicalize_numbers),
        _ => {}
    }
}

pub fn to_canonical_json(value: &serde_json::Value) -> String {
    let mut v = value.clone();
    canonicalize_numbers(&mut v);
    serde_json::to_string(&v).expect("serializable")
}
