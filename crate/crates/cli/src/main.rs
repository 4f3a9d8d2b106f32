use clap::{Args, Parser, Subcommand, ValueEnum};
use qfikit::bits::{BitMatrix, BitVec};
use qfikit::constructions::{
    asymmetric_toric_bundle, bfs_cascade_bundle, ghz_bundle, shor_code, steane_code, toric_code,
    ConstructionBundle,
};
use qfikit::css::CssCode;
use qfikit::dense::{qfi_pure_dense, statevector, DEFAULT_DENSE_QUBITS};
use qfikit::graph::Graph;
use qfikit::hamiltonian::sum_z;
use qfikit::io;
use qfikit::lightcone::{depth_qfi_bound, g_function, verify_depth_bound, ConnectivityModel};
use qfikit::qfi::{qfi_stabilizer, BoundCheck};
use qfikit::state::LogicalBasis;
use qfikit::tanner::{collapse_with_respect_to, qubit_side_collapse, CheckSide, TannerGraph};
use qfikit_cli::config::Config;
use qfikit_cli::sweep::{check_sweep, rows_to_csv, run_sweep, Family, SweepSpec};
use qfikit_cli::verify::{verify_code_bound, verify_toric_local_bound};
use qfikit_cli::{CliError, CliResult};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qfikit", version, about = "Stabilizer-code QFI toolkit")]
struct Cli {
    /// Optional flat key=value config file; explicit flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a named state/Hamiltonian bundle; prints the prediction record.
    Construct {
        #[command(subcommand)]
        family: ConstructCmd,
    },
    /// Compute the QFI of a stabilizer state under a Pauli-sum Hamiltonian.
    Qfi(QfiArgs),
    /// Run a bound verifier: 1 (circuit-depth bound), 2 (nondegenerate code
    /// bound), or 3-toric (toric-code local-Hamiltonian bound).
    Verify(VerifyArgs),
    /// Sweep a size family and fit the QFI scaling exponent.
    Sweep(SweepArgs),
    /// Emit the qubit-side collapse graph of a code's checks.
    Collapse(CollapseArgs),
    /// Evaluate the lightcone growth function and depth bound directly.
    Bounds(BoundsArgs),
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// GHZ state with the uniform single-qubit Z Hamiltonian.
    Ghz {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Toric code on an Lx x Ly torus with H = sum Z_i.
    Toric {
        #[arg(long)]
        lx: usize,
        #[arg(long)]
        ly: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Asymmetric toric code: toric(Lx, c) with vertical logical-Z terms.
    AsymToric {
        #[arg(long)]
        c: usize,
        #[arg(long)]
        lx: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graph code over a cycle with the BFS-cascade Hamiltonian.
    CycleLdpc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// BFS-cascade family on a general graph (cycle:N, theta:A,B,C, or file).
    AppendixD {
        #[arg(long)]
        graph: String,
        /// Distinguished edge tail (defaults to the first edge).
        #[arg(long)]
        vs: Option<usize>,
        /// Distinguished edge head (defaults to the first edge).
        #[arg(long)]
        vt: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct QfiArgs {
    #[arg(long)]
    state: PathBuf,
    #[arg(long)]
    hamiltonian: PathBuf,
    /// Cross-check against the dense statevector oracle (n <= 14).
    #[arg(long)]
    dense_check: bool,
    #[arg(long, value_enum, default_value_t = Convention::Paper)]
    convention: Convention,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Convention {
    /// Variance convention: F = <H^2> - <H>^2.
    Paper,
    /// Multiply by 4 (e^{-i theta H} encoding convention).
    X4,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which bound: 1, 2, or 3-toric.
    theorem: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = ModelKind::OneD)]
    model: ModelKind,
    /// Code for verifier 2: five-qubit, steane, or both.
    #[arg(long, default_value = "both")]
    code: String,
    /// Lattice size for 3-toric.
    #[arg(long = "L", alias = "l")]
    l: Option<usize>,
    /// Skip the dense-oracle cross-check in verifier 2.
    #[arg(long)]
    skip_dense_check: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    /// 1D brickwork (grid r = 1, kappa = 2).
    #[value(name = "1d")]
    OneD,
    /// Random disjoint pairings (all-to-all, kappa = 2).
    AllToAll,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    family: Family,
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    /// Constant short dimension for asym-toric.
    #[arg(long)]
    c: Option<usize>,
    /// Circuit depth for random-shallow.
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    jobs: Option<usize>,
    /// Tolerance on the asserted scaling exponent.
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CollapseArgs {
    /// Bundle directory, alist/JSON matrix file, or ref:shor / ref:steane.
    #[arg(long)]
    code: String,
    /// Optional X-check matrix file when --code is a single-matrix file.
    #[arg(long)]
    code_x: Option<PathBuf>,
    #[arg(long, value_enum)]
    side: SideArg,
    /// Error pattern: a Pauli string (support taken) or a 0/1 bit string.
    #[arg(long)]
    error: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Z,
    X,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, value_enum, default_value_t = BoundsModel::AllToAll)]
    model: BoundsModel,
    #[arg(long, default_value_t = 2)]
    kappa: u32,
    /// Grid dimension (grid model only).
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long)]
    t: u32,
    /// Term count; enables the bound output together with --K.
    #[arg(long)]
    m: Option<u64>,
    /// Locality constant; enables the bound output together with --m.
    #[arg(long = "K", alias = "k")]
    k: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundsModel {
    AllToAll,
    Grid,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qfikit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let config = Config::load(cli.config.as_deref())?;
    match cli.cmd {
        Cmd::Construct { family } => cmd_construct(family),
        Cmd::Qfi(args) => cmd_qfi(args),
        Cmd::Verify(args) => cmd_verify(args, &config),
        Cmd::Sweep(args) => cmd_sweep(args, &config),
        Cmd::Collapse(args) => cmd_collapse(args),
        Cmd::Bounds(args) => cmd_bounds(args),
    }
}

fn parse_graph_spec(spec: &str) -> CliResult<Graph> {
    if let Some(rest) = spec.strip_prefix("cycle:") {
        let n: usize = rest
            .parse()
            .map_err(|_| CliError::Input(format!("bad cycle size {rest:?}")))?;
        if n < 2 {
            return Err(CliError::Input("cycle needs at least 2 vertices".into()));
        }
        return Ok(Graph::cycle(n));
    }
    if let Some(rest) = spec.strip_prefix("theta:") {
        let parts: Vec<usize> = rest
            .split(',')
            .map(|p| p.parse().map_err(|_| CliError::Input(format!("bad theta spec {rest:?}"))))
            .collect::<CliResult<_>>()?;
        let [a, b, c] = parts[..] else {
            return Err(CliError::Input("theta spec needs three path lengths".into()));
        };
        return Ok(Graph::theta(a, b, c));
    }
    let path = Path::new(spec);
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("graph file {}: {e}", path.display())))?;
    let graph = if spec.ends_with(".json") {
        io::graph_from_json(&text)?
    } else {
        io::graph_from_edge_list(&text)?
    };
    Ok(graph)
}

fn emit_bundle(bundle: &ConstructionBundle, out: Option<&Path>) -> CliResult<()> {
    if let Some(dir) = out {
        io::write_bundle(dir, bundle)?;
    }
    let prediction = serde_json::json!({
        "family": bundle.family,
        "n": bundle.code.num_qubits(),
        "k": bundle.code.num_logicals(),
        "m": bundle.hamiltonian.num_terms(),
        "predicted_qfi": bundle.predicted_qfi,
        "note": bundle.note,
    });
    println!("{}", io::to_canonical_json(&prediction));
    Ok(())
}

fn cmd_construct(family: ConstructCmd) -> CliResult<()> {
    match family {
        ConstructCmd::Ghz { n, out } => emit_bundle(&ghz_bundle(n)?, out.as_deref()),
        ConstructCmd::AsymToric { c, lx, out } => {
            emit_bundle(&asymmetric_toric_bundle(c, lx)?, out.as_deref())
        }
        ConstructCmd::Toric { lx, ly, out } => {
            let code = toric_code(lx, ly)?;
            let n = code.num_qubits();
            let state = code.state(&[LogicalBasis::XPlus, LogicalBasis::XPlus])?;
            let bundle = ConstructionBundle {
                family: "toric".into(),
                code,
                state,
                hamiltonian: sum_z(n),
                predicted_qfi: n as f64,
                note: "uniform single-qubit Z field: all cross-correlations vanish, F = m".into(),
            };
            emit_bundle(&bundle, out.as_deref())
        }
        ConstructCmd::CycleLdpc { n, out } => {
            if n < 2 {
                return Err(CliError::Input("cycle needs at least 2 qubits".into()));
            }
            let (mut bundle, _) = bfs_cascade_bundle(&Graph::cycle(n), 0, 1)?;
            bundle.family = "cycle_ldpc".into();
            emit_bundle(&bundle, out.as_deref())
        }
        ConstructCmd::AppendixD { graph, vs, vt, out } => {
            let g = parse_graph_spec(&graph)?;
            if g.num_edges() == 0 {
                return Err(CliError::Input("graph has no edges".into()));
            }
            let (default_vs, default_vt) = g.edges()[0];
            let v_s = vs.unwrap_or(default_vs);
            let v_t = vt.unwrap_or(default_vt);
            let (bundle, report) = bfs_cascade_bundle(&g, v_s, v_t)?;
            if report.width_warning {
                eprintln!(
                    "warning: BFS tree width {} exceeds the flatness reference {}; \
                     the locality constant K = {} may be large",
                    report.tree_width,
                    qfikit::constructions::DEFAULT_WIDTH_LIMIT,
                    report.k_support
                );
            }
            emit_bundle(&bundle, out.as_deref())
        }
    }
}

fn cmd_qfi(args: QfiArgs) -> CliResult<()> {
    let state_text = std::fs::read_to_string(&args.state)
        .map_err(|e| CliError::Input(format!("state file {}: {e}", args.state.display())))?;
    let state = io::state_from_json(&state_text)?;
    let h_text = std::fs::read_to_string(&args.hamiltonian).map_err(|e| {
        CliError::Input(format!("hamiltonian file {}: {e}", args.hamiltonian.display()))
    })?;
    let h = io::hamiltonian_from_json(&h_text)?;
    let mut report = qfi_stabilizer(&state, &h)?;
    let factor = match args.convention {
        Convention::Paper => 1.0,
        Convention::X4 => 4.0,
    };
    let mut dense_fields = None;
    if args.dense_check {
        if state.num_qubits() > DEFAULT_DENSE_QUBITS {
            return Err(CliError::Input(format!(
                "dense check limited to {DEFAULT_DENSE_QUBITS} qubits, state has {}",
                state.num_qubits()
            )));
        }
        let dense = qfi_pure_dense(&statevector(&state), &h)?;
        let diff = (report.value - dense).abs();
        if diff > 1e-9 {
            return Err(CliError::OracleMismatch(format!(
                "stabilizer value {} vs dense value {dense} (diff {diff:.3e})",
                report.value
            )));
        }
        dense_fields = Some((dense * factor, diff));
    }
    report.value *= factor;
    report.bounds.push(BoundCheck {
        name: "depth0_mK2".into(),
        value: factor
            * report.m as f64
            * (report.k_support.max(report.k_degree) as f64).powi(2),
        ok: true,
    });
    let mut json = report.to_json();
    if let Some((dense_value, dense_diff)) = dense_fields {
        json["dense_value"] = serde_json::json!(dense_value);
        json["dense_diff"] = serde_json::json!(dense_diff);
    }
    println!("{}", io::to_canonical_json(&json));
    Ok(())
}

fn cmd_verify(args: VerifyArgs, config: &Config) -> CliResult<()> {
    let trials = config.resolve(args.trials, "trials", 100)?;
    let seed = config.resolve(args.seed, "seed", 0)?;
    match args.theorem.as_str() {
        "1" => {
            let n = config.resolve(args.n, "n", 16)?;
            let t = config.resolve(args.t, "t", 2)?;
            let model = match args.model {
                ModelKind::OneD => ConnectivityModel::Grid { r: 1, kappa: 2 },
                ModelKind::AllToAll => ConnectivityModel::AllToAll { kappa: 2 },
            };
            let h = sum_z(n);
            let report = verify_depth_bound(n, t, &model, &h, trials, seed)
                .map_err(|e| match e {
                    qfikit::Error::BoundViolation { qfi, bound } => CliError::AssertionMiss(
                        format!("depth bound violated: QFI {qfi} > {bound}"),
                    ),
                    other => CliError::from(other),
                })?;
            println!("{}", io::to_canonical_json(&report.to_json()));
            Ok(())
        }
        "2" => {
            let codes: Vec<&str> = match args.code.as_str() {
                "both" => vec!["five-qubit", "steane"],
                single => vec![single],
            };
            let mut out = Vec::new();
            for name in codes {
                let report = verify_code_bound(name, trials, seed, !args.skip_dense_check)?;
                out.push(report.to_json());
            }
            println!("{}", io::to_canonical_json(&serde_json::Value::Array(out)));
            Ok(())
        }
        "3-toric" => {
            let l = config.resolve(args.l, "L", 3)?;
            let report = verify_toric_local_bound(l, trials, seed)?;
            println!("{}", io::to_canonical_json(&report.to_json()));
            Ok(())
        }
        other => Err(CliError::Input(format!(
            "unknown verifier {other:?} (expected 1, 2, or 3-toric)"
        ))),
    }
}

fn cmd_sweep(args: SweepArgs, config: &Config) -> CliResult<()> {
    let spec = SweepSpec {
        family: args.family,
        sizes: args.sizes,
        c: config.resolve(args.c, "c", 2)?,
        t: config.resolve(args.t, "t", 2)?,
        trials: config.resolve(args.trials, "trials", 50)?,
        seed: config.resolve(args.seed, "seed", 0)?,
        jobs: config.resolve(args.jobs, "jobs", 2)?,
    };
    let tolerance = config.resolve(args.tolerance, "tolerance", 0.01)?;
    let outcome = run_sweep(&spec)?;
    let csv = rows_to_csv(&outcome.rows);
    let fit_json = match &outcome.fit {
        Some(fit) => fit.to_json(spec.family.id()),
        None => serde_json::json!({
            "family": spec.family.id(),
            "exponent": null,
            "note": "bound-ratio family; no exponent asserted",
        }),
    };
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir)
            .map_err(|e| CliError::Input(format!("out dir {}: {e}", dir.display())))?;
        std::fs::write(dir.join("sweep.csv"), &csv)
            .map_err(|e| CliError::Input(e.to_string()))?;
        std::fs::write(dir.join("fit.json"), io::to_canonical_json(&fit_json))
            .map_err(|e| CliError::Input(e.to_string()))?;
    } else {
        print!("{csv}");
    }
    println!("{}", io::to_canonical_json(&fit_json));
    check_sweep(&spec, &outcome, tolerance)
}

fn load_collapse_code(args: &CollapseArgs) -> CliResult<CssCode> {
    match args.code.as_str() {
        "ref:shor" => return Ok(shor_code()),
        "ref:steane" => return Ok(steane_code()),
        _ => {}
    }
    let path = Path::new(&args.code);
    if path.is_dir() {
        return Ok(io::read_bundle_code(path)?);
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("code file {}: {e}", path.display())))?;
    let hz = if args.code.ends_with(".json") {
        io::matrix_from_json(&text)?
    } else {
        io::alist_parse(&text)?
    };
    let hx = match &args.code_x {
        Some(p) => {
            let t = std::fs::read_to_string(p)
                .map_err(|e| CliError::Input(format!("code-x file {}: {e}", p.display())))?;
            if p.extension().is_some_and(|e| e == "json") {
                io::matrix_from_json(&t)?
            } else {
                io::alist_parse(&t)?
            }
        }
        None => BitMatrix::new(hz.num_cols()),
    };
    Ok(CssCode::from_matrices(hz, hx)?)
}

fn cmd_collapse(args: CollapseArgs) -> CliResult<()> {
    let code = load_collapse_code(&args)?;
    let tanner = TannerGraph::from_css(&code);
    let side = match args.side {
        SideArg::Z => CheckSide::Z,
        SideArg::X => CheckSide::X,
    };
    let num_checks = match side {
        CheckSide::Z => tanner.z_checks.len(),
        CheckSide::X => tanner.x_checks.len(),
    };
    if num_checks == 0 {
        eprintln!("warning: code has no checks on the requested side; empty collapse");
    }
    let collapse = match &args.error {
        None => qubit_side_collapse(&tanner, side),
        Some(text) => {
            let error = parse_error_pattern(text, code.num_qubits())?;
            collapse_with_respect_to(&tanner, side, &error)
        }
    };
    for (u, v) in &collapse.edges {
        println!("{u} {v}");
    }
    Ok(())
}

fn parse_error_pattern(text: &str, n: usize) -> CliResult<BitVec> {
    let bits = if text.chars().all(|c| c == '0' || c == '1') {
        let mut v = BitVec::zeros(text.len());
        for (i, c) in text.chars().enumerate() {
            v.set(i, c == '1');
        }
        v
    } else {
        let op: qfikit::pauli::PauliOperator = text
            .parse()
            .map_err(|e: qfikit::Error| CliError::Input(format!("error pattern: {e}")))?;
        BitVec::from_indices(op.num_qubits(), &op.support())
    };
    if bits.len() != n {
        return Err(CliError::Input(format!(
            "error pattern covers {} qubits, code has {n}",
            bits.len()
        )));
    }
    Ok(bits)
}

fn cmd_bounds(args: BoundsArgs) -> CliResult<()> {
    if args.kappa < 2 {
        return Err(CliError::Input("kappa must be at least 2".into()));
    }
    let model = match args.model {
        BoundsModel::AllToAll => ConnectivityModel::AllToAll { kappa: args.kappa },
        BoundsModel::Grid => {
            if args.r < 1 {
                return Err(CliError::Input("grid dimension r must be at least 1".into()));
            }
            ConnectivityModel::Grid { r: args.r, kappa: args.kappa }
        }
    };
    let g = g_function(&model, args.t);
    let g2t = g_function(&model, 2 * args.t);
    let mut json = serde_json::json!({
        "t": args.t,
        "kappa": args.kappa,
        "g_t": g.to_string(),
        "g_2t": g2t.to_string(),
    });
    if let (Some(m), Some(k)) = (args.m, args.k) {
        let bound = depth_qfi_bound(m, k, &model, args.t);
        json["m"] = serde_json::json!(m);
        json["K"] = serde_json::json!(k);
        json["bound"] = serde_json::json!(bound.to_string());
    }
    println!("{}", io::to_canonical_json(&json));
    Ok(())
}
