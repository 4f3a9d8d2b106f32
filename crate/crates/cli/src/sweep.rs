//! Size-family sweeps with log-log scaling fits.
//!
//! Every row records the exact QFI next to the depth-0 locality reference
//! bound m K^2 (for circuit families, the depth-t bound); the ratio column
//! is the measured advantage factor against that reference.

use crate::{CliError, CliResult};
use qfikit::constructions::{asymmetric_toric_bundle, bfs_cascade_bundle, ghz_bundle, toric_code};
use qfikit::graph::Graph;
use qfikit::hamiltonian::sum_z;
use qfikit::lightcone::{depth_qfi_bound, verify_depth_bound, ConnectivityModel};
use qfikit::qfi::qfi_stabilizer;
use qfikit::state::LogicalBasis;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Ghz,
    Toric,
    AsymToric,
    CycleLdpc,
    AppendixD,
    RandomShallow,
}

impl Family {
    pub fn id(&self) -> &'static str {
        match self {
            Family::Ghz => "ghz",
            Family::Toric => "toric",
            Family::AsymToric => "asym_toric",
            Family::CycleLdpc => "cycle_ldpc",
            Family::AppendixD => "appendix_d",
            Family::RandomShallow => "random_shallow",
        }
    }

    /// Families whose fitted exponent is asserted to be 2.
    pub fn asserts_quadratic(&self) -> bool {
        matches!(self, Family::Ghz | Family::AsymToric | Family::AppendixD)
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.replace('_', "-").as_str() {
            "ghz" => Ok(Family::Ghz),
            "toric" => Ok(Family::Toric),
            "asym-toric" => Ok(Family::AsymToric),
            "cycle-ldpc" => Ok(Family::CycleLdpc),
            "appendix-d" => Ok(Family::AppendixD),
            "random-shallow" => Ok(Family::RandomShallow),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub family: Family,
    /// Strictly increasing size parameters (qubits for ghz/cycle families,
    /// Lx for asym-toric, L for toric, n for random-shallow).
    pub sizes: Vec<usize>,
    pub c: usize,
    pub t: u32,
    pub trials: usize,
    pub seed: u64,
    pub jobs: usize,
}

impl SweepSpec {
    pub fn validate(&self) -> CliResult<()> {
        if self.sizes.is_empty() {
            return Err(CliError::Input("sweep needs at least one size".into()));
        }
        if !self.sizes.windows(2).all(|w| w[0] < w[1]) {
            return Err(CliError::Input("sizes must be strictly increasing".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub family: &'static str,
    pub n: usize,
    pub m: usize,
    pub k_support: u32,
    pub k_degree: u32,
    pub qfi: f64,
    pub bound: f64,
    pub ratio: f64,
}

pub fn rows_to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("family,n,m,K_support,K_degree,qfi,bound,ratio\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.family,
            r.n,
            r.m,
            r.k_support,
            r.k_degree,
            fmt_sig(r.qfi),
            fmt_sig(r.bound),
            fmt_sig(r.ratio)
        ));
    }
    out
}

/// 12-significant-digit float text, matching the canonical JSON rounding.
fn fmt_sig(v: f64) -> String {
    let mut rounded: f64 = format!("{:.11e}", v).parse().expect("finite");
    if rounded == 0.0 {
        rounded = 0.0;
    }
    let mut s = format!("{}", rounded);
    if !s.contains('.') && !s.contains('e') {
        s.push_str(".0");
    }
    s
}

#[derive(Debug, Clone)]
pub struct ScalingFit {
    pub exponent: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub points: Vec<(usize, f64)>,
    pub warnings: Vec<String>,
}

impl ScalingFit {
    pub fn to_json(&self, family: &str) -> serde_json::Value {
        serde_json::json!({
            "family": family,
            "exponent": self.exponent,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "points": self.points.iter().map(|(n, q)| serde_json::json!([n, q])).collect::<Vec<_>>(),
            "warnings": self.warnings,
        })
    }
}

/// Ordinary least squares on (log n, log qfi); zero-QFI points are dropped
/// with a warning rather than failing the fit.
pub fn fit_loglog(points: &[(usize, f64)]) -> CliResult<ScalingFit> {
    let mut warnings = Vec::new();
    let usable: Vec<(usize, f64)> = points
        .iter()
        .filter(|&&(n, q)| {
            if q <= 0.0 {
                warnings.push(format!("dropped zero-QFI point at n = {n}"));
                false
            } else {
                true
            }
        })
        .copied()
        .collect();
    if usable.len() < 3 {
        return Err(CliError::Input(format!(
            "scaling fit needs at least 3 nonzero points, have {}",
            usable.len()
        )));
    }
    let xs: Vec<f64> = usable.iter().map(|&(n, _)| (n as f64).ln()).collect();
    let ys: Vec<f64> = usable.iter().map(|&(_, q)| q.ln()).collect();
    let len = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / len;
    let my = ys.iter().sum::<f64>() / len;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(CliError::Input("degenerate fit: all sizes equal".into()));
    }
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let r_squared = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    Ok(ScalingFit { exponent, intercept, r_squared, points: usable, warnings })
}

#[derive(Debug)]
pub struct SweepOutcome {
    pub rows: Vec<SweepRow>,
    pub fit: Option<ScalingFit>,
}

fn sweep_point(spec: &SweepSpec, index: usize, size: usize) -> CliResult<SweepRow> {
    let family = spec.family.id();
    match spec.family {
        Family::Ghz => {
            let b = ghz_bundle(size)?;
            let report = qfi_stabilizer(&b.state, &b.hamiltonian)?;
            let bound = (report.m as f64) * (report.k_support.max(report.k_degree) as f64).powi(2);
            Ok(SweepRow {
                family,
                n: size,
                m: report.m,
                k_support: report.k_support,
                k_degree: report.k_degree,
                qfi: report.value,
                bound,
                ratio: report.value / bound,
            })
        }
        Family::Toric => {
            let code = toric_code(size, size)?;
            let state = code.state(&[LogicalBasis::XPlus, LogicalBasis::XPlus])?;
            let h = sum_z(code.num_qubits());
            let report = qfi_stabilizer(&state, &h)?;
            let bound = report.m as f64;
            Ok(SweepRow {
                family,
                n: size,
                m: report.m,
                k_support: report.k_support,
                k_degree: report.k_degree,
                qfi: report.value,
                bound,
                ratio: report.value / bound,
            })
        }
        Family::AsymToric => {
            let b = asymmetric_toric_bundle(spec.c, size)?;
            let report = qfi_stabilizer(&b.state, &b.hamiltonian)?;
            let k = report.k_support.max(report.k_degree) as f64;
            let bound = report.m as f64 * k * k;
            Ok(SweepRow {
                family,
                n: size,
                m: report.m,
                k_support: report.k_support,
                k_degree: report.k_degree,
                qfi: report.value,
                bound,
                ratio: report.value / bound,
            })
        }
        Family::CycleLdpc | Family::AppendixD => {
            let g = Graph::cycle(size);
            let (b, _) = bfs_cascade_bundle(&g, 0, 1)?;
            let report = qfi_stabilizer(&b.state, &b.hamiltonian)?;
            let bound = report.m as f64;
            Ok(SweepRow {
                family,
                n: size,
                m: report.m,
                k_support: report.k_support,
                k_degree: report.k_degree,
                qfi: report.value,
                bound,
                ratio: report.value / bound,
            })
        }
        Family::RandomShallow => {
            let model = ConnectivityModel::Grid { r: 1, kappa: 2 };
            let h = sum_z(size);
            let report = verify_depth_bound(
                size,
                spec.t,
                &model,
                &h,
                spec.trials,
                spec.seed.wrapping_add(index as u64 * 1_000_003),
            )?;
            let bound_check: f64 = depth_qfi_bound(size as u64, 1, &model, spec.t)
                .to_string()
                .parse()
                .expect("bound fits f64");
            debug_assert_eq!(report.bound, bound_check);
            Ok(SweepRow {
                family,
                n: size,
                m: size,
                k_support: 1,
                k_degree: 1,
                qfi: report.max_qfi,
                bound: report.bound,
                ratio: report.max_ratio,
            })
        }
    }
}

/// Run every size point (parallel up to `jobs`), keep rows ordered by size,
/// and fit the exponent when at least three nonzero points exist.
pub fn run_sweep(spec: &SweepSpec) -> CliResult<SweepOutcome> {
    spec.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs.max(1))
        .build()
        .map_err(|e| CliError::Input(format!("thread pool: {e}")))?;
    let rows: Vec<SweepRow> = pool.install(|| {
        spec.sizes
            .par_iter()
            .enumerate()
            .map(|(i, &s)| sweep_point(spec, i, s))
            .collect::<CliResult<Vec<_>>>()
    })?;
    let points: Vec<(usize, f64)> = rows.iter().map(|r| (r.n, r.qfi)).collect();
    let fit = match spec.family {
        Family::RandomShallow => None,
        _ => Some(fit_loglog(&points)?),
    };
    Ok(SweepOutcome { rows, fit })
}

/// Family-specific assertions: quadratic families must fit exponent 2 within
/// tolerance; random-shallow must stay under the depth bound (enforced inside
/// the verifier, which fails the sweep on any violation).
pub fn check_sweep(spec: &SweepSpec, outcome: &SweepOutcome, tolerance: f64) -> CliResult<()> {
    if spec.family.asserts_quadratic() {
        let fit = outcome.fit.as_ref().expect("fit exists for asserted families");
        if (fit.exponent - 2.0).abs() > tolerance {
            return Err(CliError::AssertionMiss(format!(
                "family {} fitted exponent {} misses 2.0 +- {tolerance}",
                spec.family, fit.exponent
            )));
        }
    }
    if spec.family == Family::RandomShallow {
        for row in &outcome.rows {
            if row.ratio > 1.0 + 1e-12 {
                return Err(CliError::AssertionMiss(format!(
                    "random-shallow ratio {} exceeds 1 at n = {}",
                    row.ratio, row.n
                )));
            }
        }
    }
    Ok(())
}
