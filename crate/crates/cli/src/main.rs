//! `opbound`: spectra, iterate decay, total-positivity classification
//! and lower-estimate certification for positive approximation
//! operators on [0, 1].
//!
//! Exit codes: 0 = success with no violations, 1 = at least one
//! inequality violation (a finding, fully reported), 2 = usage or
//! configuration error.

mod descriptor;
mod report;

use clap::{Args, Parser, Subcommand};
use descriptor::{generate_corpus, parse_f64_list, parse_knots, parse_operator, parse_usize_list};
use nalgebra::DMatrix;
use opbound_core::{
    bounds, check_schoenberg_eigen_pattern, eigendecompose, fixed_point_projection,
    is_oscillatory_with_tol, iterate_decay, spectral_location_check, BoundCertificate,
    FiniteRankOperator, Grid, OperatorKind, PNorm, RangeNormChoice, SampledFunction,
    VerifyOptions,
};
use rayon::prelude::*;
use report::{DecayPayload, Report, SpectrumPayload, TpPayload};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "opbound", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues, spectral gap and location check of an operator's
    /// collocation matrix (CSV + JSON).
    Spectrum(SpectrumArgs),
    /// Certify an inequality family over operators x corpus x parameters.
    Verify(VerifyArgs),
    /// Total-positivity / oscillatory classification of a collocation
    /// matrix or a matrix file.
    Tpcheck(TpcheckArgs),
    /// Decay trace of the operator iterates toward the fixed-point
    /// projection (CSV + fitted rate).
    Iterates(IteratesArgs),
}

#[derive(Args)]
struct SpectrumArgs {
    /// Operator descriptor, e.g. `bernstein:n=3` or
    /// `schoenberg:k=2,knots=uniform:4`.
    #[arg(long)]
    operator: String,
    /// Output directory for report.json and spectrum.csv.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Inequality family: seminorm-lemma | main-theorem |
    /// uniform-cor | bernstein-cor | kantorovich-cor | schoenberg-cor |
    /// integral-schoenberg-cor.
    #[arg(long)]
    ineq: String,
    /// Operator descriptor (for operator-generic inequalities).
    #[arg(long)]
    operator: Option<String>,
    /// Order list/range for order-indexed families, e.g. `4..64` or `4,8,16`.
    #[arg(long)]
    n: Option<String>,
    /// Spline degree (with --knots).
    #[arg(long)]
    k: Option<usize>,
    /// Smoothness order r.
    #[arg(long)]
    r: Option<usize>,
    /// Norm: `inf` or a positive real.
    #[arg(long, default_value = "inf")]
    p: String,
    /// Step list for the main theorem, e.g. `0.05,0.1,0.2`.
    #[arg(long)]
    t: Option<String>,
    /// Corpus: standard | polynomials | rough | custom:<file>.
    #[arg(long, default_value = "standard")]
    corpus: String,
    /// Knot generator: uniform:<n> | chebyshev:<n> |
    /// random:<n>:<seed>:<min-gauge> | <file>.
    #[arg(long)]
    knots: Option<String>,
    /// Spline constant d_k / d_{k+1} for the Schoenberg-type corollaries.
    #[arg(long = "d-k")]
    d_k: Option<f64>,
    /// Which range derivative norm N to use.
    #[arg(long = "range-norm", default_value = "analytic")]
    range_norm: String,
    /// Grid resolution (number of sample points).
    #[arg(long, default_value_t = 4097)]
    grid: usize,
    /// Output directory for report.json.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for randomized knot generation.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct TpcheckArgs {
    /// Operator descriptor whose collocation matrix to classify.
    #[arg(long, conflicts_with = "matrix_file")]
    operator: Option<String>,
    /// Whitespace-separated square matrix file to classify instead.
    #[arg(long = "matrix-file")]
    matrix_file: Option<PathBuf>,
    /// Minor non-negativity tolerance.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Output directory for report.json.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct IteratesArgs {
    /// Operator descriptor.
    #[arg(long)]
    operator: String,
    /// Number of iterates (must be >= 10).
    #[arg(long = "m-max", default_value_t = 60)]
    m_max: usize,
    /// Output directory for report.json and decay.csv.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("OPBOUND_THREADS") {
        if let Ok(threads) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.max(1))
                .build_global();
        }
    }
    let cli = Cli::parse();
    let config = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let result = match cli.command {
        Command::Spectrum(args) => cmd_spectrum(args, config),
        Command::Verify(args) => cmd_verify(args, config),
        Command::Tpcheck(args) => cmd_tpcheck(args, config),
        Command::Iterates(args) => cmd_iterates(args, config),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn cmd_spectrum(args: SpectrumArgs, config: String) -> Result<ExitCode, String> {
    let op = parse_operator(&args.operator)?;
    let a = op.collocation_matrix();
    let s = eigendecompose(&a).map_err(|e| e.to_string())?;
    let location_ok = spectral_location_check(&s);
    let mut rep = Report::new(config);
    rep.spectrum = Some(SpectrumPayload::new(op.name(), &s, location_ok));
    if let (OperatorKind::Schoenberg { .. }, Some(seq)) = (op.kind(), op.knots()) {
        rep.eigen_pattern = Some(check_schoenberg_eigen_pattern(seq).map_err(|e| e.to_string())?);
    }
    if let Some(dir) = &args.out {
        report::write_file(dir, "spectrum.csv", &report::spectrum_csv(&s))
            .map_err(|e| e.to_string())?;
    }
    rep.emit(args.out.as_deref()).map_err(|e| e.to_string())?;
    let pattern_ok = rep.eigen_pattern.as_ref().map_or(true, |p| p.holds);
    Ok(if location_ok && pattern_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_verify(args: VerifyArgs, config: String) -> Result<ExitCode, String> {
    let grid = Grid::uniform(args.grid).map_err(|e| e.to_string())?;
    let corpus = generate_corpus(&args.corpus, &grid)?;
    if corpus.is_empty() {
        return Err("empty corpus".into());
    }
    let p = PNorm::parse(&args.p).map_err(|e| e.to_string())?;
    let range_norm = match args.range_norm.as_str() {
        "analytic" => RangeNormChoice::Analytic,
        "numeric" => RangeNormChoice::Numeric,
        other => return Err(format!("unknown range-norm `{other}`")),
    };
    let opts = VerifyOptions {
        d_const: args.d_k,
        range_norm,
    };
    let ns = args
        .n
        .as_deref()
        .map(parse_usize_list)
        .transpose()?
        .unwrap_or_else(|| vec![4, 8, 16, 32, 64]);
    let operator = args.operator.as_deref().map(parse_operator).transpose()?;
    let knots = match (&args.knots, args.k) {
        (Some(spec), Some(k)) => Some(parse_knots(k, spec)?),
        (Some(_), None) => return Err("--knots requires --k".into()),
        _ => None,
    };

    let need_operator = || -> Result<&FiniteRankOperator, String> {
        operator
            .as_ref()
            .ok_or_else(|| format!("--ineq {} needs --operator", args.ineq))
    };
    let r_or = |default: usize| args.r.unwrap_or(default);

    let certs: Vec<BoundCertificate> = match args.ineq.as_str() {
        "seminorm-lemma" => {
            let op = need_operator()?;
            run_over(&corpus, |f| {
                bounds::verify_seminorm_lemma(op, f, r_or(2), p, &opts).map(|c| vec![c])
            })?
        }
        "main-theorem" => {
            let op = need_operator()?;
            let ts = args
                .t
                .as_deref()
                .map(parse_f64_list)
                .transpose()?
                .unwrap_or_else(|| vec![0.05, 0.1, 0.2]);
            run_over(&corpus, |f| {
                let mut all = Vec::new();
                for &t in &ts {
                    all.extend(bounds::verify_main_theorem(op, f, r_or(2), t, p, &opts)?);
                }
                Ok(all)
            })?
        }
        "uniform-cor" | "uniform-corollary" => {
            let op = need_operator()?;
            run_over(&corpus, |f| {
                bounds::verify_uniform_corollary(op, f, r_or(2), p, &opts)
            })?
        }
        "bernstein-cor" => {
            let mut items = Vec::new();
            for &n in &ns {
                for f in &corpus {
                    items.push((n, f));
                }
            }
            run_items(&items, |(n, f)| {
                bounds::verify_bernstein_corollary(f, *n).map(|c| vec![c])
            })?
        }
        "kantorovich-cor" => {
            let mut items = Vec::new();
            for &n in &ns {
                for f in &corpus {
                    items.push((n, f));
                }
            }
            run_items(&items, |(n, f)| {
                bounds::verify_kantorovich_corollary(f, *n, p).map(|c| vec![c])
            })?
        }
        "schoenberg-cor" => {
            let seq = knots
                .clone()
                .or_else(|| operator.as_ref().and_then(|o| o.knots().cloned()))
                .ok_or("schoenberg-cor needs --knots with --k (or a schoenberg operator)")?;
            let d_k = args.d_k.ok_or("schoenberg-cor needs --d-k")?;
            run_over(&corpus, |f| {
                bounds::verify_schoenberg_corollary(f, &seq, r_or(2), d_k).map(|c| vec![c])
            })?
        }
        "integral-schoenberg-cor" => {
            let seq = knots
                .clone()
                .or_else(|| operator.as_ref().and_then(|o| o.knots().cloned()))
                .ok_or("integral-schoenberg-cor needs --knots with --k (or an operator)")?;
            run_over(&corpus, |f| {
                bounds::verify_integral_schoenberg_corollary(f, &seq, p, args.d_k).map(|c| vec![c])
            })?
        }
        other => return Err(format!("unknown inequality family `{other}`")),
    };

    let violations = certs.iter().filter(|c| !c.holds).count();
    let rep = Report::new(config).with_certificates(certs);
    rep.emit(args.out.as_deref()).map_err(|e| e.to_string())?;
    Ok(if violations == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_over(
    corpus: &[SampledFunction],
    job: impl Fn(&SampledFunction) -> opbound_core::Result<Vec<BoundCertificate>> + Sync,
) -> Result<Vec<BoundCertificate>, String> {
    let nested: Vec<Vec<BoundCertificate>> = corpus
        .par_iter()
        .map(|f| job(f).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn run_items<T: Sync>(
    items: &[T],
    job: impl Fn(&T) -> opbound_core::Result<Vec<BoundCertificate>> + Sync,
) -> Result<Vec<BoundCertificate>, String> {
    let nested: Vec<Vec<BoundCertificate>> = items
        .par_iter()
        .map(|it| job(it).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    Ok(nested.into_iter().flatten().collect())
}

fn read_matrix(path: &PathBuf) -> Result<DMatrix<f64>, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read matrix file `{}`: {e}", path.display()))?;
    let rows: Vec<Vec<f64>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| t.parse::<f64>().map_err(|e| format!("bad entry `{t}`: {e}")))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err("matrix file must be square and non-empty".into());
    }
    Ok(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
}

fn cmd_tpcheck(args: TpcheckArgs, config: String) -> Result<ExitCode, String> {
    let (source, a, expect_oscillatory) = match (&args.operator, &args.matrix_file) {
        (Some(desc), None) => {
            let op = parse_operator(desc)?;
            (op.name(), op.collocation_matrix(), true)
        }
        (None, Some(path)) => (path.display().to_string(), read_matrix(path)?, false),
        _ => return Err("tpcheck needs exactly one of --operator or --matrix-file".into()),
    };
    let tp = is_oscillatory_with_tol(&a, args.tol);
    let distinct = if tp.oscillatory {
        let s = eigendecompose(&a).map_err(|e| e.to_string())?;
        let mut moduli: Vec<f64> = s.eigenvalues.iter().map(|l| l.norm()).collect();
        moduli.sort_by(|x, y| y.partial_cmp(x).unwrap());
        let real_positive = s
            .eigenvalues
            .iter()
            .all(|l| l.im.abs() <= 1e-8 && l.re > 0.0);
        let pairwise = moduli
            .windows(2)
            .all(|w| w[0] > 0.0 && (w[0] - w[1]) / w[0] > 1e-8);
        Some(real_positive && pairwise)
    } else {
        None
    };
    let oscillatory = tp.oscillatory;
    let mut rep = Report::new(config);
    rep.tp = Some(TpPayload {
        source,
        report: tp,
        eigenvalues_distinct_positive_real: distinct,
    });
    rep.emit(args.out.as_deref()).map_err(|e| e.to_string())?;
    Ok(if !expect_oscillatory || (oscillatory && distinct == Some(true)) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_iterates(args: IteratesArgs, config: String) -> Result<ExitCode, String> {
    if args.m_max < 10 {
        return Err(format!("--m-max must be >= 10, got {}", args.m_max));
    }
    let op = parse_operator(&args.operator)?;
    let a = op.collocation_matrix();
    let pi = fixed_point_projection(&a).map_err(|e| e.to_string())?;
    let trace = iterate_decay(&a, &pi, args.m_max).map_err(|e| e.to_string())?;
    let mut rep = Report::new(config);
    rep.decay = Some(DecayPayload {
        operator: op.name(),
        gamma: trace.gamma,
        c_fit: trace.c_fit,
        fitted_rate: trace.fitted_rate,
        paper_bound_holds: trace.paper_bound_holds,
        m_max: args.m_max,
    });
    if let Some(dir) = &args.out {
        report::write_file(dir, "decay.csv", &report::decay_csv(&trace))
            .map_err(|e| e.to_string())?;
    }
    rep.emit(args.out.as_deref()).map_err(|e| e.to_string())?;
    Ok(ExitCode::SUCCESS)
}
