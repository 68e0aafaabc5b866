use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use inertia_lab::exact::{ldlt_inertia, rat, MatrixJson};
use inertia_lab::graph::{build_family, FamilySpec, Graph, GraphError};
use inertia_lab::harness::{
    conjecture_scan, oracle_cap, property_suite, verify_campaign, CampaignFamily, CampaignSpec,
    HarnessError, Input, ScanConfig,
};
use inertia_lab::predict::{
    null_witness_deg2_pair, null_witness_even_cycle_branch, null_witness_opposite_pendants,
    predict_inertia, row_witness_deg2, PredictError,
};
use inertia_lab::spectra::{jacobi_eigenvalues, SpectraError, SIGN_TOL};

#[derive(Parser)]
#[command(name = "inertia-lab", version, about = "Exact inertia of distance-squared matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member and print its graph JSON.
    Gen {
        #[arg(long)]
        family: FamilySpec,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the distance-squared matrix of a graph.
    Delta { file: Option<PathBuf> },
    /// Inertia of a graph's Δ or of a matrix.
    Inertia {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
    },
    /// Jacobi spectrum of a graph's Δ or of a matrix.
    Spectrum {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = SIGN_TOL)]
        tol: f64,
    },
    /// Closed-form inertia prediction for a graph.
    Predict { file: Option<PathBuf> },
    /// Build and check a witness vector.
    Witness {
        file: Option<PathBuf>,
        #[arg(long, value_enum)]
        kind: WitnessArg,
        /// Comma-separated `key=value` pairs: v (row), v1,v2 (pair), u (branch), k (opposite).
        #[arg(long, default_value = "")]
        args: String,
    },
    /// Compare predictions with the exact oracle over a whole family.
    Verify {
        #[arg(long)]
        family: CampaignFamily,
        /// Inclusive range `A..B`.
        #[arg(long, value_parser = parse_range)]
        range: (usize, usize),
        #[arg(long, default_value_t = 5)]
        tree_max: usize,
        /// Oracle cap; defaults to INERTIA_LAB_MAX_N or 24.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan random unicyclic graphs against l <= i- <= l + q.
    Scan {
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the exact property suites.
    Props {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Numeric,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessArg {
    Row,
    Pair,
    Branch,
    Opposite,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Harness(#[from] HarnessError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Predict(#[from] PredictError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error("{0}")]
    Usage(String),
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b = b.trim().trim_start_matches('=').parse().map_err(|_| format!("bad range end {b:?}"))?;
    Ok((a, b))
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

fn read_input(file: Option<&Path>) -> Result<String, CliError> {
    match file {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).map_err(io_err(p)),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(io_err(Path::new("<stdin>")))?;
            Ok(s)
        }
    }
}

fn read_graph(file: Option<&Path>) -> Result<Graph, CliError> {
    match Input::parse(&read_input(file)?)? {
        Input::Graph(g) => Ok(g),
        Input::Matrix(_) => Err(CliError::Usage("expected a graph, got a matrix".into())),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, format!("{text}\n")).map_err(io_err(p)),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("report serialization cannot fail")
}

fn witness_args(args: &str) -> Result<Vec<(String, usize)>, CliError> {
    args.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("expected key=value, got {kv:?}")))?;
            let v = v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{k}: not a vertex index: {v:?}")))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn arg(args: &[(String, usize)], key: &str) -> Result<usize, CliError> {
    args.iter()
        .find(|(k, _)| k == key)
        .map(|&(_, v)| v)
        .ok_or_else(|| CliError::Usage(format!("missing --args {key}=...")))
}

fn witness(file: Option<&Path>, kind: WitnessArg, args: &str) -> Result<ExitCode, CliError> {
    let args = witness_args(args)?;
    let (graph, vector, target, label) = match kind {
        WitnessArg::Opposite => {
            let k = arg(&args, "k")?;
            let w = null_witness_opposite_pendants(k)?;
            let g = build_family(&FamilySpec::OppositePendants(k))?;
            (g, w.vector, 0, "Δv = 0")
        }
        WitnessArg::Row => {
            let g = read_graph(file)?;
            let x = row_witness_deg2(&g, arg(&args, "v")?)?;
            (g, x, 2, "Δx = 2·1")
        }
        WitnessArg::Pair => {
            let g = read_graph(file)?;
            let w = null_witness_deg2_pair(&g, arg(&args, "v1")?, arg(&args, "v2")?)?;
            (g, w.vector, 0, "Δv = 0")
        }
        WitnessArg::Branch => {
            let g = read_graph(file)?;
            let w = null_witness_even_cycle_branch(&g, arg(&args, "u")?)?;
            (g, w.vector, 0, "Δv = 0")
        }
    };
    let delta = Input::Graph(graph).into_matrix()?;
    let residual = delta.mul_vec(&vector);
    let ok = residual.iter().all(|r| *r == rat(target));
    let fmt = |v: &[inertia_lab::exact::Rational]| -> Vec<String> {
        v.iter().map(inertia_lab::exact::format_rational).collect()
    };
    let status = if ok {
        format!("verified: {label}")
    } else {
        format!("FAILED: {label}")
    };
    println!(
        "{}",
        pretty(&json!({
            "vector": fmt(&vector),
            "residual": fmt(&residual),
            "status": status,
        }))
    );
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Gen { family, out } => {
            emit(out.as_deref(), &build_family(&family)?.to_json())?;
        }
        Command::Delta { file } => {
            let m = Input::parse(&read_input(file.as_deref())?)?.into_matrix()?;
            println!("{}", serde_json::to_string(&MatrixJson::from(m)).expect("serializable"));
        }
        Command::Inertia { file, method } => {
            let m = Input::parse(&read_input(file.as_deref())?)?.into_matrix()?;
            let t = match method {
                Method::Exact => ldlt_inertia(&m),
                Method::Numeric => jacobi_eigenvalues(&m.as_matrix().to_f64_rows(), SIGN_TOL)?.inertia(),
            };
            println!("{}", serde_json::to_string(&t).expect("serializable"));
        }
        Command::Spectrum { file, tol } => {
            let m = Input::parse(&read_input(file.as_deref())?)?.into_matrix()?;
            let s = jacobi_eigenvalues(&m.as_matrix().to_f64_rows(), tol)?;
            println!(
                "{}",
                pretty(&json!({ "eigenvalues": s.eigenvalues, "tol": s.tol, "inertia": s.inertia() }))
            );
        }
        Command::Predict { file } => {
            let g = read_graph(file.as_deref())?;
            println!("{}", pretty(&predict_inertia(&g)));
        }
        Command::Witness { file, kind, args } => return witness(file.as_deref(), kind, &args),
        Command::Verify {
            family,
            range: (lo, hi),
            tree_max,
            max_n,
            out,
        } => {
            let spec = CampaignSpec::new(family, lo, hi)
                .tree_max(tree_max)
                .max_n(max_n.unwrap_or_else(oracle_cap));
            let report = verify_campaign(&spec)?;
            let text = pretty(&report);
            if let Some(p) = out.as_deref() {
                emit(Some(p), &text)?;
                println!(
                    "{family} {lo}..{hi}: {} instances, {} mismatches, {} boundary",
                    report.instance_count,
                    report.mismatches.len(),
                    report.boundary_cases.len()
                );
            } else {
                println!("{text}");
            }
            if !report.is_clean() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Scan {
            samples,
            max_n,
            seed,
            out,
        } => {
            let report = conjecture_scan(ScanConfig { samples, max_n, seed })?;
            match out.as_deref() {
                Some(p) => {
                    let f = fs::File::create(p).map_err(io_err(p))?;
                    report.write_jsonl(io::BufWriter::new(f)).map_err(io_err(p))?;
                }
                None => {
                    let stdout = io::stdout();
                    let mut lock = stdout.lock();
                    report.write_jsonl(&mut lock).map_err(io_err(Path::new("<stdout>")))?;
                    lock.flush().map_err(io_err(Path::new("<stdout>")))?;
                }
            }
            let s = &report.summary;
            eprintln!("{} graphs: {} in bounds, {} out of bounds", s.total, s.in_bounds, s.out_of_bounds);
        }
        Command::Props { seed, trials } => {
            let report = property_suite(seed, trials);
            println!("{}", pretty(&report));
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
