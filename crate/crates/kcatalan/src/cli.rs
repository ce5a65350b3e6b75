//! Flag grammar and dispatch for the `kcatalan` binary. All output is
//! byte-deterministic for a fixed argv: numbers print as exact decimals,
//! JSON fields are emitted in sorted order, and randomized suite samples
//! come from fixed seeds.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use kcatalan::counting::{
    bounded_sequence, bounded_weighted_catalan, catalan_exact, height_triangle,
    narayana_triangle, narayana_triangle_padded, weighted_catalan, weighted_sequence, Triangle,
};
use kcatalan::error::Error;
use kcatalan::lattice::enumerate_paths;
use kcatalan::oracle::DEFAULT_PATH_CAP;
use kcatalan::periodicity::{detect_cycle, periodic_form_with_limit, DEFAULT_HYPOTHESIS_LIMIT};
use kcatalan::render;
use kcatalan::transfer::build_transfer_matrix;
use kcatalan::weights::parse_weight_spec;

#[derive(Parser)]
#[command(name = "kcatalan", version, about = "Exact multidimensional Catalan numbers")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The closed-form count of balanced ballot paths for (k, n)
    Catalan(CatalanArgs),
    /// The weighted count for (k, n) under a weight vector
    Weighted(WeightedArgs),
    /// The height-bounded weighted count for (k, s, n)
    Bounded(BoundedArgs),
    /// Rows of the height or Narayana triangle
    Triangle(TriangleArgs),
    /// The transfer matrix of a bounded system
    Matrix(MatrixArgs),
    /// Modular periodicity of a weighted or bounded sequence
    Period(PeriodArgs),
    /// All balanced ballot paths for (k, n), lexicographically
    Enumerate(EnumerateArgs),
    /// Run a verification suite
    Check(CheckArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
    Bfile,
}

#[derive(Args)]
struct CatalanArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: u32,
    #[arg(long = "mod")]
    modulus: Option<u64>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Write terms a(1)..a(n) to this path in b-file format
    #[arg(long)]
    bfile: Option<String>,
}

#[derive(Args)]
struct WeightedArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    weights: String,
    #[arg(long = "mod")]
    modulus: Option<u64>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long)]
    bfile: Option<String>,
}

#[derive(Args)]
struct BoundedArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: i64,
    #[arg(long)]
    n: u32,
    /// Weight spec; defaults to the unweighted count
    #[arg(long, default_value = "ones")]
    weights: String,
    #[arg(long = "mod")]
    modulus: Option<u64>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long)]
    bfile: Option<String>,
}

#[derive(Args)]
struct TriangleArgs {
    #[arg(long)]
    kind: Kind,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    rows: u32,
    #[arg(long = "mod")]
    modulus: Option<u64>,
    /// Pad Narayana rows with zeros to a rectangle
    #[arg(long)]
    padded: bool,
    /// Project the height triangle onto one height column
    #[arg(long, conflicts_with = "p")]
    s: Option<i64>,
    /// Project the Narayana triangle onto one peak-count column
    #[arg(long, conflicts_with = "s")]
    p: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long)]
    bfile: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Height,
    Narayana,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    s: i64,
    #[arg(long, default_value = "ones")]
    weights: String,
    #[arg(long = "mod")]
    modulus: Option<u64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct PeriodArgs {
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "ones")]
    weights: String,
    #[arg(long = "mod")]
    modulus: u64,
    /// Analyze the s-bounded system directly instead of reducing
    #[arg(long)]
    s: Option<i64>,
    /// Orbit budget; defaults to m^dim + 1, which always suffices
    #[arg(long)]
    max_steps: Option<u64>,
    /// Indices scanned by the divisibility hypotheses
    #[arg(long, default_value_t = DEFAULT_HYPOTHESIS_LIMIT)]
    limit: usize,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: u32,
    /// Only paths of height at most s
    #[arg(long)]
    s: Option<i64>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// One of: tables, identities, matrices, periods, oracle
    #[arg(long)]
    suite: String,
    /// Enumeration budget for oracle-backed checks
    #[arg(long, default_value_t = DEFAULT_PATH_CAP)]
    max_paths: u64,
}

pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::CapExceeded { .. }
                | Error::Undetermined { .. }
                | Error::OutputUnwritable { .. } => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn dispatch(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Catalan(args) => {
            let value = catalan_exact(args.k, args.n, args.modulus)?;
            let sequence = || -> Result<Vec<BigInt>, Error> {
                (0..=args.n).map(|n| catalan_exact(args.k, n, args.modulus)).collect()
            };
            if let Some(path) = &args.bfile {
                write_bfile(path, &sequence()?)?;
                return Ok(ExitCode::SUCCESS);
            }
            match args.format {
                Format::Table | Format::Csv => println!("{value}"),
                Format::Json => {
                    print_json(&json!({"k": args.k, "n": args.n, "values": [value.to_string()]}))
                }
                Format::Bfile => print!("{}", render::bfile_lines(&sequence()?)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Weighted(args) => {
            let wv = parse_weight_spec(&args.weights)?;
            let value = weighted_catalan(args.k, args.n, &wv, args.modulus)?;
            if let Some(path) = &args.bfile {
                write_bfile(path, &weighted_sequence(args.k, args.n, &wv, args.modulus)?)?;
                return Ok(ExitCode::SUCCESS);
            }
            match args.format {
                Format::Table | Format::Csv => println!("{value}"),
                Format::Json => {
                    print_json(&json!({"k": args.k, "n": args.n, "values": [value.to_string()]}))
                }
                Format::Bfile => print!(
                    "{}",
                    render::bfile_lines(&weighted_sequence(args.k, args.n, &wv, args.modulus)?)
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounded(args) => {
            let wv = parse_weight_spec(&args.weights)?;
            let value = bounded_weighted_catalan(args.k, args.s, args.n, &wv, args.modulus)?;
            if let Some(path) = &args.bfile {
                write_bfile(
                    path,
                    &bounded_sequence(args.k, args.s, args.n, &wv, args.modulus)?,
                )?;
                return Ok(ExitCode::SUCCESS);
            }
            match args.format {
                Format::Table | Format::Csv => println!("{value}"),
                Format::Json => print_json(&json!({
                    "k": args.k, "s": args.s, "n": args.n, "values": [value.to_string()]
                })),
                Format::Bfile => print!(
                    "{}",
                    render::bfile_lines(&bounded_sequence(
                        args.k,
                        args.s,
                        args.n,
                        &wv,
                        args.modulus
                    )?)
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Triangle(args) => {
            let triangle = match (args.kind, args.padded) {
                (Kind::Height, _) => height_triangle(args.k, args.rows, args.modulus)?,
                (Kind::Narayana, false) => narayana_triangle(args.k, args.rows, args.modulus)?,
                (Kind::Narayana, true) => {
                    narayana_triangle_padded(args.k, args.rows, args.modulus)?
                }
            };
            let column = match (args.kind, args.s, args.p) {
                (Kind::Height, Some(s), _) => Some(triangle_column(&triangle, s)),
                (Kind::Narayana, _, Some(p)) => Some(triangle_column(&triangle, p as i64)),
                (Kind::Height, None, Some(_)) | (Kind::Narayana, Some(_), None) => {
                    return Err(Error::Check(
                        "--s selects a height column, --p a peak column; \
                         use the one matching --kind"
                            .into(),
                    ))
                }
                _ => None,
            };
            if let Some(column) = column {
                if let Some(path) = &args.bfile {
                    write_bfile(path, &column)?;
                    return Ok(ExitCode::SUCCESS);
                }
                match args.format {
                    Format::Table => {
                        for v in column.iter().skip(1) {
                            println!("{v}");
                        }
                    }
                    Format::Csv => println!("{}", join(&column[1..], ",")),
                    Format::Json => {
                        let mut value = render::triangle_to_json(&triangle);
                        let strings: Vec<String> =
                            column[1..].iter().map(|v| v.to_string()).collect();
                        value["values"] = json!(strings);
                        value["n"] = json!(args.rows);
                        if let Some(s) = args.s {
                            value["s"] = json!(s);
                        }
                        if let Some(p) = args.p {
                            value["p"] = json!(p);
                        }
                        print_json(&value);
                    }
                    Format::Bfile => print!("{}", render::bfile_lines(&column)),
                }
                return Ok(ExitCode::SUCCESS);
            }
            if let Some(path) = &args.bfile {
                write_bfile(path, &flatten(&triangle))?;
                return Ok(ExitCode::SUCCESS);
            }
            match args.format {
                Format::Table => {
                    for row in &triangle.rows {
                        println!("{}", join(row, " "));
                    }
                }
                Format::Csv => {
                    for row in &triangle.rows {
                        println!("{}", join(row, ","));
                    }
                }
                Format::Json => {
                    let mut value = render::triangle_to_json(&triangle);
                    value["n"] = json!(args.rows);
                    print_json(&value);
                }
                Format::Bfile => print!("{}", render::bfile_lines(&flatten(&triangle))),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Matrix(args) => {
            let wv = parse_weight_spec(&args.weights)?;
            let matrix = build_transfer_matrix(args.k, args.s, &wv, args.modulus)?;
            match args.format {
                Format::Table => {
                    for row in matrix.entries() {
                        println!("{}", join(row, " "));
                    }
                }
                Format::Csv => {
                    for row in matrix.entries() {
                        println!("{}", join(row, ","));
                    }
                }
                Format::Json => {
                    let mut value = render::matrix_to_json(&matrix);
                    value["k"] = json!(args.k);
                    value["s"] = json!(args.s);
                    print_json(&value);
                }
                Format::Bfile => {
                    return Err(Error::Check(
                        "matrix output has no b-file form; use a sequence command".into(),
                    ))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Period(args) => {
            let wv = parse_weight_spec(&args.weights)?;
            let m = args.modulus;
            let (matrix, form) = match args.s {
                Some(s) => (build_transfer_matrix(args.k, s, &wv, Some(m))?, None),
                None => {
                    match periodic_form_with_limit(args.k, &wv, m, args.limit)? {
                        Some(form) => (form.matrix.clone(), Some(form)),
                        None => {
                            print_json(&json!({"k": args.k, "period_report": null}));
                            return Ok(ExitCode::SUCCESS);
                        }
                    }
                }
            };
            let budget = args
                .max_steps
                .unwrap_or_else(|| m.saturating_pow(matrix.dim() as u32).saturating_add(1));
            let report = detect_cycle(&matrix, m, budget)?;
            let report_json = render::period_report_to_json(&report, form.as_ref());
            print_json(&json!({"k": args.k, "period_report": report_json}));
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate(args) => {
            let paths = enumerate_paths(args.k, args.n, args.s)?;
            match args.format {
                Format::Table | Format::Csv => {
                    for p in paths {
                        let rendered: Vec<String> =
                            p.steps().iter().map(|d| d.to_string()).collect();
                        println!("{}", rendered.join(","));
                    }
                }
                Format::Json => {
                    let all: Vec<Vec<u8>> = paths.map(|p| p.steps().to_vec()).collect();
                    print_json(&json!({"k": args.k, "n": args.n, "values": all}));
                }
                Format::Bfile => {
                    return Err(Error::Check(
                        "path listings have no b-file form; use a sequence command".into(),
                    ))
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check(args) => {
            let Some(outcomes) = kcatalan::suites::suite(&args.suite, args.max_paths) else {
                return Err(Error::Check(format!(
                    "unknown suite {:?}; expected one of {}",
                    args.suite,
                    kcatalan::suites::SUITE_NAMES.join(", ")
                )));
            };
            let mut all_passed = true;
            for outcome in &outcomes {
                let tag = if outcome.passed { "PASS" } else { "FAIL" };
                all_passed &= outcome.passed;
                println!("{tag} {}: {}", outcome.name, outcome.detail);
            }
            println!(
                "{}: {} of {} checks passed",
                if all_passed { "ok" } else { "FAILED" },
                outcomes.iter().filter(|o| o.passed).count(),
                outcomes.len()
            );
            Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn join(values: &[BigInt], separator: &str) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push_str(separator);
        }
        let _ = write!(out, "{v}");
    }
    out
}

fn flatten(triangle: &Triangle) -> Vec<BigInt> {
    // reading order, with a leading placeholder so terms index from 1
    let mut seq = vec![BigInt::from(0)];
    for row in &triangle.rows {
        seq.extend(row.iter().cloned());
    }
    seq
}

/// One column of a triangle as a sequence over n = 1..rows, zero where
/// the row does not reach the column. Index 0 is a placeholder so the
/// b-file terms start at n = 1.
fn triangle_column(triangle: &Triangle, col: i64) -> Vec<BigInt> {
    let start = triangle.col_start();
    let mut seq = vec![BigInt::from(0)];
    for row in &triangle.rows {
        let offset = col - start;
        let value = if offset >= 0 {
            row.get(offset as usize).cloned().unwrap_or_else(|| BigInt::from(0))
        } else {
            BigInt::from(0)
        };
        seq.push(value);
    }
    seq
}

fn print_json(value: &serde_json::Value) {
    println!("{value}");
}

fn write_bfile(path: &str, seq: &[BigInt]) -> Result<(), Error> {
    std::fs::write(path, render::bfile_lines(seq))
        .map_err(|e| Error::OutputUnwritable { path: path.to_string(), message: e.to_string() })
}
