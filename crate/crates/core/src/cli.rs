//! The `commgraph` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 unsupported spectrum,
//! 3 malformed input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::field::Tolerance;
use crate::io::{
    certificate_to_json, jordan_to_json, matrix_to_json, parse_block_spec, parse_certificate,
    parse_matrix_with, AnyMatrix,
};
use crate::lab::{cross_check_constructions, graph_stats, oracle_idempotents, oracle_square_zero};
use crate::path::generate::{random_blocks, rng_from_seed, SpectralClass};
use crate::path::{
    connect, connect_float, connect_rank_one, generate_with_config, GeneratorConfig,
};
use crate::spectral::real_jordan_form;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_MALFORMED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "commgraph",
    version,
    about = "Verified paths in commuting graphs of matrix rings"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Arithmetic mode.
    #[arg(long, value_enum, default_value_t = Mode::Exact, global = true)]
    mode: Mode,
    /// Absolute tolerance for float mode.
    #[arg(long, default_value_t = 1e-9, global = true)]
    tol_abs: f64,
    /// Relative tolerance for float mode.
    #[arg(long, default_value_t = 1e-9, global = true)]
    tol_rel: f64,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Exact,
    Float,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Oracle {
    None,
    Sqzero,
    Idem,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    Real,
    Complex,
    Mixed,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and verify a path between two matrices.
    Path { a: PathBuf, b: PathBuf },
    /// Real Jordan form with its transform.
    Jordan { matrix: PathBuf },
    /// Re-check a path certificate.
    Verify { certificate: PathBuf },
    /// Generate a matrix with a prescribed real Jordan form.
    Gen {
        #[arg(long)]
        n: usize,
        /// Blocks as `c:a:b:k` and `r:lambda:m`, comma separated.
        #[arg(long)]
        blocks: Option<String>,
        /// Random blocks of this class when `--blocks` is absent.
        #[arg(long, value_enum)]
        class: Option<Class>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Elementary row operations in the conjugator (default 2n).
        #[arg(long)]
        ops: Option<usize>,
    },
    /// Exhaustive statistics for the commuting graph of M_n(F_p).
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = Oracle::None)]
        oracle: Oracle,
        /// Cross-check this many sampled rank-one routes against BFS.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// What a command produced before it is written out.
struct Outcome {
    json: Value,
    summary: String,
    code: i32,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::UnsupportedSpectrum(_) | Error::Unsupported(_) => EXIT_UNSUPPORTED,
        Error::Internal(_) => EXIT_VERIFY,
        _ => EXIT_MALFORMED,
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

/// Writes via a temporary file in the target directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn tolerance(c: &Common) -> Result<Tolerance, Error> {
    Tolerance::new(c.tol_abs, c.tol_rel)
}

fn cmd_path(c: &Common, a: &Path, b: &Path) -> Result<Outcome, Error> {
    let tol = tolerance(c)?;
    let ma = parse_matrix_with(&read(a)?, tol)?;
    let mb = parse_matrix_with(&read(b)?, tol)?;
    let (json, len, route, ok) = match (c.mode, &ma, &mb) {
        (Mode::Float, _, _) => {
            let cert = connect_float(&ma.to_real(tol)?, &mb.to_real(tol)?)?;
            let ok = cert.verify().ok();
            (certificate_to_json(&cert), cert.length(), cert.route(), ok)
        }
        (Mode::Exact, AnyMatrix::Rational(x), AnyMatrix::Rational(y)) => {
            let cert = connect(x, y)?;
            let ok = cert.verify_endpoints(x, y).ok();
            (certificate_to_json(&cert), cert.length(), cert.route(), ok)
        }
        (Mode::Exact, AnyMatrix::Prime(x), AnyMatrix::Prime(y)) => {
            let cert = connect_rank_one(x, y)?;
            let ok = cert.verify_endpoints(x, y).ok();
            (certificate_to_json(&cert), cert.length(), cert.route(), ok)
        }
        (Mode::Exact, x, y) => {
            return Err(Error::input(format!(
                "exact paths need two Q or two Fp matrices, got {} and {}",
                x.domain(),
                y.domain()
            )))
        }
    };
    Ok(Outcome {
        json,
        summary: format!("route {route}, length {len}, verified {ok}"),
        code: if ok { EXIT_OK } else { EXIT_VERIFY },
    })
}

fn cmd_jordan(c: &Common, path: &Path) -> Result<Outcome, Error> {
    let AnyMatrix::Rational(a) = parse_matrix_with(&read(path)?, tolerance(c)?)? else {
        return Err(Error::input("the Jordan form needs a matrix over Q"));
    };
    let form = real_jordan_form(&a)?;
    let summary = form
        .blocks
        .iter()
        .map(|b| match b {
            crate::spectral::JordanBlock::Complex { a, b, k } => format!("C_{k}({a},{b})"),
            crate::spectral::JordanBlock::Real { lambda, m } => format!("J_{m}({lambda})"),
        })
        .collect::<Vec<_>>()
        .join(" ⊕ ");
    Ok(Outcome {
        json: jordan_to_json(&form),
        summary,
        code: EXIT_OK,
    })
}

fn cmd_verify(c: &Common, path: &Path) -> Result<Outcome, Error> {
    let cert = parse_certificate(&read(path)?, tolerance(c)?)?;
    let v = cert.verify();
    let ok = v.ok();
    Ok(Outcome {
        json: json!({
            "verified": ok,
            "route": cert.route(),
            "length": cert.length(),
            "diagnostic": v.to_string(),
        }),
        summary: if ok {
            format!("ok: {} path of length {}", cert.route(), cert.length())
        } else {
            format!("FAILED: {v}")
        },
        code: if ok { EXIT_OK } else { EXIT_VERIFY },
    })
}

fn cmd_gen(
    n: usize,
    blocks: Option<&str>,
    class: Option<Class>,
    seed: u64,
    ops: Option<usize>,
) -> Result<Outcome, Error> {
    let blocks = match (blocks, class) {
        (Some(spec), _) => parse_block_spec(spec)?,
        (None, Some(class)) => {
            let class = match class {
                Class::Real => SpectralClass::Real,
                Class::Complex => SpectralClass::Complex,
                Class::Mixed => SpectralClass::Mixed,
            };
            // offset so the block draw and the conjugator use different streams
            random_blocks(n, class, &mut rng_from_seed(seed ^ 0x9e37_79b9_7f4a_7c15))?
        }
        (None, None) => return Err(Error::input("give --blocks or --class")),
    };
    let mut config = GeneratorConfig::for_order(n);
    if let Some(ops) = ops {
        config.ops = ops;
    }
    let (a, _) = generate_with_config(n, &blocks, seed, &config)?;
    let mut json = matrix_to_json(&a);
    json["seed"] = json!(seed);
    Ok(Outcome {
        json,
        summary: format!("generated order {n} matrix, seed {seed}"),
        code: EXIT_OK,
    })
}

fn cmd_graph(
    n: usize,
    p: u32,
    oracle: Oracle,
    sample: Option<usize>,
    seed: u64,
) -> Result<Outcome, Error> {
    let stats = graph_stats(n, p)?;
    let mut summary = stats.summary();
    let mut json = json!({ "stats": stats, "seed": seed });
    let mut code = EXIT_OK;
    let report = match oracle {
        Oracle::None => None,
        Oracle::Sqzero => Some(oracle_square_zero(n, p)?),
        Oracle::Idem => Some(oracle_idempotents(n, p)?),
    };
    if let Some(r) = report {
        summary.push_str(&format!(
            "\n{:?} oracle: {} matrices, {} pairs, {} violations",
            r.kind,
            r.subset_size,
            r.pairs_checked,
            r.violations.len()
        ));
        if !r.passed() {
            code = EXIT_VERIFY;
        }
        json["oracle"] = serde_json::to_value(&r).expect("serializable");
    }
    if let Some(k) = sample {
        let r = cross_check_constructions(n, p, k, seed)?;
        summary.push_str(&format!(
            "\ncross-check: {} checked, {} skipped, {} violations",
            r.checked,
            r.skipped_no_eigenvalue,
            r.violations.len()
        ));
        if !r.passed() {
            code = EXIT_VERIFY;
        }
        json["cross_check"] = serde_json::to_value(&r).expect("serializable");
    }
    Ok(Outcome {
        json,
        summary,
        code,
    })
}

/// Runs the command line with explicit streams; returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return EXIT_MALFORMED;
            }
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
    };
    let c = &cli.common;
    let result = match &cli.command {
        Command::Path { a, b } => cmd_path(c, a, b),
        Command::Jordan { matrix } => cmd_jordan(c, matrix),
        Command::Verify { certificate } => cmd_verify(c, certificate),
        Command::Gen {
            n,
            blocks,
            class,
            seed,
            ops,
        } => cmd_gen(*n, blocks.as_deref(), *class, *seed, *ops),
        Command::Graph {
            n,
            p,
            oracle,
            sample,
            seed,
        } => cmd_graph(*n, *p, *oracle, *sample, *seed),
    };
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if matches!(e, Error::UnsupportedSpectrum(_))
                && matches!(cli.command, Command::Path { .. })
            {
                let _ = writeln!(stderr, "hint: retry with --mode float");
            }
            return exit_code(&e);
        }
    };
    let text = serde_json::to_string_pretty(&outcome.json).expect("serializable") + "\n";
    match &c.out {
        Some(path) => {
            if let Err(e) = write_atomic(path, &text) {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return EXIT_MALFORMED;
            }
            let _ = writeln!(stdout, "{}", outcome.summary);
        }
        None => {
            let _ = stdout.write_all(text.as_bytes());
            let _ = writeln!(stderr, "{}", outcome.summary);
        }
    }
    outcome.code
}

/// Runs with the process arguments and standard streams.
pub fn run() -> i32 {
    run_with(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
