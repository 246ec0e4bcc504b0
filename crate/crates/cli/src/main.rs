use clap::builder::TypedValueParser;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use supersemi::lambda_module::{eigenvalues, eigenvector, Branch};
use supersemi::verify::{self, parse_suites, RunConfig, Suite};
use supersemi::{AlgebraError, Reduced, SuperMatrix};

/// Exact (1|1) supermatrix algebra over finite Grassmann algebras.
#[derive(Parser, Debug)]
#[command(name = "supersemi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run seeded verification suites, one JSON report per line.
    Verify {
        /// Number of Grassmann generators.
        #[arg(long, default_value_t = verify::DEFAULT_GENS,
              value_parser = clap::value_parser!(u64).range(1..=16).map(|v| v as usize))]
        gens: usize,
        #[arg(long, default_value_t = verify::DEFAULT_TRIALS,
              value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, env = "SUPERSEMI_SEED", default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        /// Comma-separated suite names, or "all".
        #[arg(long, default_value = "all")]
        suites: String,
        /// Write reports here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..).map(|v| v as usize))]
        jobs: Option<usize>,
    },
    /// Evaluate one operation on a JSON supermatrix.
    Eval {
        what: EvalOp,
        /// Read input from this file instead of standard input.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Multiply two or more JSON supermatrices left to right.
    Mul {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Rerun a single trial of a suite.
    Replay {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        trial: u64,
        #[arg(long, default_value_t = verify::DEFAULT_GENS,
              value_parser = clap::value_parser!(u64).range(1..=16).map(|v| v as usize))]
        gens: usize,
        #[arg(long, env = "SUPERSEMI_SEED", default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum EvalOp {
    Ber,
    Str,
    Shape,
    Invclass,
    Eigen,
    St,
    Pi,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

enum Failure {
    /// Domain error; reported as a JSON error object.
    Domain(AlgebraError),
    Usage(String),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::Domain(e)
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    let mut buf = String::new();
    match path {
        Some(p) => File::open(p)
            .and_then(|mut f| f.read_to_string(&mut buf))
            .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(e.to_string()))?,
    };
    Ok(buf)
}

/// A JSON array of matrices, or matrices separated by whitespace.
fn parse_matrices(text: &str) -> Result<Vec<SuperMatrix>, Failure> {
    let bad = |e: serde_json::Error| Failure::Usage(format!("malformed input: {e}"));
    let values: Vec<Value> = serde_json::Deserializer::from_str(text)
        .into_iter::<Value>()
        .collect::<Result<_, _>>()
        .map_err(bad)?;
    let values = match values.as_slice() {
        [Value::Array(items)] => items.clone(),
        _ => values,
    };
    values
        .into_iter()
        .map(|v| serde_json::from_value(v).map_err(bad))
        .collect()
}

fn single_matrix(text: &str) -> Result<SuperMatrix, Failure> {
    match parse_matrices(text)?.as_slice() {
        [m] => Ok(m.clone()),
        ms => Err(Failure::Usage(format!("expected one supermatrix, got {}", ms.len()))),
    }
}

fn eval(what: EvalOp, m: &SuperMatrix) -> Result<Value, Failure> {
    Ok(match what {
        EvalOp::Ber => json!(m.ber()?),
        EvalOp::Str => json!(m.str()),
        EvalOp::St => json!(m.st()),
        EvalOp::Pi => json!(m.pi()),
        EvalOp::Shape => json!({
            "shapes": m.shapes().into_iter().map(|s| s.name()).collect::<Vec<_>>(),
            "primary": m.primary_shape().name(),
        }),
        EvalOp::Invclass => json!({ "class": m.invertibility().name() }),
        EvalOp::Eigen => {
            let r = Reduced::classify(m.clone())?;
            let (l1, l2) = eigenvalues(&r);
            let vector = |branch| match eigenvector(&r, branch) {
                Ok(v) => json!(v),
                Err(e) => json!({ "error": e.code() }),
            };
            json!({
                "kind": r.kind().name(),
                "eigenvalues": [l1, l2],
                "eigenvectors": [vector(Branch::First), vector(Branch::Second)],
            })
        }
    })
}

fn mul(ms: &[SuperMatrix]) -> Result<SuperMatrix, Failure> {
    let (first, rest) = ms
        .split_first()
        .filter(|(_, rest)| !rest.is_empty())
        .ok_or_else(|| Failure::Usage("mul needs at least two supermatrices".into()))?;
    rest.iter().try_fold(first.clone(), |acc, m| {
        acc.try_mul(m).map_err(|e| Failure::Usage(e.to_string()))
    })
}

fn emit(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    writeln!(out, "{v}")
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let stdout = io::stdout();
    match cli.command {
        Command::Verify {
            gens,
            trials,
            seed,
            suites,
            out,
            jobs,
        } => {
            let config = RunConfig {
                gens,
                trials,
                seed,
                suites: parse_suites(&suites).map_err(|e| Failure::Usage(e.to_string()))?,
                jobs,
            };
            config.validate().map_err(|e| Failure::Usage(e.to_string()))?;
            let mut sink: Box<dyn Write> = match &out {
                Some(p) => Box::new(BufWriter::new(
                    File::create(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
                )),
                None => Box::new(stdout.lock()),
            };
            let reports = verify::run(&config).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut passed = true;
            for r in &reports {
                passed &= r.passed();
                writeln!(sink, "{}", r.to_json_line()).map_err(|e| Failure::Usage(e.to_string()))?;
            }
            sink.flush().map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(passed)
        }
        Command::Eval { what, input } => {
            let m = single_matrix(&read_input(&input)?)?;
            let v = eval(what, &m)?;
            emit(&mut stdout.lock(), &v).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(true)
        }
        Command::Mul { input } => {
            let ms = parse_matrices(&read_input(&input)?)?;
            let p = mul(&ms)?;
            emit(&mut stdout.lock(), &json!(p)).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(true)
        }
        Command::Replay {
            suite,
            trial,
            gens,
            seed,
        } => {
            let suite: Suite = suite.parse().map_err(|e: verify::ConfigError| Failure::Usage(e.to_string()))?;
            let report = verify::replay(suite, gens, seed, trial).map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(stdout.lock(), "{}", report.to_json_line()).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(report.passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(Failure::Domain(e)) => {
            println!("{}", json!({ "error": e.code() }));
            ExitCode::from(EXIT_FAIL)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("supersemi: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
