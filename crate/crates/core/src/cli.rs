//! The `orbitseq` command line.
//!
//! [`run`] does all the work and returns the exit code with the captured
//! output, so the binary is a thin wrapper and tests can drive it directly.
//!
//! Exit codes: 0 success, 1 verification or mathematical failure, 2 usage
//! error, 3 malformed or unreadable input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::asymptotics::pnt_report;
use crate::bfile::BFile;
use crate::error::Error;
use crate::factorization::{factor_search, DEFAULT_LIMIT};
use crate::operators::{iterate_orbits_to, product_orbits, union_orbits};
use crate::sequences::{
    builtin, is_prime_set_param, BuiltinSpec, PrimeSet, Sequence, View, CATALOGUE,
};
use crate::transforms::{euler, euler_inverse, fix_to_orbit, orbit_to_fix};
use crate::verify::{self, Verdict, IDENTITIES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(
    name = "orbitseq",
    version,
    about = "Exact orbit, fixed-point and monoid counts for dynamical systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a builtin sequence as a b-file.
    Seq {
        name: String,
        /// Builtin parameter, e.g. `a=3` or `P=2,3` (`!2,3` for a cofinite set).
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        #[arg(long)]
        terms: usize,
        /// Output view; defaults to the builtin's own.
        #[arg(long)]
        view: Option<String>,
    },
    /// Apply a transform to a b-file.
    Transform {
        #[arg(value_enum)]
        kind: TransformKind,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Combine orbit-count b-files.
    Op {
        #[arg(value_enum)]
        kind: OpKind,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long = "in")]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        terms: usize,
    },
    /// Run a named identity, or `all`.
    Verify {
        name: String,
        #[arg(long, default_value_t = 100)]
        terms: usize,
    },
    /// Prime orbit theorem report for a builtin.
    Growth {
        #[arg(long)]
        name: String,
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        #[arg(long, allow_negative_numbers = true)]
        h: f64,
        #[arg(long, allow_negative_numbers = true)]
        c1: f64,
        #[arg(long)]
        terms: usize,
    },
    /// Search for factorizations of an orbit-count b-file under the product.
    Factor {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        terms: usize,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Renumber an internal b-file (starting at 1) to start at `--offset`.
    Export {
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        offset: i64,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Renumber a b-file starting at `--offset` to start at 1.
    Import {
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        offset: i64,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// List builtins and identities.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformKind {
    FixToOrbit,
    OrbitToFix,
    Euler,
    EulerInv,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpKind {
    Product,
    Union,
    Iterate,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonIntegral(_)
            | Error::Negative(_)
            | Error::NotNonnegativeInteger { .. }
            | Error::ZeroLeadingCoefficient
            | Error::NonzeroConstantTerm => EXIT_FAILURE,
            Error::BFile { .. } | Error::NegativeTerm { .. } | Error::Empty => EXIT_INPUT,
            Error::NonPositive(_)
            | Error::WrongView { .. }
            | Error::InsufficientLength { .. }
            | Error::UnknownBuiltin(_)
            | Error::InvalidParameter(_)
            | Error::DuplicateIndex(_) => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Step<T> = std::result::Result<T, Failure>;

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Output {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mut stdout = String::new();
    let mut stderr = String::new();
    let code = match dispatch(cli.command, &mut stdout, &mut stderr) {
        Ok(code) => code,
        Err(f) => {
            writeln!(stderr, "error: {}", f.message).expect("writing to a String");
            f.code
        }
    };
    Output {
        code,
        stdout,
        stderr,
    }
}

fn dispatch(command: Command, out: &mut String, err: &mut String) -> Step<i32> {
    match command {
        Command::Seq {
            name,
            params,
            terms,
            view,
        } => {
            let seq = load_builtin(&name, &params, terms)?;
            let seq = match view {
                Some(v) => convert(seq, v.parse()?)?,
                None => seq,
            };
            out.push_str(&to_bfile(&seq));
        }
        Command::Transform { kind, input } => {
            let result = match kind {
                TransformKind::FixToOrbit => fix_to_orbit(&read_sequence(&input, View::Fix)?)?,
                TransformKind::OrbitToFix => orbit_to_fix(&read_sequence(&input, View::Orbit)?)?,
                TransformKind::Euler => euler(&read_sequence(&input, View::Orbit)?)?,
                TransformKind::EulerInv => euler_inverse(&read_sequence(&input, View::Monoid)?)?,
            };
            out.push_str(&to_bfile(&result));
        }
        Command::Op {
            kind,
            k,
            inputs,
            terms,
        } => {
            positive(terms, "--terms")?;
            let result = match kind {
                OpKind::Product | OpKind::Union => {
                    if k.is_some() {
                        return Err(Failure::usage("--k only applies to `op iterate`"));
                    }
                    let [a, b] = inputs.as_slice() else {
                        return Err(Failure::usage(
                            "product and union take exactly two --in files",
                        ));
                    };
                    let a = read_sequence(a, View::Orbit)?.slice(terms)?;
                    let b = read_sequence(b, View::Orbit)?.slice(terms)?;
                    match kind {
                        OpKind::Product => product_orbits(&a, &b)?,
                        _ => union_orbits(&a, &b)?,
                    }
                }
                OpKind::Iterate => {
                    let k = k.ok_or_else(|| Failure::usage("`op iterate` needs --k"))?;
                    let [a] = inputs.as_slice() else {
                        return Err(Failure::usage("iterate takes exactly one --in file"));
                    };
                    iterate_orbits_to(&read_sequence(a, View::Orbit)?, k, terms)?
                }
            };
            out.push_str(&to_bfile(&result));
        }
        Command::Verify { name, terms } => return run_verify(&name, terms, out, err),
        Command::Growth {
            name,
            params,
            h,
            c1,
            terms,
        } => {
            positive(terms, "--terms")?;
            let seq = load_builtin(&name, &params, terms)?;
            let orbits = convert(seq, View::Orbit)?;
            out.push_str(&pnt_report(&orbits, h, c1, terms)?.to_string());
        }
        Command::Factor {
            input,
            terms,
            limit,
        } => {
            let target = read_sequence(&input, View::Orbit)?;
            let found = factor_search(&target, terms, limit)?;
            for (i, pair) in found.pairs.iter().enumerate() {
                writeln!(out, "# pair {} left", i + 1).expect("writing to a String");
                out.push_str(&to_bfile(&pair.left));
                writeln!(out, "# pair {} right", i + 1).expect("writing to a String");
                out.push_str(&to_bfile(&pair.right));
            }
            writeln!(out, "# pairs {}", found.pairs.len()).expect("writing to a String");
            if found.overflow {
                out.push_str("# limit reached; more pairs may exist\n");
            }
        }
        Command::Export { offset, input } => {
            let b = read_bfile(&input)?;
            if b.offset != 1 {
                return Err(Failure::input(format!(
                    "{}: expected first index 1, found {}",
                    input.display(),
                    b.offset
                )));
            }
            out.push_str(&b.reindexed(offset).emit());
        }
        Command::Import { offset, input } => {
            let b = read_bfile(&input)?;
            if b.offset != offset {
                return Err(Failure::input(format!(
                    "{}: expected first index {offset}, found {}",
                    input.display(),
                    b.offset
                )));
            }
            out.push_str(&b.reindexed(1).emit());
        }
        Command::List => {
            out.push_str("# builtins\n");
            for (name, params) in CATALOGUE {
                if params.is_empty() {
                    writeln!(out, "{name}")
                } else {
                    writeln!(out, "{name} {}", params.join(" "))
                }
                .expect("writing to a String");
            }
            out.push_str("# identities\n");
            for id in IDENTITIES {
                writeln!(out, "{} {}", id.name, id.summary).expect("writing to a String");
            }
        }
    }
    Ok(EXIT_OK)
}

fn run_verify(name: &str, terms: usize, out: &mut String, err: &mut String) -> Step<i32> {
    positive(terms, "--terms")?;
    let selected: Vec<_> = if name == "all" {
        IDENTITIES.iter().collect()
    } else {
        vec![verify::find(name).ok_or_else(|| {
            Failure::usage(format!(
                "unknown identity `{name}`; `orbitseq list` shows them all"
            ))
        })?]
    };
    let mut code = EXIT_OK;
    for id in selected {
        match id.run(terms) {
            Ok(Verdict::Pass) => writeln!(out, "PASS {}", id.name),
            Ok(Verdict::Fail { index, detail }) => {
                code = EXIT_FAILURE;
                writeln!(err, "{}: first failure at n = {index}: {detail}", id.name)
                    .and_then(|_| writeln!(out, "FAIL {} {index}", id.name))
            }
            Err(e) => {
                code = code.max(Failure::from(e.clone()).code);
                writeln!(err, "{}: {e}", id.name).and_then(|_| writeln!(out, "ERROR {}", id.name))
            }
        }
        .expect("writing to a String");
    }
    Ok(code)
}

fn positive(n: usize, what: &str) -> Step<()> {
    if n == 0 {
        Err(Failure::usage(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

fn parse_params(name: &str, params: &[String]) -> Step<BuiltinSpec> {
    let mut spec = BuiltinSpec::new(name);
    for p in params {
        let (key, value) = p
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("parameter `{p}` is not KEY=VALUE")))?;
        spec = if is_prime_set_param(key) {
            spec.with_primes(key, value.parse::<PrimeSet>()?)
        } else {
            let v = value.parse().map_err(|_| {
                Failure::usage(format!("parameter `{key}` needs an integer, got `{value}`"))
            })?;
            spec.with_int(key, v)
        };
    }
    Ok(spec)
}

fn load_builtin(name: &str, params: &[String], terms: usize) -> Step<Sequence> {
    positive(terms, "--terms")?;
    Ok(builtin(&parse_params(name, params)?, terms)?)
}

/// Moves a sequence between the orbit, fixed-point and monoid views.
fn convert(seq: Sequence, target: View) -> Step<Sequence> {
    let from = seq.view();
    if from == target {
        return Ok(seq);
    }
    if target == View::Plain {
        return Ok(seq.with_view(View::Plain)?);
    }
    let orbits = match from {
        View::Orbit => seq,
        View::Fix => fix_to_orbit(&seq)?,
        View::Monoid => euler_inverse(&seq)?,
        View::Plain => {
            return Err(Failure::usage(format!(
                "a plain sequence has no {target} view"
            )))
        }
    };
    Ok(match target {
        View::Orbit => orbits,
        View::Fix => orbit_to_fix(&orbits)?,
        View::Monoid => euler(&orbits)?,
        View::Plain => unreachable!("handled above"),
    })
}

fn read_bfile(path: &Path) -> Step<BFile> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    BFile::parse(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Reads an internal b-file (first index 1) as a sequence in `view`.
fn read_sequence(path: &Path, view: View) -> Step<Sequence> {
    let b = read_bfile(path)?;
    if b.offset != 1 {
        return Err(Failure::input(format!(
            "{}: first index is {}; convert with `import --offset {}` first",
            path.display(),
            b.offset,
            b.offset
        )));
    }
    Sequence::new(view, b.values).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn to_bfile(seq: &Sequence) -> String {
    BFile::new(1, seq.terms().to_vec()).emit()
}
