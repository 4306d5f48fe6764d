//! The `spinc` command line.
//!
//! Exit codes: `0` success, `1` unreadable or invalid input, `2` data that
//! cannot come from a closed manifold, `3` additivity failure.

pub mod diagram;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use spinc_core::cutting::{build_cut_data, check_additivity, CutError, CutSpecification};
use spinc_core::fpdata::{polarize, validate, FixedPointData};
use spinc_core::kostant::{character_rational, multiplicity, Conventions, KostantError, PbarIntegrand};
use spinc_core::sphere::{cut_identity, sphere_data, SphereStructure};

use diagram::DiagramRendering;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_UNREALIZABLE: i32 = 2;
pub const EXIT_NOT_ADDITIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "spinc",
    version,
    about = "Exact S^1-equivariant spin-c quantization from fixed-point data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct ConventionFlags {
    /// Multiply codimension-2 contributions by -1.
    #[arg(long = "paper-signs")]
    negate_codim2: bool,
    /// Use `c_L - c_N` in place of `c_L` in the surface integrand.
    #[arg(long)]
    literal_pbar: bool,
}

impl ConventionFlags {
    fn conventions(self) -> Conventions {
        Conventions {
            negate_codim2: self.negate_codim2,
            pbar: if self.literal_pbar {
                PbarIntegrand::Literal
            } else {
                PbarIntegrand::Expanded
            },
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a dataset against the structural rules.
    Validate { input: PathBuf },
    /// Compute the quantization of a dataset.
    #[command(group = clap::ArgGroup::new("mode").multiple(false))]
    Quantize {
        input: PathBuf,
        /// Print the multiplicity of one weight, by partition counting.
        #[arg(long, group = "mode", allow_hyphen_values = true)]
        beta: Option<i64>,
        /// Print every nonzero multiplicity (the default).
        #[arg(long, group = "mode")]
        character: bool,
        /// Print a multiplicity diagram.
        #[arg(long, group = "mode")]
        diagram: bool,
        #[command(flatten)]
        conventions: ConventionFlags,
    },
    /// Write the fixed-point data of both cut spaces.
    Cut {
        input: PathBuf,
        spec: PathBuf,
        #[arg(long)]
        out_plus: PathBuf,
        #[arg(long)]
        out_minus: PathBuf,
    },
    /// Compare Q(M) with Q(M+) + Q(M-) weight by weight.
    CheckAdditivity {
        input: PathBuf,
        spec: PathBuf,
        #[command(flatten)]
        conventions: ConventionFlags,
    },
    /// The two-sphere with spin-c structure P_{k,n}.
    Sphere {
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Print the cut spaces; with --diagram, diagrams of all three.
        #[arg(long)]
        cut: bool,
        #[arg(long)]
        diagram: bool,
        /// Write the dataset to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            ..Self::default()
        }
    }

    fn fail(code: i32, stderr: impl Into<String>) -> Self {
        Self {
            stderr: stderr.into(),
            code,
            ..Self::default()
        }
    }
}

fn kostant_code(e: &KostantError) -> i32 {
    match e {
        KostantError::InvalidData(_) => EXIT_INVALID,
        _ => EXIT_UNREALIZABLE,
    }
}

fn cut_failure(e: CutError) -> Output {
    let code = match &e {
        CutError::Engine { source, .. } => kostant_code(source),
        _ => EXIT_INVALID,
    };
    Output::fail(code, format!("error: {e}\n"))
}

fn read(path: &Path) -> Result<String, Output> {
    std::fs::read_to_string(path)
        .map_err(|e| Output::fail(EXIT_INVALID, format!("error: cannot read {}: {e}\n", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Output> {
    std::fs::write(path, text)
        .map_err(|e| Output::fail(EXIT_INVALID, format!("error: cannot write {}: {e}\n", path.display())))
}

/// Reads, parses and validates a dataset.
fn load_data(path: &Path) -> Result<FixedPointData, Output> {
    let data = FixedPointData::from_json(&read(path)?)
        .map_err(|e| Output::fail(EXIT_INVALID, format!("error: {}: {e}\n", path.display())))?;
    let report = validate(&data);
    if !report.is_valid() {
        return Err(Output::fail(
            EXIT_INVALID,
            format!("error: {} is invalid:\n{report}\n", path.display()),
        ));
    }
    Ok(data)
}

fn load_spec(path: &Path) -> Result<CutSpecification, Output> {
    CutSpecification::from_json(&read(path)?)
        .map_err(|e| Output::fail(EXIT_INVALID, format!("error: {}: {e}\n", path.display())))
}

fn quantize(data: &FixedPointData, beta: Option<i64>, diagram: bool, conv: Conventions) -> Result<String, Output> {
    let engine = |e: KostantError| Output::fail(kostant_code(&e), format!("error: {e}\n"));
    if let Some(beta) = beta {
        let polarized = polarize(data).map_err(|e| Output::fail(EXIT_INVALID, format!("error: {e}\n")))?;
        let m = multiplicity(&polarized, beta, conv).map_err(engine)?;
        return Ok(format!("{m}\n"));
    }
    let ch = character_rational(data, conv).map_err(engine)?;
    Ok(if diagram {
        format!("{}\n", DiagramRendering::render(&ch))
    } else {
        format!("{ch}\n")
    })
}

fn sphere(s: SphereStructure, cut: bool, diagram: bool, emit: Option<&Path>) -> Result<String, Output> {
    let data = sphere_data(s);
    if let Some(path) = emit {
        write(path, &data.to_json())?;
    }
    let (plus, minus) = cut_identity(s);
    let conv = Conventions::default();
    let render = |t: SphereStructure| -> Result<String, Output> {
        let ch = character_rational(&sphere_data(t), conv)
            .map_err(|e| Output::fail(EXIT_UNREALIZABLE, format!("error: {e}\n")))?;
        Ok(DiagramRendering::render(&ch).to_string())
    };

    let mut out = String::new();
    if cut {
        writeln!(out, "({s})+ = {plus}, ({s})- = {minus}").unwrap();
    }
    if diagram {
        if cut {
            for (label, t) in [
                (format!("{s}"), s),
                (format!("({s})+"), plus),
                (format!("({s})-"), minus),
            ] {
                writeln!(out, "\n{label}:\n{}", render(t)?).unwrap();
            }
        } else {
            writeln!(out, "{}", render(s)?).unwrap();
        }
    }
    if !cut && !diagram && emit.is_none() {
        out.push_str(&data.to_json());
    }
    Ok(out)
}

fn dispatch(command: Command) -> Result<String, Output> {
    match command {
        Command::Validate { input } => {
            let data = FixedPointData::from_json(&read(&input)?)
                .map_err(|e| Output::fail(EXIT_INVALID, format!("error: {}: {e}\n", input.display())))?;
            let report = validate(&data);
            if report.is_valid() {
                Ok("valid\n".to_string())
            } else {
                Err(Output {
                    stdout: format!("{report}\n"),
                    stderr: format!("error: {} is invalid\n", input.display()),
                    code: EXIT_INVALID,
                })
            }
        }
        Command::Quantize {
            input,
            beta,
            character: _,
            diagram,
            conventions,
        } => quantize(&load_data(&input)?, beta, diagram, conventions.conventions()),
        Command::Cut {
            input,
            spec,
            out_plus,
            out_minus,
        } => {
            let data = load_data(&input)?;
            let spec = load_spec(&spec)?;
            let cut = build_cut_data(&data, &spec).map_err(cut_failure)?;
            write(&out_plus, &cut.plus.to_json())?;
            write(&out_minus, &cut.minus.to_json())?;
            Ok(format!(
                "plus: {} components -> {}\nminus: {} components -> {}\n",
                cut.plus.component_count(),
                out_plus.display(),
                cut.minus.component_count(),
                out_minus.display()
            ))
        }
        Command::CheckAdditivity {
            input,
            spec,
            conventions,
        } => {
            let data = load_data(&input)?;
            let spec = load_spec(&spec)?;
            let cut = build_cut_data(&data, &spec).map_err(cut_failure)?;
            let report =
                check_additivity(&data, &cut.plus, &cut.minus, conventions.conventions()).map_err(cut_failure)?;
            let text = format!("{report}\n");
            if report.holds {
                Ok(text)
            } else {
                Err(Output {
                    stdout: text,
                    stderr: String::new(),
                    code: EXIT_NOT_ADDITIVE,
                })
            }
        }
        Command::Sphere {
            k,
            n,
            cut,
            diagram,
            emit,
        } => sphere(SphereStructure::new(k, n), cut, diagram, emit.as_deref()),
    }
}

/// Runs one command line (including the program name) without touching the
/// process: output is captured and the exit code returned.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output::fail(EXIT_INVALID, text)
            } else {
                Output::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Output::ok(stdout),
        Err(out) => out,
    }
}
