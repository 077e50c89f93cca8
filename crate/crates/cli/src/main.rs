use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hopfcyc::action::{GammaForm, HAlgebra};
use hopfcyc::homology::HpMode;
use hopfcyc::FieldSpec;
use hopfcyc_cli::commands::{cmd_corpus, cmd_hp, cmd_validate, cmd_verify, Coefficients, Options, Suite};
use hopfcyc_cli::report::Report;
use hopfcyc_cli::spec::{parse_field, HopfSpec, SpecFile};
use hopfcyc_cli::CliError;

#[derive(Parser)]
#[command(name = "hopfcyc", version, about = "Exact checks for Hopf-equivariant cyclic theory")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Full,
    Semisimple,
    Theta,
}

#[derive(Clone, Copy, ValueEnum)]
enum Gamma {
    Printed,
    Corrected,
}

#[derive(clap::Args)]
struct Output {
    /// Write here instead of stdout; a `.md` extension selects markdown.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Record wall times (reports are no longer byte-identical).
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand)]
enum Verb {
    /// Check a spec file; algebras, modules and pairings need `--hopf`.
    Validate {
        file: PathBuf,
        #[arg(long)]
        hopf: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Write a canonical spec file for a built-in object.
    Corpus {
        /// trivial, group:G, fun:G, sweedler, taft, scalars, dual-regular,
        /// group-trivial:G, regular-module or beta
        name: String,
        /// Hopf algebra acting on algebras, modules and pairings.
        #[arg(long)]
        over: Option<String>,
        /// Order of the Taft algebra.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite on a Hopf algebra.
    Verify {
        file: PathBuf,
        /// haar, radford, pontrjagin, taktak, ayd, forms, stability or all
        suite: String,
        /// Coefficient algebra spec file, overriding `--coefficients`.
        #[arg(long)]
        algebra: Option<PathBuf>,
        #[arg(long, default_value = "trivial")]
        coefficients: String,
        /// Top form degree checked by the forms suite.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        cap: Option<usize>,
        /// Allow large brute-force tiers.
        #[arg(long)]
        slow: bool,
        #[arg(long, value_enum, default_value = "printed")]
        gamma: Gamma,
        #[command(flatten)]
        output: Output,
    },
    /// Equivariant periodic cyclic homology of a pair of H-algebras.
    Hp {
        a: PathBuf,
        b: PathBuf,
        hopf: PathBuf,
        #[arg(long, value_enum, default_value = "theta")]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
}

fn read(path: &Path) -> Result<SpecFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    SpecFile::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn read_hopf(path: &Path) -> Result<HopfSpec, CliError> {
    match read(path)? {
        SpecFile::Hopf(h) => Ok(h),
        other => Err(CliError::Input(format!("{}: expected a hopf spec, found {}", path.display(), other.kind()))),
    }
}

fn read_algebra(path: &Path) -> Result<(HAlgebra, FieldSpec), CliError> {
    match read(path)? {
        SpecFile::Algebra(a) => a.to_algebra(),
        other => Err(CliError::Input(format!("{}: expected an algebra spec, found {}", path.display(), other.kind()))),
    }
}

fn write(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit(report: &Report, output: &Output) -> Result<ExitCode, CliError> {
    let markdown = match output.format {
        Some(f) => matches!(f, Format::Markdown),
        None => output.out.as_deref().and_then(Path::extension).is_some_and(|e| e == "md"),
    };
    let text = if markdown { report.to_markdown() } else { report.to_json() };
    write(output.out.as_deref(), &text)?;
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.verb {
        Verb::Validate { file, hopf, output } => {
            let spec = read(&file)?;
            let hopf = hopf.as_deref().map(read_hopf).transpose()?;
            emit(&cmd_validate(&spec, hopf.as_ref())?, &output)
        }
        Verb::Corpus { name, over, degree, field, out } => {
            let field = field.as_deref().map(parse_field).transpose()?;
            let opts = Options { degree, field, ..Options::default() };
            let spec = cmd_corpus(&name, over.as_deref(), &opts)?;
            write(out.as_deref(), &spec.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Verb::Verify { file, suite, algebra, coefficients, degree, cap, slow, gamma, output } => {
            let spec = read_hopf(&file)?;
            let suite: Suite = suite.parse()?;
            let algebra = algebra.as_deref().map(read_algebra).transpose()?;
            let opts = Options {
                degree,
                cap,
                slow,
                timings: output.timings,
                coefficients: coefficients.parse::<Coefficients>()?,
                gamma: match gamma {
                    Gamma::Printed => GammaForm::Printed,
                    Gamma::Corrected => GammaForm::Corrected,
                },
                ..Options::default()
            };
            let report = cmd_verify(&spec, suite, algebra.as_ref().map(|(a, f)| (a, *f)), &opts)?;
            emit(&report, &output)
        }
        Verb::Hp { a, b, hopf, mode, level, cap, output } => {
            let (a, b, spec) = (read_algebra(&a)?, read_algebra(&b)?, read_hopf(&hopf)?);
            let opts = Options {
                level,
                cap,
                timings: output.timings,
                mode: match mode {
                    Mode::Full => HpMode::Full,
                    Mode::Semisimple => HpMode::Semisimple,
                    Mode::Theta => HpMode::Theta,
                },
                ..Options::default()
            };
            emit(&cmd_hp((&a.0, a.1), (&b.0, b.1), &spec, &opts)?, &output)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("hopfcyc: {e}");
            ExitCode::from(2)
        }
    }
}
