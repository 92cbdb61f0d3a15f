use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use leibniz_diamond::algebra::{check_leibniz, check_lie, AlgebraTable};
use leibniz_diamond::extensions::{
    build_extension, cohomology, split_squares_ideal, theorem2_table, ExtensionProblem,
};
use leibniz_diamond::io::{self, DocumentKind};
use leibniz_diamond::reps::{
    self, check_faithful, check_rep_homomorphism, check_right_module, check_traceless, ModuleAction,
};
use leibniz_diamond::report::CheckReport;
use leibniz_diamond::{catalog, Rational};

#[derive(Parser)]
#[command(name = "diamond", version, about = "Exact computations with Diamond Lie algebras and their Leibniz extensions")]
struct Cli {
    /// Size parameter of the catalog algebras.
    #[arg(long, global = true, default_value_t = 1)]
    m: usize,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a catalog algebra: diamond-real, diamond-complex or heisenberg.
    Gen { name: String },
    /// Run checks on an algebra, representation or module-action file.
    Verify(VerifyArgs),
    /// Emit or verify the Diamond matrix representations.
    #[command(subcommand)]
    Rep(RepCommand),
    /// Extensions of a Lie algebra by a module.
    #[command(subcommand)]
    Ext(ExtCommand),
    /// Re-emit a file, or a catalog module, in canonical form.
    Export {
        file: Option<PathBuf>,
        /// Catalog module: sl-natural or sp-natural.
        #[arg(long)]
        module: Option<String>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    /// Comma-separated subset of leibniz, lie, rep, module.
    #[arg(long, value_delimiter = ',')]
    check: Vec<CheckKind>,
    /// Algebra for representation or action files (file or catalog name).
    #[arg(long)]
    algebra: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Leibniz,
    Lie,
    Rep,
    Module,
}

#[derive(Subcommand)]
enum RepCommand {
    /// φ: 𝔇_m(ℂ) → sl(m+2, ℂ).
    Sl,
    /// φ: 𝔇_m → sp(2m+2, ℝ).
    Sp,
    /// Homomorphism, faithfulness and trace checks on a representation file.
    Verify {
        file: PathBuf,
        #[arg(long)]
        algebra: Option<String>,
    },
}

#[derive(Args)]
struct ProblemArgs {
    /// Quotient algebra (file or catalog name).
    #[arg(long)]
    quotient: String,
    /// Module action (file or sl-natural / sp-natural).
    #[arg(long)]
    module: String,
}

#[derive(Subcommand)]
enum ExtCommand {
    /// Cocycles, coboundaries and the surviving cohomology classes.
    Solve(ProblemArgs),
    /// The extension algebra for a given cocycle file.
    Build {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long)]
        cocycle: PathBuf,
    },
    /// The normal-form extension of 𝔇_m by its symplectic module.
    Theorem2 {
        #[arg(long, default_value = "0")]
        a1: String,
        /// `k,s=v`, one-based; the mirrored entry is filled in when absent.
        #[arg(long)]
        b: Vec<String>,
        /// `k,s=v`, one-based; the mirrored entry is filled in when absent.
        #[arg(long)]
        c: Vec<String>,
    },
}

/// Failures that map to exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl From<leibniz_diamond::Error> for UsageError {
    fn from(e: leibniz_diamond::Error) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, UsageError>;

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_algebra(source: &str, m: usize) -> CliResult<AlgebraTable> {
    if Path::new(source).is_file() {
        Ok(io::algebra_from_json(&read(Path::new(source))?)?)
    } else {
        Ok(catalog::by_name(source, m)?)
    }
}

fn load_module(source: &str, algebra: &AlgebraTable, m: usize) -> CliResult<ModuleAction> {
    if Path::new(source).is_file() {
        Ok(io::action_from_json(&read(Path::new(source))?, algebra)?)
    } else {
        let act = reps::action_by_name(source, m)?;
        if act.algebra() != algebra {
            return Err(usage(format!("module {source} does not act on the given quotient")));
        }
        Ok(act)
    }
}

fn load_problem(args: &ProblemArgs, m: usize) -> CliResult<ExtensionProblem> {
    let quotient = load_algebra(&args.quotient, m)?;
    let action = load_module(&args.module, &quotient, m)?;
    Ok(ExtensionProblem::new(quotient, action)?)
}

/// Parses repeated `k,s=v` flags into an `m × m` matrix, mirroring each entry
/// with `sign` when its transpose is not given explicitly.
fn parse_params(entries: &[String], m: usize, sign: i64) -> CliResult<Vec<Vec<Rational>>> {
    let mut mat = vec![vec![None; m]; m];
    for e in entries {
        let bad = || usage(format!("expected k,s=value, got {e:?}"));
        let (idx, val) = e.split_once('=').ok_or_else(bad)?;
        let (k, s) = idx.split_once(',').ok_or_else(bad)?;
        let k: usize = k.trim().parse().map_err(|_| bad())?;
        let s: usize = s.trim().parse().map_err(|_| bad())?;
        if !(1..=m).contains(&k) || !(1..=m).contains(&s) {
            return Err(usage(format!("index in {e:?} outside 1..={m}")));
        }
        let v: Rational = val.trim().parse()?;
        mat[k - 1][s - 1] = Some(v);
    }
    let sign = Rational::integer(sign);
    Ok((0..m)
        .map(|k| {
            (0..m)
                .map(|s| match (&mat[k][s], &mat[s][k]) {
                    (Some(v), _) => v.clone(),
                    (None, Some(v)) => &sign * v,
                    (None, None) => Rational::zero(),
                })
                .collect()
        })
        .collect())
}

struct Output {
    doc: Value,
    passed: bool,
}

impl Output {
    fn doc(doc: Value) -> Self {
        Output { doc, passed: true }
    }

    fn reports(reports: Vec<CheckReport>) -> Self {
        let passed = reports.iter().all(CheckReport::passed);
        for r in &reports {
            eprintln!("{r}");
        }
        let doc = json!({
            "passed": passed,
            "reports": reports.iter().map(io::report_to_value).collect::<Vec<_>>(),
        });
        Output { doc, passed }
    }
}

fn rep_reports(text: &str, algebra: Option<&str>, m: usize) -> CliResult<Vec<CheckReport>> {
    let algebra = algebra.map(|a| load_algebra(a, m)).transpose()?;
    let rep = io::rep_from_json(text, algebra.as_ref())?;
    Ok(vec![
        check_rep_homomorphism(&rep),
        check_faithful(&rep),
        check_traceless(&rep),
    ])
}

fn verify(args: &VerifyArgs, m: usize) -> CliResult<Output> {
    let text = read(&args.file)?;
    let kind = io::detect_kind(&io::parse_value(&text)?)?;
    let checks = if args.check.is_empty() {
        vec![match kind {
            DocumentKind::Algebra => CheckKind::Leibniz,
            DocumentKind::Rep => CheckKind::Rep,
            DocumentKind::Action => CheckKind::Module,
            DocumentKind::Cocycle => return Err(usage("cocycle files are checked with `ext build`")),
        }]
    } else {
        args.check.clone()
    };
    let mut reports = Vec::new();
    for check in checks {
        match (check, kind) {
            (CheckKind::Leibniz, DocumentKind::Algebra) => {
                reports.push(check_leibniz(&io::algebra_from_json(&text)?))
            }
            (CheckKind::Lie, DocumentKind::Algebra) => reports.push(check_lie(&io::algebra_from_json(&text)?)),
            (CheckKind::Rep, DocumentKind::Rep) => {
                reports.extend(rep_reports(&text, args.algebra.as_deref(), m)?)
            }
            (CheckKind::Module, DocumentKind::Action) => {
                let source = args
                    .algebra
                    .as_deref()
                    .ok_or_else(|| usage("module checks need --algebra"))?;
                let algebra = load_algebra(source, m)?;
                reports.push(check_right_module(&io::action_from_json(&text, &algebra)?));
            }
            _ => return Err(usage("check does not apply to this kind of file")),
        }
    }
    Ok(Output::reports(reports))
}

fn run(cli: &Cli) -> CliResult<Output> {
    let m = cli.m;
    match &cli.command {
        Command::Gen { name } => Ok(Output::doc(io::algebra_to_value(&catalog::by_name(name, m)?))),
        Command::Verify(args) => verify(args, m),
        Command::Rep(RepCommand::Sl) => Ok(Output::doc(io::rep_to_value(&reps::phi_sl(m)?))),
        Command::Rep(RepCommand::Sp) => Ok(Output::doc(io::rep_to_value(&reps::phi_sp(m)?))),
        Command::Rep(RepCommand::Verify { file, algebra }) => {
            Ok(Output::reports(rep_reports(&read(file)?, algebra.as_deref(), m)?))
        }
        Command::Ext(ExtCommand::Solve(args)) => {
            let p = load_problem(args, m)?;
            let h = cohomology(&p);
            let mut doc = io::cohomology_to_value(&h, p.quotient().field());
            let squares = split_squares_ideal(&p)?;
            doc["module_dim"] = json!(p.module_dim());
            doc["squares_ideal_dim"] = json!(squares.dim());
            if squares.dim() != p.module_dim() {
                eprintln!(
                    "note: the squares ideal of the split extension has dimension {} < {}",
                    squares.dim(),
                    p.module_dim()
                );
            }
            Ok(Output::doc(doc))
        }
        Command::Ext(ExtCommand::Build { problem, cocycle }) => {
            let p = load_problem(problem, m)?;
            let omega = io::cocycle_from_json(&read(cocycle)?, &p)?;
            Ok(Output::doc(io::algebra_to_value(&build_extension(&p, &omega)?)))
        }
        Command::Ext(ExtCommand::Theorem2 { a1, b, c }) => {
            let a1: Rational = a1.parse()?;
            let b = parse_params(b, m, -1)?;
            let c = parse_params(c, m, 1)?;
            Ok(Output::doc(io::algebra_to_value(&theorem2_table(m, &a1, &b, &c)?)))
        }
        Command::Export { file, module } => match (file, module) {
            (Some(file), None) => {
                let text = read(file)?;
                let v = io::parse_value(&text)?;
                let doc = match io::detect_kind(&v)? {
                    DocumentKind::Algebra => io::algebra_to_value(&io::algebra_from_value(&v)?),
                    DocumentKind::Rep => io::rep_to_value(&io::rep_from_value(&v, None)?),
                    _ => return Err(usage("only algebra and representation files can be exported directly")),
                };
                Ok(Output::doc(doc))
            }
            (None, Some(name)) => Ok(Output::doc(io::action_to_value(&reps::action_by_name(name, m)?))),
            _ => Err(usage("export takes either a file or --module")),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Format::Json = cli.format;
    match run(&cli) {
        Ok(out) => {
            let text = io::to_canonical_string(&out.doc);
            let written = match &cli.out {
                Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
