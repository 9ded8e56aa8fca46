//! Command-line front end: classify connection sets, run the exact-cover
//! oracle, export grid completions, generate code families, and sweep the
//! acceptance criteria.
//!
//! Exit codes: 0 on success, 1 on invalid input (message on stderr), 2 on an
//! internal consistency failure. Identical argv produces byte-identical
//! output.

use std::fmt::Display;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use quintic::abelian::{Element, GroupSpec};
use quintic::classify::{admits_perfect_code, enumerate_identity_codes, ClassifyError};
use quintic::codes::{code_family, parametric_agrees, CodeFamilyParams, Family};
use quintic::constructions::{grid_graph, Variant};
use quintic::graph::{cayley, export, ExportFormat};
use quintic::oracle::{enumerate_perfect_codes, find_perfect_code};
use quintic::sweep::{run_all, InvolutionFilter};

#[derive(Parser)]
#[command(
    name = "quintic",
    version,
    about = "Perfect codes in quintic Cayley graphs on finite abelian groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide admissibility and enumerate the perfect codes through the
    /// identity; prints a JSON verdict.
    Classify(ClassifyArgs),
    /// Search for perfect codes by exact cover, independently of the
    /// classifier; prints a JSON list of codes.
    Oracle(OracleArgs),
    /// Export a grid completion as DOT or an edge list.
    Construct(ConstructArgs),
    /// Generate an explicit code family on a grid completion.
    Codes(CodesArgs),
    /// Run the acceptance harness and print one PASS/FAIL line per
    /// criterion.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct ClassifyArgs {
    /// Group literal, a product of cyclic factors such as Z6 or Z12xZ2.
    #[arg(long)]
    group: String,
    /// Connection set: ';'-separated element literals, e.g. "(1);(5);(3)".
    #[arg(long)]
    set: String,
    /// Print the verdict on a single line instead of indented.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OracleArgs {
    /// Group literal, a product of cyclic factors such as Z6 or Z12xZ2.
    #[arg(long)]
    group: String,
    /// Connection set: ';'-separated element literals.
    #[arg(long)]
    set: String,
    /// List every perfect code instead of the first one found.
    #[arg(long)]
    enumerate: bool,
    /// Keep only codes containing this element.
    #[arg(long, value_name = "ELEMENT")]
    containing: Option<String>,
}

#[derive(Args)]
struct ConstructArgs {
    /// Which completion of the grid to build.
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Row cycle length.
    #[arg(long)]
    m: u64,
    /// Column count.
    #[arg(long)]
    l: u64,
    /// Column wrap shift.
    #[arg(long)]
    h: u64,
    #[arg(long, value_enum)]
    format: FormatArg,
}

#[derive(Args)]
struct CodesArgs {
    /// Which family to generate.
    #[arg(long, value_enum)]
    prop: PropArg,
    /// Row cycle length.
    #[arg(long)]
    m: u64,
    /// Column count.
    #[arg(long)]
    l: u64,
    /// Column wrap shift.
    #[arg(long)]
    h: u64,
    /// Diagonal sign, 1 or -1.
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    /// Toggle bits, one per coset representative, e.g. --t 010.
    #[arg(long)]
    t: String,
}

#[derive(Args)]
struct SweepArgs {
    /// Largest group order to include.
    #[arg(long)]
    max_order: u64,
    /// Restrict instances by involution count.
    #[arg(long, value_enum, default_value = "all")]
    involutions: InvolutionsArg,
    /// Also write the summary to this file.
    #[arg(long, value_name = "PATH")]
    report: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Gamma,
    GammaPrime,
    GammaDprime,
    GammaK2,
}

impl FamilyArg {
    fn variant(self) -> Variant {
        match self {
            FamilyArg::Gamma => Variant::Plain,
            FamilyArg::GammaPrime => Variant::Prime,
            FamilyArg::GammaDprime => Variant::DPrime,
            FamilyArg::GammaK2 => Variant::TimesK2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Edgelist,
}

impl FormatArg {
    fn format(self) -> ExportFormat {
        match self {
            FormatArg::Dot => ExportFormat::Dot,
            FormatArg::Edgelist => ExportFormat::EdgeList,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PropArg {
    #[value(name = "2.3")]
    K2,
    #[value(name = "2.7")]
    Prime,
    #[value(name = "2.10")]
    DPrime,
}

impl PropArg {
    fn family(self) -> Family {
        match self {
            PropArg::K2 => Family::K2,
            PropArg::Prime => Family::Prime,
            PropArg::DPrime => Family::DPrime,
        }
    }

    fn label(self) -> &'static str {
        match self {
            PropArg::K2 => "2.3",
            PropArg::Prime => "2.7",
            PropArg::DPrime => "2.10",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum InvolutionsArg {
    #[value(name = "1")]
    One,
    #[value(name = "3")]
    Three,
    #[value(name = "5")]
    Five,
    All,
}

impl InvolutionsArg {
    fn filter(self) -> InvolutionFilter {
        match self {
            InvolutionsArg::One => InvolutionFilter::One,
            InvolutionsArg::Three => InvolutionFilter::Three,
            InvolutionsArg::Five => InvolutionFilter::Five,
            InvolutionsArg::All => InvolutionFilter::All,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Internal(String),
}

fn invalid(e: impl Display) -> Failure {
    Failure::Invalid(e.to_string())
}

fn from_classify(e: ClassifyError) -> Failure {
    match e {
        ClassifyError::SelfVerification(_) => Failure::Internal(e.to_string()),
        _ => Failure::Invalid(e.to_string()),
    }
}

fn parse_instance(group: &str, set: &str) -> Result<(GroupSpec, Vec<Element>), Failure> {
    let g = GroupSpec::parse(group).map_err(invalid)?;
    let set = set
        .split(';')
        .map(|part| g.element_from_str(part.trim()).map_err(invalid))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((g, set))
}

fn cmd_classify(args: ClassifyArgs) -> Result<(), Failure> {
    let (g, set) = parse_instance(&args.group, &args.set)?;
    let classification = admits_perfect_code(&g, &set).map_err(from_classify)?;
    let codes = enumerate_identity_codes(&g, &set).map_err(from_classify)?;
    let verdict = classification.verdict(&codes);
    let rendered = if args.json {
        serde_json::to_string(&verdict)
    } else {
        serde_json::to_string_pretty(&verdict)
    };
    println!("{}", rendered.expect("verdict serializes"));
    Ok(())
}

fn cmd_oracle(args: OracleArgs) -> Result<(), Failure> {
    let (g, set) = parse_instance(&args.group, &args.set)?;
    let graph = cayley(&g, &set).map_err(invalid)?;
    let containing = args
        .containing
        .as_deref()
        .map(|lit| g.element_from_str(lit.trim()).map(|e| g.index_of(&e)))
        .transpose()
        .map_err(invalid)?;
    let mut codes = if args.enumerate || containing.is_some() {
        enumerate_perfect_codes(&graph, containing)
    } else {
        find_perfect_code(&graph).into_iter().collect()
    };
    if !args.enumerate {
        codes.truncate(1);
    }
    let literals: Vec<Vec<String>> = codes
        .iter()
        .map(|c| c.iter().map(|v| g.element_at(v).to_string()).collect())
        .collect();
    println!("{}", serde_json::to_string(&literals).expect("literals serialize"));
    Ok(())
}

fn cmd_construct(args: ConstructArgs) -> Result<(), Failure> {
    let graph = grid_graph(args.family.variant(), args.m, args.l, args.h).map_err(invalid)?;
    print!("{}", export(&graph, args.format.format()));
    Ok(())
}

#[derive(Serialize)]
struct CodesOutput {
    family: String,
    m: u64,
    l: u64,
    h: u64,
    a: i64,
    t: Vec<u8>,
    size: usize,
    code: Vec<String>,
    parametric_agrees: bool,
}

fn parse_bits(text: &str) -> Result<Vec<u8>, Failure> {
    text.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(Failure::Invalid(format!(
                "toggle bits must be 0 or 1, got '{c}'"
            ))),
        })
        .collect()
}

fn cmd_codes(args: CodesArgs) -> Result<(), Failure> {
    let t = parse_bits(&args.t)?;
    let params =
        CodeFamilyParams::new(args.m, args.l, args.h, args.a, t.clone()).map_err(invalid)?;
    let family = args.prop.family();
    let code = code_family(family, &params).map_err(invalid)?;
    let agrees = parametric_agrees(family, &params).map_err(invalid)?;
    let out = CodesOutput {
        family: args.prop.label().to_string(),
        m: params.m,
        l: params.l,
        h: params.h,
        a: params.a,
        t,
        size: code.len(),
        code: code.iter().map(|v| v.to_string()).collect(),
        parametric_agrees: agrees,
    };
    println!("{}", serde_json::to_string(&out).expect("codes output serializes"));
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> Result<(), Failure> {
    let reports = run_all(args.max_order, args.involutions.filter());
    let mut lines = String::new();
    for r in &reports {
        lines.push_str(&r.summary_line());
        lines.push('\n');
    }
    print!("{lines}");
    if let Some(path) = &args.report {
        fs::write(path, &lines)
            .map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    let failures = reports.iter().filter(|r| !r.passed()).count();
    if failures > 0 {
        return Err(Failure::Internal(format!(
            "{failures} of {} criteria failed",
            reports.len()
        )));
    }
    Ok(())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Classify(args) => cmd_classify(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Codes(args) => cmd_codes(args),
        Command::Sweep(args) => cmd_sweep(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            e.print().expect("usage message prints");
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
