//! Command-line front end.
//!
//! Exit codes: 0 success, 2 input validation, 3 internal defect.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use symsemi::bounds::{bound_ns3, bound_report, ratio};
use symsemi::survey::{write_csv, write_jsonl, DEFAULT_MAX_SPAN};
use symsemi::{
    apery_set, classify, numerator, run_survey, Error, GeneratorSet, SemigroupClass, SurveyConfig,
};

#[derive(Parser)]
#[command(
    name = "symsemi",
    version,
    about = "Frobenius numbers, Hilbert numerators and lower bounds for numerical semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Frobenius number, genus and symmetry of <d_1, ..., d_k>.
    Frobenius(Single),
    /// Classify a 4-generated semigroup.
    Classify(Single),
    /// Hilbert-series numerator as "exponent coefficient" lines.
    Numerator(Single),
    /// Closed-form lower bounds (3 or 4 generators).
    Bounds {
        /// Also compute the exact Frobenius number and tightness ratio.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        single: Single,
    },
    /// Enumerate all quadruples in a range and check them.
    Survey(SurveyArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Single {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Shorthand for --format json.
    #[arg(long)]
    json: bool,
    #[arg(required = true, allow_negative_numbers = true, value_parser = parse_generator)]
    generators: Vec<u64>,
}

impl Single {
    fn json(&self) -> bool {
        self.json || self.format == Format::Json
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SurveyFormat {
    Csv,
    Jsonl,
}

#[derive(Args)]
struct SurveyArgs {
    #[arg(long)]
    min: u64,
    #[arg(long)]
    max: u64,
    /// Output file; records go to stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: SurveyFormat,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Emit nonsymmetric records too.
    #[arg(long)]
    emit_all: bool,
    /// Keep non-minimal quadruples instead of skipping them.
    #[arg(long)]
    allow_non_minimal: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_SPAN)]
    max_span: u64,
    /// Ignore the range-width cap.
    #[arg(long)]
    force: bool,
}

fn parse_generator(token: &str) -> Result<u64, String> {
    match token.parse::<i128>() {
        Ok(v) if v > 0 => u64::try_from(v).map_err(|_| format!("generator '{token}' is too large")),
        Ok(_) => Err(format!("generator '{token}' must be a positive integer")),
        Err(_) => Err(format!("generator '{token}' is not an integer")),
    }
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_defect() { 3 } else { 2 })
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn run(command: Command, out: &mut impl Write) -> Result<(), Failure> {
    match command {
        Command::Frobenius(args) => {
            let g = GeneratorSet::new(&args.generators)?;
            let table = apery_set(&g)?;
            let f = table.frobenius();
            if args.json() {
                let symmetric = symsemi::is_symmetric(&g)?;
                let v = json!({
                    "generators": g.elements(),
                    "frobenius": f,
                    "genus": table.genus(),
                    "symmetric": symmetric,
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{f}")?;
            }
        }
        Command::Classify(args) => {
            let g = GeneratorSet::new(&args.generators)?;
            let class = classify(&g)?;
            if args.json() {
                let mut v = json!({ "generators": g.elements(), "class": class.tag() });
                match class {
                    SemigroupClass::SymmetricNotCi { a_list, c } => {
                        v["c"] = json!(c);
                        v["a_list"] = json!(a_list);
                    }
                    SemigroupClass::SymmetricCi { degrees } => {
                        v["relation_degrees"] = json!(degrees)
                    }
                    SemigroupClass::NonSymmetric => {}
                }
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{class}")?;
                match class {
                    SemigroupClass::SymmetricNotCi { a_list, c } => {
                        writeln!(out, "c={c}")?;
                        writeln!(out, "a=[{}]", join(&a_list))?;
                    }
                    SemigroupClass::SymmetricCi { degrees } => {
                        writeln!(out, "degrees=[{}]", join(&degrees))?
                    }
                    SemigroupClass::NonSymmetric => {}
                }
            }
        }
        Command::Numerator(args) => {
            let g = GeneratorSet::new(&args.generators)?;
            let n = numerator(&g)?;
            if args.json() {
                let terms: Vec<(u64, i64)> = n.terms().collect();
                let v = json!({ "generators": g.elements(), "degree": n.degree(), "terms": terms });
                writeln!(out, "{v}")?;
            } else {
                for (e, c) in n.terms() {
                    writeln!(out, "{e} {c}")?;
                }
            }
        }
        Command::Bounds { exact, single } => bounds(exact, &single, out)?,
        Command::Survey(args) => survey(args, out)?,
    }
    Ok(())
}

fn bounds(exact: bool, args: &Single, out: &mut impl Write) -> Result<(), Failure> {
    let g = GeneratorSet::new(&args.generators)?;
    match g.len() {
        3 => {
            let bound = bound_ns3(&g)?;
            let f = if exact {
                Some(apery_set(&g)?.frobenius() as u64)
            } else {
                None
            };
            let tightness = f.and_then(|f| ratio(f, bound));
            if args.json() {
                let v = json!({
                    "generators": g.elements(),
                    "bound_ns3": bound,
                    "scope": "nonsymmetric 3-generated",
                    "frobenius": f,
                    "tightness": tightness,
                });
                writeln!(out, "{v}")?;
            } else {
                if let Some(f) = f {
                    writeln!(out, "F={f}")?;
                }
                writeln!(out, "bound_ns3={bound:.3} (nonsymmetric 3-generated)")?;
                if let Some(t) = tightness {
                    writeln!(out, "tightness={t:.3}")?;
                }
            }
        }
        4 => {
            let r = bound_report(g.elements(), exact)?;
            if args.json() {
                let v = json!({
                    "generators": r.generators,
                    "sigma": r.sigma,
                    "pi": r.pi.to_string(),
                    "bound_not_ci": r.bound_not_ci,
                    "bound_ci": r.bound_ci,
                    "bound_ns": r.bound_ns,
                    "frobenius": r.exact_f,
                    "class": r.class.map(|c| c.tag()),
                    "tightness": r.tightness,
                });
                writeln!(out, "{v}")?;
            } else {
                if let Some(f) = r.exact_f {
                    writeln!(out, "F={f}")?;
                }
                if let Some(class) = r.class {
                    writeln!(out, "class={class}")?;
                }
                writeln!(out, "bound_not_ci={:.3}", r.bound_not_ci)?;
                writeln!(out, "bound_ci={:.3}", r.bound_ci)?;
                writeln!(out, "bound_ns={:.3}", r.bound_ns)?;
                if let Some(t) = r.tightness {
                    writeln!(out, "tightness={t:.3}")?;
                }
            }
        }
        k => return Err(Error::NotFourGenerators(k).into()),
    }
    Ok(())
}

fn survey(args: SurveyArgs, out: &mut impl Write) -> Result<(), Failure> {
    let cfg = SurveyConfig {
        d_min: args.min,
        d_max: args.max,
        require_minimal: !args.allow_non_minimal,
        emit_all: args.emit_all,
        jobs: args.jobs,
        max_span: args.max_span,
        force: args.force,
    };
    let (records, stats) = run_survey(&cfg)?;
    let write = |sink: &mut dyn Write| match args.format {
        SurveyFormat::Csv => write_csv(&records, sink),
        SurveyFormat::Jsonl => write_jsonl(&records, sink),
    };
    match &args.out {
        Some(path) => {
            let mut file = BufWriter::new(File::create(path)?);
            write(&mut file)?;
            file.flush()?;
            writeln!(out, "{}", stats.summary_line())?;
        }
        None => {
            write(out)?;
            eprintln!("{}", stats.summary_line());
        }
    }
    Ok(())
}
