use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hcdim::family::{self, family_hh_profile, ProfileRecord, VerifyConfig};
use hcdim::formats::{self, PresentationJson};
use hcdim::report::{emit_report, ReportFormat};
use hcdim::Error;
use hcdim_core::hochschild::bar_hh_dims;
use hcdim_core::lie::ce_cohomology_dims;
use hcdim_core::ncalg::{
    complete_groebner, family_presentation, normal_words, GroebnerBasis, MonomialOrder, NcPolynomial, Presentation,
    Word, DEFAULT_DEGREE_BOUND,
};
use hcdim_core::{parse_rational, Rational};
use serde_json::json;

/// Hochschild cohomology experiments for the family A_a = Q<x, y> / (a xy - a yx - x).
#[derive(Debug, Parser)]
#[command(name = "hcdim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Complete a presentation to a Groebner basis.
    Gb(AlgebraArgs),
    /// List normal words degree by degree.
    NormalWords(AlgebraArgs),
    /// Hochschild cohomology of A_a, with the algebra itself or an input module.
    Hh(HhArgs),
    /// Hochschild cohomology of a finite-dimensional algebra from the bar complex.
    BarHh(BarArgs),
    /// Chevalley-Eilenberg cohomology of a Lie algebra with coefficients.
    Ce(BarArgs),
    /// Check the rescaling isomorphism A_a -> A_1 and compare cohomology tables.
    PsiCheck(PsiArgs),
    /// Dimension verdicts over a grid of parameters.
    VerifyPaper(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    /// Presentation JSON file.
    #[arg(long, conflicts_with = "a")]
    input: Option<PathBuf>,
    /// Use the family presentation A_a instead of a file.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Generator names from largest to smallest, comma separated.
    #[arg(long)]
    order: Option<String>,
    #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
    degree_bound: usize,
    /// Largest degree listed by normal-words.
    #[arg(long, default_value_t = 8)]
    truncation: usize,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct HhArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Module JSON over [x, y] = x/a; defaults to the algebra itself.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = family::DEFAULT_TRUNCATION)]
    truncation: usize,
    #[arg(long, default_value_t = family::DEFAULT_N_MAX)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BarArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value_t = 3)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PsiArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, default_value_t = family::DEFAULT_TRUNCATION)]
    truncation: usize,
    #[arg(long, value_enum, default_value_t = TextFormat::Text)]
    format: TextFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    a_grid: Option<String>,
    #[arg(long, default_value_t = family::DEFAULT_TRUNCATION)]
    truncation: usize,
    #[arg(long, default_value_t = family::DEFAULT_N_MAX)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
    format: ReportFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_a(s: &str) -> Result<Rational, Error> {
    parse_rational(s).map_err(|e| Error::Usage(format!("--a: {e}")))
}

fn write_out(text: &str, path: Option<&Path>) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| Error::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn load_presentation(args: &AlgebraArgs) -> Result<Presentation, Error> {
    match (&args.input, &args.a) {
        (Some(path), _) => formats::parse_presentation(path),
        (None, Some(a)) => Ok(family_presentation(&parse_a(a)?)),
        (None, None) => Err(Error::Usage("one of --input or --a is required".into())),
    }
}

fn load_order(args: &AlgebraArgs, pres: &Presentation) -> Result<MonomialOrder, Error> {
    let Some(names) = &args.order else {
        return Ok(MonomialOrder::deglex(pres.generator_count()));
    };
    let precedence = names
        .split(',')
        .map(|name| {
            pres.generator_index(name.trim())
                .ok_or_else(|| Error::Usage(format!("--order: unknown generator {name:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    MonomialOrder::with_precedence(precedence).map_err(|e| Error::Usage(format!("--order: {e}")))
}

fn load_basis(args: &AlgebraArgs) -> Result<(Presentation, GroebnerBasis), Error> {
    let pres = load_presentation(args)?;
    let order = load_order(args, &pres)?;
    let gb = complete_groebner(&pres, &order, args.degree_bound)?;
    Ok((pres, gb))
}

fn word_text(w: &Word, names: &[String]) -> String {
    NcPolynomial::monomial(w.clone(), Rational::from_integer(1.into()))
        .display(names)
        .to_string()
}

fn run_gb(args: &AlgebraArgs) -> Result<(), Error> {
    let (pres, gb) = load_basis(args)?;
    let names = pres.generators();
    let order: Vec<&str> = gb.order().precedence().iter().map(|&g| names[g].as_str()).collect();
    let rules: Vec<(String, String)> = gb
        .rules()
        .iter()
        .map(|r| (word_text(&r.lead, names), r.tail.display(names).to_string()))
        .collect();
    let text = match args.format {
        TextFormat::Json => json_text(&json!({
            "presentation": PresentationJson::from_presentation(&pres),
            "order": order,
            "degree_bound": gb.degree_bound(),
            "complete": gb.is_complete(),
            "rules": rules.iter().map(|(l, t)| json!({"lead": l, "tail": t})).collect::<Vec<_>>(),
        })),
        TextFormat::Text => {
            let mut s = String::new();
            writeln!(s, "order: {}", order.join(" > ")).unwrap();
            writeln!(s, "degree bound: {}", gb.degree_bound()).unwrap();
            writeln!(s, "complete: {}", gb.is_complete()).unwrap();
            for (l, t) in &rules {
                writeln!(s, "{l} -> {t}").unwrap();
            }
            s
        }
    };
    write_out(&text, args.output.as_deref())
}

fn run_normal_words(args: &AlgebraArgs) -> Result<(), Error> {
    let (pres, gb) = load_basis(args)?;
    let names = pres.generators();
    let table = (0..=args.truncation)
        .map(|d| {
            Ok((
                d,
                normal_words(&gb, d)?
                    .iter()
                    .map(|w| word_text(w, names))
                    .collect::<Vec<_>>(),
            ))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let text = match args.format {
        TextFormat::Json => json_text(&json!({
            "degrees": table
                .iter()
                .map(|(d, ws)| json!({"degree": d, "count": ws.len(), "words": ws}))
                .collect::<Vec<_>>(),
        })),
        TextFormat::Text => table
            .iter()
            .map(|(d, ws)| format!("{d} {} {}\n", ws.len(), ws.join(" ")))
            .collect(),
    };
    write_out(&text, args.output.as_deref())
}

fn profile_text(p: &ProfileRecord) -> String {
    let mut s = format!("HH^n({}, {})\n", p.algebra, p.coefficients);
    for level in &p.levels {
        writeln!(s, "n={} {}", level.n, level.value.cell()).unwrap();
    }
    writeln!(s, "zero above level {}", p.structural_vanishing_above).unwrap();
    s
}

fn run_hh(args: &HhArgs) -> Result<(), Error> {
    let a = parse_a(&args.a)?;
    let module = match &args.input {
        Some(path) => Some(formats::parse_module(path, &hcdim_core::lie::LieAlgebra::family(&a)?)?),
        None => None,
    };
    let profile = family_hh_profile(&a, args.truncation, args.n_max, module.as_ref())?;
    let record = ProfileRecord::from(&profile);
    let text = match args.format {
        TextFormat::Json => json_text(&serde_json::to_value(&record).map_err(Error::Serialize)?),
        TextFormat::Text => profile_text(&record),
    };
    write_out(&text, args.output.as_deref())
}

fn dims_output(dims: &[usize], format: TextFormat, path: Option<&Path>) -> Result<(), Error> {
    let text = match format {
        TextFormat::Json => json_text(&json!({ "dims": dims })),
        TextFormat::Text => dims.iter().enumerate().map(|(n, d)| format!("n={n} {d}\n")).collect(),
    };
    write_out(&text, path)
}

fn run_bar_hh(args: &BarArgs) -> Result<(), Error> {
    let (alg, m) = formats::parse_algebra(&args.input)?;
    dims_output(&bar_hh_dims(&alg, &m, args.n_max)?, args.format, args.output.as_deref())
}

fn run_ce(args: &BarArgs) -> Result<(), Error> {
    let (g, v) = formats::parse_lie(&args.input)?;
    dims_output(
        &ce_cohomology_dims(&g, &v, args.n_max)?,
        args.format,
        args.output.as_deref(),
    )
}

fn run_psi(args: &PsiArgs) -> Result<(), Error> {
    let a = parse_a(&args.a)?;
    let c = family::psi_comparison(&a, args.truncation)?;
    let text = match args.format {
        TextFormat::Json => json_text(&serde_json::to_value(&c).map_err(Error::Serialize)?),
        TextFormat::Text => format!(
            "map A_{a} -> A_1: y -> ({})y\ninverse pair verified: {}\ncohomology tables equal: {}\nresult: {}\n",
            c.forward_scale,
            c.inverse_pair_verified,
            c.tables_equal,
            c.holds()
        ),
    };
    write_out(&text, args.output.as_deref())
}

fn run_verify(args: &VerifyArgs) -> Result<(), Error> {
    let mut config = VerifyConfig {
        truncation: args.truncation,
        n_max: args.n_max,
        ..VerifyConfig::default()
    };
    if let Some(grid) = &args.a_grid {
        config.a_grid = grid
            .split(',')
            .map(|s| parse_rational(s).map_err(|e| Error::Usage(format!("--a-grid: {e}"))))
            .collect::<Result<_, _>>()?;
    }
    let report = hcdim::verify_paper(&config)?;
    emit_report(&report, args.format, args.output.as_deref())
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Gb(a) => run_gb(a),
        Command::NormalWords(a) => run_normal_words(a),
        Command::Hh(a) => run_hh(a),
        Command::BarHh(a) => run_bar_hh(a),
        Command::Ce(a) => run_ce(a),
        Command::PsiCheck(a) => run_psi(a),
        Command::VerifyPaper(a) => run_verify(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 2 } else { 1 })
        }
    }
}
