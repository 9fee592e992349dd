//! The `wolfform` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 failed
//! cross-check or reproduction check.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classifier::{classify, cross_check, euler_grid, CrossCheckReport, Verdict};
use crate::error::Error;
use crate::massey::{triple_massey, MasseyOutcome};
use crate::model::BundleModel;
use crate::rings::{presentation, EulerChoice, EulerClassSpec, SpaceId};
use crate::verify;

#[derive(Parser, Debug)]
#[command(
    name = "wolfform",
    version,
    about = "Rational models of sphere bundles over Wolf spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers and bases of the base ring, or of a bundle with --euler.
    Cohomology(CohomologyArgs),
    /// The bundle model: Euler class, Betti numbers, cohomology generators.
    Model(ModelArgs),
    /// A triple Massey product in the bundle model.
    Massey(MasseyArgs),
    /// Formal or not, with the deciding result or a Massey witness.
    Classify(ModelArgs),
    /// Verdicts over a grid of Euler classes, cross-checked by Massey products.
    Table(TableArgs),
    /// Recompute every published result and report pass or fail.
    VerifyPaper(OutputArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Shorthand for --format json.
    #[arg(long, conflicts_with = "format")]
    json: bool,
}

impl OutputArgs {
    fn format(&self, default: Format) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format.unwrap_or(default)
        }
    }
}

#[derive(Args, Debug)]
struct CohomologyArgs {
    /// gr-c:n=<int>, gr-r:n=<int>, gi, fi, eii, evi, eix.
    #[arg(long)]
    space: String,
    /// a=<rat>,b=<rat>[,c=<rat>] or homogeneous; omit for the base ring.
    #[arg(long, allow_hyphen_values = true)]
    euler: Option<String>,
    /// Highest degree to report.
    #[arg(long)]
    max_degree: Option<u32>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct ModelArgs {
    #[arg(long)]
    space: String,
    #[arg(long, default_value = "homogeneous", allow_hyphen_values = true)]
    euler: String,
    #[arg(long)]
    max_degree: Option<u32>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct MasseyArgs {
    #[arg(long)]
    space: String,
    #[arg(long, default_value = "homogeneous", allow_hyphen_values = true)]
    euler: String,
    /// Three classes, as polynomials in the base generators and u. Put `--`
    /// before them when one starts with `-`.
    #[arg(num_args = 3, value_names = ["A1", "A2", "A3"], required = true)]
    classes: Vec<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    space: String,
    /// Integer coefficient range lo..hi.
    #[arg(long, default_value = "-2..2", allow_hyphen_values = true)]
    grid: String,
    #[command(flatten)]
    output: OutputArgs,
}

type CliResult = std::result::Result<i32, Error>;

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Cohomology(a) => cohomology(a, out),
        Command::Model(a) => model(a, out),
        Command::Massey(a) => massey(a, out),
        Command::Classify(a) => classify_cmd(a, out),
        Command::Table(a) => table(a, out, err),
        Command::VerifyPaper(a) => verify_paper(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 1,
        Error::CrossCheck(_) => 3,
        _ => 2,
    }
}

fn io(e: std::io::Error) -> Error {
    Error::Domain(format!("cannot write output: {e}"))
}

fn emit_json(out: &mut dyn Write, value: &Value) -> std::result::Result<(), Error> {
    writeln!(out, "{}", serde_json::to_string(value).expect("serializable")).map_err(io)
}

fn parse_space(text: &str) -> std::result::Result<SpaceId, Error> {
    text.parse()
}

fn parse_euler(space: SpaceId, text: &str) -> std::result::Result<EulerClassSpec, Error> {
    text.parse::<EulerChoice>()?.resolve(space)
}

fn cohomology(a: CohomologyArgs, out: &mut dyn Write) -> CliResult {
    let space = parse_space(&a.space)?;
    let (betti, listing): (Vec<usize>, Vec<(u32, Vec<String>)>) = match &a.euler {
        None => {
            let ring = presentation(space)?;
            let listing = (0..=ring.formal_dimension())
                .map(|k| {
                    let basis = ring.degree_basis(k).basis_polynomials(ring.generators());
                    (k, basis.iter().map(ToString::to_string).collect())
                })
                .collect();
            (ring.betti(), listing)
        }
        Some(e) => {
            let model = BundleModel::build(space, &parse_euler(space, e)?)?;
            let listing = (0..=model.formal_dimension())
                .map(|k| {
                    let basis = model.cohomology_basis(k);
                    (
                        k,
                        basis.iter().map(|c| model.class_to_polynomial(c).to_string()).collect(),
                    )
                })
                .collect();
            (model.betti(), listing)
        }
    };
    let keep = a.max_degree.map_or(betti.len(), |m| (m as usize + 1).min(betti.len()));
    match a.output.format(Format::Text) {
        Format::Json => emit_json(out, &json!({ "betti": &betti[..keep] }))?,
        Format::Csv => {
            writeln!(out, "degree,dim").map_err(io)?;
            for (k, b) in betti[..keep].iter().enumerate() {
                writeln!(out, "{k},{b}").map_err(io)?;
            }
        }
        Format::Text => {
            for (k, basis) in &listing[..keep] {
                if !basis.is_empty() {
                    writeln!(out, "H^{k}: dim {} <{}>", basis.len(), basis.join(", ")).map_err(io)?;
                }
            }
        }
    }
    Ok(0)
}

fn model(a: ModelArgs, out: &mut dyn Write) -> CliResult {
    let space = parse_space(&a.space)?;
    let spec = parse_euler(space, &a.euler)?;
    let model = BundleModel::build(space, &spec)?;
    let mut betti = model.betti();
    let mut gens = model.generators_by_degree();
    if let Some(m) = a.max_degree {
        betti.truncate(m as usize + 1);
        gens.retain(|&k, _| k <= m);
    }
    match a.output.format(Format::Text) {
        Format::Json => emit_json(
            out,
            &json!({
                "space": space.to_string(),
                "euler": model.euler().to_string(),
                "betti": betti,
                "generators_by_degree": gens,
            }),
        )?,
        Format::Csv => {
            writeln!(out, "degree,dim,generators").map_err(io)?;
            for (k, b) in betti.iter().enumerate() {
                let g = gens.get(&(k as u32)).map(|g| g.join(" ; ")).unwrap_or_default();
                writeln!(out, "{k},{b},{g}").map_err(io)?;
            }
        }
        Format::Text => {
            writeln!(out, "space: {space}").map_err(io)?;
            writeln!(out, "du = {}", model.euler()).map_err(io)?;
            for (k, g) in &gens {
                writeln!(out, "H^{k}: <{}>", g.join(", ")).map_err(io)?;
            }
        }
    }
    Ok(0)
}

fn massey(a: MasseyArgs, out: &mut dyn Write) -> CliResult {
    let space = parse_space(&a.space)?;
    let spec = parse_euler(space, &a.euler)?;
    let model = BundleModel::build(space, &spec)?;
    let classes = a
        .classes
        .iter()
        .map(|t| model.parse_class(t))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    let outcome = triple_massey(&model, &classes[0], &classes[1], &classes[2])?;
    let value = match &outcome {
        MasseyOutcome::Defined(r) => json!({
            "defined": true,
            "trivial": r.trivial(),
            "representative": model.class_to_polynomial(r.representative()).to_string(),
            "indeterminacy_dim": r.indeterminacy_dim(),
        }),
        MasseyOutcome::Undefined { .. } => json!({
            "defined": false,
            "trivial": null,
            "representative": null,
            "indeterminacy_dim": null,
        }),
    };
    match a.output.format(Format::Text) {
        Format::Json => emit_json(out, &value)?,
        Format::Csv => {
            writeln!(out, "defined,trivial,representative,indeterminacy_dim").map_err(io)?;
            let cell = |v: &Value| match v {
                Value::Null => String::new(),
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            writeln!(
                out,
                "{},{},{},{}",
                cell(&value["defined"]),
                cell(&value["trivial"]),
                cell(&value["representative"]),
                cell(&value["indeterminacy_dim"])
            )
            .map_err(io)?;
        }
        Format::Text => match &outcome {
            MasseyOutcome::Defined(r) => {
                writeln!(
                    out,
                    "<{}> = [{}]",
                    a.classes.join(", "),
                    model.class_to_polynomial(r.representative())
                )
                .map_err(io)?;
                writeln!(
                    out,
                    "degree {}, indeterminacy dimension {}",
                    r.degree(),
                    r.indeterminacy_dim()
                )
                .map_err(io)?;
                writeln!(out, "{}", if r.trivial() { "trivial" } else { "non-trivial" }).map_err(io)?;
            }
            MasseyOutcome::Undefined {
                left_exact,
                right_exact,
            } => {
                let which = match (left_exact, right_exact) {
                    (false, false) => "neither product is exact",
                    (false, true) => "a1*a2 is not exact",
                    _ => "a2*a3 is not exact",
                };
                writeln!(out, "<{}> is undefined: {which}", a.classes.join(", ")).map_err(io)?;
            }
        },
    }
    Ok(0)
}

fn verdict_json(v: &Verdict) -> Value {
    let witness = v.witness.as_ref().map(|w| {
        json!({
            "classes": w.classes,
            "degree": w.result.degree(),
            "indeterminacy_dim": w.result.indeterminacy_dim(),
            "trivial": w.result.trivial(),
        })
    });
    json!({
        "space": v.space.to_string(),
        "euler": v.euler.to_string(),
        "formal": v.formal,
        "justification": v.justification.to_string(),
        "witness": witness,
    })
}

fn classify_cmd(a: ModelArgs, out: &mut dyn Write) -> CliResult {
    let space = parse_space(&a.space)?;
    let spec = parse_euler(space, &a.euler)?;
    let v = classify(space, &spec)?;
    match a.output.format(Format::Text) {
        Format::Json => emit_json(out, &verdict_json(&v))?,
        Format::Csv => {
            writeln!(out, "space,euler,formal,justification,witness").map_err(io)?;
            let w = v.witness.as_ref().map(|w| w.classes.join(" ; ")).unwrap_or_default();
            writeln!(out, "{},\"{}\",{},{},{w}", v.space, v.euler, v.formal, v.justification).map_err(io)?;
        }
        Format::Text => {
            let word = if v.formal { "formal" } else { "non-formal" };
            writeln!(out, "{space} with {spec}: {word} ({})", v.justification).map_err(io)?;
            if let Some(w) = &v.witness {
                writeln!(
                    out,
                    "witness <{}> in degree {}, indeterminacy dimension {}, non-trivial",
                    w.classes.join(", "),
                    w.result.degree(),
                    w.result.indeterminacy_dim()
                )
                .map_err(io)?;
            }
        }
    }
    Ok(0)
}

fn parse_grid(text: &str) -> std::result::Result<(i64, i64), Error> {
    let bad = || Error::Parse(format!("expected a range lo..hi, got `{text}`"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn table_rows(report: &CrossCheckReport) -> Vec<[String; 7]> {
    report
        .points
        .iter()
        .map(|p| {
            let opt = |v: &Option<crate::algebra::Rational>| v.as_ref().map(ToString::to_string).unwrap_or_default();
            [
                report.space.to_string(),
                p.euler.a.to_string(),
                opt(&p.euler.b),
                opt(&p.euler.c),
                p.formal.to_string(),
                p.justification.to_string(),
                p.witness.trivial().map(|t| t.to_string()).unwrap_or_default(),
            ]
        })
        .collect()
}

fn table(a: TableArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let space = parse_space(&a.space)?;
    let (lo, hi) = parse_grid(&a.grid)?;
    let grid = euler_grid(space, lo, hi)?;
    let report = cross_check(space, &grid)?;
    let rows = table_rows(&report);
    let failures: Vec<String> = report
        .failures()
        .map(|p| format!("{}: {}", p.euler, p.message.clone().unwrap_or_default()))
        .collect();
    const HEADER: [&str; 7] = ["space", "a", "b", "c", "formal", "justification", "witness_trivial"];
    match a.output.format(Format::Csv) {
        Format::Csv => {
            writeln!(out, "{}", HEADER.join(",")).map_err(io)?;
            for r in &rows {
                writeln!(out, "{}", r.join(",")).map_err(io)?;
            }
        }
        Format::Json => {
            let points: Vec<Value> = rows
                .iter()
                .zip(&report.points)
                .map(|(r, p)| {
                    json!({
                        "a": r[1], "b": p.euler.b.as_ref().map(|_| &r[2]), "c": p.euler.c.as_ref().map(|_| &r[3]),
                        "formal": p.formal, "justification": r[5], "witness_trivial": p.witness.trivial(),
                        "passed": p.passed,
                    })
                })
                .collect();
            emit_json(
                out,
                &json!({
                    "space": space.to_string(),
                    "points": points,
                    "cross_check": { "passed": report.passed(), "failures": failures },
                }),
            )?;
        }
        Format::Text => {
            for r in &rows {
                let coeffs: Vec<String> = ["a", "b", "c"]
                    .iter()
                    .zip(&r[1..4])
                    .filter(|(_, v)| !v.is_empty())
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                let word = if r[4] == "true" { "formal" } else { "non-formal" };
                writeln!(out, "{:<16} {:<11} {}", coeffs.join(","), word, r[5]).map_err(io)?;
            }
        }
    }
    let non_formal = report.points.iter().filter(|p| !p.formal).count();
    let _ = writeln!(
        err,
        "cross-check: {} points, {non_formal} non-formal, {} failed",
        report.points.len(),
        failures.len()
    );
    for f in &failures {
        let _ = writeln!(err, "  FAIL {f}");
    }
    Ok(if report.passed() { 0 } else { 3 })
}

fn verify_paper(a: OutputArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let start = std::time::Instant::now();
    let checks = verify::run_all();
    match a.format(Format::Text) {
        Format::Json => {
            let rows: Vec<Value> = checks
                .iter()
                .map(|c| json!({ "id": c.id, "check": c.name, "reference": c.reference, "passed": c.passed, "detail": c.detail }))
                .collect();
            emit_json(out, &Value::Array(rows))?;
        }
        Format::Csv => {
            writeln!(out, "id,check,reference,passed,detail").map_err(io)?;
            for c in &checks {
                writeln!(
                    out,
                    "{},\"{}\",\"{}\",{},\"{}\"",
                    c.id, c.name, c.reference, c.passed, c.detail
                )
                .map_err(io)?;
            }
        }
        Format::Text => {
            for c in &checks {
                writeln!(
                    out,
                    "{} {:<4} {:<52} {:<40} {}",
                    c.id,
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.reference,
                    c.detail
                )
                .map_err(io)?;
            }
        }
    }
    for c in &checks {
        let _ = writeln!(err, "check {} took {:.3}s", c.id, c.elapsed.as_secs_f64());
    }
    let _ = writeln!(err, "total {:.3}s", start.elapsed().as_secs_f64());
    Ok(if checks.iter().all(|c| c.passed) { 0 } else { 3 })
}
