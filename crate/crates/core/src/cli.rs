//! Command-line entry points.
//!
//! Exit codes: 0 for success (and for claims that hold), 1 when a checked
//! claim or congruence fails, 2 for usage errors, 3 for expression errors.
//! Every error path prints a single line starting with `error[usage]:`,
//! `error[parse]:`, or `error[eval]:`.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::claims::{certificate, verify_claim, Claim, Classification, TermRecord};
use crate::context::{ContextSpec, Generator};
use crate::element::Element;
use crate::error::AlgebraError;
use crate::expr::evaluate;
use crate::ideal::MonomialIdeal;
use crate::parse::{parse, ParseError};
use crate::render::{render_element, render_word, TensorStyle};
use crate::scalar::Field;
use crate::structured::{to_json, ElementJson, RecordJson, ReportJson, SweepRowJson};

#[derive(Parser)]
#[command(
    name = "koszul",
    version,
    about = "Exact chain-product congruence checking in graded tensor powers"
)]
struct Cli {
    /// Evaluation context, e.g. "n=4;field=f2;gens=a:1,b:2".
    #[arg(long, global = true, value_name = "SPEC")]
    ctx: Option<String>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Render tensors with the ASCII separator "(x)". This is the default.
    #[arg(long, global = true, conflicts_with = "utf8")]
    ascii: bool,

    /// Render tensors with the UTF-8 separator "⊗".
    #[arg(long, global = true)]
    utf8: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression, evaluate it, and print its normal form.
    Expand {
        /// Expression over the --ctx context.
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Reduce an expression modulo a monomial-tensor ideal.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Ideal generator, one tensor word; repeat the flag for several.
        #[arg(long = "ideal", value_name = "WORD", required = true)]
        ideal: Vec<String>,
    },
    /// Decide whether two expressions agree modulo an ideal.
    Congruent {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[arg(long = "ideal", value_name = "WORD", required = true)]
        ideal: Vec<String>,
    },
    /// Verify one claim instance and report HOLDS or FAILS.
    Verify(ClaimArgs),
    /// Sweep one claim across arities, degrees, and fields.
    Sweep {
        #[arg(long, value_enum)]
        claim: ClaimName,
        /// Inclusive arity range, e.g. "2..8", or a single arity.
        #[arg(long, value_name = "RANGE")]
        n: String,
        /// Comma-separated generator degrees to combine.
        #[arg(long, value_name = "LIST", default_value = "1,2")]
        degrees: String,
        /// Comma-separated field codes.
        #[arg(long, value_name = "LIST", default_value = "q,f2,f3")]
        fields: String,
    },
    /// Print the full term certificate of a claim instance.
    Certificate(ClaimArgs),
}

#[derive(Args)]
struct ClaimArgs {
    #[arg(long, value_enum)]
    claim: ClaimName,

    /// Tensor arity, at least 2.
    #[arg(long)]
    n: usize,

    /// Generator degrees, chain generator first: "a=1" or "a=1,b=2".
    #[arg(long, value_name = "DEGS")]
    deg: String,

    /// Field code: q, f2, f3, or fp:P.
    #[arg(long, value_name = "FIELD")]
    field: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ClaimName {
    /// First congruence as originally stated; fails for n >= 4.
    OriginalFirst,
    /// First congruence with the corrected ideal.
    CorrectedFirst,
    /// Second congruence, with a prefix generator.
    Second,
}

impl From<ClaimName> for Claim {
    fn from(name: ClaimName) -> Claim {
        match name {
            ClaimName::OriginalFirst => Claim::OriginalFirstPart,
            ClaimName::CorrectedFirst => Claim::CorrectedFirstPart,
            ClaimName::Second => Claim::SecondPart,
        }
    }
}

struct Failure {
    exit: i32,
    message: String,
}

impl Failure {
    fn report(self) -> i32 {
        eprintln!("{}", self.message);
        self.exit
    }
}

fn usage(detail: impl std::fmt::Display) -> Failure {
    Failure {
        exit: 2,
        message: format!("error[usage]: {detail}"),
    }
}

fn parse_failure(e: ParseError) -> Failure {
    Failure {
        exit: 3,
        message: format!("error[parse]: {e}"),
    }
}

fn eval_failure(e: AlgebraError) -> Failure {
    Failure {
        exit: 3,
        message: format!("error[eval]: {e}"),
    }
}

/// Runs the CLI against the process arguments and returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => return handle_clap_error(e),
    };
    match execute(cli) {
        Ok(code) => code,
        Err(failure) => failure.report(),
    }
}

fn handle_clap_error(e: clap::Error) -> i32 {
    use clap::error::ErrorKind;
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
            let _ = e.print();
            0
        }
        _ => {
            let rendered = e.render().to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let first = first.strip_prefix("error: ").unwrap_or(first);
            eprintln!("error[usage]: {first}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<i32, Failure> {
    let style = if cli.utf8 {
        TensorStyle::Utf8
    } else {
        TensorStyle::Ascii
    };
    match cli.command {
        Command::Expand { expr } => {
            let spec = require_ctx(&cli.ctx)?;
            let x = eval_input(&expr, &spec)?;
            if cli.json {
                println!("{}", to_json(&ElementJson::from_element(&x)));
            } else {
                println!("{}", render_element(&x, style));
            }
            Ok(0)
        }
        Command::Reduce { expr, ideal } => {
            let spec = require_ctx(&cli.ctx)?;
            let x = eval_input(&expr, &spec)?;
            let ideal = build_ideal(&ideal, &spec)?;
            let reduced = ideal.reduce(&x).map_err(eval_failure)?;
            if cli.json {
                println!("{}", to_json(&ElementJson::from_element(&reduced)));
            } else {
                println!("{}", render_element(&reduced, style));
            }
            Ok(0)
        }
        Command::Congruent { left, right, ideal } => {
            let spec = require_ctx(&cli.ctx)?;
            let l = eval_input(&left, &spec)?;
            let r = eval_input(&right, &spec)?;
            let ideal = build_ideal(&ideal, &spec)?;
            let difference = l.sub(&r).map_err(eval_failure)?;
            let residual = ideal.reduce(&difference).map_err(eval_failure)?;
            let congruent = residual.is_zero();
            if cli.json {
                #[derive(Serialize)]
                struct CongruenceJson {
                    congruent: bool,
                    residual: ElementJson,
                }
                let row = CongruenceJson {
                    congruent,
                    residual: ElementJson::from_element(&residual),
                };
                println!("{}", to_json(&row));
            } else if congruent {
                println!("CONGRUENT");
            } else {
                println!(
                    "NOT CONGRUENT: residual = {}",
                    render_element(&residual, style)
                );
            }
            Ok(if congruent { 0 } else { 1 })
        }
        Command::Verify(args) => {
            let instance = ClaimInstance::from_args(&args)?;
            let report = instance.verify().map_err(usage)?;
            if cli.json {
                println!("{}", to_json(&ReportJson::from_report(&report)));
            } else if report.holds() {
                println!("HOLDS");
            } else {
                println!(
                    "FAILS: residual = {}",
                    render_element(report.residual(), style)
                );
                if instance.claim == Claim::OriginalFirstPart {
                    println!("note: the original form is expected to fail for n >= 4");
                }
            }
            Ok(if report.holds() { 0 } else { 1 })
        }
        Command::Certificate(args) => {
            let instance = ClaimInstance::from_args(&args)?;
            let records = instance.certificate().map_err(usage)?;
            if cli.json {
                let rows: Vec<RecordJson> = records.iter().map(RecordJson::from_record).collect();
                println!("{}", to_json(&rows));
            } else {
                for record in &records {
                    println!("{}", render_record(record, style));
                }
                let survivors = records.iter().filter(|r| r.survives()).count();
                println!("certificate: {} terms, {survivors} survive", records.len());
            }
            Ok(0)
        }
        Command::Sweep {
            claim,
            n,
            degrees,
            fields,
        } => sweep(claim.into(), &n, &degrees, &fields, cli.json),
    }
}

fn require_ctx(ctx: &Option<String>) -> Result<ContextSpec, Failure> {
    let raw = ctx
        .as_deref()
        .ok_or_else(|| usage("this subcommand requires --ctx \"n=..;field=..;gens=..\""))?;
    let spec = ContextSpec::parse_spec(raw).map_err(usage)?;
    warn_zero_degrees(spec.zero_degree_generators().into_iter());
    Ok(spec)
}

fn warn_zero_degrees<'a>(names: impl Iterator<Item = &'a str>) {
    for name in names {
        eprintln!("warning: generator `{name}` has degree 0; its classes are not zero-divisors");
    }
}

fn eval_input(input: &str, spec: &ContextSpec) -> Result<Element, Failure> {
    let ast = parse(input, spec).map_err(parse_failure)?;
    evaluate(&ast, spec).map_err(eval_failure)
}

fn build_ideal(inputs: &[String], spec: &ContextSpec) -> Result<MonomialIdeal, Failure> {
    let mut elements = Vec::with_capacity(inputs.len());
    for input in inputs {
        elements.push(eval_input(input, spec)?);
    }
    MonomialIdeal::from_monomial_elements(spec.arity(), &elements).map_err(usage)
}

struct ClaimInstance {
    claim: Claim,
    chain: Generator,
    prefix: Option<Generator>,
    n: usize,
    field: Field,
}

impl ClaimInstance {
    fn from_args(args: &ClaimArgs) -> Result<ClaimInstance, Failure> {
        let claim: Claim = args.claim.into();
        let degrees = parse_degree_list(&args.deg)?;
        let expected = if claim.takes_prefix() { 2 } else { 1 };
        if degrees.len() != expected {
            return Err(usage(format!(
                "claim `{}` takes exactly {expected} generator degree(s) in --deg, got {}",
                claim.id(),
                degrees.len()
            )));
        }
        warn_zero_degrees(
            degrees
                .iter()
                .filter(|(_, d)| *d == 0)
                .map(|(name, _)| name.as_str()),
        );
        let chain = Generator::new(&degrees[0].0, degrees[0].1).map_err(usage)?;
        let prefix = match degrees.get(1) {
            Some((name, degree)) => Some(Generator::new(name, *degree).map_err(usage)?),
            None => None,
        };
        let field = Field::parse_code(&args.field).map_err(usage)?;
        Ok(ClaimInstance {
            claim,
            chain,
            prefix,
            n: args.n,
            field,
        })
    }

    fn verify(&self) -> Result<crate::claims::VerificationReport, AlgebraError> {
        verify_claim(
            self.claim,
            &self.chain,
            self.prefix.as_ref(),
            self.n,
            self.field,
        )
    }

    fn certificate(&self) -> Result<Vec<TermRecord>, AlgebraError> {
        certificate(
            self.claim,
            &self.chain,
            self.prefix.as_ref(),
            self.n,
            self.field,
        )
    }
}

fn parse_degree_list(input: &str) -> Result<Vec<(String, u32)>, Failure> {
    let mut out = Vec::new();
    for entry in input.split(',') {
        let (name, degree) = entry
            .trim()
            .split_once('=')
            .ok_or_else(|| usage(format!("expected name=degree in --deg, got `{entry}`")))?;
        let degree: u32 = degree
            .trim()
            .parse()
            .map_err(|_| usage(format!("bad degree `{}` in --deg", degree.trim())))?;
        out.push((name.trim().to_owned(), degree));
    }
    Ok(out)
}

fn render_record(record: &TermRecord, style: TensorStyle) -> String {
    let indices: Vec<String> = record.indices().iter().map(usize::to_string).collect();
    let head = format!(
        "({}) epsilon={} word={}",
        indices.join(","),
        record.epsilon(),
        render_word(record.word(), style)
    );
    match record.classification() {
        Classification::Survives => format!("{head} survives"),
        Classification::Absorbed {
            generator_index,
            generator,
            multi_divisible,
        } => {
            let mut line = format!(
                "{head} absorbed by generator {generator_index}: {}",
                render_word(generator, style)
            );
            if *multi_divisible {
                line.push_str(" (other generators also divide)");
            }
            line
        }
    }
}

fn parse_arity_range(input: &str) -> Result<Vec<usize>, Failure> {
    let parse_bound = |s: &str| -> Result<usize, Failure> {
        s.trim()
            .parse()
            .map_err(|_| usage(format!("bad arity `{}` in --n", s.trim())))
    };
    let (lo, hi) = match input.split_once("..") {
        Some((lo, hi)) => (parse_bound(lo)?, parse_bound(hi)?),
        None => {
            let v = parse_bound(input)?;
            (v, v)
        }
    };
    if lo < 2 {
        return Err(usage(format!(
            "arity range must start at 2 or above, got {lo}"
        )));
    }
    if hi < lo {
        return Err(usage(format!("empty arity range {lo}..{hi}")));
    }
    Ok((lo..=hi).collect())
}

struct SweepCell {
    n: usize,
    chain_degree: u32,
    prefix_degree: Option<u32>,
    field: Field,
}

fn sweep(
    claim: Claim,
    range: &str,
    degrees: &str,
    fields: &str,
    json: bool,
) -> Result<i32, Failure> {
    let arities = parse_arity_range(range)?;
    let mut degree_values = Vec::new();
    for part in degrees.split(',') {
        let d: u32 = part
            .trim()
            .parse()
            .map_err(|_| usage(format!("bad degree `{}` in --degrees", part.trim())))?;
        degree_values.push(d);
    }
    let mut field_values = Vec::new();
    for code in fields.split(',') {
        field_values.push(Field::parse_code(code).map_err(usage)?);
    }

    let mut cells = Vec::new();
    for &n in &arities {
        for &da in &degree_values {
            let prefix_degrees: Vec<Option<u32>> = if claim.takes_prefix() {
                degree_values.iter().map(|&db| Some(db)).collect()
            } else {
                vec![None]
            };
            for db in prefix_degrees {
                for &field in &field_values {
                    cells.push(SweepCell {
                        n,
                        chain_degree: da,
                        prefix_degree: db,
                        field,
                    });
                }
            }
        }
    }

    let outcomes: Result<Vec<bool>, AlgebraError> = cells
        .par_iter()
        .map(|cell| {
            let a = Generator::new("a", cell.chain_degree)?;
            let b = match cell.prefix_degree {
                Some(d) => Some(Generator::new("b", d)?),
                None => None,
            };
            let report = verify_claim(claim, &a, b.as_ref(), cell.n, cell.field)?;
            Ok(report.holds())
        })
        .collect();
    let outcomes = outcomes.map_err(usage)?;

    let failures = outcomes.iter().filter(|&&h| !h).count();
    if json {
        let rows: Vec<SweepRowJson> = cells
            .iter()
            .zip(&outcomes)
            .map(|(cell, &holds)| {
                let mut degrees = std::collections::BTreeMap::new();
                degrees.insert("a".to_owned(), cell.chain_degree);
                if let Some(db) = cell.prefix_degree {
                    degrees.insert("b".to_owned(), db);
                }
                SweepRowJson {
                    claim: claim.id().to_owned(),
                    n: cell.n,
                    degrees,
                    field: cell.field.to_string(),
                    holds,
                }
            })
            .collect();
        println!("{}", to_json(&rows));
    } else {
        for (cell, &holds) in cells.iter().zip(&outcomes) {
            let prefix = match cell.prefix_degree {
                Some(db) => format!(" deg(b)={db}"),
                None => String::new(),
            };
            println!(
                "claim={} n={} deg(a)={}{prefix} field={} {}",
                claim.id(),
                cell.n,
                cell.chain_degree,
                cell.field,
                if holds { "HOLDS" } else { "FAILS" }
            );
        }
        println!(
            "sweep: {} cells, {} hold, {failures} fail",
            cells.len(),
            cells.len() - failures
        );
    }
    Ok(if failures == 0 { 0 } else { 1 })
}
