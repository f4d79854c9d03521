use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gamma_clifford::engine::Engine;
use gamma_clifford::expr::{evaluate, parse, render, RenderFormat};
use gamma_clifford::oracle::{Representation, RepresentationName};
use gamma_clifford::verifier::{reports_to_json, verify_selected, IdentityId};
use gamma_clifford::Blade;

#[derive(Parser)]
#[command(name = "gammacl", version, about = "Exact products of spacetime Clifford algebra generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce an expression such as "g(0)*g(1,2)" to canonical form.
    Simplify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value = "plain")]
        format: RenderFormat,
    },
    /// Check identities exhaustively against the matrix oracle.
    Verify {
        /// Identity to check; repeatable. Defaults to all.
        #[arg(long = "identity", conflicts_with = "all")]
        identities: Vec<IdentityId>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value = "standard")]
        rep: RepresentationName,
        /// Write the reports as a JSON array to this path.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print blade products, optionally restricted to a grade block.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=4))]
        left_grade: Option<u8>,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=4))]
        right_grade: Option<u8>,
        #[arg(long, default_value = "plain")]
        format: RenderFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Simplify { expr, format } => simplify(&expr, format),
        Command::Verify { identities, all: _, rep, json } => verify(identities, rep, json),
        Command::Table { left_grade, right_grade, format } => table(left_grade, right_grade, format),
    }
}

fn simplify(input: &str, format: RenderFormat) -> ExitCode {
    let expr = match parse(input) {
        Ok(expr) => expr,
        Err(err) => {
            eprintln!("error: {err}");
            eprintln!("  {input}");
            eprintln!("  {}^", " ".repeat(input[..err.offset.min(input.len())].chars().count()));
            return ExitCode::from(2);
        }
    };
    match evaluate(&expr) {
        Ok(mv) => {
            println!("{}", render(&mv, format));
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn verify(identities: Vec<IdentityId>, rep: RepresentationName, json: Option<PathBuf>) -> ExitCode {
    let ids = if identities.is_empty() { IdentityId::all() } else { identities };
    let reports = verify_selected(Engine::global(), &ids, Representation::by_name(rep));
    for report in &reports {
        println!("{}", report.summary_line());
        for cx in report.counterexamples.iter().take(5) {
            println!(
                "  it is not right: indices {:?}{} engine {} oracle {}",
                cx.indices,
                cx.case.as_ref().map(|c| format!(" ({c})")).unwrap_or_default(),
                render(&cx.engine, RenderFormat::Plain),
                render(&cx.oracle, RenderFormat::Plain),
            );
        }
    }
    if let Some(path) = json {
        if let Err(err) = std::fs::write(&path, reports_to_json(&reports) + "\n") {
            eprintln!("error: cannot write {}: {err}", path.display());
            return ExitCode::from(2);
        }
    }
    let total: u64 = reports.iter().map(|r| r.cases_checked).sum();
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} identities, {total} cases, {failed} failed", reports.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn table(left: Option<u8>, right: Option<u8>, format: RenderFormat) -> ExitCode {
    let engine = Engine::global();
    let selected = |b: &Blade, grade: Option<u8>| grade.is_none_or(|g| b.grade() == usize::from(g));
    let pairs: Vec<(Blade, Blade)> = Blade::ALL
        .iter()
        .filter(|a| selected(a, left))
        .flat_map(|&a| Blade::ALL.iter().filter(|b| selected(b, right)).map(move |&b| (a, b)))
        .collect();
    match format {
        RenderFormat::Json => {
            let rows: Vec<serde_json::Value> = pairs
                .iter()
                .map(|&(a, b)| {
                    serde_json::json!({
                        "left": a.to_string(),
                        "right": b.to_string(),
                        "grades": [a.grade(), b.grade()],
                        "product": engine.blade_product(a, b),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).expect("table serializes"));
        }
        RenderFormat::Plain => {
            for (a, b) in pairs {
                println!("{a} * {b} = {}", render(engine.blade_product(a, b), format));
            }
        }
        RenderFormat::Latex => {
            for (a, b) in pairs {
                let factor = |x: Blade| render(&gamma_clifford::Multivector::blade(x), format);
                println!("{} {} = {}", factor(a), factor(b), render(engine.blade_product(a, b), format));
            }
        }
    }
    ExitCode::SUCCESS
}
