//! Thin command-line driver: one subcommand per document task kind,
//! reading a JSON workbench document and printing a report.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dgla_workbench::doc::{parse_document, resolve, Task};
use dgla_workbench::run::{emit, run_all, run_named, Format};

#[derive(Parser)]
#[command(name = "workbench", about = "exact deformation-theory workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// path to a JSON workbench document
    #[arg(long, short)]
    input: String,
    /// output format
    #[arg(long, default_value = "human")]
    format: Format,
    /// select the task entry with this name (default: first of this kind)
    #[arg(long)]
    name: Option<String>,
    /// override the document seed (random-sampling tasks)
    #[arg(long)]
    seed: Option<u64>,
    /// override the lift / coefficient order of the selected task
    #[arg(long)]
    order: Option<usize>,
    /// override the weight bound of a path-object task
    #[arg(long)]
    bound: Option<usize>,
}

#[derive(Subcommand)]
#[command(rename_all = "kebab-case")]
enum Command {
    /// run every task in the document, in order
    Run(Common),
    Validate(Common),
    Cohomology(Common),
    Cone(Common),
    Les(Common),
    Tangent(Common),
    ExtendedTangent(Common),
    DefC0(Common),
    McLift(Common),
    Obstruction(Common),
    PrimaryObstruction(Common),
    GaugeCheck(Common),
    Bch(Common),
    PathObject(Common),
    Flatness(Common),
    GaugeTrivial(Common),
    Truncation(Common),
    Zigzag(Common),
    Whitehead(Common),
    CartanCheck(Common),
}

impl Command {
    fn parts(&self) -> (Option<&'static str>, &Common) {
        match self {
            Command::Run(c) => (None, c),
            Command::Validate(c) => (Some("validate"), c),
            Command::Cohomology(c) => (Some("cohomology"), c),
            Command::Cone(c) => (Some("cone"), c),
            Command::Les(c) => (Some("les"), c),
            Command::Tangent(c) => (Some("tangent"), c),
            Command::ExtendedTangent(c) => (Some("extended-tangent"), c),
            Command::DefC0(c) => (Some("def-c0"), c),
            Command::McLift(c) => (Some("mc-lift"), c),
            Command::Obstruction(c) => (Some("obstruction"), c),
            Command::PrimaryObstruction(c) => (Some("primary-obstruction"), c),
            Command::GaugeCheck(c) => (Some("gauge-check"), c),
            Command::Bch(c) => (Some("bch"), c),
            Command::PathObject(c) => (Some("path-object"), c),
            Command::Flatness(c) => (Some("flatness"), c),
            Command::GaugeTrivial(c) => (Some("gauge-trivial"), c),
            Command::Truncation(c) => (Some("truncation"), c),
            Command::Zigzag(c) => (Some("zigzag"), c),
            Command::Whitehead(c) => (Some("whitehead"), c),
            Command::CartanCheck(c) => (Some("cartan-check"), c),
        }
    }
}

fn apply_overrides(task: &mut Task, common: &Common) {
    if let Some(n) = common.order {
        match task {
            Task::McLift { order, .. }
            | Task::Obstruction { order, .. }
            | Task::GaugeCheck { order, .. }
            | Task::Bch { order, .. }
            | Task::Flatness { order, .. }
            | Task::GaugeTrivial { order, .. }
            | Task::Truncation { order, .. } => *order = n,
            _ => {}
        }
    }
    if let Some(n) = common.bound {
        if let Task::PathObject { bound, .. } = task {
            *bound = n;
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (kind, common) = cli.command.parts();
    let text = match std::fs::read_to_string(&common.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", common.input);
            return ExitCode::from(2);
        }
    };
    let mut doc = match parse_document(&text) {
        Ok(d) => d,
        Err(diags) => {
            for d in diags {
                eprintln!("error at {}: {}", d.path, d.message);
            }
            return ExitCode::from(2);
        }
    };
    if common.seed.is_some() {
        doc.seed = common.seed;
    }
    for entry in &mut doc.tasks {
        if kind == Some(entry.task.kind())
            && common
                .name
                .as_deref()
                .is_none_or(|n| entry.name.as_deref() == Some(n))
        {
            apply_overrides(&mut entry.task, common);
        }
    }
    let resolved = match resolve(&doc) {
        Ok(r) => r,
        Err(diags) => {
            for d in diags {
                eprintln!("error at {}: {}", d.path, d.message);
            }
            return ExitCode::from(2);
        }
    };
    let outcome = match kind {
        None => run_all(&doc, &resolved).map(|reports| {
            if common.format == Format::Machine {
                let items: Vec<serde_json::Value> = reports
                    .iter()
                    .map(|r| serde_json::to_value(r).expect("report serialization"))
                    .collect();
                serde_json::to_string_pretty(&items).expect("report serialization")
            } else {
                reports
                    .iter()
                    .map(|r| emit(r, Format::Human))
                    .collect::<Vec<_>>()
                    .join("\n")
            }
        }),
        Some(k) => run_named(&doc, &resolved, k, common.name.as_deref())
            .map(|r| emit(&r, common.format)),
    };
    match outcome {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
