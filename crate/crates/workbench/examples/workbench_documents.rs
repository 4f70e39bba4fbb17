//! The JSON document format: builds the shipped example documents, runs
//! their tasks, and prints a one-line summary per task. With
//! `--write <dir>` it regenerates the fixture files and their expected
//! reports.

use dgla_workbench::doc::{corpus_documents, emit_document, resolve};
use dgla_workbench::run::run_all;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let write_dir = match args.as_slice() {
        [_, flag, dir] if flag == "--write" => Some(dir.clone()),
        [_] => None,
        _ => {
            eprintln!("usage: workbench_documents [--write <dir>]");
            std::process::exit(2);
        }
    };
    for (name, doc) in corpus_documents() {
        let resolved = resolve(&doc).expect("shipped documents resolve");
        let reports = run_all(&doc, &resolved).expect("shipped tasks run");
        println!("{name}: {} task(s)", reports.len());
        for r in &reports {
            let verdicts: Vec<String> = r
                .values
                .iter()
                .filter(|(k, _)| !k.starts_with("representative"))
                .take(3)
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            println!("  {} -> {}", r.name, verdicts.join(" "));
        }
        if let Some(dir) = &write_dir {
            let doc_path = format!("{dir}/{name}.json");
            let expected_path = format!("{dir}/{name}.expected.json");
            std::fs::write(&doc_path, emit_document(&doc)).expect("write document");
            std::fs::write(
                &expected_path,
                serde_json::to_string_pretty(&reports).expect("serialize reports"),
            )
            .expect("write expected reports");
            println!("  wrote {doc_path} and {expected_path}");
        }
    }
}
