//! Validates every fixture algebra and morphism, then shows that a
//! single flipped structure constant is caught with a witness.

use dgla_workbench::corpus::{corpus, sign_mutations, uwz};

fn main() {
    for f in corpus() {
        let g = f.dgla();
        let report = g.validate();
        println!(
            "{:<24} dim {:>2}  valid: {}",
            f.name,
            g.space().total_dim(),
            report.is_valid()
        );
        assert!(report.is_valid());
        assert!(f.chi.validate().is_valid());
    }

    let g = uwz();
    let mutants = sign_mutations(&g);
    let rejected = mutants.iter().filter(|m| !m.validate().is_valid()).count();
    println!("\nuwz sign mutations: {} of {} rejected", rejected, mutants.len());
    let first_bad = mutants.iter().find(|m| !m.validate().is_valid()).unwrap();
    let witness = &first_bad.validate().violations[0];
    println!("sample witness: {witness:?}");
}
