//! Obstruction classes and order-by-order lifting of first-order
//! deformations.

use dgla_workbench::cone::suspended_cone;
use dgla_workbench::corpus::{corpus, uwz_inclusion};
use dgla_workbench::mc::{mc_lift, primary_obstruction, smoothness_criteria};
use dgla_workbench::rational::rint;

fn main() {
    // the tangent class (w, u) of the span{w} -> uwz inclusion hits the
    // obstruction ½z at second order
    let chi = uwz_inclusion();
    let cone = suspended_cone(&chi).unwrap();
    let h = cone.cohomology().unwrap();
    let po = primary_obstruction(
        &chi,
        &cone,
        &h,
        &chi.source.space().basis_element(1, 0),
        &chi.target.space().basis_element(0, 0),
    )
    .unwrap();
    println!("primary obstruction of (w, u): {po:?}");

    let t = mc_lift(&chi, 5, &[rint(1)]).unwrap();
    println!("lift of seed [1]: reached order {}, obstructed {}", t.reached, t.obstructed);
    for step in &t.steps {
        println!(
            "  order {}: class {:?} {}",
            step.order,
            step.class,
            if step.correction.is_some() { "corrected" } else { "obstructed" }
        );
    }

    // the whole corpus through the sufficient smoothness criteria
    println!();
    for f in corpus() {
        println!("{:<24} {:?}", f.name, smoothness_criteria(&f.chi));
    }
}
