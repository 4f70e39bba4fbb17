//! Polynomial path objects: finite-weight slices of the fiber algebra
//! L ×_M M[t, dt], whose cohomology stabilizes to the cone cohomology.

use dgla_workbench::corpus::{corpus, uwz_inclusion};
use dgla_workbench::path::{path_algebra, path_object, PolyElem};
use dgla_workbench::rational::rat;

fn main() {
    // calculus in M[t, dt]: d(m t^k) = dm t^k + (-1)^|m| k m t^{k-1} dt
    let chi = uwz_inclusion();
    let p = path_algebra(&chi.target).unwrap();
    let u = chi.target.space().basis_element(0, 0);
    let ut2 = PolyElem::monomial(&u, 2, false);
    let d = p.d(&ut2);
    println!("d(u t^2) parts: {:?}", d.parts().keys().collect::<Vec<_>>());
    println!("evaluation at t=1/2 is a morphism: {}", p.evaluation_is_morphism(&rat(1, 2), 3));

    let r = path_object(&chi, 6).unwrap();
    for (n, dims) in &r.slices {
        println!("weight ≤ {n}: cohomology dims {dims:?}");
    }
    println!("stabilized at: {:?}", r.stabilized_at);
    println!("cone dims: {:?}", r.cone_dims);
    println!("matches cone: {}", r.matches_cone);

    // stabilization happens for the whole corpus
    println!();
    for f in corpus() {
        let r = path_object(&f.chi, 6).unwrap();
        println!(
            "{:<24} stabilized at {:?}, matches cone: {}",
            f.name, r.stabilized_at, r.matches_cone
        );
    }
}
