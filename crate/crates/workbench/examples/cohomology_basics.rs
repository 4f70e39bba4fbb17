//! Graded spaces, cochain complexes and exact rational cohomology.

use dgla_workbench::complex::CochainComplex;
use dgla_workbench::corpus::uwz;
use dgla_workbench::graded::{GradedSpace, LinearMap};
use dgla_workbench::matrix::Mat;

fn main() {
    // a two-term complex 0 -> Q^2 -d-> Q^2 -> 0 with rank-1 d
    let space = GradedSpace::with_dims(&[(0, 2), (1, 2)], "e");
    let mut d = LinearMap::zero(space.clone(), space.clone(), 1);
    d.set_block(0, Mat::from_int_rows(&[&[1, 0], &[0, 0]]));
    let complex = CochainComplex::new(space, d).unwrap();
    let h = complex.cohomology().unwrap();
    println!("two-term complex cohomology dims: {:?}", h.dims());

    // cohomology of the u/w/z algebra: du = w kills one class each side
    let g = uwz();
    let h = g.complex.cohomology().unwrap();
    println!("uwz cohomology dims: {:?}", h.dims());
    for deg in h.dims().keys() {
        for k in 0..h.dim(*deg) {
            let rep = h.representative(*deg, k);
            println!("  representative H^{deg}[{k}]: {:?}", rep.coords_map());
        }
    }

    // projecting a cocycle onto the canonical basis
    let z = g.space().basis_element(1, 1);
    let coords = h.project(1, &z).unwrap();
    println!("coordinates of [z] in H^1: {coords:?}");
}
