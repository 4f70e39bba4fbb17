//! A zigzag of quasi-isomorphisms of endomorphism algebras attached to
//! a subcomplex inclusion V ⊆ W.

use dgla_workbench::cohdef::formality_zigzag;
use dgla_workbench::complex::CochainComplex;
use dgla_workbench::graded::{GradedSpace, LinearMap};
use dgla_workbench::matrix::Mat;

fn main() {
    // W = V ⊕ (acyclic two-term piece); the inclusion of V is a
    // quasi-isomorphism, so Hom(V,V) and Hom(W,W) are linked through
    // the algebra K of endomorphisms preserving V
    let v = CochainComplex::with_zero_d(GradedSpace::with_dims(&[(0, 1)], "v"));
    let wspace = GradedSpace::with_dims(&[(0, 2), (1, 1)], "w");
    let mut wd = LinearMap::zero(wspace.clone(), wspace.clone(), 1);
    wd.set_block(0, Mat::from_int_rows(&[&[0, 1]]));
    let w = CochainComplex::new(wspace, wd).unwrap();

    let mut incl = LinearMap::zero(v.space.clone(), w.space.clone(), 0);
    incl.set_block(0, Mat::from_int_rows(&[&[1], &[0]]));

    let z = formality_zigzag(&v, &w, &incl).unwrap();
    println!("K dims by degree:");
    for deg in z.k.space().degrees() {
        println!("  {deg}: {}", z.k.dim(deg));
    }
    println!("alpha (K -> Hom(W,W)) quasi-iso: {}", z.alpha_quasi_iso);
    println!("beta  (K -> Hom(V,V)) quasi-iso: {}", z.beta_quasi_iso);
    println!("alpha is a dgla morphism: {}", z.alpha.validate().is_valid());
    println!("beta  is a dgla morphism: {}", z.beta.validate().is_valid());
}
