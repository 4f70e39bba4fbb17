//! Cohomology of a complex deformed by a Maurer-Cartan twist over
//! Q[t]/(t^n): flatness exponents, gauge triviality, and detection
//! through three-term truncations.

use dgla_workbench::cohdef::{
    deformed_cohomology, gauge_trivial_decision, in_image_of_truncated, is_deformation,
    DeformedComplex,
};
use dgla_workbench::complex::CochainComplex;
use dgla_workbench::graded::{GradedElement, GradedSpace, LinearMap};
use dgla_workbench::matrix::Mat;

fn main() {
    // V = Q in degrees 0, 1, 2 with zero differential
    let v = CochainComplex::with_zero_d(GradedSpace::with_dims(&[(0, 1), (1, 1), (2, 1)], "v"));
    let n = 3;

    // twist x = f ⊗ t with f(v0) = v1
    let mut f = LinearMap::zero(v.space.clone(), v.space.clone(), 1);
    f.set_block(0, Mat::from_int_rows(&[&[1]]));
    let x = DeformedComplex::element_from_terms(&v, n, &[(1, f)]).unwrap();
    let dc = DeformedComplex::new(&v, n, x).unwrap();

    for i in 0..=2 {
        let am = deformed_cohomology(&dc, i).unwrap();
        println!(
            "H^{i}: exponents {:?}, free: {}, deforms H^{i}(V): {}",
            am.exponents,
            am.is_free(),
            is_deformation(&dc, i).unwrap()
        );
    }
    println!("gauge trivial: {:?}", gauge_trivial_decision(&dc).unwrap().is_trivial());
    println!("seen by the truncation at 0: {}", !in_image_of_truncated(&dc, 0).unwrap());

    // the zero twist deforms everything trivially
    let dc0 = DeformedComplex::new(&v, n, GradedElement::zero()).unwrap();
    for i in 0..=2 {
        println!("zero twist H^{i} free: {}", deformed_cohomology(&dc0, i).unwrap().is_free());
    }
    println!("zero twist gauge trivial: {}", gauge_trivial_decision(&dc0).unwrap().is_trivial());
}
