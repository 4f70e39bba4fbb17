//! Derived brackets on a finite bicomplex model, and the Cartan-formula
//! checker for contraction data.

use std::collections::BTreeMap;

use dgla_workbench::complex::CochainComplex;
use dgla_workbench::dgla::Dgla;
use dgla_workbench::graded::{GradedSpace, LinearMap};
use dgla_workbench::htp::{cartan_check, derived_bracket_dgla, Contraction, FiniteBicomplexModel};
use dgla_workbench::matrix::Mat;

fn xy_model() -> FiniteBicomplexModel {
    // generators x (degree 1), y = ∂x (degree 2), xy (degree 3); ∂̄ = 0
    let space = GradedSpace::new(
        [
            (1, vec!["x".to_string()]),
            (2, vec!["y".to_string()]),
            (3, vec!["xy".to_string()]),
        ]
        .into(),
    )
    .unwrap();
    let mut del = LinearMap::zero(space.clone(), space.clone(), 1);
    del.set_block(1, Mat::from_int_rows(&[&[1]]));
    let delbar = LinearMap::zero(space.clone(), space.clone(), 1);
    let xy = space.basis_element(3, 0);
    FiniteBicomplexModel::new(space, del, delbar, vec![((1, 0), (2, 0), xy)]).unwrap()
}

fn main() {
    let model = xy_model();
    let derived = derived_bracket_dgla(&model).unwrap();
    println!("kernel dims (ker ∂): {:?}", {
        let s = derived.kernel.space.clone();
        s.degrees().iter().map(|&d| (d, s.dim(d))).collect::<Vec<_>>()
    });
    println!("derived bracket algebra valid: {}", derived.dgla.validate().is_valid());
    println!("abelian: {}", derived.dgla.is_abelian());

    // the zero contraction satisfies all three Cartan formulas
    let g = Dgla::abelian(CochainComplex::with_zero_d(GradedSpace::with_dims(
        &[(1, 1)],
        "a",
    )));
    let zero = LinearMap::zero(model.space().clone(), model.space().clone(), 0);
    let maps: BTreeMap<_, _> = [((1, 0), zero)].into();
    let report = cartan_check(&model, &g, &Contraction { maps }).unwrap();
    println!("zero contraction passes: {}", report.passed);

    // a perturbed contraction breaks i_{[a,b]} = [[i_a, ∂], i_b]
    let mut bad = LinearMap::zero(model.space().clone(), model.space().clone(), 0);
    bad.set_block(1, Mat::identity(1));
    bad.set_block(3, Mat::identity(1));
    let maps: BTreeMap<_, _> = [((1, 0), bad)].into();
    let report = cartan_check(&model, &g, &Contraction { maps }).unwrap();
    println!("perturbed contraction passes: {}", report.passed);
    for f in &report.failures {
        println!("  failed: {} at {}", f.identity, f.witness);
    }
}
