//! Baker-Campbell-Hausdorff products and the gauge action on
//! Maurer-Cartan elements, over a nilpotent tensor algebra.

use dgla_workbench::coeff::{artinian_ideal, tensor};
use dgla_workbench::corpus::{three_step, uwz};
use dgla_workbench::mc::{
    bch, gauge_action, gauge_group_law_check, irrelevant_stabilizer, mc_residual,
};
use dgla_workbench::rational::rat;

fn main() {
    // uwz ⊗ (t)/(t^4): everything is nilpotent of class 4
    let t = tensor(&uwz(), &artinian_ideal(4).unwrap()).unwrap();
    let g = &t.dgla;

    let u1 = g.space().basis_element(0, 0); // u⊗t
    let u2 = g.space().basis_element(0, 1); // u⊗t^2
    let c = bch(g, &u1, &u2, 4).unwrap();
    println!("bch(u⊗t, u⊗t^2) coords: {:?}", c.coords_map());

    // inverse: bch(a, -a) = 0
    let inv = bch(g, &u1, &u1.scale(&rat(-1, 1)), 4).unwrap();
    println!("bch(a, -a) = 0: {}", inv.is_zero());

    // the gauge action preserves the Maurer-Cartan set
    let w = g.space().basis_element(1, 0).scale(&rat(2, 1)); // 2·w⊗t
    println!("mc residual of w: {:?}", mc_residual(g, &w).unwrap().is_zero());
    let moved = gauge_action(g, &u1, &w).unwrap();
    println!(
        "residual after gauge by e^(u⊗t): {}",
        mc_residual(g, &moved).unwrap().is_zero()
    );

    // e^a (e^b ∗ x) = e^(a∙b) ∗ x
    let law = gauge_group_law_check(g, &u1, &u2, &w, 4).unwrap();
    println!("gauge group law holds: {law}");

    // the irrelevant stabilizer e^{[x,h]+dh} fixes x; this needs a
    // degree -1 direction, so switch to an endomorphism algebra
    let t3 = tensor(&three_step(), &artinian_ideal(3).unwrap()).unwrap();
    let x = t3.dgla.space().basis_element(1, 0);
    assert!(mc_residual(&t3.dgla, &x).unwrap().is_zero());
    let h = t3.dgla.space().basis_element(-1, 0);
    let st = irrelevant_stabilizer(&t3.dgla, &x, &h).unwrap();
    println!("stabilizer exponent: {:?}", st.exponent.coords_map());
}
